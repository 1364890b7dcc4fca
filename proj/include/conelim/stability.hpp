#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conelim/hodge.hpp"
#include "conelim/pair.hpp"
#include "conelim/subbundle.hpp"

namespace conelim {

struct StabilityCheck {
    std::string description;
    int degree;
    int rank;
    Rational subbundle_slope;
    Rational bound;  // the total slope the candidate must stay strictly below
    bool ok;
};

struct StabilityVerdict {
    bool stable;
    bool semistable;  // diagnostics for non-coprime inputs
    std::vector<StabilityCheck> checks;
    std::optional<StabilityCheck> witness;  // the failing comparison when unstable
};

// Finite candidate list whose maximum slope equals the supremum over all
// invariant proper nonzero subbundles:
//   - zero field:         coordinate subbundles on the top-k twists;
//   - regular field:      the kernel-chain steps E_2 ... E_r;
//   - rank-3 square-zero: max line of the kernel, the kernel, and the
//                         preimage of the max line of E/E_3;
//   - rank-2 square-zero: the kernel line.
// Unsupported for higher-rank non-regular fields.
std::vector<std::pair<SubbundleBasis, std::string>> invariant_candidates(
    const HitchinPair& pair);

StabilityVerdict is_stable(const HitchinPair& pair);

// Stability of a graded fixed point. Supported shapes: one piece (zero map),
// type (1,...,1), type (1,2) and type (2,1), each with nonzero weight-one
// maps; anything else is UnsupportedType.
StabilityVerdict is_stable_hodge(const HodgeBundle& h);

}  // namespace conelim
