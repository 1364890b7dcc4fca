#pragma once

#include <optional>
#include <string>

#include "conelim/filtration.hpp"
#include "conelim/hodge.hpp"
#include "conelim/pair.hpp"
#include "conelim/stability.hpp"

namespace conelim {

enum class LimitCase { Zero, Regular, IntermediateC1, IntermediateC2, Unsupported };

std::string to_string(LimitCase c);

struct SlopeRecord {
    Rational mu_total;
    std::optional<Rational> mu_kernel;    // rank-3 intermediate only
    std::optional<Rational> mu_image;     //
    std::optional<Rational> mu_mixed;     // slope of E/E_2 + E_3
};

struct Classification {
    LimitCase kind;
    int order;  // nilpotency order
    SlopeRecord slopes;
    std::string reason;  // set for Unsupported
};

// Theorem trichotomy on the nilpotent cone: zero field, regular field, or the
// rank-3 square-zero alternatives split by the mixed-quotient slope.
// BoundaryCase on slope equality (excluded when gcd(3, d) = 1).
Classification classify(const HitchinPair& pair);

// z -> infinity limit of (E, z Phi). When the input is stable the result is
// checked stable as a graded fixed point.
HodgeBundle limit(const HitchinPair& pair);

// Both rank-3 intermediate candidates (kernel-quotient type (1,2) first);
// exactly the classified one is stable for a stable input.
std::pair<HodgeBundle, HodgeBundle> intermediate_candidates(const HitchinPair& pair);

struct SlopeWindow {
    Rational lower, value, upper;
    bool ok;
};

struct SlopeComparison {
    Rational lhs, rhs;
    bool ok;
};

// The four exact constraints a rank-3 square-zero chain satisfies for stable
// pairs: the mixed-slope window, the two subbundle slope bounds, and the
// degree bound from the induced nonzero line map.
struct ConstraintReport {
    SlopeWindow slope_window;             // mu - l/2 < mu_mixed < mu + l/2
    SlopeComparison image_line_slope;     // 3 deg E_3 < d
    SlopeComparison kernel_slope;         // 3 deg E_2 < 2d
    SlopeComparison induced_map_degree;   // deg E_3 + l >= d - deg E_2
    bool all_hold() const {
        return slope_window.ok && image_line_slope.ok && kernel_slope.ok &&
               induced_map_degree.ok;
    }
};

ConstraintReport check_slope_constraints(const HitchinPair& pair);

}  // namespace conelim
