#pragma once

#include <vector>

#include "conelim/pair.hpp"
#include "conelim/subbundle.hpp"

namespace conelim {

enum class FiltrationKind { KernelChain, Rank3Intermediate };

// Strictly decreasing chain of saturated subbundles, outermost first; the
// final zero step is implicit.
struct Filtration {
    FiltrationKind kind;
    std::vector<SubbundleBasis> steps;

    std::size_t length() const { return steps.size(); }
};

// Graded pieces of a filtration: per piece a presentation of the quotient as
// a saturated split image (surjection from the enclosing step's coordinates)
// and the splitting type it exposes; plus the induced weight-one maps.
struct GradedData {
    std::vector<std::vector<int>> piece_twists;
    std::vector<TwistedMatrix> projections;  // piece j: step-j coords -> piece
    std::vector<TwistedMatrix> induced_maps; // piece j -> piece j+1 twisted by l
};

// Saturated kernels of the falling powers of the Higgs field. Ranks drop by
// one each step exactly when the field is regular.
Filtration kernel_filtration(const HitchinPair& pair);

// Rank-3 chain for a nonzero square-zero field: saturated kernel above the
// untwisted saturated image.
Filtration rank3_filtration(const HitchinPair& pair);

enum class IntermediateSide { KernelQuotient, ImageQuotient };

// Slope rule deciding which two-step quotient carries the limit for a rank-3
// intermediate chain; BoundaryCase on slope equality.
IntermediateSide intermediate_side(const HitchinPair& pair, const Filtration& filt);

GradedData graded(const HitchinPair& pair, const Filtration& filt);

}  // namespace conelim
