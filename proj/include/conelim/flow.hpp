#pragma once

#include <optional>
#include <vector>

#include "conelim/affine.hpp"
#include "conelim/filtration.hpp"
#include "conelim/hodge.hpp"
#include "conelim/laurent.hpp"
#include "conelim/pair.hpp"

namespace conelim::flow {

// Affine-chart frame adapted to a filtration: the trailing column blocks
// span each step, and the determinant is a nonzero constant. Filtrations
// split over the chart, so such a frame always exists. The grouped chain
// and per-block coordinates feed the prediction comparison.
struct AdaptedFrame {
    PolyMatrix change_of_basis;
    std::vector<int> block_sizes;
    std::vector<SubbundleBasis> grouped_steps;
    std::vector<PolyMatrix> block_coords;  // block i columns in grouped step i coords
};

// Blocks follow the limit type: one block per chain step for kernel chains,
// the classified two-block grouping for rank-3 intermediate chains.
AdaptedFrame adapted_frame(const HitchinPair& pair, const Filtration& filt);

// Frame from the stabilized kernel chain of an arbitrary pair; for inputs
// outside the nilpotent cone the in-frame field has block-diagonal terms,
// which the flow then reports as divergent.
AdaptedFrame forced_frame(const HitchinPair& pair);

// g(z)-conjugated scaled field: block (i, j) carries z^(1 + j - i) times the
// in-frame entry.
struct FlowMatrix {
    std::vector<Laurent<Poly>> entries;  // row-major, size n x n
    std::size_t n = 0;
    AdaptedFrame frame;

    const Laurent<Poly>& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

FlowMatrix conjugate_flow(const HitchinPair& pair, const AdaptedFrame& frame);

struct FlowReport {
    PolyMatrix limit_matrix;
    // Block-level exponents actually present (nullopt for zero blocks).
    std::vector<std::vector<std::optional<int>>> exponent_table;
    bool diverges = false;
    bool matches_prediction = false;
};

// Extracts the z -> infinity limit and compares it with the predicted graded
// fixed point expressed in the same frame. Throws Divergent when a positive
// exponent occurs (the input was outside the nilpotent cone).
FlowReport flow_limit(const FlowMatrix& fm, const HodgeBundle& predicted);

// Limit extraction alone (no prediction); same Divergent behavior.
FlowReport flow_limit_report(const FlowMatrix& fm);

// Formal z-exponents multiplying the extension terms of the chart-splitting
// bookkeeping: entry (i, j) = j - i, strictly negative below the diagonal.
std::vector<std::vector<int>> extension_weight_table(const std::vector<int>& block_sizes);

}  // namespace conelim::flow
