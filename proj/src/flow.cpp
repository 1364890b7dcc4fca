#include "conelim/flow.hpp"

#include <numeric>

#include "conelim/errors.hpp"

namespace conelim::flow {

namespace {

// Complements along a refined chain plus a grouping of consecutive steps.
AdaptedFrame assemble_frame(const std::vector<SubbundleBasis>& steps,
                            const std::vector<std::pair<std::size_t, std::size_t>>& groups) {
    std::size_t p = steps.size();
    std::vector<TwistedMatrix> inclusions;  // step j+1 in step j coordinates
    for (std::size_t j = 0; j + 1 < p; ++j)
        inclusions.push_back(factor_through(steps[j + 1].basis, steps[j]));

    std::vector<PolyMatrix> complements;  // step j coords
    for (std::size_t j = 0; j < p; ++j) {
        if (j + 1 < p)
            complements.push_back(affine_complement(PolyMatrix::from_twisted(inclusions[j])));
        else
            complements.push_back(PolyMatrix::identity(steps[j].rank()));
    }

    AdaptedFrame frame;
    PolyMatrix assembled;
    bool started = false;
    for (std::size_t j = 0; j < p; ++j) {
        PolyMatrix ambient_block =
            PolyMatrix::from_twisted(steps[j].basis) * complements[j];
        assembled = started ? assembled.hstack(ambient_block) : ambient_block;
        started = true;
    }
    frame.change_of_basis = assembled;
    Poly d = frame.change_of_basis.det();
    if (d.is_zero() || !d.is_constant())
        throw std::logic_error("adapted frame must be unimodular over the chart");

    for (auto [a, b] : groups) {
        frame.grouped_steps.push_back(steps[a]);
        PolyMatrix coords;
        bool first = true;
        PolyMatrix lift = PolyMatrix::identity(steps[a].rank());
        for (std::size_t j = a; j <= b; ++j) {
            if (j > a) lift = lift * PolyMatrix::from_twisted(inclusions[j - 1]);
            PolyMatrix block = lift * complements[j];
            coords = first ? block : coords.hstack(block);
            first = false;
        }
        frame.block_sizes.push_back(static_cast<int>(coords.cols()));
        frame.block_coords.push_back(std::move(coords));
    }
    return frame;
}

}  // namespace

AdaptedFrame adapted_frame(const HitchinPair& pair, const Filtration& filt) {
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    if (filt.kind == FiltrationKind::Rank3Intermediate) {
        IntermediateSide side = intermediate_side(pair, filt);
        if (side == IntermediateSide::KernelQuotient)
            groups = {{0, 0}, {1, 2}};  // blocks (1, 2): quotient above the kernel
        else
            groups = {{0, 1}, {2, 2}};  // blocks (2, 1): quotient above the image
    } else {
        for (std::size_t j = 0; j < filt.length(); ++j) groups.push_back({j, j});
    }
    return assemble_frame(filt.steps, groups);
}

AdaptedFrame forced_frame(const HitchinPair& pair) {
    std::vector<SubbundleBasis> steps;
    steps.push_back(full_subbundle(pair.bundle().twists));
    std::size_t prev = steps.back().rank();
    for (int k = pair.rank() - 1; k >= 1; --k) {
        SubbundleBasis s = kernel_basis(higgs_power(pair, k));
        if (s.rank() > 0 && s.rank() < prev) {
            prev = s.rank();
            steps.push_back(std::move(s));
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t j = 0; j < steps.size(); ++j) groups.push_back({j, j});
    return assemble_frame(steps, groups);
}

FlowMatrix conjugate_flow(const HitchinPair& pair, const AdaptedFrame& frame) {
    std::size_t n = pair.rank();
    PolyMatrix in_frame = frame.change_of_basis.inverse_unimodular() *
                          PolyMatrix::from_twisted(pair.higgs()) * frame.change_of_basis;
    std::vector<int> weight(n);
    std::size_t pos = 0;
    for (std::size_t b = 0; b < frame.block_sizes.size(); ++b)
        for (int k = 0; k < frame.block_sizes[b]; ++k) weight[pos++] = static_cast<int>(b);
    FlowMatrix out;
    out.n = n;
    out.frame = frame;
    out.entries.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.entries[i * n + j] =
                Laurent<Poly>::term(1 + weight[j] - weight[i], in_frame.at(i, j));
    return out;
}

FlowReport flow_limit_report(const FlowMatrix& fm) {
    const auto& blocks = fm.frame.block_sizes;
    std::size_t p = blocks.size();
    std::vector<std::size_t> offset(p + 1, 0);
    for (std::size_t b = 0; b < p; ++b) offset[b + 1] = offset[b] + blocks[b];

    FlowReport report;
    report.limit_matrix = PolyMatrix(fm.n, fm.n);
    report.exponent_table.assign(p, std::vector<std::optional<int>>(p));
    for (std::size_t bi = 0; bi < p; ++bi)
        for (std::size_t bj = 0; bj < p; ++bj) {
            bool nonzero = false;
            for (std::size_t i = offset[bi]; i < offset[bi + 1] && !nonzero; ++i)
                for (std::size_t j = offset[bj]; j < offset[bj + 1]; ++j)
                    if (!fm.at(i, j).is_zero()) {
                        nonzero = true;
                        break;
                    }
            if (!nonzero) continue;
            int e = 1 + static_cast<int>(bj) - static_cast<int>(bi);
            report.exponent_table[bi][bj] = e;
            if (e > 0) {
                report.diverges = true;
                throw Divergent("positive flow exponent " + std::to_string(e) + " in block (" +
                                std::to_string(bi + 1) + "," + std::to_string(bj + 1) +
                                "): the pair is outside the nilpotent cone");
            }
        }
    for (std::size_t i = 0; i < fm.n; ++i)
        for (std::size_t j = 0; j < fm.n; ++j)
            report.limit_matrix.at(i, j) = fm.at(i, j).coeff(0);
    return report;
}

FlowReport flow_limit(const FlowMatrix& fm, const HodgeBundle& predicted) {
    FlowReport report = flow_limit_report(fm);
    const AdaptedFrame& frame = fm.frame;
    std::size_t p = frame.block_sizes.size();

    std::vector<int> predicted_blocks(predicted.type_vector.begin(),
                                      predicted.type_vector.end());
    if (predicted_blocks != frame.block_sizes) return report;  // matches stays false

    std::vector<std::size_t> offset(p + 1, 0);
    for (std::size_t b = 0; b < p; ++b) offset[b + 1] = offset[b] + frame.block_sizes[b];

    // Piece presentations recomputed from the grouped chain; they are the
    // same canonical surjections the limit construction used.
    std::vector<TwistedMatrix> projections;
    for (std::size_t i = 0; i < p; ++i) {
        TwistedMatrix inc =
            i + 1 < p ? factor_through(frame.grouped_steps[i + 1].basis, frame.grouped_steps[i])
                      : TwistedMatrix::zero(frame.grouped_steps[i].basis.col_twists(), {});
        projections.push_back(quotient_presentation(inc));
    }
    bool ok = true;
    std::vector<PolyMatrix> basis_change(p);  // t_i: frame piece basis in abstract coords
    for (std::size_t i = 0; i < p && ok; ++i) {
        if (projections[i].row_twists() != predicted.piece_twists[i]) {
            ok = false;
            break;
        }
        basis_change[i] = PolyMatrix::from_twisted(projections[i]) * frame.block_coords[i];
        Poly d = basis_change[i].det();
        if (d.is_zero() || !d.is_constant())
            throw std::logic_error("piece basis change must be unimodular");
    }
    for (std::size_t i = 0; ok && i + 1 < p; ++i) {
        PolyMatrix limit_block(frame.block_sizes[i + 1], frame.block_sizes[i]);
        for (std::size_t a = 0; a < limit_block.rows(); ++a)
            for (std::size_t b = 0; b < limit_block.cols(); ++b)
                limit_block.at(a, b) =
                    report.limit_matrix.at(offset[i + 1] + a, offset[i] + b);
        PolyMatrix lhs = basis_change[i + 1] * limit_block;
        PolyMatrix rhs = PolyMatrix::from_twisted(predicted.maps[i]) * basis_change[i];
        if (!(lhs == rhs)) ok = false;
    }
    report.matches_prediction = ok;
    return report;
}

std::vector<std::vector<int>> extension_weight_table(const std::vector<int>& block_sizes) {
    std::size_t p = block_sizes.size();
    std::vector<std::vector<int>> table(p, std::vector<int>(p));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            table[i][j] = static_cast<int>(j) - static_cast<int>(i);
    return table;
}

}  // namespace conelim::flow
