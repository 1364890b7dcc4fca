#include "conelim/stability.hpp"

#include <algorithm>
#include <numeric>

#include "conelim/errors.hpp"
#include "conelim/filtration.hpp"

namespace conelim {

namespace {

StabilityVerdict verdict_from(std::vector<StabilityCheck> checks) {
    StabilityVerdict v;
    v.stable = true;
    v.semistable = true;
    for (const auto& c : checks) {
        if (!c.ok) {
            v.stable = false;
            if (!v.witness) v.witness = c;
        }
        if (c.subbundle_slope > c.bound) v.semistable = false;
    }
    v.checks = std::move(checks);
    return v;
}

StabilityCheck make_check(std::string description, int degree, int rank,
                          const Rational& bound) {
    Rational s = slope(degree, rank);
    return StabilityCheck{std::move(description), degree, rank, s, bound, s < bound};
}

// Coordinate subbundle on the top-k twists: slope-maximal of its rank in a
// split bundle, and every subbundle is invariant when the field vanishes.
SubbundleBasis top_coordinates(const std::vector<int>& twists, int k) {
    std::vector<std::size_t> rows(twists.size()), cols(k);
    for (std::size_t i = 0; i < twists.size(); ++i) rows[i] = i;
    for (int j = 0; j < k; ++j) cols[j] = j;
    return {TwistedMatrix::identity(twists).submatrix(rows, cols), true};
}

}  // namespace

std::vector<std::pair<SubbundleBasis, std::string>> invariant_candidates(
    const HitchinPair& pair) {
    int r = pair.rank();
    int p = nilpotency_order(pair);
    std::vector<std::pair<SubbundleBasis, std::string>> out;

    if (p == 1) {  // zero field: plain bundle stability on the split model
        for (int k = 1; k < r; ++k)
            out.emplace_back(top_coordinates(pair.bundle().twists, k),
                             "rank-" + std::to_string(k) + " coordinate subbundle of top twists");
        return out;
    }
    if (p == r) {  // regular: invariant subbundles are exactly the chain steps
        Filtration filt = kernel_filtration(pair);
        for (std::size_t j = 1; j < filt.length(); ++j)
            out.emplace_back(filt.steps[j],
                             "kernel-chain step " + std::to_string(j + 1));
        return out;
    }
    if (r == 3 && p == 2) {
        Filtration filt = rank3_filtration(pair);
        const SubbundleBasis& kernel = filt.steps[1];
        const SubbundleBasis& image = filt.steps[2];
        out.emplace_back(max_line_subbundle(kernel), "max line subbundle of the kernel");
        out.emplace_back(kernel, "kernel subbundle");
        // Preimage of the max-degree line of E/E_3: kill the lower coordinate
        // of the quotient presentation.
        TwistedMatrix pi = quotient_presentation(image.basis);
        std::vector<std::size_t> last_row{pi.rows() - 1};
        std::vector<std::size_t> all_cols(pi.cols());
        for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
        SubbundleBasis preimage = kernel_basis(pi.submatrix(last_row, all_cols));
        out.emplace_back(std::move(preimage), "preimage of the max line of E/E_3");
        return out;
    }
    throw Unsupported("no invariant-subbundle classification for rank " +
                      std::to_string(r) + " with power order " + std::to_string(p));
}

StabilityVerdict is_stable(const HitchinPair& pair) {
    Rational mu = pair_slope(pair);
    std::vector<StabilityCheck> checks;
    for (const auto& [sub, description] : invariant_candidates(pair))
        checks.push_back(make_check(description, subbundle_degree(sub),
                                    static_cast<int>(sub.rank()), mu));
    return verdict_from(std::move(checks));
}

namespace {

StabilityVerdict hodge_single_piece(const HodgeBundle& h) {
    Rational mu = slope(h.degree(), h.rank());
    std::vector<StabilityCheck> checks;
    const auto& twists = h.piece_twists[0];
    for (std::size_t k = 1; k < twists.size(); ++k) {
        int deg = std::accumulate(twists.begin(), twists.begin() + k, 0);
        checks.push_back(make_check(
            "rank-" + std::to_string(k) + " coordinate subbundle of top twists", deg,
            static_cast<int>(k), mu));
    }
    return verdict_from(std::move(checks));
}

StabilityVerdict hodge_chain(const HodgeBundle& h) {
    Rational mu = slope(h.degree(), h.rank());
    std::size_t r = h.type_vector.size();
    std::vector<StabilityCheck> checks;
    for (std::size_t l = 1; l < r; ++l) {
        int deg = 0;
        for (std::size_t j = l; j < r; ++j) deg += h.piece_degree(j);
        checks.push_back(make_check("tail of the last " + std::to_string(r - l) +
                                        " graded pieces",
                                    deg, static_cast<int>(r - l), mu));
    }
    return verdict_from(std::move(checks));
}

StabilityVerdict hodge_type_1_2(const HodgeBundle& h) {
    Rational mu = slope(h.degree(), h.rank());
    const auto& lower = h.piece_twists[1];  // rank-2 weight-1 piece
    int lower_degree = h.piece_degree(1);
    // Saturated image line of the weight-one map, untwisted back into the
    // lower piece.
    SubbundleBasis image = saturate_span(h.maps[0]);
    int image_degree = subbundle_degree(image) - h.l_degree;
    std::vector<StabilityCheck> checks;
    checks.push_back(make_check("max line subbundle of the weight-1 piece", lower[0], 1, mu));
    checks.push_back(make_check("weight-1 piece", lower_degree, 2, mu));
    checks.push_back(make_check("weight-0 piece extended by the image line",
                                h.piece_degree(0) + image_degree, 2, mu));
    return verdict_from(std::move(checks));
}

StabilityVerdict hodge_type_2_1(const HodgeBundle& h) {
    Rational mu = slope(h.degree(), h.rank());
    const auto& upper = h.piece_twists[0];  // rank-2 weight-0 piece
    int w2_degree = h.piece_degree(1);
    SubbundleBasis kernel = kernel_basis(h.maps[0]);
    if (kernel.rank() != 1)
        throw std::logic_error("nonzero map from the rank-2 piece must have a line kernel");
    std::vector<StabilityCheck> checks;
    checks.push_back(make_check("max line of the weight-0 piece plus the weight-1 piece",
                                upper[0] + w2_degree, 2, mu));
    checks.push_back(make_check("weight-1 piece", w2_degree, 1, mu));
    checks.push_back(make_check("kernel line of the weight-one map",
                                subbundle_degree(kernel), 1, mu));
    return verdict_from(std::move(checks));
}

}  // namespace

StabilityVerdict is_stable_hodge(const HodgeBundle& h) {
    h.check();
    if (h.type_vector.size() == 1) return hodge_single_piece(h);
    for (const auto& m : h.maps)
        if (m.is_zero())
            throw UnsupportedType("graded fixed point with a vanishing weight-one map");
    bool all_ones = std::all_of(h.type_vector.begin(), h.type_vector.end(),
                                [](int t) { return t == 1; });
    if (all_ones) return hodge_chain(h);
    if (h.type_vector == std::vector<int>{1, 2}) return hodge_type_1_2(h);
    if (h.type_vector == std::vector<int>{2, 1}) return hodge_type_2_1(h);
    throw UnsupportedType("no stability rule for this graded type");
}

}  // namespace conelim
