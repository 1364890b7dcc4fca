#include "conelim/limits.hpp"

#include "conelim/errors.hpp"

namespace conelim {

std::string to_string(LimitCase c) {
    switch (c) {
        case LimitCase::Zero: return "Zero";
        case LimitCase::Regular: return "Regular";
        case LimitCase::IntermediateC1: return "IntermediateC1";
        case LimitCase::IntermediateC2: return "IntermediateC2";
        case LimitCase::Unsupported: return "Unsupported";
    }
    return "Unsupported";
}

Classification classify(const HitchinPair& pair) {
    int p = nilpotency_order(pair);
    int r = pair.rank();
    Classification out;
    out.order = p;
    out.slopes.mu_total = pair_slope(pair);
    if (p == 1) {
        out.kind = LimitCase::Zero;
        return out;
    }
    if (p == r) {
        out.kind = LimitCase::Regular;
        return out;
    }
    if (r == 3 && p == 2) {
        Filtration filt = rank3_filtration(pair);
        int d = pair.degree();
        int d2 = subbundle_degree(filt.steps[1]);
        int d3 = subbundle_degree(filt.steps[2]);
        out.slopes.mu_kernel = slope(d2, 2);
        out.slopes.mu_image = slope(d3, 1);
        out.slopes.mu_mixed = Rational(d - d2 + d3, 2);
        IntermediateSide side = intermediate_side(pair, filt);  // BoundaryCase on ties
        out.kind = side == IntermediateSide::KernelQuotient ? LimitCase::IntermediateC1
                                                            : LimitCase::IntermediateC2;
        return out;
    }
    out.kind = LimitCase::Unsupported;
    out.reason = "no limit classification for rank " + std::to_string(r) +
                 " with power order " + std::to_string(p);
    return out;
}

namespace {

HodgeBundle zero_limit(const HitchinPair& pair) {
    HodgeBundle h;
    h.l_degree = pair.l_degree();
    h.type_vector = {pair.rank()};
    h.piece_twists = {pair.bundle().twists};
    return h;
}

HodgeBundle graded_limit(const HitchinPair& pair, const Filtration& filt) {
    GradedData g = graded(pair, filt);
    HodgeBundle h;
    h.l_degree = pair.l_degree();
    for (const auto& twists : g.piece_twists)
        h.type_vector.push_back(static_cast<int>(twists.size()));
    h.piece_twists = g.piece_twists;
    h.maps = g.induced_maps;
    h.check();
    return h;
}

}  // namespace

HodgeBundle limit(const HitchinPair& pair) {
    Classification c = classify(pair);
    HodgeBundle h;
    switch (c.kind) {
        case LimitCase::Zero:
            h = zero_limit(pair);
            break;
        case LimitCase::Regular:
            h = graded_limit(pair, kernel_filtration(pair));
            break;
        case LimitCase::IntermediateC1:
        case LimitCase::IntermediateC2:
            h = graded_limit(pair, rank3_filtration(pair));
            break;
        case LimitCase::Unsupported:
            throw Unsupported(c.reason);
    }
    if (h.rank() != pair.rank() || h.degree() != pair.degree())
        throw std::logic_error("limit must preserve rank and degree");
    if (is_stable(pair).stable && !is_stable_hodge(h).stable)
        throw std::logic_error("limit of a stable pair must be a stable fixed point");
    return h;
}

std::pair<HodgeBundle, HodgeBundle> intermediate_candidates(const HitchinPair& pair) {
    Filtration filt = rank3_filtration(pair);
    auto build = [&](const SubbundleBasis& sub) {
        HodgeBundle h;
        h.l_degree = pair.l_degree();
        TwistedMatrix pi = quotient_presentation(sub.basis);
        TwistedMatrix inc = factor_through(
            pair.higgs(), SubbundleBasis{sub.basis.shifted(pair.l_degree()), true});
        TwistedMatrix phi = factor_over_quotient(inc, pi);
        h.type_vector = {static_cast<int>(pi.rows()), static_cast<int>(sub.rank())};
        h.piece_twists = {pi.row_twists(), splitting_type(sub)};
        h.maps = {std::move(phi)};
        h.check();
        return h;
    };
    return {build(filt.steps[1]), build(filt.steps[2])};
}

ConstraintReport check_slope_constraints(const HitchinPair& pair) {
    Filtration filt = rank3_filtration(pair);  // WrongShape on other shapes
    int d = pair.degree();
    int l = pair.l_degree();
    int d2 = subbundle_degree(filt.steps[1]);
    int d3 = subbundle_degree(filt.steps[2]);
    Rational mu(d, 3);
    Rational half_l(l, 2);
    Rational mixed(d - d2 + d3, 2);

    ConstraintReport out;
    out.slope_window = {mu - half_l, mixed, mu + half_l,
                        mu - half_l < mixed && mixed < mu + half_l};
    out.image_line_slope = {Rational(3 * d3), Rational(d), 3 * d3 < d};
    out.kernel_slope = {Rational(3 * d2), Rational(2 * d), 3 * d2 < 2 * d};
    out.induced_map_degree = {Rational(d3 + l), Rational(d - d2), d3 + l >= d - d2};
    return out;
}

}  // namespace conelim
