#include "conelim/filtration.hpp"

#include <numeric>

#include "conelim/errors.hpp"

namespace conelim {

namespace {

void check_step_saturation(const SubbundleBasis& step) {
    if (step.rank() == 0) return;
    BinaryForm g = step.basis.maximal_minor_gcd();
    if (g.is_zero() || g.degree() != 0)
        throw std::logic_error("filtration step basis is not saturated");
}

// Phi maps the span of B into the span of target (twisted by l); the
// factorization is the returned coordinate matrix.
TwistedMatrix map_into(const HitchinPair& pair, const SubbundleBasis& B,
                       const SubbundleBasis& target) {
    TwistedMatrix image = pair.higgs() * B.basis;
    SubbundleBasis shifted{target.basis.shifted(pair.l_degree()), target.saturated};
    return factor_through(image, shifted);
}

}  // namespace

Filtration kernel_filtration(const HitchinPair& pair) {
    int p = nilpotency_order(pair);
    std::vector<SubbundleBasis> steps;
    steps.push_back(full_subbundle(pair.bundle().twists));
    for (int j = 2; j <= p; ++j)
        steps.push_back(kernel_basis(higgs_power(pair, p - j + 1)));

    for (auto& step : steps) check_step_saturation(step);
    for (std::size_t j = 0; j + 1 < steps.size(); ++j) {
        if (steps[j].rank() <= steps[j + 1].rank())
            throw std::logic_error("kernel chain ranks must strictly decrease");
        map_into(pair, steps[j], steps[j + 1]);  // NotFactorable would be a bug
    }
    if (!steps.empty() && !(pair.higgs() * steps.back().basis).is_zero())
        throw std::logic_error("innermost kernel step is not killed by the field");
    if (p == pair.rank())
        for (std::size_t j = 0; j + 1 < steps.size(); ++j)
            if (steps[j].rank() != steps[j + 1].rank() + 1)
                throw std::logic_error("regular chain must drop rank by one");
    return Filtration{FiltrationKind::KernelChain, std::move(steps)};
}

Filtration rank3_filtration(const HitchinPair& pair) {
    if (pair.rank() != 3) throw WrongShape("rank-3 chain needs a rank-3 pair");
    int p = nilpotency_order(pair);
    if (p != 2) throw WrongShape("rank-3 chain needs a nonzero square-zero field");

    SubbundleBasis kernel = kernel_basis(pair.higgs());
    if (kernel.rank() != 2) throw std::logic_error("square-zero rank-3 kernel must have rank 2");
    SubbundleBasis image = saturate_span(pair.higgs());
    SubbundleBasis image_untwisted{image.basis.shifted(-pair.l_degree()), true};
    if (image_untwisted.rank() != 1)
        throw std::logic_error("square-zero rank-3 image must have rank 1");

    // Image inside kernel (square-zero), and the whole bundle maps into the
    // image step under the field.
    factor_through(image_untwisted.basis, kernel);
    factor_through(pair.higgs(), SubbundleBasis{image.basis, true});
    if (!(pair.higgs() * kernel.basis).is_zero())
        throw std::logic_error("kernel step is not killed by the field");

    std::vector<SubbundleBasis> steps;
    steps.push_back(full_subbundle(pair.bundle().twists));
    steps.push_back(std::move(kernel));
    steps.push_back(std::move(image_untwisted));
    for (auto& step : steps) check_step_saturation(step);
    return Filtration{FiltrationKind::Rank3Intermediate, std::move(steps)};
}

IntermediateSide intermediate_side(const HitchinPair& pair, const Filtration& filt) {
    if (filt.kind != FiltrationKind::Rank3Intermediate)
        throw WrongShape("slope rule applies to rank-3 intermediate chains");
    int d = pair.degree();
    int d2 = subbundle_degree(filt.steps[1]);
    int d3 = subbundle_degree(filt.steps[2]);
    Rational mixed(d - d2 + d3, 2);
    Rational mu(d, 3);
    if (mixed == mu)
        throw BoundaryCase("mixed-quotient slope equals the bundle slope");
    return mixed < mu ? IntermediateSide::KernelQuotient : IntermediateSide::ImageQuotient;
}

namespace {

GradedData graded_kernel_chain(const HitchinPair& pair, const Filtration& filt) {
    GradedData out;
    std::size_t p = filt.length();
    std::vector<TwistedMatrix> inclusions;  // step j+1 in step j coordinates
    for (std::size_t j = 0; j < p; ++j) {
        SubbundleBasis next =
            j + 1 < p ? filt.steps[j + 1] : zero_subbundle(pair.bundle().twists);
        inclusions.push_back(factor_through(next.basis, filt.steps[j]));
    }
    for (std::size_t j = 0; j < p; ++j) {
        TwistedMatrix pi = quotient_presentation(inclusions[j]);
        int piece_degree = std::accumulate(pi.row_twists().begin(), pi.row_twists().end(), 0);
        int step_degree = subbundle_degree(filt.steps[j]);
        int next_degree = j + 1 < p ? subbundle_degree(filt.steps[j + 1]) : 0;
        if (piece_degree != step_degree - next_degree)
            throw std::logic_error("graded piece degree must be the degree drop");
        out.piece_twists.push_back(pi.row_twists());
        out.projections.push_back(std::move(pi));
    }
    for (std::size_t j = 0; j + 1 < p; ++j) {
        TwistedMatrix h = map_into(pair, filt.steps[j], filt.steps[j + 1]);
        TwistedMatrix kappa = out.projections[j + 1].shifted(pair.l_degree()) * h;
        TwistedMatrix phi = factor_over_quotient(kappa, out.projections[j]);
        if (phi.is_zero())
            throw std::logic_error("kernel-chain induced maps must be nonzero");
        out.induced_maps.push_back(std::move(phi));
    }
    return out;
}

GradedData graded_intermediate(const HitchinPair& pair, const Filtration& filt) {
    IntermediateSide side = intermediate_side(pair, filt);
    const SubbundleBasis& sub =
        side == IntermediateSide::KernelQuotient ? filt.steps[1] : filt.steps[2];
    GradedData out;
    TwistedMatrix pi = quotient_presentation(sub.basis);
    out.piece_twists.push_back(pi.row_twists());
    out.piece_twists.push_back(splitting_type(sub));
    TwistedMatrix h = factor_through(pair.higgs(),
                                     SubbundleBasis{sub.basis.shifted(pair.l_degree()), true});
    TwistedMatrix phi = factor_over_quotient(h, pi);
    if (phi.is_zero()) throw std::logic_error("intermediate induced map must be nonzero");
    out.projections.push_back(std::move(pi));
    out.projections.push_back(TwistedMatrix::identity(sub.basis.col_twists()));
    out.induced_maps.push_back(std::move(phi));
    return out;
}

}  // namespace

GradedData graded(const HitchinPair& pair, const Filtration& filt) {
    GradedData out = filt.kind == FiltrationKind::KernelChain
                         ? graded_kernel_chain(pair, filt)
                         : graded_intermediate(pair, filt);
    int total = 0;
    for (const auto& twists : out.piece_twists)
        total = std::accumulate(twists.begin(), twists.end(), total);
    if (total != pair.degree())
        throw std::logic_error("graded piece degrees must sum to the bundle degree");
    return out;
}

}  // namespace conelim
