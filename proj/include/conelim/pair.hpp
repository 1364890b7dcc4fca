#pragma once

#include <vector>

#include "conelim/twisted.hpp"

namespace conelim {

// Split underlying bundle: line-summand twists sorted descending.
struct BundleModel {
    std::vector<int> twists;

    explicit BundleModel(std::vector<int> t);
    int rank() const { return static_cast<int>(twists.size()); }
    int degree() const;
    bool operator==(const BundleModel&) const = default;
};

// A holomorphic pair (E, Phi) with Phi: E -> E(l). Construction validates
// the degree law entry by entry, which is holomorphy on the model curve.
class HitchinPair {
public:
    // grid is rank x rank; throws HolomorphyViolation naming the first
    // offending entry. min_l guards the twisting-line degree bound.
    static HitchinPair create(BundleModel bundle, int l_degree,
                              const std::vector<std::vector<BinaryForm>>& grid,
                              int min_l = 1);

    const BundleModel& bundle() const { return bundle_; }
    int l_degree() const { return l_degree_; }
    const TwistedMatrix& higgs() const { return higgs_; }
    int rank() const { return bundle_.rank(); }
    int degree() const { return bundle_.degree(); }

    bool operator==(const HitchinPair&) const = default;

private:
    HitchinPair(BundleModel bundle, int l_degree, TwistedMatrix higgs)
        : bundle_(std::move(bundle)), l_degree_(l_degree), higgs_(std::move(higgs)) {}

    BundleModel bundle_;
    int l_degree_;
    TwistedMatrix higgs_;
};

// Tuple of characteristic coefficients; entry k-1 is the k-th elementary
// symmetric function of the Higgs field's eigenvalues, a form of degree k*l
// (or zero).
struct HitchinImage {
    std::vector<BinaryForm> coefficients;

    bool all_zero() const;
};

// Re-checks the degree law on an assembled pair (cheap; construction already
// enforces it).
const HitchinPair& validate(const HitchinPair& pair);

// Exact characteristic coefficients via the trace recursion; no eigenvalues.
HitchinImage hitchin_map(const HitchinPair& pair);

// Phi^power as a map E -> E(power*l).
TwistedMatrix higgs_power(const HitchinPair& pair, int power);

// Least p >= 1 with Phi^p = 0; NotNilpotent when Phi^rank != 0. Cross-checked
// against vanishing of the characteristic coefficients.
int nilpotency_order(const HitchinPair& pair);

Rational slope(int degree, int rank);
Rational pair_slope(const HitchinPair& pair);

HitchinPair scale(const HitchinPair& pair, const Rational& factor);

}  // namespace conelim
