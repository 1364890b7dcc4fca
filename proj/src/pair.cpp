#include "conelim/pair.hpp"

#include <algorithm>
#include <numeric>

#include "conelim/errors.hpp"

namespace conelim {

BundleModel::BundleModel(std::vector<int> t) : twists(std::move(t)) {
    if (twists.empty()) throw std::invalid_argument("bundle must have positive rank");
    if (!std::is_sorted(twists.begin(), twists.end(), std::greater<int>()))
        throw std::invalid_argument("twists must be sorted descending");
}

int BundleModel::degree() const {
    return std::accumulate(twists.begin(), twists.end(), 0);
}

HitchinPair HitchinPair::create(BundleModel bundle, int l_degree,
                                const std::vector<std::vector<BinaryForm>>& grid,
                                int min_l) {
    if (l_degree < min_l)
        throw HolomorphyViolation("twisting line degree " + std::to_string(l_degree) +
                                  " is below the model bound " + std::to_string(min_l));
    std::size_t r = bundle.twists.size();
    if (grid.size() != r)
        throw HolomorphyViolation("Higgs grid has " + std::to_string(grid.size()) +
                                  " rows, rank is " + std::to_string(r));
    std::vector<BinaryForm> entries;
    entries.reserve(r * r);
    for (std::size_t i = 0; i < r; ++i) {
        if (grid[i].size() != r)
            throw HolomorphyViolation("Higgs grid row " + std::to_string(i + 1) +
                                      " has wrong length");
        for (std::size_t j = 0; j < r; ++j) {
            const BinaryForm& e = grid[i][j];
            int expected = bundle.twists[i] + l_degree - bundle.twists[j];
            if (!e.is_zero() && (expected < 0 || e.degree() != expected))
                throw HolomorphyViolation(
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    ") must " +
                    (expected < 0 ? std::string("be zero (required degree ") +
                                        std::to_string(expected) + ")"
                                  : "have degree " + std::to_string(expected) +
                                        ", found " + std::to_string(e.degree())));
            entries.push_back(e);
        }
    }
    std::vector<int> row_twists(bundle.twists);
    for (auto& t : row_twists) t += l_degree;
    TwistedMatrix higgs(row_twists, bundle.twists, std::move(entries));
    return HitchinPair(std::move(bundle), l_degree, std::move(higgs));
}

bool HitchinImage::all_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [](const BinaryForm& f) { return f.is_zero(); });
}

const HitchinPair& validate(const HitchinPair& pair) {
    const TwistedMatrix& m = pair.higgs();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const BinaryForm& e = m.at(i, j);
            int expected = m.row_twists()[i] - m.col_twists()[j];
            if (!e.is_zero() && e.degree() != expected)
                throw HolomorphyViolation("entry (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ") violates the degree law");
        }
    return pair;
}

HitchinImage hitchin_map(const HitchinPair& pair) {
    const TwistedMatrix& phi = pair.higgs();
    int r = pair.rank();
    int l = pair.l_degree();
    // Trace recursion: A_1 = Phi, c_k = tr(A_k)/k, A_{k+1} = Phi (A_k - c_k I);
    // the k-th elementary symmetric function is (-1)^(k+1) c_k.
    std::vector<BinaryForm> out(r);
    TwistedMatrix a = phi;
    for (int k = 1; k <= r; ++k) {
        BinaryForm trace;
        for (int i = 0; i < r; ++i) trace = add(trace, a.at(i, i));
        BinaryForm c = trace.scaled(Rational(1, k));
        out[k - 1] = (k % 2 == 1) ? c : -c;
        if (k == r) break;
        // B = A_k - c_k I as a map E -> E(k l), then A_{k+1} = Phi(kl) * B.
        std::vector<BinaryForm> b_entries;
        b_entries.reserve(r * r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                b_entries.push_back(i == j ? sub(a.at(i, j), c) : a.at(i, j));
        TwistedMatrix b(a.row_twists(), a.col_twists(), std::move(b_entries));
        a = phi.shifted(k * l) * b;
    }
    return HitchinImage{std::move(out)};
}

TwistedMatrix higgs_power(const HitchinPair& pair, int power) {
    if (power < 1) throw std::invalid_argument("power must be positive");
    TwistedMatrix acc = pair.higgs();
    for (int k = 1; k < power; ++k) acc = pair.higgs().shifted(k * pair.l_degree()) * acc;
    return acc;
}

int nilpotency_order(const HitchinPair& pair) {
    int r = pair.rank();
    int p = -1;
    TwistedMatrix acc = pair.higgs();
    for (int k = 1; k <= r; ++k) {
        if (acc.is_zero()) {
            p = k;
            break;
        }
        if (k < r) acc = pair.higgs().shifted(k * pair.l_degree()) * acc;
    }
    bool char_zero = hitchin_map(pair).all_zero();
    if (p == -1) {
        if (char_zero)
            throw std::logic_error("characteristic coefficients vanish but a power does not");
        throw NotNilpotent("Higgs field has a nonzero characteristic coefficient");
    }
    if (!char_zero)
        throw std::logic_error("nilpotent Higgs field with nonzero characteristic coefficient");
    return p;
}

Rational slope(int degree, int rank) {
    if (rank < 1) throw ZeroRank("slope needs positive rank");
    return Rational(degree, rank);
}

Rational pair_slope(const HitchinPair& pair) { return slope(pair.degree(), pair.rank()); }

HitchinPair scale(const HitchinPair& pair, const Rational& factor) {
    if (factor == 0) throw ZeroScalar("scaling by zero leaves the moduli problem");
    std::vector<std::vector<BinaryForm>> grid(pair.rank(),
                                              std::vector<BinaryForm>(pair.rank()));
    for (int i = 0; i < pair.rank(); ++i)
        for (int j = 0; j < pair.rank(); ++j)
            grid[i][j] = pair.higgs().at(i, j).scaled(factor);
    return HitchinPair::create(pair.bundle(), pair.l_degree(), grid);
}

}  // namespace conelim
