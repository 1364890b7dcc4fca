#include "conelim/testkit.hpp"

#include <algorithm>
#include <numeric>

#include "conelim/errors.hpp"
#include "conelim/qlinalg.hpp"
#include "conelim/stability.hpp"

namespace conelim::testkit {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t attempt) {
    std::uint64_t z = seed ^ (attempt * 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(eng_);
}

BinaryForm random_form(Rng& rng, int degree, bool ensure_nonzero, int coeff_bound) {
    if (degree < 0) return {};
    for (int guard = 0; guard < 64; ++guard) {
        std::vector<Rational> coeffs(degree + 1);
        for (auto& c : coeffs) c = rng.small_rational(coeff_bound);
        BinaryForm f(degree, std::move(coeffs));
        if (!ensure_nonzero || !f.is_zero()) return f;
    }
    // Guard exhausted: force a monomial.
    return BinaryForm::monomial(1, 0, degree);
}

TwistedMatrix random_automorphism(Rng& rng, const std::vector<int>& twists) {
    std::size_t r = twists.size();
    // Integer shears within equal-twist blocks.
    std::vector<std::vector<BinaryForm>> g(r, std::vector<BinaryForm>(r));
    for (std::size_t i = 0; i < r; ++i) g[i][i] = BinaryForm::constant(1);
    int shears = static_cast<int>(r) + 2;
    for (int s = 0; s < shears; ++s) {
        std::size_t i = rng.uniform(0, static_cast<int>(r) - 1);
        std::size_t j = rng.uniform(0, static_cast<int>(r) - 1);
        if (i == j || twists[i] != twists[j]) continue;
        Rational c = rng.small_rational();
        if (c == 0) continue;
        // column op: col j += c * col i keeps determinant one
        for (std::size_t k = 0; k < r; ++k)
            g[k][j] = add(g[k][j], g[k][i].scaled(c));
    }
    // Random forms strictly between twist groups (upper slots in descending
    // order have nonnegative entry degree).
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (twists[i] <= twists[j]) continue;
            g[i][j] = random_form(rng, twists[i] - twists[j], false);
        }
    return TwistedMatrix::from_columns(twists, twists, [&] {
        std::vector<std::vector<BinaryForm>> cols(r, std::vector<BinaryForm>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) cols[j][i] = g[i][j];
        return cols;
    }());
}

TwistedMatrix random_twisted_matrix(Rng& rng, const std::vector<int>& row_twists,
                                    const std::vector<int>& col_twists) {
    std::vector<BinaryForm> entries;
    entries.reserve(row_twists.size() * col_twists.size());
    for (int rt : row_twists)
        for (int ct : col_twists) entries.push_back(random_form(rng, rt - ct, false));
    return TwistedMatrix(row_twists, col_twists, std::move(entries));
}

namespace {

std::vector<int> random_twists(Rng& rng, const GenParams& p) {
    std::vector<int> t(p.rank);
    for (auto& v : t) v = rng.uniform(p.twist_min, p.twist_max);
    std::sort(t.begin(), t.end(), std::greater<int>());
    return t;
}

// Strictly lower-triangular with nonzero subdiagonal: a regular shape.
bool build_regular(Rng& rng, const std::vector<int>& a, int l,
                   std::vector<std::vector<BinaryForm>>& grid) {
    std::size_t r = a.size();
    for (std::size_t i = 0; i + 1 < r; ++i)
        if (a[i + 1] + l - a[i] < 0) return false;  // infeasible subdiagonal slot
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            int deg = a[i] + l - a[j];
            if (deg < 0) continue;
            grid[i][j] = random_form(rng, deg, j + 1 == i);
        }
    return true;
}

// Rank-one square-zero shape: u (a column of E(-t)) times w (a row pairing
// to zero with u). The twist t sweeps the feasible window, which varies the
// image-line degree across instances.
bool build_rank3_intermediate(Rng& rng, const std::vector<int>& a, int l,
                              std::vector<std::vector<BinaryForm>>& grid) {
    int t_lo = *std::min_element(a.begin(), a.end()) - 0;
    int t_hi = *std::max_element(a.begin(), a.end());
    int t = rng.uniform(t_lo - l + 1, t_hi);
    std::vector<BinaryForm> u(a.size());
    bool u_nonzero = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u[i] = random_form(rng, a[i] - t, false);
        u_nonzero = u_nonzero || !u[i].is_zero();
    }
    if (!u_nonzero) return false;

    // w coefficients satisfying <w, u> = 0, sampled from the nullspace.
    std::vector<int> w_degrees(a.size());
    int n_vars = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        w_degrees[j] = t + l - a[j];
        if (w_degrees[j] >= 0) n_vars += w_degrees[j] + 1;
    }
    if (n_vars == 0) return false;
    QMatrix cond(l + 1, n_vars);
    int var = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (w_degrees[j] < 0) continue;
        for (int p = 0; p <= w_degrees[j]; ++p, ++var)
            if (!u[j].is_zero())
                for (int q = 0; q <= u[j].degree(); ++q)
                    cond.at(p + q, var) += u[j].coeff(q);
    }
    auto null_basis = cond.nullspace();
    if (null_basis.empty()) return false;
    std::vector<Rational> w_coords(n_vars, Rational(0));
    bool w_nonzero = false;
    for (const auto& vec : null_basis) {
        Rational c = rng.small_rational();
        if (c == 0) continue;
        for (int k = 0; k < n_vars; ++k) w_coords[k] += c * vec[k];
    }
    for (const auto& c : w_coords)
        if (c != 0) w_nonzero = true;
    if (!w_nonzero) return false;
    std::vector<BinaryForm> w(a.size());
    var = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (w_degrees[j] < 0) continue;
        std::vector<Rational> coeffs(w_degrees[j] + 1);
        for (int p = 0; p <= w_degrees[j]; ++p, ++var) coeffs[p] = w_coords[var];
        w[j] = BinaryForm(w_degrees[j], std::move(coeffs));
    }
    bool any = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            grid[i][j] = mul(u[i], w[j]);
            any = any || !grid[i][j].is_zero();
        }
    return any;
}

void build_any(Rng& rng, const std::vector<int>& a, int l,
               std::vector<std::vector<BinaryForm>>& grid) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            int deg = a[i] + l - a[j];
            if (deg >= 0) grid[i][j] = random_form(rng, deg, false);
        }
}

bool shape_holds(const HitchinPair& pair, Shape shape) {
    switch (shape) {
        case Shape::Zero:
            return pair.higgs().is_zero();
        case Shape::Regular:
            try {
                return nilpotency_order(pair) == pair.rank() && pair.rank() >= 2;
            } catch (const NotNilpotent&) {
                return false;
            }
        case Shape::Rank3Intermediate:
            try {
                return pair.rank() == 3 && nilpotency_order(pair) == 2;
            } catch (const NotNilpotent&) {
                return false;
            }
        case Shape::Any:
            return true;
    }
    return false;
}

}  // namespace

HitchinPair random_pair(const GenParams& params) {
    if (params.rank < 2 || params.rank > 4)
        throw std::invalid_argument("generator supports ranks 2..4");
    if (params.shape == Shape::Rank3Intermediate && params.rank != 3)
        throw std::invalid_argument("the intermediate shape needs rank 3");
    if (params.l_min < 1 || params.l_max < params.l_min ||
        params.twist_max < params.twist_min || params.max_attempts < 1)
        throw std::invalid_argument("bad generator parameter ranges");

    for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
        Rng rng(mix_seed(params.seed, static_cast<std::uint64_t>(attempt)));
        std::vector<int> twists = random_twists(rng, params);
        int l = rng.uniform(params.l_min, params.l_max);
        std::vector<std::vector<BinaryForm>> grid(params.rank,
                                                  std::vector<BinaryForm>(params.rank));
        bool built = true;
        switch (params.shape) {
            case Shape::Zero: break;
            case Shape::Regular: built = build_regular(rng, twists, l, grid); break;
            case Shape::Rank3Intermediate:
                built = build_rank3_intermediate(rng, twists, l, grid);
                break;
            case Shape::Any: build_any(rng, twists, l, grid); break;
        }
        if (!built) continue;

        TwistedMatrix g = random_automorphism(rng, twists);
        SubbundleBasis g_basis{g, true};
        TwistedMatrix g_inv = factor_through(TwistedMatrix::identity(twists), g_basis);
        std::vector<BinaryForm> entries;
        entries.reserve(grid.size() * grid.size());
        for (const auto& row : grid)
            for (const auto& e : row) entries.push_back(e);
        std::vector<int> row_twists(twists);
        for (auto& t : row_twists) t += l;
        TwistedMatrix phi0(row_twists, twists, std::move(entries));
        TwistedMatrix phi = g.shifted(l) * phi0 * g_inv;
        std::vector<std::vector<BinaryForm>> conj(params.rank,
                                                  std::vector<BinaryForm>(params.rank));
        for (int i = 0; i < params.rank; ++i)
            for (int j = 0; j < params.rank; ++j) conj[i][j] = phi.at(i, j);
        HitchinPair pair = HitchinPair::create(BundleModel(twists), l, conj);

        if (!shape_holds(pair, params.shape)) continue;
        if (params.require_stable) {
            try {
                if (!is_stable(pair).stable) continue;
            } catch (const Unsupported&) {
                continue;
            }
        }
        return pair;
    }
    throw ExhaustedAttempts("no instance with the requested shape within " +
                            std::to_string(params.max_attempts) + " attempts");
}

int h0_at(const SubbundleBasis& B, int m) {
    if (!B.saturated) throw NotSaturated("h^0 oracle needs a saturated basis");
    return span_slice_dimension(B.basis, m);
}

std::vector<int> h0_profile(const SubbundleBasis& B, int m_max) {
    std::vector<int> out;
    for (int m = 0; m <= m_max; ++m) out.push_back(h0_at(B, m));
    return out;
}

std::vector<int> splitting_from_h0(const SubbundleBasis& B) {
    if (!B.saturated) throw NotSaturated("oracle needs a saturated basis");
    int rank = static_cast<int>(B.rank());
    std::vector<int> splits;
    if (rank == 0) return splits;
    int ambient_max = *std::max_element(B.ambient_twists().begin(), B.ambient_twists().end());
    // Below m = -ambient_max - 1 every section vanishes; scan upward and read
    // off the multiset from the jumps of h^0(m) - h^0(m-1).
    int m = -ambient_max - 1;
    int prev_delta = 0;
    int h_prev = h0_at(B, m - 1);
    int guard = 0;
    while (prev_delta < rank) {
        int h_here = h0_at(B, m);
        int delta = h_here - h_prev;
        for (int c = 0; c < delta - prev_delta; ++c) splits.push_back(-m);
        prev_delta = delta;
        h_prev = h_here;
        ++m;
        if (++guard > 1000) throw std::logic_error("h^0 scan did not stabilize");
    }
    std::sort(splits.begin(), splits.end(), std::greater<int>());
    return splits;
}

bool pointwise_nilpotency_oracle(const HitchinPair& pair, int samples) {
    if (samples < pair.rank() + 1)
        throw std::invalid_argument("need at least rank + 1 sample points");
    int r = pair.rank();
    auto nilpotent_at = [&](const Rational& x, const Rational& y) {
        auto m = pair.higgs().eval(x, y);
        auto acc = m;
        for (int k = 1; k < r; ++k) {
            std::vector<std::vector<Rational>> next(r, std::vector<Rational>(r, Rational(0)));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    for (int t = 0; t < r; ++t) next[i][j] += m[i][t] * acc[t][j];
            acc = std::move(next);
        }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (acc[i][j] != 0) return false;
        return true;
    };
    for (int s = 0; s < samples; ++s)
        if (!nilpotent_at(Rational(s), Rational(1))) return false;
    return nilpotent_at(Rational(1), Rational(0));
}

SubbundleBasis random_line_in(Rng& rng, const SubbundleBasis& sub) {
    const auto& twists = sub.basis.col_twists();
    int t_min = *std::min_element(twists.begin(), twists.end());
    for (int guard = 0; guard < 64; ++guard) {
        int t = t_min - rng.uniform(0, 2);
        std::vector<std::vector<BinaryForm>> combo(1);
        std::vector<BinaryForm> v(sub.basis.rows());
        for (std::size_t j = 0; j < sub.rank(); ++j) {
            BinaryForm f = random_form(rng, twists[j] - t, false);
            if (f.is_zero()) continue;
            auto col = sub.basis.column(j);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = add(v[i], mul(f, col[i]));
        }
        bool nonzero = std::any_of(v.begin(), v.end(),
                                   [](const BinaryForm& f) { return !f.is_zero(); });
        if (!nonzero) continue;
        TwistedMatrix col = TwistedMatrix::from_columns(sub.ambient_twists(), {t}, {v});
        return saturate(col);
    }
    throw std::logic_error("could not sample a line subbundle");
}

SubbundleBasis random_overline_of(Rng& rng, const HitchinPair& pair,
                                  const SubbundleBasis& line) {
    const auto& ambient = pair.bundle().twists;
    for (int guard = 0; guard < 64; ++guard) {
        int t = *std::min_element(ambient.begin(), ambient.end()) - rng.uniform(0, 2);
        std::vector<BinaryForm> v(ambient.size());
        for (std::size_t i = 0; i < ambient.size(); ++i)
            v[i] = random_form(rng, ambient[i] - t, false);
        std::vector<std::vector<BinaryForm>> cols{line.basis.column(0), v};
        TwistedMatrix m = TwistedMatrix::from_columns(
            ambient, {line.basis.col_twists()[0], t}, cols);
        if (m.rank() != 2) continue;
        return saturate(m);
    }
    throw std::logic_error("could not sample a rank-2 overline");
}

SubbundleBasis random_cyclic_invariant(Rng& rng, const HitchinPair& pair,
                                       const SubbundleBasis& seed_step) {
    const auto& ambient = pair.bundle().twists;
    int l = pair.l_degree();
    const auto& seed_twists = seed_step.basis.col_twists();
    for (int guard = 0; guard < 64; ++guard) {
        int t = *std::min_element(seed_twists.begin(), seed_twists.end()) - rng.uniform(0, 1);
        std::vector<BinaryForm> v(ambient.size());
        bool nonzero = false;
        for (std::size_t j = 0; j < seed_step.rank(); ++j) {
            BinaryForm f = random_form(rng, seed_twists[j] - t, false);
            if (f.is_zero()) continue;
            auto col = seed_step.basis.column(j);
            for (std::size_t i = 0; i < ambient.size(); ++i) v[i] = add(v[i], mul(f, col[i]));
        }
        for (const auto& e : v) nonzero = nonzero || !e.is_zero();
        if (!nonzero) continue;
        std::vector<std::vector<BinaryForm>> cols{v};
        std::vector<int> col_twists{t};
        std::vector<BinaryForm> current = v;
        int twist = t;
        for (int k = 1; k < pair.rank(); ++k) {
            // apply the field: next lives in E(l^k), i.e. twist drops by l
            std::vector<BinaryForm> next(ambient.size());
            for (std::size_t i = 0; i < ambient.size(); ++i) {
                BinaryForm acc;
                for (std::size_t j = 0; j < ambient.size(); ++j)
                    acc = add(acc, mul(pair.higgs().at(i, j), current[j]));
                next[i] = std::move(acc);
            }
            twist -= l;
            bool next_nonzero = std::any_of(next.begin(), next.end(),
                                            [](const BinaryForm& f) { return !f.is_zero(); });
            if (!next_nonzero) break;
            cols.push_back(next);
            col_twists.push_back(twist);
            current = std::move(next);
        }
        TwistedMatrix m = TwistedMatrix::from_columns(ambient, col_twists, cols);
        return saturate_span(m);
    }
    throw std::logic_error("could not sample a cyclic invariant subbundle");
}

}  // namespace conelim::testkit
