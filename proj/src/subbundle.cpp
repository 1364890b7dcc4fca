#include "conelim/subbundle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "conelim/errors.hpp"
#include "conelim/qlinalg.hpp"

namespace conelim {

namespace {

// Coordinate chart for vectors of forms with component twists c at module
// degree m: component j is a form of degree c[j] + m (absent when negative).
// Coordinates are component-major with X-power descending, which is the
// tie-breaking order behind every canonical basis in this module.
struct SliceChart {
    std::vector<int> twists;
    int degree;
    std::vector<int> offsets;  // offsets[j] = first coordinate of component j
    int dim = 0;

    SliceChart(std::vector<int> c, int m) : twists(std::move(c)), degree(m) {
        offsets.resize(twists.size());
        for (std::size_t j = 0; j < twists.size(); ++j) {
            offsets[j] = dim;
            int d = twists[j] + degree;
            if (d >= 0) dim += d + 1;
        }
    }

    int component_degree(std::size_t j) const { return twists[j] + degree; }

    std::vector<Rational> encode(const std::vector<BinaryForm>& v) const {
        std::vector<Rational> out(dim, Rational(0));
        for (std::size_t j = 0; j < twists.size(); ++j) {
            int d = component_degree(j);
            if (d < 0) continue;
            const BinaryForm& f = v[j];
            if (f.is_zero()) continue;
            for (int k = 0; k <= d; ++k) out[offsets[j] + (d - k)] = f.coeff(k);
        }
        return out;
    }

    std::vector<BinaryForm> decode(const std::vector<Rational>& coords) const {
        std::vector<BinaryForm> v(twists.size());
        for (std::size_t j = 0; j < twists.size(); ++j) {
            int d = component_degree(j);
            if (d < 0) continue;
            std::vector<Rational> coeffs(d + 1, Rational(0));
            for (int k = 0; k <= d; ++k) coeffs[k] = coords[offsets[j] + (d - k)];
            v[j] = BinaryForm(d, std::move(coeffs));
        }
        return v;
    }
};

std::vector<BinaryForm> times_x(const std::vector<BinaryForm>& v) {
    std::vector<BinaryForm> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = mul(v[j], BinaryForm::var_x());
    return out;
}

std::vector<BinaryForm> times_y(const std::vector<BinaryForm>& v) {
    std::vector<BinaryForm> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = mul(v[j], BinaryForm::var_y());
    return out;
}

// Basis of the degree-m slice of the kernel module of U.
std::vector<std::vector<BinaryForm>> kernel_slice(const TwistedMatrix& U,
                                                  const SliceChart& chart) {
    if (chart.dim == 0) return {};
    // One coefficient condition per (row i, monomial of degree row_twist+m).
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < U.rows(); ++i) {
        int target_deg = U.row_twists()[i] + chart.degree;
        if (target_deg < 0) continue;
        for (int a = 0; a <= target_deg; ++a) {
            std::vector<Rational> cond(chart.dim, Rational(0));
            bool any = false;
            for (std::size_t j = 0; j < U.cols(); ++j) {
                const BinaryForm& e = U.at(i, j);
                if (e.is_zero()) continue;
                int d = chart.component_degree(j);
                if (d < 0) continue;
                // coefficient of X^a in e * X^p Y^(d-p) is coeff(e, a-p)
                for (int p = 0; p <= d; ++p) {
                    const Rational& c = e.coeff(a - p);
                    if (c != 0) {
                        cond[chart.offsets[j] + (d - p)] += c;
                        any = true;
                    }
                }
            }
            if (any) rows.push_back(std::move(cond));
        }
    }
    std::vector<std::vector<Rational>> coords;
    if (rows.empty()) {
        // No conditions: whole slice.
        for (int k = 0; k < chart.dim; ++k) {
            std::vector<Rational> v(chart.dim, Rational(0));
            v[k] = 1;
            coords.push_back(std::move(v));
        }
    } else {
        QMatrix m(rows.size(), chart.dim);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < chart.dim; ++c) m.at(r, c) = rows[r][c];
        coords = m.nullspace();
    }
    std::vector<std::vector<BinaryForm>> out;
    out.reserve(coords.size());
    for (const auto& v : coords) out.push_back(chart.decode(v));
    return out;
}

TwistedMatrix basis_from_generators(
    const std::vector<int>& ambient,
    const std::vector<std::pair<int, std::vector<BinaryForm>>>& gens) {
    std::vector<int> col_twists;
    std::vector<std::vector<BinaryForm>> cols;
    for (const auto& [twist, v] : gens) {
        col_twists.push_back(twist);
        cols.push_back(v);
    }
    return TwistedMatrix::from_columns(ambient, col_twists, cols);
}

// Minimal generators of the kernel module of U inside the free module with
// component twists = col twists of U. Scans module degrees upward; at each
// degree the new generators are the canonical complement of S_1 * (previous
// slice) inside the kernel slice. A free module has exactly rank-many
// minimal generators, so the scan stops once that count is reached.
TwistedMatrix graded_kernel(const TwistedMatrix& U) {
    const std::vector<int>& c = U.col_twists();
    std::size_t n = U.cols();
    if (n == 0) return TwistedMatrix::zero(c, {});
    std::size_t kernel_rank = n - U.rank();
    std::vector<std::pair<int, std::vector<BinaryForm>>> gens;
    if (kernel_rank == 0) return basis_from_generators(c, gens);

    int c_max = *std::max_element(c.begin(), c.end());
    int c_sum = std::accumulate(c.begin(), c.end(), 0);
    int rho_max = U.rows() ? *std::max_element(U.row_twists().begin(), U.row_twists().end()) : 0;
    // Splitting degrees of the kernel are bounded below by
    //   c_sum - rank(U) * rho_max - (kernel_rank - 1) * c_max,
    // which caps the generator search.
    int lower = c_sum - static_cast<int>(U.rank()) * rho_max -
                (static_cast<int>(kernel_rank) - 1) * c_max;
    int m_cap = -lower + 2;

    std::vector<std::vector<BinaryForm>> prev_slice;
    for (int m = -c_max; m <= m_cap; ++m) {
        SliceChart chart(c, m);
        if (chart.dim == 0) {
            prev_slice.clear();
            continue;
        }
        auto slice = kernel_slice(U, chart);
        std::vector<std::vector<Rational>> old_coords;
        for (const auto& w : prev_slice) {
            old_coords.push_back(chart.encode(times_x(w)));
            old_coords.push_back(chart.encode(times_y(w)));
        }
        std::vector<std::vector<Rational>> cand_coords;
        cand_coords.reserve(slice.size());
        for (const auto& w : slice) cand_coords.push_back(chart.encode(w));
        auto fresh = extend_span(old_coords, cand_coords, chart.dim);
        for (const auto& coords : fresh) gens.emplace_back(-m, chart.decode(coords));
        prev_slice = std::move(slice);
        if (gens.size() == kernel_rank) break;
    }
    if (gens.size() != kernel_rank)
        throw std::logic_error("kernel generator scan exceeded its degree bound");
    return basis_from_generators(c, gens);
}

// Minimal generators of the module generated by the columns of B.
TwistedMatrix graded_minimal_span(const TwistedMatrix& B) {
    const std::vector<int>& ambient = B.row_twists();
    std::size_t k = B.cols();
    std::vector<std::pair<int, std::vector<BinaryForm>>> gens;
    if (k == 0) return basis_from_generators(ambient, gens);

    // Minimal generator degrees are a subset of the input column degrees.
    std::vector<int> twist_values(B.col_twists());
    std::sort(twist_values.begin(), twist_values.end(), std::greater<int>());
    twist_values.erase(std::unique(twist_values.begin(), twist_values.end()),
                       twist_values.end());

    auto slice_at = [&](int m) {
        std::vector<std::vector<BinaryForm>> vecs;
        for (std::size_t j = 0; j < k; ++j) {
            int d = m + B.col_twists()[j];
            if (d < 0) continue;
            auto col = B.column(j);
            for (int a = 0; a <= d; ++a) {
                BinaryForm mono = BinaryForm::monomial(1, a, d - a);
                std::vector<BinaryForm> v(col.size());
                for (std::size_t i = 0; i < col.size(); ++i) v[i] = mul(mono, col[i]);
                vecs.push_back(std::move(v));
            }
        }
        return vecs;
    };

    for (int twist : twist_values) {
        int m = -twist;
        SliceChart chart(ambient, m);
        std::vector<std::vector<Rational>> old_coords;
        for (const auto& w : slice_at(m - 1)) {
            old_coords.push_back(chart.encode(times_x(w)));
            old_coords.push_back(chart.encode(times_y(w)));
        }
        std::vector<std::vector<Rational>> cand_coords;
        for (const auto& w : slice_at(m)) cand_coords.push_back(chart.encode(w));
        auto fresh = extend_span(old_coords, cand_coords, chart.dim);
        for (const auto& coords : fresh) gens.emplace_back(twist, chart.decode(coords));
        if (gens.size() == k) break;
    }
    if (gens.size() != k)
        throw std::logic_error("minimal basis scan lost generators");
    return basis_from_generators(ambient, gens);
}

}  // namespace

SubbundleBasis zero_subbundle(const std::vector<int>& ambient_twists) {
    return {TwistedMatrix::zero(ambient_twists, {}), true};
}

SubbundleBasis full_subbundle(const std::vector<int>& ambient_twists) {
    return {TwistedMatrix::identity(ambient_twists), true};
}

SubbundleBasis kernel_basis(const TwistedMatrix& M) {
    return {graded_kernel(M), true};
}

SubbundleBasis saturate(const TwistedMatrix& B) {
    std::size_t k = B.cols(), m = B.rows();
    if (k == 0) return zero_subbundle(B.row_twists());
    if (B.rank() != k) throw RankDeficient("columns are dependent over the function field");
    if (k == m) return full_subbundle(B.row_twists());

    // Row of conditions per (k+1)-subset T of ambient rows: the signed
    // complementary k x k minors of B. Its kernel is exactly the rational
    // column span of B, met with the ambient module.
    int col_sum = std::accumulate(B.col_twists().begin(), B.col_twists().end(), 0);
    std::vector<std::vector<BinaryForm>> w_rows;
    std::vector<int> w_twists;
    std::vector<std::size_t> all_cols(k);
    for (std::size_t j = 0; j < k; ++j) all_cols[j] = j;
    std::vector<std::size_t> subset(k + 1);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t depth) {
        if (depth == k + 1) {
            std::vector<BinaryForm> row(m);
            bool any = false;
            for (std::size_t pos = 0; pos <= k; ++pos) {
                std::vector<std::size_t> rest;
                for (std::size_t q = 0; q <= k; ++q)
                    if (q != pos) rest.push_back(subset[q]);
                BinaryForm minor = B.submatrix(rest, all_cols).det();
                if (minor.is_zero()) continue;
                row[subset[pos]] = pos % 2 == 0 ? minor : -minor;
                any = true;
            }
            if (any) {
                int twist = -col_sum;
                for (auto i : subset) twist += B.row_twists()[i];
                w_rows.push_back(std::move(row));
                w_twists.push_back(twist);
            }
            return;
        }
        for (std::size_t v = start; v + (k + 1 - depth) <= m; ++v) {
            subset[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);

    std::vector<BinaryForm> entries;
    entries.reserve(w_rows.size() * m);
    for (const auto& row : w_rows)
        for (const auto& e : row) entries.push_back(e);
    TwistedMatrix conditions(w_twists, B.row_twists(), std::move(entries));
    TwistedMatrix out = graded_kernel(conditions);
    if (out.cols() != k) throw std::logic_error("saturation changed the rank");
    return {out, true};
}

SubbundleBasis saturate_span(const TwistedMatrix& M) {
    std::size_t r = M.rank();
    if (r == 0) return zero_subbundle(M.row_twists());
    // Greedy leftmost independent column subset; the rational span (hence
    // the saturation) is unchanged.
    std::vector<std::size_t> picked;
    std::vector<std::size_t> all_rows(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) all_rows[i] = i;
    for (std::size_t j = 0; j < M.cols() && picked.size() < r; ++j) {
        auto trial = picked;
        trial.push_back(j);
        if (M.submatrix(all_rows, trial).rank() == trial.size()) picked.push_back(j);
    }
    return saturate(M.submatrix(all_rows, picked));
}

TwistedMatrix minimal_basis(const TwistedMatrix& B) { return graded_minimal_span(B); }

std::vector<int> splitting_type(const SubbundleBasis& B) {
    if (!B.saturated) throw NotSaturated("splitting type needs a saturated basis");
    std::vector<int> out = B.basis.col_twists();
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

int subbundle_degree(const SubbundleBasis& B) {
    if (!B.saturated) throw NotSaturated("degree needs a saturated basis");
    const auto& t = B.basis.col_twists();
    return std::accumulate(t.begin(), t.end(), 0);
}

SubbundleBasis max_line_subbundle(const SubbundleBasis& B) {
    if (!B.saturated) throw NotSaturated("max line needs a saturated basis");
    if (B.rank() == 0) throw std::logic_error("max line of the zero subbundle");
    TwistedMatrix canonical = minimal_basis(B.basis);
    return {canonical.submatrix(
                [&] {
                    std::vector<std::size_t> all(canonical.rows());
                    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
                    return all;
                }(),
                {0}),
            true};
}

TwistedMatrix factor_through(const TwistedMatrix& A, const SubbundleBasis& B) {
    if (A.row_twists() != B.basis.row_twists())
        throw NotFactorable("ambient twist profiles differ");
    std::size_t k = B.rank();
    std::vector<std::vector<BinaryForm>> c_columns;
    std::vector<int> c_col_twists;
    for (std::size_t jc = 0; jc < A.cols(); ++jc) {
        int t = A.col_twists()[jc];
        // Unknown coefficient vector lives in the degree -t slice of the
        // free module on B's column twists.
        SliceChart chart(B.basis.col_twists(), -t);
        SliceChart target(A.row_twists(), -t);
        QMatrix sys(target.dim, chart.dim);
        for (std::size_t i = 0; i < A.rows(); ++i) {
            int td = target.component_degree(i);
            if (td < 0) continue;
            for (std::size_t j = 0; j < k; ++j) {
                const BinaryForm& e = B.basis.at(i, j);
                if (e.is_zero()) continue;
                int d = chart.component_degree(j);
                if (d < 0) continue;
                for (int a = 0; a <= td; ++a)
                    for (int p = 0; p <= d; ++p) {
                        const Rational& cf = e.coeff(a - p);
                        if (cf != 0)
                            sys.at(target.offsets[i] + (td - a), chart.offsets[j] + (d - p)) += cf;
                    }
            }
        }
        auto rhs = target.encode(A.column(jc));
        auto sol = sys.solve(rhs);
        if (!sol) throw NotFactorable("column " + std::to_string(jc + 1) +
                                      " does not factor through the subbundle");
        c_columns.push_back(chart.decode(*sol));
        c_col_twists.push_back(t);
    }
    return TwistedMatrix::from_columns(B.basis.col_twists(), c_col_twists, c_columns);
}

TwistedMatrix quotient_presentation(const TwistedMatrix& C) {
    if (C.cols() == 0) return TwistedMatrix::identity(C.row_twists());
    TwistedMatrix n = graded_kernel(C.dual());
    // Kernel columns come with ascending module degree, i.e. ascending
    // quotient twists after dualizing back; present them descending, ties in
    // generation order.
    TwistedMatrix pi = n.dual();
    std::vector<std::size_t> row_order(pi.rows());
    for (std::size_t i = 0; i < row_order.size(); ++i) row_order[i] = i;
    std::stable_sort(row_order.begin(), row_order.end(), [&](std::size_t a, std::size_t b) {
        return pi.row_twists()[a] > pi.row_twists()[b];
    });
    std::vector<std::size_t> all_cols(pi.cols());
    for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
    return pi.submatrix(row_order, all_cols);
}

TwistedMatrix factor_over_quotient(const TwistedMatrix& kappa, const TwistedMatrix& pi) {
    if (kappa.cols() != pi.cols() || kappa.col_twists() != pi.col_twists())
        throw NotFactorable("presentation and map have different sources");
    // Solve X * pi = kappa row by row of X.
    std::vector<std::vector<BinaryForm>> x_rows;
    for (std::size_t t = 0; t < kappa.rows(); ++t) {
        int rt = kappa.row_twists()[t];
        // Row t of X is a vector over pi's row twists, of module degree rt
        // in the dual sense: entry s has degree rt - pi.row_twists()[s].
        std::vector<int> neg(pi.rows());
        for (std::size_t s = 0; s < pi.rows(); ++s) neg[s] = -pi.row_twists()[s];
        SliceChart chart(neg, rt);
        // Conditions: for each source column i, sum_s X_{t,s} pi_{s,i} = kappa_{t,i}.
        std::vector<int> target_neg(pi.cols());
        for (std::size_t i = 0; i < pi.cols(); ++i) target_neg[i] = -pi.col_twists()[i];
        SliceChart target(target_neg, rt);
        QMatrix sys(target.dim, chart.dim);
        for (std::size_t i = 0; i < pi.cols(); ++i) {
            int td = target.component_degree(i);
            if (td < 0) continue;
            for (std::size_t s = 0; s < pi.rows(); ++s) {
                const BinaryForm& e = pi.at(s, i);
                if (e.is_zero()) continue;
                int d = chart.component_degree(s);
                if (d < 0) continue;
                for (int a = 0; a <= td; ++a)
                    for (int p = 0; p <= d; ++p) {
                        const Rational& cf = e.coeff(a - p);
                        if (cf != 0)
                            sys.at(target.offsets[i] + (td - a), chart.offsets[s] + (d - p)) += cf;
                    }
            }
        }
        std::vector<BinaryForm> rhs_vec(pi.cols());
        for (std::size_t i = 0; i < pi.cols(); ++i) rhs_vec[i] = kappa.at(t, i);
        auto sol = sys.solve(target.encode(rhs_vec));
        if (!sol) throw NotFactorable("map does not descend to the quotient");
        x_rows.push_back(chart.decode(*sol));
    }
    std::vector<BinaryForm> entries;
    for (const auto& row : x_rows)
        for (const auto& e : row) entries.push_back(e);
    return TwistedMatrix(kappa.row_twists(), pi.row_twists(), std::move(entries));
}

bool same_span(const SubbundleBasis& A, const SubbundleBasis& B) {
    if (A.rank() != B.rank()) return false;
    try {
        factor_through(A.basis, B);
        factor_through(B.basis, A);
        return true;
    } catch (const NotFactorable&) {
        return false;
    }
}

int span_slice_dimension(const TwistedMatrix& B, int m) {
    SliceChart chart(B.row_twists(), m);
    if (chart.dim == 0) return 0;
    std::vector<std::vector<Rational>> vecs;
    for (std::size_t j = 0; j < B.cols(); ++j) {
        int d = m + B.col_twists()[j];
        if (d < 0) continue;
        auto col = B.column(j);
        for (int a = 0; a <= d; ++a) {
            BinaryForm mono = BinaryForm::monomial(1, a, d - a);
            std::vector<BinaryForm> v(col.size());
            for (std::size_t i = 0; i < col.size(); ++i) v[i] = mul(mono, col[i]);
            vecs.push_back(chart.encode(v));
        }
    }
    return static_cast<int>(canonical_span(vecs, chart.dim).size());
}

}  // namespace conelim
