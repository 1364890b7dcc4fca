#include "conelim/affine.hpp"

#include <functional>
#include <sstream>

#include "conelim/errors.hpp"

namespace conelim {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) {
    return c == 0 ? Poly() : Poly(std::vector<Rational>{c});
}

Poly Poly::from_form(const BinaryForm& f) {
    if (f.is_zero()) return {};
    return Poly(f.coeffs());
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero");
    return coeffs_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly Poly::scaled(const Rational& c) const {
    if (c == 0 || is_zero()) return {};
    std::vector<Rational> out(coeffs_);
    for (auto& v : out) v *= c;
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::logic_error("affine division by zero");
    std::vector<Rational> rem(a.coeffs_);
    Poly r(std::move(rem));
    std::vector<Rational> q;
    if (r.coeffs_.size() >= b.coeffs_.size())
        q.assign(r.coeffs_.size() - b.coeffs_.size() + 1, Rational(0));
    while (!r.is_zero() && r.coeffs_.size() >= b.coeffs_.size()) {
        Rational c = r.coeffs_.back() / b.coeffs_.back();
        std::size_t shift = r.coeffs_.size() - b.coeffs_.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            r.coeffs_[shift + i] -= c * b.coeffs_[i];
        while (!r.coeffs_.empty() && r.coeffs_.back() == 0) r.coeffs_.pop_back();
    }
    return {Poly(std::move(q)), std::move(r)};
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) {
            os << to_string(mag);
            if (k > 0) os << "*";
        }
        if (k > 0) os << "x" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return os.str();
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(1);
    return m;
}

PolyMatrix PolyMatrix::from_twisted(const TwistedMatrix& m) {
    PolyMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = Poly::from_form(m.at(i, j));
    return out;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::logic_error("affine matrix shape mismatch");
    PolyMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            Poly acc;
            for (std::size_t k = 0; k < cols_; ++k) acc = acc + at(i, k) * rhs.at(k, j);
            out.at(i, j) = std::move(acc);
        }
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::logic_error("affine matrix shape mismatch");
    PolyMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - rhs.data_[k];
    return out;
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::logic_error("hstack row mismatch");
    PolyMatrix out(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, cols_ + j) = rhs.at(i, j);
    }
    return out;
}

PolyMatrix PolyMatrix::columns(std::size_t first, std::size_t count) const {
    PolyMatrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
    return out;
}

Poly PolyMatrix::det() const {
    if (rows_ != cols_) throw std::logic_error("determinant of non-square matrix");
    if (rows_ == 0) return Poly::constant(1);
    std::function<Poly(std::vector<std::size_t>, std::vector<std::size_t>)> go =
        [&](std::vector<std::size_t> ri, std::vector<std::size_t> ci) -> Poly {
        if (ri.size() == 1) return at(ri[0], ci[0]);
        Poly acc;
        std::vector<std::size_t> sub_rows(ri.begin() + 1, ri.end());
        for (std::size_t k = 0; k < ci.size(); ++k) {
            if (at(ri[0], ci[k]).is_zero()) continue;
            std::vector<std::size_t> sub_cols;
            for (std::size_t l = 0; l < ci.size(); ++l)
                if (l != k) sub_cols.push_back(ci[l]);
            Poly term = at(ri[0], ci[k]) * go(sub_rows, sub_cols);
            acc = k % 2 == 0 ? acc + term : acc - term;
        }
        return acc;
    };
    std::vector<std::size_t> all(rows_);
    for (std::size_t i = 0; i < rows_; ++i) all[i] = i;
    return go(all, all);
}

PolyMatrix PolyMatrix::inverse_unimodular() const {
    Poly d = det();
    if (d.is_zero() || !d.is_constant())
        throw std::logic_error("inverse needs a constant nonzero determinant");
    Rational inv = Rational(1) / d.coeffs()[0];
    std::size_t n = rows_;
    PolyMatrix out(n, n);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> ri, ci;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i) ri.push_back(k);
                if (k != j) ci.push_back(k);
            }
            PolyMatrix minor(n - 1, n - 1);
            for (std::size_t a = 0; a + 1 < n; ++a)
                for (std::size_t b = 0; b + 1 < n; ++b) minor.at(a, b) = at(ri[a], ci[b]);
            Poly cof = minor.det();
            if ((i + j) % 2 == 1) cof = -cof;
            out.at(j, i) = cof.scaled(inv);  // adjugate transposes
        }
    return out;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < cols_; ++j) {
            os << at(i, j).str();
            if (j + 1 < cols_) os << ", ";
        }
        os << " ]\n";
    }
    return os.str();
}

PolyMatrix affine_complement(const PolyMatrix& c) {
    std::size_t k = c.rows(), s = c.cols();
    if (s > k) throw std::logic_error("complement of an overfull inclusion");
    // Row-reduce C to an upper echelon [T; 0] by unimodular operations,
    // tracking R with R * C = [T; 0]; the last k - s columns of R^{-1}
    // complement the image. Pivots take the minimal-degree nonzero entry.
    PolyMatrix a = c;
    PolyMatrix r = PolyMatrix::identity(k);
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t col = 0; col < a.cols(); ++col) std::swap(a.at(i, col), a.at(j, col));
        for (std::size_t col = 0; col < k; ++col) std::swap(r.at(i, col), r.at(j, col));
    };
    auto row_op = [&](std::size_t dst, std::size_t src, const Poly& f) {
        // row dst -= f * row src
        for (std::size_t col = 0; col < a.cols(); ++col)
            a.at(dst, col) = a.at(dst, col) - f * a.at(src, col);
        for (std::size_t col = 0; col < k; ++col)
            r.at(dst, col) = r.at(dst, col) - f * r.at(src, col);
    };
    for (std::size_t j = 0; j < s; ++j) {
        while (true) {
            std::size_t pivot = k;
            for (std::size_t i = j; i < k; ++i) {
                if (a.at(i, j).is_zero()) continue;
                if (pivot == k || a.at(i, j).degree() < a.at(pivot, j).degree()) pivot = i;
            }
            if (pivot == k) throw RankDeficient("inclusion columns are dependent");
            swap_rows(pivot, j);
            bool reduced = true;
            for (std::size_t i = j + 1; i < k; ++i) {
                if (a.at(i, j).is_zero()) continue;
                auto [q, rem] = Poly::divmod(a.at(i, j), a.at(j, j));
                row_op(i, j, q);
                if (!rem.is_zero()) reduced = false;
            }
            if (reduced) break;
        }
    }
    PolyMatrix r_inv = r.inverse_unimodular();
    return r_inv.columns(s, k - s);
}

}  // namespace conelim
