#include "conelim/twisted.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "conelim/errors.hpp"

namespace conelim {

TwistedMatrix::TwistedMatrix(std::vector<int> row_twists, std::vector<int> col_twists,
                             std::vector<BinaryForm> entries)
    : row_twists_(std::move(row_twists)),
      col_twists_(std::move(col_twists)),
      entries_(std::move(entries)) {
    if (entries_.size() != rows() * cols())
        throw std::logic_error("entry count does not match matrix shape");
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
            const BinaryForm& e = at(i, j);
            if (e.is_zero()) continue;
            int expected = row_twists_[i] - col_twists_[j];
            if (expected < 0 || e.degree() != expected)
                throw DegreeMismatch(
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    ") has degree " + std::to_string(e.degree()) + ", twist law needs " +
                    std::to_string(expected));
        }
    }
}

TwistedMatrix TwistedMatrix::zero(std::vector<int> row_twists, std::vector<int> col_twists) {
    std::size_t n = row_twists.size() * col_twists.size();
    return TwistedMatrix(std::move(row_twists), std::move(col_twists),
                         std::vector<BinaryForm>(n));
}

TwistedMatrix TwistedMatrix::identity(const std::vector<int>& twists) {
    std::vector<BinaryForm> entries(twists.size() * twists.size());
    for (std::size_t i = 0; i < twists.size(); ++i)
        entries[i * twists.size() + i] = BinaryForm::constant(1);
    return TwistedMatrix(twists, twists, std::move(entries));
}

TwistedMatrix TwistedMatrix::from_columns(const std::vector<int>& row_twists,
                                          const std::vector<int>& col_twists,
                                          const std::vector<std::vector<BinaryForm>>& columns) {
    std::vector<BinaryForm> entries(row_twists.size() * col_twists.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < row_twists.size(); ++i)
            entries[i * col_twists.size() + j] = columns[j][i];
    return TwistedMatrix(row_twists, col_twists, std::move(entries));
}

bool TwistedMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const BinaryForm& e) { return e.is_zero(); });
}

std::vector<BinaryForm> TwistedMatrix::column(std::size_t j) const {
    std::vector<BinaryForm> out(rows());
    for (std::size_t i = 0; i < rows(); ++i) out[i] = at(i, j);
    return out;
}

TwistedMatrix TwistedMatrix::operator*(const TwistedMatrix& rhs) const {
    if (col_twists_ != rhs.row_twists_)
        throw std::logic_error("twist profiles do not compose");
    std::vector<BinaryForm> entries(rows() * rhs.cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            BinaryForm acc;
            for (std::size_t k = 0; k < cols(); ++k)
                acc = add(acc, mul(at(i, k), rhs.at(k, j)));
            entries[i * rhs.cols() + j] = std::move(acc);
        }
    return TwistedMatrix(row_twists_, rhs.col_twists_, std::move(entries));
}

TwistedMatrix TwistedMatrix::operator+(const TwistedMatrix& rhs) const {
    if (row_twists_ != rhs.row_twists_ || col_twists_ != rhs.col_twists_)
        throw std::logic_error("twist profiles do not match for addition");
    std::vector<BinaryForm> entries(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries[k] = add(entries_[k], rhs.entries_[k]);
    return TwistedMatrix(row_twists_, col_twists_, std::move(entries));
}

TwistedMatrix TwistedMatrix::operator-() const { return scaled(Rational(-1)); }

TwistedMatrix TwistedMatrix::scaled(const Rational& c) const {
    std::vector<BinaryForm> entries(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k) entries[k] = entries_[k].scaled(c);
    return TwistedMatrix(row_twists_, col_twists_, std::move(entries));
}

TwistedMatrix TwistedMatrix::shifted(int amount) const {
    std::vector<int> r = row_twists_, c = col_twists_;
    for (auto& t : r) t += amount;
    for (auto& t : c) t += amount;
    return TwistedMatrix(std::move(r), std::move(c), entries_);
}

TwistedMatrix TwistedMatrix::dual() const {
    std::vector<int> r(col_twists_.size()), c(row_twists_.size());
    for (std::size_t j = 0; j < col_twists_.size(); ++j) r[j] = -col_twists_[j];
    for (std::size_t i = 0; i < row_twists_.size(); ++i) c[i] = -row_twists_[i];
    std::vector<BinaryForm> entries(entries_.size());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) entries[j * rows() + i] = at(i, j);
    return TwistedMatrix(std::move(r), std::move(c), std::move(entries));
}

TwistedMatrix TwistedMatrix::submatrix(const std::vector<std::size_t>& row_ix,
                                       const std::vector<std::size_t>& col_ix) const {
    std::vector<int> r, c;
    for (auto i : row_ix) r.push_back(row_twists_[i]);
    for (auto j : col_ix) c.push_back(col_twists_[j]);
    std::vector<BinaryForm> entries;
    entries.reserve(row_ix.size() * col_ix.size());
    for (auto i : row_ix)
        for (auto j : col_ix) entries.push_back(at(i, j));
    return TwistedMatrix(std::move(r), std::move(c), std::move(entries));
}

BinaryForm TwistedMatrix::det() const {
    if (rows() != cols()) throw std::logic_error("determinant of non-square matrix");
    std::size_t n = rows();
    if (n == 0) return BinaryForm::constant(1);
    // Cofactor expansion along the first remaining row; fine at these sizes.
    std::function<BinaryForm(std::vector<std::size_t>, std::vector<std::size_t>)> go =
        [&](std::vector<std::size_t> ri, std::vector<std::size_t> ci) -> BinaryForm {
        if (ri.size() == 1) return at(ri[0], ci[0]);
        BinaryForm acc;
        std::vector<std::size_t> sub_rows(ri.begin() + 1, ri.end());
        for (std::size_t k = 0; k < ci.size(); ++k) {
            if (at(ri[0], ci[k]).is_zero()) continue;
            std::vector<std::size_t> sub_cols;
            for (std::size_t l = 0; l < ci.size(); ++l)
                if (l != k) sub_cols.push_back(ci[l]);
            BinaryForm term = mul(at(ri[0], ci[k]), go(sub_rows, sub_cols));
            acc = add(acc, k % 2 == 0 ? term : -term);
        }
        return acc;
    };
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return go(all, all);
}

namespace {

void subsets_of(std::size_t n, std::size_t k,
                const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> ix(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            fn(ix);
            return;
        }
        for (std::size_t v = start; v + (k - depth) <= n; ++v) {
            ix[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

std::size_t TwistedMatrix::rank() const {
    // Fraction-free elimination over the form ring; entries stay homogeneous
    // (they are minors) and the divisions are exact by the Sylvester identity.
    std::size_t m = rows(), n = cols();
    std::vector<std::vector<BinaryForm>> a(m, std::vector<BinaryForm>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = at(i, j);
    BinaryForm prev = BinaryForm::constant(1);
    std::size_t r = 0;
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
        std::size_t pi = m, pj = n;
        for (std::size_t i = k; i < m && pi == m; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (!a[i][j].is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == m) break;
        std::swap(a[pi], a[k]);
        if (pj != k)
            for (std::size_t i = 0; i < m; ++i) std::swap(a[i][pj], a[i][k]);
        for (std::size_t i = k + 1; i < m; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j])), prev);
        prev = a[k][k];
        ++r;
    }
    return r;
}

BinaryForm TwistedMatrix::maximal_minor_gcd() const {
    std::size_t k = cols();
    if (k == 0 || k > rows()) return {};
    BinaryForm g;
    std::vector<std::size_t> all_cols(k);
    for (std::size_t j = 0; j < k; ++j) all_cols[j] = j;
    subsets_of(rows(), k, [&](const std::vector<std::size_t>& ri) {
        BinaryForm minor = submatrix(ri, all_cols).det();
        if (!minor.is_zero()) g = form_gcd(g, minor);
    });
    return g;
}

std::vector<std::vector<Rational>> TwistedMatrix::eval(const Rational& x,
                                                       const Rational& y) const {
    std::vector<std::vector<Rational>> out(rows(), std::vector<Rational>(cols()));
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) out[i][j] = at(i, j).eval(x, y);
    return out;
}

std::string TwistedMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows(); ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < cols(); ++j) {
            os << at(i, j).str();
            if (j + 1 < cols()) os << ", ";
        }
        os << " ]\n";
    }
    return os.str();
}

}  // namespace conelim
