#include "conelim/qlinalg.hpp"

#include <stdexcept>

namespace conelim {

void QMatrix::append_row(const std::vector<Rational>& row) {
    if (cols_ == 0 && rows_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::logic_error("appended row has wrong width");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> QMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && at(p, col) == 0) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
        Rational inv = Rational(1) / at(row, col);
        for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            Rational f = at(r, col);
            for (std::size_t c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMatrix::rank() const {
    QMatrix copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
    QMatrix copy = *this;
    auto pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -copy.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
    if (b.size() != rows_) throw std::logic_error("rhs size mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[r];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
    return x;
}

std::vector<std::vector<Rational>> canonical_span(
    const std::vector<std::vector<Rational>>& vectors, std::size_t dim) {
    QMatrix m(0, 0);
    if (vectors.empty()) return {};
    m = QMatrix(vectors.size(), dim);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = vectors[r][c];
    auto pivots = m.rref();
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::vector<Rational> row(dim);
        for (std::size_t c = 0; c < dim; ++c) row[c] = m.at(r, c);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<Rational>> extend_span(
    const std::vector<std::vector<Rational>>& base,
    const std::vector<std::vector<Rational>>& candidates, std::size_t dim) {
    auto reduced_base = canonical_span(base, dim);
    // Pivot coordinate of each base row (RREF rows: leftmost 1).
    auto pivot_of = [dim](const std::vector<Rational>& row) {
        for (std::size_t c = 0; c < dim; ++c)
            if (row[c] != 0) return c;
        return dim;
    };
    std::vector<std::vector<Rational>> leftovers;
    for (auto cand : candidates) {
        for (const auto& brow : reduced_base) {
            std::size_t p = pivot_of(brow);
            if (p == dim || cand[p] == 0) continue;
            Rational f = cand[p];
            for (std::size_t c = 0; c < dim; ++c) cand[c] -= f * brow[c];
        }
        bool nonzero = false;
        for (const auto& v : cand)
            if (v != 0) { nonzero = true; break; }
        if (nonzero) leftovers.push_back(std::move(cand));
    }
    return canonical_span(leftovers, dim);
}

}  // namespace conelim
