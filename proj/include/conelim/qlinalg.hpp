#pragma once

#include <optional>
#include <vector>

#include "conelim/rational.hpp"

namespace conelim {

// Dense exact-rational matrix utilities. Everything here reduces to row
// echelon form with leftmost-pivot selection, which keeps every derived
// basis canonical and regression-stable.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const std::vector<Rational>& row);

    // In-place reduced row echelon form; returns pivot column indices in order.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    // Canonical nullspace basis: one vector per free column, with the free
    // coordinate set to 1 and pivot coordinates solved from the RREF.
    std::vector<std::vector<Rational>> nullspace() const;

    // Least structural solve of A x = b; nullopt when inconsistent. When the
    // solution is not unique the free coordinates are set to zero.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Canonical reduced basis of the row span of `vectors`; rows are RREF rows.
std::vector<std::vector<Rational>> canonical_span(
    const std::vector<std::vector<Rational>>& vectors, std::size_t dim);

// Rows of `candidates` that extend span(base) to span(base ∪ candidates),
// reduced against the base and each other (canonical complement choice).
std::vector<std::vector<Rational>> extend_span(
    const std::vector<std::vector<Rational>>& base,
    const std::vector<std::vector<Rational>>& candidates, std::size_t dim);

}  // namespace conelim
