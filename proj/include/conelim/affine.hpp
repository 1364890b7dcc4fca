#pragma once

#include <string>
#include <vector>

#include "conelim/rational.hpp"
#include "conelim/twisted.hpp"

namespace conelim {

// Exact polynomial in the affine chart coordinate x = X/Y.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    // Restriction of a form to the chart Y = 1.
    static Poly from_form(const BinaryForm& f);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    bool operator==(const Poly&) const = default;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(const Rational& c) const;

    // Euclidean division.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    std::string str() const;

private:
    std::vector<Rational> coeffs_;  // no trailing zeros
};

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols);
    static PolyMatrix identity(std::size_t n);
    // Entrywise chart restriction.
    static PolyMatrix from_twisted(const TwistedMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Poly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const PolyMatrix&) const = default;
    bool is_zero() const;

    PolyMatrix operator*(const PolyMatrix& rhs) const;
    PolyMatrix operator-(const PolyMatrix& rhs) const;
    PolyMatrix hstack(const PolyMatrix& rhs) const;
    PolyMatrix columns(std::size_t first, std::size_t count) const;

    Poly det() const;
    // Inverse of a matrix with constant nonzero determinant (adjugate route).
    PolyMatrix inverse_unimodular() const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> data_;
};

// For a full-column-rank C whose maximal-minor gcd is constant (a saturated
// inclusion over the chart), returns columns D with [C-span basis | D]
// unimodular: a complement of the image as a direct summand. Built from a
// unimodular row reduction of C with minimal-degree pivoting.
PolyMatrix affine_complement(const PolyMatrix& c);

}  // namespace conelim
