#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conelim/rational.hpp"

namespace conelim {

// Homogeneous polynomial in X, Y with exact rational coefficients.
// coeffs_[k] is the coefficient of X^k Y^(degree-k). The zero form is
// degree-less so a single value can occupy any entry slot.
class BinaryForm {
public:
    BinaryForm() = default;  // zero
    BinaryForm(int degree, std::vector<Rational> coeffs);

    static BinaryForm zero() { return BinaryForm(); }
    static BinaryForm constant(const Rational& c);
    static BinaryForm monomial(const Rational& c, int x_power, int y_power);
    static BinaryForm var_x() { return monomial(1, 1, 0); }
    static BinaryForm var_y() { return monomial(1, 0, 1); }

    bool is_zero() const { return !degree_.has_value(); }
    // Degree of a nonzero form; calling on zero is a contract violation.
    int degree() const;
    // Degree if nonzero, else nullopt.
    std::optional<int> degree_opt() const { return degree_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int x_power) const;

    bool operator==(const BinaryForm& other) const = default;

    BinaryForm operator-() const;
    BinaryForm scaled(const Rational& c) const;

    Rational eval(const Rational& x, const Rational& y) const;

    // Largest a with Y^a | f (zero form has no such factor; returns 0).
    int y_valuation() const;
    // Largest a with X^a | f.
    int x_valuation() const;

    std::string str() const;

private:
    std::optional<int> degree_;
    std::vector<Rational> coeffs_;
};

// add/sub require equal degrees unless one side is zero (DegreeMismatch).
BinaryForm add(const BinaryForm& a, const BinaryForm& b);
BinaryForm sub(const BinaryForm& a, const BinaryForm& b);
BinaryForm mul(const BinaryForm& a, const BinaryForm& b);
// Exact quotient a/b; throws InexactDivision when b does not divide a.
BinaryForm exact_div(const BinaryForm& a, const BinaryForm& b);
// Normalized gcd: the coefficient of the highest X-power present is 1.
BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b);

inline BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) { return add(a, b); }
inline BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return sub(a, b); }
inline BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) { return mul(a, b); }

}  // namespace conelim
