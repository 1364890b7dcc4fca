#pragma once

#include <string>
#include <vector>

#include "conelim/form.hpp"

namespace conelim {

// Matrix of binary forms between split twisted bundles: entry (i,j) maps the
// summand of twist col_twists[j] into the summand of twist row_twists[i], so
// it is zero or homogeneous of degree row_twists[i] - col_twists[j]. This
// degree law is exactly holomorphy of the map on the model curve.
class TwistedMatrix {
public:
    TwistedMatrix() = default;
    TwistedMatrix(std::vector<int> row_twists, std::vector<int> col_twists,
                  std::vector<BinaryForm> entries);

    static TwistedMatrix zero(std::vector<int> row_twists, std::vector<int> col_twists);
    static TwistedMatrix identity(const std::vector<int>& twists);
    static TwistedMatrix from_columns(const std::vector<int>& row_twists,
                                      const std::vector<int>& col_twists,
                                      const std::vector<std::vector<BinaryForm>>& columns);

    std::size_t rows() const { return row_twists_.size(); }
    std::size_t cols() const { return col_twists_.size(); }
    const std::vector<int>& row_twists() const { return row_twists_; }
    const std::vector<int>& col_twists() const { return col_twists_; }

    const BinaryForm& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols() + j];
    }

    bool is_zero() const;
    bool operator==(const TwistedMatrix&) const = default;

    std::vector<BinaryForm> column(std::size_t j) const;

    // Composition; requires col twists of *this to equal row twists of rhs.
    TwistedMatrix operator*(const TwistedMatrix& rhs) const;
    TwistedMatrix operator+(const TwistedMatrix& rhs) const;
    TwistedMatrix operator-() const;
    TwistedMatrix scaled(const Rational& c) const;

    // Tensor by a line of the given degree: all twists shift, entries unchanged.
    TwistedMatrix shifted(int amount) const;
    // Transposed matrix viewed as the dual map (twists negate and swap).
    TwistedMatrix dual() const;

    TwistedMatrix submatrix(const std::vector<std::size_t>& row_ix,
                            const std::vector<std::size_t>& col_ix) const;
    BinaryForm det() const;

    // Rank over the function field, via exact minor tests.
    std::size_t rank() const;
    // Normalized gcd of all k x k minors, k = cols(); zero form when all vanish.
    BinaryForm maximal_minor_gcd() const;

    std::vector<std::vector<Rational>> eval(const Rational& x, const Rational& y) const;

    std::string str() const;

private:
    std::vector<int> row_twists_;
    std::vector<int> col_twists_;
    std::vector<BinaryForm> entries_;
};

}  // namespace conelim
