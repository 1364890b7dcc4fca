#pragma once

#include <map>
#include <sstream>
#include <string>

namespace conelim {

// Finite Laurent expansion in the flow parameter z with coefficients in an
// exact ring T (rationals, binary forms, or affine polynomials). Stored
// terms are nonzero; the empty map is the zero element. Callers mixing
// form-valued coefficients are responsible for degree compatibility of the
// coefficients they add.
template <typename T>
class Laurent {
public:
    Laurent() = default;

    static Laurent term(int exponent, T coeff) {
        Laurent out;
        if (!is_zero_coeff(coeff)) out.terms_[exponent] = std::move(coeff);
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, T>& terms() const { return terms_; }

    // Coefficient at an exponent (zero element when absent).
    T coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? T{} : it->second;
    }

    int min_exponent() const { return terms_.begin()->first; }
    int max_exponent() const { return terms_.rbegin()->first; }

    bool operator==(const Laurent&) const = default;

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent out = a;
        for (const auto& [e, c] : b.terms_) {
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_[e] = c;
            } else {
                it->second = it->second + c;
                if (is_zero_coeff(it->second)) out.terms_.erase(it);
            }
        }
        return out;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out = out + term(ea + eb, ca * cb);
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if constexpr (requires(const T& v) { v.str(); })
                os << "(" << c.str() << ")";
            else
                os << "(" << c << ")";
            if (e != 0) os << "*z^" << e;
        }
        return os.str();
    }

private:
    static bool is_zero_coeff(const T& c) {
        if constexpr (requires(const T& v) { v.is_zero(); })
            return c.is_zero();
        else
            return c == T{};
    }

    std::map<int, T> terms_;
};

}  // namespace conelim
