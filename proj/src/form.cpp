#include "conelim/form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "conelim/errors.hpp"

namespace conelim {

namespace {

// Univariate helpers on dense coefficient vectors (index = power of x),
// used for the gcd/division routes through dehomogenization. The vectors
// are kept free of trailing zeros.
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns {quotient, remainder}. The subtraction cancels the leading
// coefficient exactly, so each round strictly shrinks the dividend.
std::pair<UniPoly, UniPoly> uni_divmod(UniPoly a, const UniPoly& b) {
    if (b.empty()) throw InexactDivision("univariate division by zero");
    UniPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uni_trim(a);
    }
    return {std::move(q), std::move(a)};
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        auto [q, r] = uni_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) {
    if (degree < 0) throw std::invalid_argument("negative form degree");
    if (static_cast<int>(coeffs.size()) != degree + 1)
        throw std::invalid_argument("coefficient count does not match degree");
    bool all_zero = std::all_of(coeffs.begin(), coeffs.end(),
                                [](const Rational& c) { return c == 0; });
    if (all_zero) return;  // canonical zero
    degree_ = degree;
    coeffs_ = std::move(coeffs);
}

BinaryForm BinaryForm::constant(const Rational& c) {
    if (c == 0) return {};
    return BinaryForm(0, {c});
}

BinaryForm BinaryForm::monomial(const Rational& c, int x_power, int y_power) {
    if (c == 0) return {};
    std::vector<Rational> coeffs(x_power + y_power + 1, Rational(0));
    coeffs[x_power] = c;
    return BinaryForm(x_power + y_power, std::move(coeffs));
}

int BinaryForm::degree() const {
    if (!degree_) throw std::logic_error("degree of zero form");
    return *degree_;
}

const Rational& BinaryForm::coeff(int x_power) const {
    static const Rational kZero(0);
    if (is_zero() || x_power < 0 || x_power > *degree_) return kZero;
    return coeffs_[x_power];
}

BinaryForm BinaryForm::operator-() const { return scaled(Rational(-1)); }

BinaryForm BinaryForm::scaled(const Rational& c) const {
    if (is_zero() || c == 0) return {};
    std::vector<Rational> out(coeffs_);
    for (auto& v : out) v *= c;
    return BinaryForm(*degree_, std::move(out));
}

Rational BinaryForm::eval(const Rational& x, const Rational& y) const {
    if (is_zero()) return 0;
    Rational acc = 0;
    Rational xp = 1;
    std::vector<Rational> ypow(*degree_ + 1);
    ypow[0] = 1;
    for (int i = 1; i <= *degree_; ++i) ypow[i] = ypow[i - 1] * y;
    for (int k = 0; k <= *degree_; ++k) {
        if (coeffs_[k] != 0) acc += coeffs_[k] * xp * ypow[*degree_ - k];
        xp *= x;
    }
    return acc;
}

int BinaryForm::y_valuation() const {
    if (is_zero()) return 0;
    for (int k = *degree_; k >= 0; --k)
        if (coeffs_[k] != 0) return *degree_ - k;
    return 0;
}

int BinaryForm::x_valuation() const {
    if (is_zero()) return 0;
    for (int k = 0; k <= *degree_; ++k)
        if (coeffs_[k] != 0) return k;
    return 0;
}

std::string BinaryForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = *degree_; k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        int ypow = *degree_ - k;
        bool has_var = k > 0 || ypow > 0;
        if (mag != 1 || !has_var) {
            os << to_string(mag);
            if (has_var) os << "*";
        }
        if (k > 0) os << "X" << (k > 1 ? "^" + std::to_string(k) : "");
        if (k > 0 && ypow > 0) os << "*";
        if (ypow > 0) os << "Y" << (ypow > 1 ? "^" + std::to_string(ypow) : "");
    }
    return os.str();
}

BinaryForm add(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() != b.degree())
        throw DegreeMismatch("form addition of degrees " + std::to_string(a.degree()) +
                             " and " + std::to_string(b.degree()));
    std::vector<Rational> out(a.coeffs());
    for (int k = 0; k <= a.degree(); ++k) out[k] += b.coeffs()[k];
    return BinaryForm(a.degree(), std::move(out));
}

BinaryForm sub(const BinaryForm& a, const BinaryForm& b) { return add(a, -b); }

BinaryForm mul(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() || b.is_zero()) return {};
    int d = a.degree() + b.degree();
    std::vector<Rational> out(d + 1, Rational(0));
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (int j = 0; j <= b.degree(); ++j)
            if (b.coeffs()[j] != 0) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return BinaryForm(d, std::move(out));
}

namespace {

// f = Y^yval * rest with rest(x,1) of exact degree deg(f)-yval.
UniPoly dehomogenize_stripped(const BinaryForm& f) {
    int top = f.degree() - f.y_valuation();
    UniPoly p(top + 1, Rational(0));
    for (int k = 0; k <= top; ++k) p[k] = f.coeff(k);
    return p;
}

BinaryForm homogenize(const UniPoly& p, int degree, int extra_y_power) {
    if (p.empty()) return {};
    std::vector<Rational> coeffs(degree + extra_y_power + 1, Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) coeffs[k] = p[k];
    return BinaryForm(degree + extra_y_power, std::move(coeffs));
}

}  // namespace

BinaryForm exact_div(const BinaryForm& a, const BinaryForm& b) {
    if (b.is_zero()) throw InexactDivision("division by the zero form");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree())
        throw InexactDivision("degree of divisor exceeds degree of dividend");
    int ya = a.y_valuation(), yb = b.y_valuation();
    if (ya < yb) throw InexactDivision("divisor has a higher power of Y");
    auto [q, r] = uni_divmod(dehomogenize_stripped(a), dehomogenize_stripped(b));
    if (!r.empty()) throw InexactDivision("non-zero remainder");
    int qdeg = (a.degree() - ya) - (b.degree() - yb);
    return homogenize(q, qdeg, ya - yb);
}

BinaryForm form_gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return form_gcd(b, BinaryForm());
    if (b.is_zero()) {
        UniPoly p = dehomogenize_stripped(a);
        Rational lead = p.back();
        for (auto& c : p) c /= lead;
        return homogenize(p, a.degree() - a.y_valuation(), a.y_valuation());
    }
    UniPoly g = uni_gcd(dehomogenize_stripped(a), dehomogenize_stripped(b));
    int ypow = std::min(a.y_valuation(), b.y_valuation());
    return homogenize(g, static_cast<int>(g.size()) - 1, ypow);
}

}  // namespace conelim
