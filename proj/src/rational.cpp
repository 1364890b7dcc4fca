#include "conelim/rational.hpp"

#include "conelim/errors.hpp"

namespace conelim {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_integer_literal(text)) throw ParseError("bad rational: '" + text + "'");
            return Rational(Integer(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den))
            throw ParseError("bad rational: '" + text + "'");
        Integer d(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rational(Integer(num), d);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad rational '") + text + "': " + e.what());
    }
}

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace conelim
