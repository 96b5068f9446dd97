#include "schurcone/numeric.hpp"

#include <stdexcept>

namespace schurcone {

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) { return q.str(); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

Integer rational_ceil(const Rational& q) {
    Integer num = numerator(q);
    Integer den = denominator(q);
    Integer quot = num / den;  // truncates toward zero
    if (quot * den != num && num > 0) quot += 1;
    return quot;
}

}  // namespace schurcone
