#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace jjcoh {

// Exact rational scalar. cpp_rational keeps gcd(num, den) = 1 and den > 0
// after every operation, so values are always in canonical form.
using Rational = boost::multiprecision::cpp_rational;

struct bad_rational_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Renders as "p" or "p/q" with q > 1; never a float.
inline std::string rat_str(const Rational& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

// Grammar: [-]a[/b] with decimal integers a, b and b > 0.
inline Rational parse_rational(const std::string& token)
{
    if (token.empty())
        throw bad_rational_error("empty rational literal");
    std::size_t pos = 0;
    bool neg = false;
    if (token[pos] == '-') {
        neg = true;
        ++pos;
    }
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from == to)
            throw bad_rational_error("malformed rational literal '" + token + "'");
        for (std::size_t i = from; i < to; ++i)
            if (token[i] < '0' || token[i] > '9')
                throw bad_rational_error("malformed rational literal '" + token + "'");
        return boost::multiprecision::cpp_int(token.substr(from, to - from));
    };
    std::size_t slash = token.find('/', pos);
    boost::multiprecision::cpp_int num, den = 1;
    if (slash == std::string::npos) {
        num = digits(pos, token.size());
    } else {
        num = digits(pos, slash);
        den = digits(slash + 1, token.size());
        if (den == 0)
            throw bad_rational_error("zero denominator in '" + token + "'");
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

} // namespace jjcoh
