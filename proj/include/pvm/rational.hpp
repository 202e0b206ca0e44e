#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pvm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

// Base of every error thrown by the library. `ParseError` and
// `PreconditionError` let callers (the CLI) map failures to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Raised when an internal invariant is found broken (never expected).
class InternalError : public Error {
public:
    using Error::Error;
};

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Strictly positive integer: the set {1, 2, ...}.
inline bool is_natural(const Rational& q) { return is_integer(q) && q > 0; }

// Non-negative integer: the set {0, 1, 2, ...}.
inline bool is_nonneg_integer(const Rational& q) { return is_integer(q) && q >= 0; }

// "a" for integers, "a/b" otherwise, always in lowest terms.
inline std::string to_string(const Rational& q) { return q.str(); }

namespace detail {

inline Integer parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    if (i == s.size())
        throw ParseError("malformed number '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw ParseError("malformed number '" + std::string(whole) + "'");
    Integer v(std::string(s.substr(i)));
    return negative ? Integer(-v) : v;
}

} // namespace detail

// Parses "7", "-3/2" or an exact decimal such as "0.5" or "-1.25".
// Decimals are read as exact fractions, never through binary floating point.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty())
        throw ParseError("empty number");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = detail::parse_integer(s.substr(0, slash), text);
        std::string_view den_text = s.substr(slash + 1);
        if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-'))
            throw ParseError("malformed number '" + std::string(text) + "'");
        Integer den = detail::parse_integer(den_text, text);
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if (frac_part.empty() || frac_part.front() == '+' || frac_part.front() == '-')
            throw ParseError("malformed number '" + std::string(text) + "'");
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
            int_part.remove_prefix(1);
        std::string digits = std::string(int_part.empty() ? "0" : int_part);
        Integer whole = detail::parse_integer(digits, text);
        Integer frac = detail::parse_integer(frac_part, text);
        Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac_part.size()));
        Rational value = Rational(whole) + Rational(frac, scale);
        return negative ? Rational(-value) : value;
    }

    return Rational(detail::parse_integer(s, text));
}

// Comma-separated list of rationals, e.g. "0,-1/2,0".
inline RationalVector parse_rational_list(std::string_view text) {
    RationalVector out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace pvm
