#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qlie/errors.hpp"

namespace qlie {

/// Exact scalar type: arbitrary-precision rational, always in lowest terms
/// with positive denominator. The whole library works over this type; there
/// is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using Vec = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

/// Formats as "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& q);

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec& operator+=(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec& operator-=(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vec operator+(Vec a, const Vec& b) {
    a += b;
    return a;
}

inline Vec operator-(Vec a, const Vec& b) {
    a -= b;
    return a;
}

inline Vec operator*(const Rational& c, Vec v) {
    for (auto& x : v) x *= c;
    return v;
}

inline Vec operator-(Vec v) {
    for (auto& x : v) x = -x;
    return v;
}

}  // namespace qlie
