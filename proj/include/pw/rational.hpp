#pragma once

// Exact rational scalars for the whole toolkit. Every computation in this
// repo is exact; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pw {

using Integer = boost::multiprecision::cpp_int;

// Invariants (maintained by the backing type): always reduced to lowest
// terms, denominator > 0, arithmetic exact.
using Rational = boost::multiprecision::cpp_rational;

// Safe two-integer constructor: normalizes the sign of the denominator,
// which the raw cpp_rational(p, q) constructor refuses to do.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Canonical text form: "a" for integers, "a/b" otherwise, b > 0.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "a" or "a/b" with optional leading minus signs on either part.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return make_rational(Integer(text.substr(0, slash)),
                             Integer(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    }
}

// True iff r is the square of a rational; if so *root is set to the
// nonnegative square root. Uses exact integer square roots of the reduced
// numerator and denominator.
inline bool rational_square_root(const Rational& r, Rational* root) {
    if (r < 0) return false;
    const Integer n = numerator(r), d = denominator(r);
    const Integer sn = boost::multiprecision::sqrt(n);
    const Integer sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    if (root) *root = make_rational(sn, sd);
    return true;
}

}  // namespace pw
