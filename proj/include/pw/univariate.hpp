#pragma once

// Dense univariate polynomials over the rationals: just enough for order-of-
// vanishing bookkeeping and the Euclidean gcd used by the boundary-line
// singularity sweep. Coefficient of t^i lives at index i.

#include "pw/rational.hpp"

#include <stdexcept>
#include <vector>

namespace pw {

using UniPoly = std::vector<Rational>;

inline UniPoly trimmed(UniPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Degree; -1 for the zero polynomial.
inline int degree(const UniPoly& p) {
    for (std::size_t i = p.size(); i > 0; --i) {
        if (p[i - 1] != 0) return static_cast<int>(i - 1);
    }
    return -1;
}

// Multiplicity of the root t = 0. Throws on the zero polynomial, whose order
// is unbounded; callers must handle that case themselves.
inline int order_at_zero(const UniPoly& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0) return static_cast<int>(i);
    }
    throw std::domain_error("order_at_zero of the zero polynomial");
}

// True iff exactly one coefficient is nonzero (constants included).
inline bool is_monomial(const UniPoly& p) {
    int nonzero = 0;
    for (const auto& c : p) {
        if (c != 0) ++nonzero;
    }
    return nonzero == 1;
}

// Monic Euclidean gcd; returns the zero polynomial when both inputs are zero.
inline UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    a = trimmed(std::move(a));
    b = trimmed(std::move(b));
    while (!b.empty()) {
        // a mod b
        while (degree(a) >= degree(b)) {
            const Rational factor = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
            a = trimmed(std::move(a));
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        const Rational inv = Rational(1) / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

}  // namespace pw
