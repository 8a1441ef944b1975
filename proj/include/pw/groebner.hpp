#pragma once

// A minimal Buchberger engine over the rationals with the graded reverse
// lexicographic order: S-polynomials, the coprime-leading-monomial skip, and
// full inter-reduction to the unique reduced basis. Sized for the tiny
// three-variable ideals this repo certifies; not a general CAS.

#include "pw/multipoly.hpp"

#include <utility>
#include <vector>

namespace pw {

// Graded reverse lexicographic comparison: higher total degree wins; on equal
// degree the exponent vector whose last nonzero difference entry is negative
// is the larger.
bool grevlex_less(const Exponents& a, const Exponents& b);

// Leading term under grevlex; throws std::domain_error on the zero polynomial.
std::pair<Exponents, Rational> leading_term(const MultiPoly& p);

// Fully reduced remainder of p modulo the basis (every term of the result is
// divisible by no basis leading monomial).
MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& basis);

// The unique reduced Groebner basis of the ideal generated by gens, monic,
// sorted by grevlex on leading monomials. Zero generators are ignored; the
// zero ideal yields an empty basis.
std::vector<MultiPoly> reduced_groebner_basis(std::vector<MultiPoly> gens);

// True iff the ideal is the whole ring, i.e. the reduced basis is {1}.
bool ideal_contains_one(const std::vector<MultiPoly>& gens);

}  // namespace pw
