#pragma once

// Perverse side of the comparison: Kodaira fibers as multiplicity-weighted
// dual graphs, their Euler characteristics and intersection lattices, the
// induced perverse polynomial, and motivic bookkeeping for fiber classes.

#include "pw/hodge_poly.hpp"
#include "pw/linalg.hpp"
#include "pw/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pw {

// One fiber: component i carries multiplicities[i]; each edge is one
// intersection point between components (loops and parallel edges allowed).
struct KodairaFiber {
    std::string tag;
    std::vector<int> multiplicities;
    std::vector<std::pair<int, int>> edges;
};

// Builds the standard fibers: "I1", "I2", ... (cycles), "II", "III", "IV",
// "D4(1)" through "D8(1)", and "E6(1)", "E7(1)", "E8(1)".
// Throws std::invalid_argument on an unknown tag.
KodairaFiber make_fiber(const std::string& tag);

// Topological Euler characteristic of the underlying reduced curve.
// II, III, IV have non-transverse intersections the graph cannot see, so
// their values come from a fixed table; all other fibers are normal
// crossings and give 2V - E.
int euler_characteristic(const KodairaFiber& fiber);

// q^-1 + d q^-2 t^2 + q^-3 t^2; throws std::invalid_argument unless
// 0 <= d <= 4.
HodgePolynomial perverse_polynomial(int d);

// Negative semidefiniteness certificate for the intersection matrix
// (diagonal -2, off-diagonal the edge count; a single-component fiber is
// its own cycle class and has the 1x1 zero matrix), with the radical
// spanned primitively by the multiplicity vector. lattice_certificate
// throws std::logic_error if any part fails.
struct LatticeCertificate {
    QMatrix intersection;
    std::vector<Rational> pivots;       // congruence diagonal, all <= 0
    int radical_dim = 0;                // always 1
    std::vector<Integer> radical_generator;  // primitive, positive, == multiplicities
};

LatticeCertificate lattice_certificate(const KodairaFiber& fiber);

// True when the dual graph is a connected tree, which certifies that the
// fiber has first Betti number zero. Sufficient only: the tangential
// configurations III and IV are not certified by this test.
bool b1_vanishing_check(const KodairaFiber& fiber);

// Everything the perverse side reports for one fiber at infinity.
struct DolbeaultReport {
    KodairaFiber fiber;
    int chi = 0;
    int d = 0;               // 10 - chi
    int b2_dolbeault = 0;    // 1 + d
    bool b1_vanishes = false;
    LatticeCertificate lattice;
    HodgePolynomial PH;
};

// Throws std::invalid_argument when chi is outside 6..10, std::logic_error
// when the internal Euler consistency 1 + b2 + chi = 12 fails.
DolbeaultReport analyze_fiber(const KodairaFiber& fiber);

// Classes in the Grothendieck ring truncated to c0 + c1 L.
struct MotivicClass {
    std::int64_t c0 = 0;
    std::int64_t c1 = 0;
    bool operator==(const MotivicClass&) const = default;
    std::string str() const;
};

// (a - c + d) + (b + c + d) L.
MotivicClass motivic_class(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

// I_n -> n L, II -> L + 1, III -> 2L + 1, IV -> 3L + 1.
MotivicClass fiber_class(const std::string& tag);

// Inverse of fiber_class over the cycle and additive-reduction tags;
// throws std::invalid_argument("class not in the table") otherwise.
std::string identify_fiber(const MotivicClass& cls);

}  // namespace pw
