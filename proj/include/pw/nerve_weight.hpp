#pragma once

// Weight side of the comparison: the nerve of the resolved boundary
// divisor of a compactified affine cubic, its homology, and the induced
// weight polynomial of the affine surface.

#include "pw/hodge_poly.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace pw {

// Dual graph of a curve configuration: one vertex per component, one edge
// per intersection point. Parallel edges and loops are allowed.
struct NerveComplex {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;  // indices into vertices
};

// Nerve of the boundary after resolving the three triangle vertices.
// boundary_milnor lists the Milnor numbers at the intersection points
// opposite x1, x2, x3 (zero for a smooth vertex); resolving an A_mu point
// replaces the corresponding triangle edge by a path through mu
// exceptional components. The result is a cycle with 3 + mu_1 + mu_2 +
// mu_3 vertices. Throws std::invalid_argument on negative entries or on
// duplicate vertex labels.
NerveComplex build_nerve(const std::array<int, 3>& boundary_milnor);

// Betti numbers (b0, b1) of the one-dimensional complex.
std::pair<int, int> nerve_homology(const NerveComplex& nerve);

// Kernel and cokernel dimensions of the boundary map from edge space to
// vertex space: (edges - rank, vertices - rank).
std::pair<int, int> delta_ranks(const NerveComplex& nerve);

// Weight polynomial of the affine cubic surface whose boundary cycle has
// length N + 3: 1 + (4-N) q^-1 t^2 + q^-2 t^2. Throws std::invalid_argument
// unless 0 <= N <= 4.
HodgePolynomial weight_polynomial(int total_boundary_milnor);

// Weight-graded bookkeeping for one case, with the polynomial rebuilt
// from the nerve as a cross-check.
struct WeightReport {
    NerveComplex nerve;
    int cycle_length = 0;       // vertices of the boundary cycle, N + 3
    int grW0_H0 = 0;            // weight-0 piece of H^0
    int grWm2_H2 = 0;           // weight-(-2) twist piece of H^2
    int grWm4_H2 = 0;           // lowest-weight piece of H^2
    int b2_compactified = 0;    // second Betti number of the resolved compactification
    int ker_delta = 0;
    int coker_delta = 0;
    int b2_betti = 0;           // ordinary b_2 of the affine surface
    HodgePolynomial WH;
    std::vector<std::string> notes;
};

WeightReport weight_report(const std::array<int, 3>& boundary_milnor);

}  // namespace pw
