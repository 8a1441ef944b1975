#pragma once

#include "pw/cubic_surface.hpp"
#include "pw/multipoly.hpp"

#include <optional>
#include <string>
#include <utility>

namespace pw {

// Outcome of the normal-form route for a corank <= 1 cubic germ f2 + f3.
// For corank 1 the quadratic part is brought to u*v by an exact rational
// linear change; the A_k type is then read off the restricted cubic part.
struct BruceWallResult {
    int corank = 0;
    int k = 0;  // A_k type; 0 means the route could not decide
    // Vanishing orders of the cubic part along the two branches u = 0 and
    // v = 0 (corank 1 only, and only when the type is decided by them).
    std::optional<std::pair<int, int>> branch_orders;
};

// Full classification of one isolated hypersurface singularity at the
// origin of a chart.  Both routes must agree or classify() throws.
struct SingularityReport {
    std::optional<Vertex> vertex;
    int corank = 0;
    int milnor = 0;
    int ade_k = 0;  // the singularity is A_{ade_k}
    std::optional<BruceWallResult> normal_form;
    std::string note;
};

// Corank of the Hessian of the degree-2 part of g at the origin,
// i.e. (number of variables) - rank(Hessian(f2)).
int hessian_corank(const MultiPoly& g);

// Milnor number of g at the origin via rank computations on truncated
// multiplication maps.  The degree-D estimate counts monomials of degree
// < D not reachable from the truncated Jacobian ideal; two consecutive
// stable values certify the answer.  Throws std::runtime_error with
// message "non-isolated or cap exceeded" if no stabilization occurs by
// degree 12.  Requires g(0) = 0 and dg(0) = 0.
int milnor_number(const MultiPoly& g);
int milnor_number(const VertexChart& chart);

// Normal-form classification of a cubic germ f2 + f3 with corank(f2) <= 1.
// Only meaningful when g is exactly its own 3-jet; classify() enforces
// this by construction since chart polynomials have degree 3.
BruceWallResult bruce_wall_classify(const MultiPoly& f2, const MultiPoly& f3);

// Classify the singularity of a vertex chart.  Throws std::runtime_error
// "non-A singularity, out of scope" when corank(f2) >= 2, and
// std::logic_error if the two independent routes disagree.
SingularityReport classify(const VertexChart& chart);

// Human-readable "A_k".
std::string ade_label(const SingularityReport& report);

}  // namespace pw
