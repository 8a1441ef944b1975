#pragma once

// The affine cubic surfaces x1*x2*x3 + Q(x1,x2,x3) = 0 behind the nine
// Painleve equations: case registry, projective compactification, boundary
// singularity detection, and the affine smoothness certificate.
//
// Compactifying in P^3 with coordinates x0..x3 adds the boundary divisor
// {x0 = 0} cut by x1*x2*x3, a triangle of three lines L_i = {x0 = x_i = 0}
// meeting in the three vertices [0:1:0:0], [0:0:1:0], [0:0:0:1]. All
// boundary singularities of the compactified surface sit at those vertices.

#include "pw/multipoly.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace pw {

// Projective coordinates, in this order everywhere.
const std::vector<std::string>& projective_variables();  // x0, x1, x2, x3
const std::vector<std::string>& affine_variables();      // x1, x2, x3

using Vertex = std::array<int, 4>;  // projective coordinates of a triangle vertex

inline constexpr Vertex kVertexX1 = {0, 1, 0, 0};
inline constexpr Vertex kVertexX2 = {0, 0, 1, 0};
inline constexpr Vertex kVertexX3 = {0, 0, 0, 1};

std::string vertex_label(const Vertex& v);      // "[0:0:0:1]"
Vertex parse_vertex_label(const std::string&);  // inverse of vertex_label

// One registry record: a cubic of the shape x1*x2*x3 + Q with Q of degree at
// most 2, its parameters, and the expected verification data. The expected
// fields are test data for cross-checking, never inputs to the computation.
struct ExpectedSingularity {
    Vertex vertex;
    int milnor;
};

struct CaseRecord {
    std::string tag;
    std::string quadric;  // expression in x1, x2, x3 and the parameter names
    std::vector<std::string> parameters;
    std::map<std::string, Rational> defaults;
    std::vector<std::string> nonzero;  // parameters that must not vanish
    std::string fiber_tag;             // quoted fiber-at-infinity tag, e.g. "D4(1)"
    std::vector<ExpectedSingularity> expected_singularities;
    bool diffeo_proven = true;  // false: Betti/Dolbeault comparison is conjectural
};

struct CaseRegistry {
    int schema_version = 0;
    std::vector<CaseRecord> cases;  // emission order

    const CaseRecord& find(const std::string& tag) const;
    bool contains(const std::string& tag) const;
};

// The nine case tags in registry (and table) order.
const std::vector<std::string>& canonical_case_tags();

// Registry compiled into the binary from data/painleve_cases.json.
const CaseRegistry& shipped_registry();
CaseRegistry parse_registry_json(const std::string& json_text);
CaseRegistry load_registry(const std::string& path);

struct ProjectiveCubic {
    MultiPoly F;  // homogeneous cubic over x0..x3; F|{x0=0} = x1*x2*x3
    MultiPoly f;  // the affine cubic over x1..x3; F = homogenization of f
};

// Chart at a triangle vertex: the vertex's nonzero coordinate is set to 1 and
// the remaining three coordinates (x0 included) are local variables centered
// at the vertex. chart_poly = f2 + f3 exactly, its graded parts of degree
// 0 and 1 vanishing precisely when the vertex is a singular point.
struct VertexChart {
    Vertex vertex;
    std::vector<std::string> local_vars;
    MultiPoly chart_poly;
    MultiPoly f2;
    MultiPoly f3;
};

// Merges overrides into the record's defaults; rejects unknown names.
std::map<std::string, Rational> resolve_parameters(
    const CaseRecord& record, const std::map<std::string, Rational>& overrides);

// Builds the compactified cubic for concrete parameter values. Throws
// std::invalid_argument naming the offending parameter when a nonzero
// constraint fails or a required value is missing.
ProjectiveCubic make_case(const CaseRecord& record,
                          const std::map<std::string, Rational>& parameters);
ProjectiveCubic make_case(const CaseRecord& record);  // defaults

// Chart of the compactified surface at any of the three triangle vertices.
VertexChart vertex_chart(const ProjectiveCubic& c, const Vertex& vertex);

// The singular points of the compactified surface on {x0 = 0}, in vertex
// order [0:1:0:0], [0:0:1:0], [0:0:0:1], each with its chart. Uses the
// closed-form vertex criterion (the coefficient of x_k^2 in Q vanishes),
// cross-checked against brute-force Jacobian evaluation, and sweeps each
// boundary line to confirm no non-vertex singular point exists.
std::vector<VertexChart> singular_points_at_infinity(const ProjectiveCubic& c);

// Certificate that the affine surface f = 0 is smooth: the Jacobian ideal
// (f, df/dx1, df/dx2, df/dx3) contains 1, decided by its reduced Groebner
// basis. Exact over the complex numbers by the Nullstellensatz.
struct SmoothCertificate {
    bool smooth = false;
    std::vector<MultiPoly> reduced_basis;
    std::string message;
};

SmoothCertificate affine_smooth_check(const ProjectiveCubic& c);

}  // namespace pw
