#include "pw/cubic_surface.hpp"

#include "pw/groebner.hpp"
#include "pw/univariate.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pw {

const std::vector<std::string>& projective_variables() {
    static const std::vector<std::string> vars = {"x0", "x1", "x2", "x3"};
    return vars;
}

const std::vector<std::string>& affine_variables() {
    static const std::vector<std::string> vars = {"x1", "x2", "x3"};
    return vars;
}

std::string vertex_label(const Vertex& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ":";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

Vertex parse_vertex_label(const std::string& text) {
    for (const Vertex& v : {kVertexX1, kVertexX2, kVertexX3}) {
        if (vertex_label(v) == text) return v;
    }
    throw std::invalid_argument("not a triangle vertex label: '" + text + "'");
}

const CaseRecord& CaseRegistry::find(const std::string& tag) const {
    for (const auto& r : cases) {
        if (r.tag == tag) return r;
    }
    throw std::invalid_argument("unknown case tag '" + tag + "'");
}

bool CaseRegistry::contains(const std::string& tag) const {
    return std::any_of(cases.begin(), cases.end(),
                       [&](const CaseRecord& r) { return r.tag == tag; });
}

const std::vector<std::string>& canonical_case_tags() {
    static const std::vector<std::string> tags = {"VI",       "V",        "V_degen",
                                                  "III(D6)",  "III(D7)",  "III(D8)",
                                                  "IV",       "II",       "I"};
    return tags;
}

// Defined in the generated registry_data.cpp.
const char* shipped_registry_json();

CaseRegistry parse_registry_json(const std::string& json_text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("registry: invalid JSON: ") + e.what());
    }
    const auto fail = [](const std::string& what) -> std::runtime_error {
        return std::runtime_error("registry: " + what);
    };
    if (!doc.is_object() || !doc.contains("schema_version") || !doc.contains("cases")) {
        throw fail("expected an object with schema_version and cases");
    }
    CaseRegistry reg;
    reg.schema_version = doc.at("schema_version").get<int>();
    if (reg.schema_version != 1) {
        throw fail("unsupported schema_version " + std::to_string(reg.schema_version));
    }
    for (const auto& entry : doc.at("cases")) {
        CaseRecord rec;
        rec.tag = entry.at("tag").get<std::string>();
        rec.quadric = entry.at("quadric").get<std::string>();
        for (const auto& p : entry.at("parameters")) {
            rec.parameters.push_back(p.get<std::string>());
        }
        for (const auto& [name, value] : entry.at("defaults").items()) {
            rec.defaults[name] = parse_rational(value.get<std::string>());
        }
        for (const auto& p : entry.at("nonzero")) {
            const std::string name = p.get<std::string>();
            if (std::find(rec.parameters.begin(), rec.parameters.end(), name) ==
                rec.parameters.end()) {
                throw fail("case " + rec.tag + ": nonzero constraint on undeclared parameter '" +
                           name + "'");
            }
            rec.nonzero.push_back(name);
        }
        rec.fiber_tag = entry.at("fiber").get<std::string>();
        for (const auto& s : entry.at("expected_singularities")) {
            ExpectedSingularity ex;
            ex.vertex = parse_vertex_label(s.at("vertex").get<std::string>());
            ex.milnor = s.at("milnor").get<int>();
            if (ex.milnor < 1) throw fail("case " + rec.tag + ": milnor must be >= 1");
            rec.expected_singularities.push_back(ex);
        }
        if (entry.contains("betti_dolbeault_diffeo")) {
            const std::string flag = entry.at("betti_dolbeault_diffeo").get<std::string>();
            if (flag != "proven" && flag != "expected") {
                throw fail("case " + rec.tag + ": betti_dolbeault_diffeo must be proven|expected");
            }
            rec.diffeo_proven = (flag == "proven");
        }
        for (const auto& [name, value] : rec.defaults) {
            (void)value;
            if (std::find(rec.parameters.begin(), rec.parameters.end(), name) ==
                rec.parameters.end()) {
                throw fail("case " + rec.tag + ": default for undeclared parameter '" + name +
                           "'");
            }
        }
        if (reg.contains(rec.tag)) throw fail("duplicate case tag '" + rec.tag + "'");
        reg.cases.push_back(std::move(rec));
    }
    return reg;
}

const CaseRegistry& shipped_registry() {
    static const CaseRegistry reg = [] {
        CaseRegistry r = parse_registry_json(shipped_registry_json());
        // The shipped file must carry exactly the nine canonical cases.
        if (r.cases.size() != canonical_case_tags().size()) {
            throw std::logic_error("shipped registry is corrupted: wrong case count");
        }
        for (std::size_t i = 0; i < r.cases.size(); ++i) {
            if (r.cases[i].tag != canonical_case_tags()[i]) {
                throw std::logic_error("shipped registry is corrupted: unexpected tag order");
            }
        }
        return r;
    }();
    return reg;
}

CaseRegistry load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("registry: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_registry_json(buf.str());
}

std::map<std::string, Rational> resolve_parameters(
    const CaseRecord& record, const std::map<std::string, Rational>& overrides) {
    std::map<std::string, Rational> values = record.defaults;
    for (const auto& [name, value] : overrides) {
        if (std::find(record.parameters.begin(), record.parameters.end(), name) ==
            record.parameters.end()) {
            throw std::invalid_argument("case " + record.tag + " has no parameter '" + name +
                                        "'");
        }
        values[name] = value;
    }
    return values;
}

ProjectiveCubic make_case(const CaseRecord& record,
                          const std::map<std::string, Rational>& parameters) {
    for (const auto& name : record.parameters) {
        if (!parameters.count(name)) {
            throw std::invalid_argument("case " + record.tag + ": missing value for parameter '" +
                                        name + "'");
        }
    }
    for (const auto& [name, value] : parameters) {
        if (std::find(record.parameters.begin(), record.parameters.end(), name) ==
            record.parameters.end()) {
            throw std::invalid_argument("case " + record.tag + " has no parameter '" + name +
                                        "'");
        }
        (void)value;
    }
    for (const auto& name : record.nonzero) {
        if (parameters.at(name) == 0) {
            throw std::invalid_argument("case " + record.tag + ": parameter '" + name +
                                        "' must be nonzero");
        }
    }

    std::vector<std::string> vars = affine_variables();
    vars.insert(vars.end(), record.parameters.begin(), record.parameters.end());
    MultiPoly q = parse_poly(record.quadric, vars);
    for (const auto& [name, value] : parameters) q = substitute(q, name, value);
    q = restrict_variables(q, affine_variables());
    if (q.total_degree() > 2) {
        throw std::invalid_argument("case " + record.tag +
                                    ": quadric part has degree > 2 after substitution");
    }

    ProjectiveCubic c;
    c.f = parse_poly("x1*x2*x3", affine_variables()) + q;
    c.F = homogenize(extend_variables(c.f, projective_variables()), 3, "x0");

    // Boundary invariant: the compactifying divisor is always the triangle.
    if (substitute(c.F, "x0", Rational(0)) !=
        parse_poly("x1*x2*x3", projective_variables())) {
        throw std::logic_error("case " + record.tag + ": boundary is not the triangle");
    }
    return c;
}

ProjectiveCubic make_case(const CaseRecord& record) {
    return make_case(record, resolve_parameters(record, {}));
}

VertexChart vertex_chart(const ProjectiveCubic& c, const Vertex& vertex) {
    int one_index = -1;
    for (std::size_t i = 0; i < vertex.size(); ++i) {
        if (vertex[i] == 1 && one_index == -1) {
            one_index = static_cast<int>(i);
        } else if (vertex[i] != 0) {
            one_index = -2;
        }
    }
    if (one_index < 1) {
        throw std::invalid_argument("not a triangle vertex: " + vertex_label(vertex));
    }

    VertexChart chart;
    chart.vertex = vertex;
    for (const auto& name : projective_variables()) {
        if (name != projective_variables()[static_cast<std::size_t>(one_index)]) {
            chart.local_vars.push_back(name);
        }
    }
    const std::string& dehomog = projective_variables()[static_cast<std::size_t>(one_index)];
    chart.chart_poly = restrict_variables(substitute(c.F, dehomog, Rational(1)),
                                          chart.local_vars);
    // Degree 0 always vanishes (the vertex lies on the surface); degree 1
    // vanishes exactly when the vertex is singular, so chart_poly = f2 + f3
    // holds on every chart this module hands to the classifier.
    chart.f2 = graded_part(chart.chart_poly, 2);
    chart.f3 = graded_part(chart.chart_poly, 3);
    return chart;
}

namespace {

// Coefficient of x_k^2 in the quadric part Q = f - x1*x2*x3; its vanishing
// is the closed-form singularity test for the vertex with x_k = 1, because
// dF/dx0 at that vertex equals that coefficient up to homogenization and the
// other three partials vanish there automatically.
bool vertex_singular_closed_form(const MultiPoly& q, int k) {
    Exponents e(3, 0);
    e[static_cast<std::size_t>(k - 1)] = 2;
    return q.coefficient(e) == 0;
}

bool vertex_singular_brute_force(const MultiPoly& F, const Vertex& v) {
    const std::vector<Rational> pt = {Rational(v[0]), Rational(v[1]), Rational(v[2]),
                                      Rational(v[3])};
    for (const auto& var : projective_variables()) {
        if (evaluate(partial_derivative(F, var), pt) != 0) return false;
    }
    return true;
}

// Restriction of p to the boundary line {x0 = 0, x_i = 0} parametrized by
// x_a = s, x_b = 1, as a dense univariate polynomial in s.
UniPoly restrict_to_line(const MultiPoly& p, int i, int a, int b) {
    MultiPoly r = substitute(p, "x0", Rational(0));
    r = substitute(r, projective_variables()[static_cast<std::size_t>(i)], Rational(0));
    r = substitute(r, projective_variables()[static_cast<std::size_t>(b)], Rational(1));
    const auto idx = static_cast<std::size_t>(
        r.variable_index(projective_variables()[static_cast<std::size_t>(a)]));
    UniPoly u;
    for (const auto& [e, c] : r.terms()) {
        const auto deg = static_cast<std::size_t>(e[idx]);
        if (u.size() <= deg) u.resize(deg + 1, Rational(0));
        u[deg] += c;
    }
    return trimmed(std::move(u));
}

}  // namespace

std::vector<VertexChart> singular_points_at_infinity(const ProjectiveCubic& c) {
    const MultiPoly q = c.f - parse_poly("x1*x2*x3", affine_variables());

    const std::array<Vertex, 3> vertices = {kVertexX1, kVertexX2, kVertexX3};
    std::vector<VertexChart> out;
    for (int k = 1; k <= 3; ++k) {
        const Vertex& v = vertices[static_cast<std::size_t>(k - 1)];
        const bool closed_form = vertex_singular_closed_form(q, k);
        const bool brute = vertex_singular_brute_force(c.F, v);
        if (closed_form != brute) {
            throw std::logic_error("vertex criterion mismatch at " + vertex_label(v));
        }
        if (!closed_form) continue;
        VertexChart chart = vertex_chart(c, v);
        if (!graded_part(chart.chart_poly, 0).is_zero() ||
            !graded_part(chart.chart_poly, 1).is_zero()) {
            throw std::logic_error("singular chart has nonvanishing low-degree part at " +
                                   vertex_label(v));
        }
        out.push_back(std::move(chart));
    }

    // Sweep each boundary line: the Jacobian system restricted to L_i may
    // only vanish at the two vertices of L_i, i.e. the gcd of the restricted
    // partials is a monomial in the line parameter.
    for (int i = 1; i <= 3; ++i) {
        int a = 0, b = 0;
        switch (i) {
            case 1: a = 2; b = 3; break;
            case 2: a = 1; b = 3; break;
            default: a = 1; b = 2; break;
        }
        UniPoly gcd;  // zero polynomial
        bool any_nonzero = false;
        for (const auto& var : projective_variables()) {
            const UniPoly u = restrict_to_line(partial_derivative(c.F, var), i, a, b);
            if (degree(u) < 0) continue;
            any_nonzero = true;
            gcd = unipoly_gcd(gcd, u);
        }
        if (!any_nonzero || !is_monomial(gcd)) {
            throw std::logic_error("non-vertex singular point on boundary line x0 = x" +
                                   std::to_string(i) + " = 0");
        }
    }
    return out;
}

SmoothCertificate affine_smooth_check(const ProjectiveCubic& c) {
    std::vector<MultiPoly> gens = {c.f};
    for (const auto& var : affine_variables()) {
        gens.push_back(partial_derivative(c.f, var));
    }
    SmoothCertificate cert;
    cert.reduced_basis = reduced_groebner_basis(gens);
    cert.smooth = cert.reduced_basis.size() == 1 && cert.reduced_basis.front().total_degree() == 0;
    cert.message = cert.smooth ? "reduced Groebner basis of the Jacobian ideal is {1}"
                               : "singular affine point possible";
    return cert;
}

}  // namespace pw
