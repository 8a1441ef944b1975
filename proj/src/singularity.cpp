#include "pw/singularity.hpp"

#include "pw/linalg.hpp"
#include "pw/univariate.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pw {

namespace {

// Hessian of the degree-2 part: H[i][j] = d^2 f2 / dx_i dx_j, so that
// f2 = 1/2 x^T H x.
QMatrix hessian_matrix(const MultiPoly& f2) {
    const int n = static_cast<int>(f2.variables().size());
    QMatrix h(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [exps, coeff] : f2.terms()) {
        std::vector<int> support;
        for (int i = 0; i < n; ++i) {
            for (int e = 0; e < exps[i]; ++e) support.push_back(i);
        }
        if (support.size() != 2) throw std::invalid_argument("hessian_matrix: input is not homogeneous of degree 2");
        const int i = support[0];
        const int j = support[1];
        if (i == j) {
            h[i][i] += 2 * coeff;
        } else {
            h[i][j] += coeff;
            h[j][i] += coeff;
        }
    }
    return h;
}

// All exponent vectors in n variables with total degree below `bound`,
// indexed in a deterministic order.
void enumerate_monomials(int n, int bound, std::vector<Exponents>& out) {
    Exponents current(n, 0);
    const auto recurse = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
            current[pos] = 0;
        }
    };
    for (int d = 0; d < bound; ++d) recurse(recurse, 0, d);
}

// Dimension of R / (Jacobian ideal + m^degree_cap) as a Q-vector space,
// where R is the local polynomial ring at the origin.
int truncated_quotient_dim(const std::vector<MultiPoly>& partials, int n, int degree_cap) {
    std::vector<Exponents> basis;
    enumerate_monomials(n, degree_cap, basis);
    std::map<Exponents, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    std::vector<Exponents> shifts;
    enumerate_monomials(n, degree_cap - 1, shifts);  // |a| <= degree_cap - 2

    SparseEchelon echelon;
    for (const auto& partial : partials) {
        if (partial.is_zero()) continue;
        for (const auto& shift : shifts) {
            SparseEchelon::SparseRow row;
            for (const auto& [exps, coeff] : partial.terms()) {
                Exponents e = exps;
                int total = 0;
                for (int i = 0; i < n; ++i) {
                    e[i] += shift[i];
                    total += e[i];
                }
                if (total >= degree_cap) continue;  // truncate modulo m^degree_cap
                row.emplace_back(index.at(e), coeff);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            echelon.insert(std::move(row));
        }
    }
    return static_cast<int>(basis.size()) - echelon.rank();
}

// p with zero_var := 0 and every other non-axis variable := 1, read as a
// univariate polynomial in axis_var.
UniPoly restrict_to_line(const MultiPoly& p, const std::string& axis_var,
                         const std::string& zero_var) {
    const int axis = p.variable_index(axis_var);
    const int zero = p.variable_index(zero_var);
    UniPoly u;
    for (const auto& [exps, coeff] : p.terms()) {
        if (exps[zero] != 0) continue;
        const int deg = exps[axis];
        if (static_cast<int>(u.size()) <= deg) u.resize(deg + 1, Rational(0));
        u[deg] += coeff;
    }
    while (!u.empty() && u.back() == 0) u.pop_back();
    return u;
}

}  // namespace

int hessian_corank(const MultiPoly& g) {
    const MultiPoly f2 = graded_part(g, 2);
    const int n = static_cast<int>(g.variables().size());
    if (f2.is_zero()) return n;
    return n - matrix_rank(hessian_matrix(f2));
}

int milnor_number(const MultiPoly& g) {
    if (!graded_part(g, 0).is_zero() || !graded_part(g, 1).is_zero()) {
        throw std::invalid_argument(
            "milnor_number: constant and linear parts must vanish at the origin");
    }
    const int n = static_cast<int>(g.variables().size());
    std::vector<MultiPoly> partials;
    for (const auto& v : g.variables()) partials.push_back(partial_derivative(g, v));

    constexpr int kDegreeCap = 12;
    int previous = -1;
    for (int cap = 2; cap <= kDegreeCap; ++cap) {
        const int current = truncated_quotient_dim(partials, n, cap);
        // Stable across one degree step forces m^cap into the Jacobian
        // ideal (Nakayama), so the stable value is the Milnor number.
        if (current == previous) return current;
        previous = current;
    }
    throw std::runtime_error("non-isolated or cap exceeded");
}

int milnor_number(const VertexChart& chart) { return milnor_number(chart.chart_poly); }

BruceWallResult bruce_wall_classify(const MultiPoly& f2, const MultiPoly& f3) {
    if (f2.variables() != f3.variables() || f2.variables().size() != 3) {
        throw std::invalid_argument("bruce_wall_classify: expected two parts over the same three variables");
    }
    if (!f2.is_zero() && !f2.is_homogeneous_of_degree(2)) {
        throw std::invalid_argument("bruce_wall_classify: quadratic part has wrong degree");
    }
    if (!f3.is_zero() && !f3.is_homogeneous_of_degree(3)) {
        throw std::invalid_argument("bruce_wall_classify: cubic part has wrong degree");
    }

    BruceWallResult result;
    if (f2.is_zero()) {
        result.corank = 3;
        return result;  // undecided; outside the corank <= 1 scope
    }

    const QMatrix h = hessian_matrix(f2);
    const int rank = matrix_rank(h);
    result.corank = 3 - rank;
    if (result.corank == 0) {
        result.k = 1;  // nondegenerate quadratic part
        return result;
    }
    if (result.corank >= 2) return result;  // undecided

    // Corank 1: split the rank-2 quadratic part as u*v when possible.
    const CongruenceDiagonalization cd = congruence_diagonalize(h);
    std::vector<int> nonzero;
    int kernel_index = -1;
    for (int i = 0; i < 3; ++i) {
        if (cd.pivots[i] == 0) {
            kernel_index = i;
        } else {
            nonzero.push_back(i);
        }
    }
    if (nonzero.size() != 2 || kernel_index < 0) {
        throw std::logic_error("bruce_wall_classify: pivot count disagrees with rank");
    }
    const Rational d1 = cd.pivots[nonzero[0]];
    const Rational d2 = cd.pivots[nonzero[1]];

    Rational r;
    if (!rational_square_root(-d2 / d1, &r)) {
        return result;  // anisotropic over Q; undecided, k stays 0
    }
    const std::vector<std::string> uvw = {"u", "v", "w"};
    const MultiPoly u = MultiPoly::variable(uvw, "u");
    const MultiPoly v = MultiPoly::variable(uvw, "v");
    const MultiPoly w = MultiPoly::variable(uvw, "w");

    // y written in (u, v, w); then x = P^T y diagonalizes f2 into u*v.
    std::vector<MultiPoly> y(3, MultiPoly::constant(uvw, Rational(0)));
    y[nonzero[0]] = make_rational(1, 2) * u + (Rational(1) / d1) * v;
    y[nonzero[1]] = (Rational(-1) / (2 * r)) * u + (Rational(1) / (d1 * r)) * v;
    y[kernel_index] = w;

    std::vector<MultiPoly> images;
    for (int j = 0; j < 3; ++j) {
        MultiPoly xj = MultiPoly::constant(uvw, Rational(0));
        for (int i = 0; i < 3; ++i) xj = xj + cd.transform[i][j] * y[i];
        images.push_back(xj);
    }

    if (compose(f2, images) != u * v) {
        throw std::logic_error("bruce_wall_classify: splitting change of variables failed");
    }
    const MultiPoly g3 = compose(f3, images);

    if (evaluate(g3, {Rational(0), Rational(0), Rational(1)}) != 0) {
        result.k = 2;  // cubic part does not vanish along the kernel line
        return result;
    }

    const UniPoly along_v = restrict_to_line(g3, "v", "u");
    const UniPoly along_u = restrict_to_line(g3, "u", "v");
    if (degree(along_v) < 0 || degree(along_u) < 0) return result;  // undecided
    int k1 = order_at_zero(along_v);
    int k2 = order_at_zero(along_u);
    if (k1 > k2) std::swap(k1, k2);
    if (k1 == 1 && (k2 == 1 || k2 == 2 || k2 == 3)) {
        result.k = k2 + 2;  // branch orders {1,m} give type A_{m+2}
        result.branch_orders = std::pair<int, int>{k1, k2};
    }
    return result;
}

SingularityReport classify(const VertexChart& chart) {
    if (!graded_part(chart.chart_poly, 0).is_zero() ||
        !graded_part(chart.chart_poly, 1).is_zero()) {
        throw std::invalid_argument("classify: chart origin is not a singular point");
    }
    if (chart.chart_poly != chart.f2 + chart.f3) {
        throw std::logic_error("classify: chart polynomial is not its own 3-jet");
    }

    SingularityReport report;
    report.vertex = chart.vertex;
    report.corank = hessian_corank(chart.chart_poly);
    if (report.corank >= 2) {
        throw std::runtime_error("non-A singularity, out of scope");
    }

    report.milnor = milnor_number(chart);
    const BruceWallResult bw = bruce_wall_classify(chart.f2, chart.f3);
    if (bw.corank != report.corank) {
        throw std::logic_error("classify: corank computed two ways disagrees");
    }
    if (bw.k != 0) {
        if (bw.k != report.milnor) {
            std::ostringstream msg;
            msg << "classify: normal form gives A_" << bw.k << " but the Milnor number is "
                << report.milnor;
            throw std::logic_error(msg.str());
        }
        report.normal_form = bw;
        report.note = "normal form and Milnor number agree";
    } else {
        report.note = "Milnor number only; normal-form route undecided";
    }
    report.ade_k = report.milnor;
    return report;
}

std::string ade_label(const SingularityReport& report) {
    return "A_" + std::to_string(report.ade_k);
}

}  // namespace pw
