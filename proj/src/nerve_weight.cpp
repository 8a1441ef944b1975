#include "pw/nerve_weight.hpp"

#include "pw/linalg.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace pw {

namespace {

constexpr int kCompactifiedB2 = 7;

int incidence_rank(const NerveComplex& nerve) {
    if (nerve.edges.empty() || nerve.vertices.empty()) return 0;
    QMatrix m(nerve.edges.size(),
              std::vector<Rational>(nerve.vertices.size(), Rational(0)));
    for (std::size_t e = 0; e < nerve.edges.size(); ++e) {
        const auto [a, b] = nerve.edges[e];
        // A loop contributes the zero row.
        m[e][a] -= 1;
        m[e][b] += 1;
    }
    return matrix_rank(m);
}

}  // namespace

NerveComplex build_nerve(const std::array<int, 3>& boundary_milnor) {
    for (const int mu : boundary_milnor) {
        if (mu < 0) throw std::invalid_argument("build_nerve: negative Milnor number");
    }
    NerveComplex nerve;
    nerve.vertices = {"L1", "L2", "L3"};
    // boundary_milnor[k] sits at the triangle corner opposite x_{k+1},
    // i.e. on the edge joining the other two lines.
    const std::array<std::pair<int, int>, 3> corner_lines = {
        std::pair<int, int>{1, 2},  // L2 meets L3
        std::pair<int, int>{0, 2},  // L1 meets L3
        std::pair<int, int>{0, 1},  // L1 meets L2
    };
    const std::array<std::string, 3> corner_names = {"E23", "E13", "E12"};
    for (int k = 0; k < 3; ++k) {
        const auto [a, b] = corner_lines[k];
        int previous = a;
        for (int j = 1; j <= boundary_milnor[k]; ++j) {
            std::ostringstream label;
            label << corner_names[k] << "." << j;
            nerve.vertices.push_back(label.str());
            const int fresh = static_cast<int>(nerve.vertices.size()) - 1;
            nerve.edges.emplace_back(previous, fresh);
            previous = fresh;
        }
        nerve.edges.emplace_back(previous, b);
    }

    std::set<std::string> seen(nerve.vertices.begin(), nerve.vertices.end());
    if (seen.size() != nerve.vertices.size()) {
        throw std::invalid_argument("build_nerve: duplicate vertex label");
    }
    return nerve;
}

std::pair<int, int> nerve_homology(const NerveComplex& nerve) {
    const int rank = incidence_rank(nerve);
    return {static_cast<int>(nerve.vertices.size()) - rank,
            static_cast<int>(nerve.edges.size()) - rank};
}

std::pair<int, int> delta_ranks(const NerveComplex& nerve) {
    const int rank = incidence_rank(nerve);
    return {static_cast<int>(nerve.edges.size()) - rank,
            static_cast<int>(nerve.vertices.size()) - rank};
}

HodgePolynomial weight_polynomial(int total_boundary_milnor) {
    if (total_boundary_milnor < 0 || total_boundary_milnor > 4) {
        throw std::invalid_argument(
            "weight_polynomial: total boundary Milnor number must lie in 0..4");
    }
    HodgePolynomial WH;
    WH.add(0, 0, 1);
    WH.add(-1, 2, 4 - total_boundary_milnor);
    WH.add(-2, 2, 1);
    return WH;
}

WeightReport weight_report(const std::array<int, 3>& boundary_milnor) {
    WeightReport report;
    report.nerve = build_nerve(boundary_milnor);
    report.cycle_length = static_cast<int>(report.nerve.vertices.size());

    const auto [b0, b1] = nerve_homology(report.nerve);
    if (b0 != 1 || b1 != 1) {
        throw std::logic_error("weight_report: boundary nerve is not a single cycle");
    }
    const auto [ker, coker] = delta_ranks(report.nerve);
    report.ker_delta = ker;
    report.coker_delta = coker;

    // Graded pieces read off the nerve: H^0 is pure of weight 0; the lowest
    // weight piece of H^2 is the cycle class of the nerve; the middle piece
    // is what remains of the compactified surface's b_2 after removing one
    // class per boundary component.
    report.b2_compactified = kCompactifiedB2;
    report.grW0_H0 = b0;
    report.grWm4_H2 = b1;
    report.grWm2_H2 = report.b2_compactified - report.cycle_length;

    report.WH.add(0, 0, report.grW0_H0);
    report.WH.add(-1, 2, report.grWm2_H2);
    report.WH.add(-2, 2, report.grWm4_H2);

    const int total = report.cycle_length - 3;
    if (report.WH != weight_polynomial(total)) {
        throw std::logic_error("weight_report: nerve-based polynomial disagrees with the closed form");
    }
    report.b2_betti = report.grWm2_H2 + report.grWm4_H2;

    std::ostringstream cycle_note;
    cycle_note << "boundary nerve is a single cycle of length " << report.cycle_length;
    report.notes.push_back(cycle_note.str());
    report.notes.push_back(
        "resolved compactification is a weak del Pezzo surface of degree 3, so b2 = 7");
    std::ostringstream middle_note;
    middle_note << "middle weight piece is b2 = 7 minus the " << report.cycle_length
                << " boundary components";
    report.notes.push_back(middle_note.str());
    return report;
}

}  // namespace pw
