#include "pw/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace pw {

namespace {

std::string latex_escape(const std::string& text) {
    std::string out;
    for (const char c : text) {
        if (c == '_') out += "\\_";
        else out += c;
    }
    return out;
}

std::string fiber_latex(const std::string& tag) {
    // "D4(1)" -> "D_4^{(1)}", "E8(1)" -> "E_8^{(1)}", "I3" -> "I_3".
    if (tag.size() == 5 && tag.substr(2) == "(1)") {
        return std::string(1, tag[0]) + "_" + tag[1] + "^{(1)}";
    }
    if (tag.size() >= 2 && tag[0] == 'I' &&
        tag.find_first_not_of("0123456789", 1) == std::string::npos) {
        return "I_{" + tag.substr(1) + "}";
    }
    return tag;  // II, III, IV
}

std::vector<int> sorted_types_descending(const CaseReport& report) {
    std::vector<int> types;
    for (const auto& s : report.singularities) types.push_back(s.ade_k);
    std::sort(types.rbegin(), types.rend());
    return types;
}

nlohmann::ordered_json polynomial_json(const HodgePolynomial& p) {
    nlohmann::ordered_json out;
    out["text"] = p.str();
    out["latex"] = p.latex();
    out["terms"] = nlohmann::ordered_json::array();
    for (const auto& [key, c] : p.terms()) {
        out["terms"].push_back({{"q", key.first}, {"t", key.second}, {"coeff", c}});
    }
    return out;
}

std::string emit_text(const std::vector<CaseReport>& reports) {
    const auto pad = [](const std::string& s, std::size_t width) {
        return s + std::string(width > s.size() ? width - s.size() : 1, ' ');
    };
    std::ostringstream out;

    out << "Fiber at infinity and perverse polynomial\n";
    out << pad("case", 10) << pad("fiber", 8) << pad("chi", 5) << pad("d", 3)
        << "PH(q,t)\n";
    for (const auto& r : reports) {
        out << pad(r.tag, 10) << pad(r.dolbeault.fiber.tag, 8)
            << pad(std::to_string(r.dolbeault.chi), 5)
            << pad(std::to_string(r.dolbeault.d), 3) << r.dolbeault.PH.str() << "\n";
    }

    out << "\nBoundary singularities and weight polynomial\n";
    out << pad("case", 10) << pad("singularities", 19) << pad("N", 3) << "WH(q,t)\n";
    for (const auto& r : reports) {
        std::ostringstream sing;
        const auto types = sorted_types_descending(r);
        if (types.empty()) {
            sing << "none";
        } else {
            for (std::size_t i = 0; i < types.size(); ++i) {
                if (i) sing << " + ";
                sing << "A_" << types[i];
            }
        }
        out << pad(r.tag, 10) << pad(sing.str(), 19) << pad(std::to_string(r.N), 3)
            << r.weight.WH.str() << "\n";
    }
    return out.str();
}

std::string emit_json(const std::vector<CaseReport>& reports) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["cases"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json c;
        c["tag"] = r.tag;
        c["parameters"] = nlohmann::ordered_json::object();
        for (const auto& [name, value] : r.parameters) {
            c["parameters"][name] = to_string(value);
        }
        c["affine_cubic"] = r.cubic.f.str();
        c["fiber"] = r.dolbeault.fiber.tag;
        c["chi"] = r.dolbeault.chi;
        c["d"] = r.dolbeault.d;
        c["N"] = r.N;
        c["singularities"] = nlohmann::ordered_json::array();
        for (const auto& s : r.singularities) {
            nlohmann::ordered_json item;
            item["vertex"] = s.vertex ? vertex_label(*s.vertex) : "";
            item["type"] = ade_label(s);
            item["milnor"] = s.milnor;
            item["corank"] = s.corank;
            c["singularities"].push_back(item);
        }
        c["perverse"] = polynomial_json(r.dolbeault.PH);
        c["weight"] = polynomial_json(r.weight.WH);
        c["b2"] = {{"weight_side", r.weight.b2_betti},
                   {"dolbeault_side", r.dolbeault.b2_dolbeault}};
        c["betti_status"] = r.betti_status;
        c["checks"] = nlohmann::ordered_json::array();
        for (const auto& check : r.checks) {
            c["checks"].push_back(
                {{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
        }
        doc["cases"].push_back(c);
    }
    return doc.dump(2) + "\n";
}

std::string emit_csv(const std::vector<CaseReport>& reports) {
    std::ostringstream out;
    out << "case,fiber,chi,d,N,singularities,perverse,weight,pw_match,"
           "euler_consistency,betti_match,b2_weight_side,b2_dolbeault_side,"
           "betti_status\n";
    for (const auto& r : reports) {
        std::ostringstream sing;
        const auto types = sorted_types_descending(r);
        if (types.empty()) {
            sing << "none";
        } else {
            for (std::size_t i = 0; i < types.size(); ++i) {
                if (i) sing << " + ";
                sing << "A_" << types[i];
            }
        }
        out << r.tag << "," << r.dolbeault.fiber.tag << "," << r.dolbeault.chi << ","
            << r.dolbeault.d << "," << r.N << "," << sing.str() << ","
            << r.dolbeault.PH.str() << "," << r.weight.WH.str() << ","
            << (verify_pw(r) ? "true" : "false") << ","
            << (euler_consistency(r) ? "true" : "false") << ","
            << (betti_match(r) ? "true" : "false") << "," << r.weight.b2_betti << ","
            << r.dolbeault.b2_dolbeault << "," << r.betti_status << "\n";
    }
    return out.str();
}

std::string emit_latex(const std::vector<CaseReport>& reports) {
    std::ostringstream out;
    out << "% Fiber at infinity and perverse polynomial\n";
    out << "\\begin{tabular}{llcc l}\n";
    out << "$X$ & $F_\\infty$ & $\\chi$ & $d$ & $PH(q,t)$ \\\\\n\\hline\n";
    for (const auto& r : reports) {
        out << latex_escape(r.tag) << " & $" << fiber_latex(r.dolbeault.fiber.tag)
            << "$ & " << r.dolbeault.chi << " & " << r.dolbeault.d << " & $"
            << r.dolbeault.PH.latex() << "$ \\\\\n";
    }
    out << "\\end{tabular}\n\n";

    out << "% Boundary singularities and weight polynomial\n";
    out << "\\begin{tabular}{llc l}\n";
    out << "$X$ & singularities & $N$ & $WH(q,t)$ \\\\\n\\hline\n";
    for (const auto& r : reports) {
        out << latex_escape(r.tag) << " & $";
        const auto types = sorted_types_descending(r);
        if (types.empty()) {
            out << "\\emptyset";
        } else {
            for (std::size_t i = 0; i < types.size(); ++i) {
                if (i) out << " + ";
                out << "A_" << types[i];
            }
        }
        out << "$ & " << r.N << " & $" << r.weight.WH.latex() << "$ \\\\\n";
    }
    out << "\\end{tabular}\n";
    return out.str();
}

}  // namespace

bool CaseReport::all_checks_passed() const {
    for (const auto& check : checks) {
        if (!check.passed) return false;
    }
    return true;
}

CaseReport analyze_case(const CaseRegistry& registry, const std::string& tag,
                        const std::map<std::string, Rational>& overrides) {
    const CaseRecord& record = registry.find(tag);
    const std::map<std::string, Rational> params = resolve_parameters(record, overrides);

    CaseReport report;
    report.tag = tag;
    for (const auto& name : record.parameters) {
        report.parameters.emplace_back(name, params.at(name));
    }
    report.cubic = make_case(record, params);

    report.affine_smooth = affine_smooth_check(report.cubic);
    report.checks.push_back({"affine_smooth", report.affine_smooth.smooth,
                             report.affine_smooth.message});

    const std::vector<VertexChart> charts = singular_points_at_infinity(report.cubic);
    try {
        for (const auto& chart : charts) {
            report.singularities.push_back(classify(chart));
        }
        for (const auto& s : report.singularities) report.N += s.milnor;

        std::array<int, 3> boundary_milnor = {0, 0, 0};
        const std::array<Vertex, 3> order = {kVertexX1, kVertexX2, kVertexX3};
        for (const auto& s : report.singularities) {
            for (int k = 0; k < 3; ++k) {
                if (s.vertex == order[k]) boundary_milnor[k] = s.milnor;
            }
        }
        report.weight = weight_report(boundary_milnor);
        report.dolbeault = analyze_fiber(make_fiber(record.fiber_tag));
    } catch (const std::exception& e) {
        throw std::runtime_error("case " + tag + ": " + e.what());
    }

    // The registry's expected lists are test data; computing them again and
    // comparing guards both the registry file and the classifier.
    bool registry_ok = report.singularities.size() == record.expected_singularities.size();
    if (registry_ok) {
        for (std::size_t i = 0; i < report.singularities.size(); ++i) {
            const auto& computed = report.singularities[i];
            const auto& expected = record.expected_singularities[i];
            registry_ok = registry_ok && computed.vertex == expected.vertex &&
                          computed.milnor == expected.milnor;
        }
    }
    report.checks.push_back({"registry_singularities", registry_ok,
                             registry_ok ? "computed singularities match the registry"
                                         : "computed singularities differ from the registry"});

    {
        std::ostringstream detail;
        detail << "cycle of length " << report.weight.cycle_length
               << ", homology (1,1), boundary-map ranks (1,1)";
        report.checks.push_back({"nerve_cycle", true, detail.str()});
    }
    report.checks.push_back(
        {"lattice", true,
         "intersection form negative semidefinite, radical spanned by the multiplicities"});
    report.checks.push_back({"b1_vanishing", report.dolbeault.b1_vanishes,
                             report.dolbeault.b1_vanishes
                                 ? "dual graph is a tree, so b1 of the fiber vanishes"
                                 : "dual graph is not a tree"});

    const bool pw = verify_pw(report);
    report.checks.push_back({"pw_identity", pw,
                             pw ? "PH(q,t) equals q^-1 WH(q,t) coefficient by coefficient"
                                : "PH(q,t) differs from q^-1 WH(q,t)"});

    const bool euler = euler_consistency(report);
    report.checks.push_back(
        {"euler_consistency", euler,
         euler ? "1 + b2 + chi = 12" : "1 + b2 + chi differs from 12"});

    report.betti_status = record.diffeo_proven ? "proven" : "expected";
    const bool betti = betti_match(report);
    {
        std::ostringstream detail;
        detail << "5 - N = " << 5 - report.N << " vs 1 + d = " << 1 + report.dolbeault.d;
        detail << (record.diffeo_proven ? " (spaces proven diffeomorphic)"
                                        : " (diffeomorphism expected, agreement numerical)");
        report.checks.push_back({"betti_match", betti, detail.str()});
    }
    return report;
}

bool verify_pw(const CaseReport& report) {
    return report.dolbeault.PH == report.weight.WH.shifted_q(-1);
}

bool euler_consistency(const CaseReport& report) {
    return 1 + (1 + report.dolbeault.d) + report.dolbeault.chi == 12;
}

bool betti_match(const CaseReport& report) {
    return 5 - report.N == 1 + report.dolbeault.d;
}

std::string singularity_summary(const CaseReport& report) {
    const auto types = sorted_types_descending(report);
    if (types.empty()) return "none";
    std::ostringstream out;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (i) out << " + ";
        out << "A_" << types[i];
    }
    return out.str();
}

TableFormat parse_table_format(const std::string& name) {
    if (name == "text") return TableFormat::Text;
    if (name == "json") return TableFormat::Json;
    if (name == "csv") return TableFormat::Csv;
    if (name == "latex") return TableFormat::Latex;
    throw std::invalid_argument("unknown table format '" + name +
                                "' (expected text, json, csv, or latex)");
}

std::string emit_tables(const std::vector<CaseReport>& reports, TableFormat format) {
    switch (format) {
        case TableFormat::Text: return emit_text(reports);
        case TableFormat::Json: return emit_json(reports);
        case TableFormat::Csv: return emit_csv(reports);
        case TableFormat::Latex: return emit_latex(reports);
    }
    throw std::invalid_argument("unknown table format");
}

std::string describe_case(const CaseReport& report) {
    std::ostringstream out;
    out << "case: " << report.tag << "\n";
    if (!report.parameters.empty()) {
        out << "parameters:";
        for (const auto& [name, value] : report.parameters) {
            out << " " << name << " = " << to_string(value);
        }
        out << "\n";
    }
    out << "affine cubic: " << report.cubic.f.str() << "\n";
    out << "affine smoothness: " << (report.affine_smooth.smooth ? "smooth" : "NOT smooth")
        << " (" << report.affine_smooth.message << ")\n";
    out << "boundary singularities: " << singularity_summary(report);
    if (!report.singularities.empty()) {
        out << " at";
        for (const auto& s : report.singularities) {
            out << " " << (s.vertex ? vertex_label(*s.vertex) : "?");
        }
    }
    out << "\n";
    out << "N = " << report.N << ", boundary cycle length " << report.weight.cycle_length
        << "\n";
    out << "WH(q,t) = " << report.weight.WH.str() << "\n";
    out << "fiber at infinity: " << report.dolbeault.fiber.tag
        << ", chi = " << report.dolbeault.chi << ", d = " << report.dolbeault.d << "\n";
    out << "PH(q,t) = " << report.dolbeault.PH.str() << "\n";
    out << "b2: weight side " << report.weight.b2_betti << ", Dolbeault side "
        << report.dolbeault.b2_dolbeault << " (diffeomorphism " << report.betti_status
        << ")\n";
    out << "checks:\n";
    for (const auto& check : report.checks) {
        out << "  " << (check.passed ? "PASS" : "FAIL") << " " << check.name << ": "
            << check.detail << "\n";
    }
    out << "P=W: " << (verify_pw(report) ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace pw
