// Command-line front end: per-case analysis, identity verification, table
// emission, and standalone germ/fiber utilities.

#include "pw/pipeline.hpp"
#include "pw/singularity.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace pw;

// Germ files: '#' comments, then "vars: x0 x1 x2" and "poly: <expression>".
MultiPoly read_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<std::string> vars;
    std::string poly_text;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line.rfind("vars:", 0) == 0) {
            std::istringstream words(line.substr(5));
            std::string word;
            while (words >> word) vars.push_back(word);
        } else if (line.rfind("poly:", 0) == 0) {
            poly_text = line.substr(5);
        } else {
            throw std::runtime_error("unrecognized line in '" + path + "': " + line);
        }
    }
    if (vars.empty()) throw std::runtime_error("'" + path + "' has no vars: line");
    if (poly_text.empty()) throw std::runtime_error("'" + path + "' has no poly: line");
    return parse_poly(poly_text, vars);
}

std::map<std::string, Rational> parse_param_overrides(const std::vector<std::string>& raw) {
    std::map<std::string, Rational> overrides;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::runtime_error("--param expects name=value, got '" + item + "'");
        }
        overrides[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    }
    return overrides;
}

MotivicClass parse_class_argument(const std::string& arg) {
    if (arg.find(',') != std::string::npos) {
        std::istringstream in(arg);
        std::vector<std::int64_t> parts;
        std::string piece;
        while (std::getline(in, piece, ',')) parts.push_back(std::stoll(piece));
        if (parts.size() != 4) {
            throw std::runtime_error("expected four comma-separated integers a,b,c,d");
        }
        return motivic_class(parts[0], parts[1], parts[2], parts[3]);
    }
    const MultiPoly p = parse_poly(arg, {"L"});
    if (p.total_degree() > 1) {
        throw std::runtime_error("class polynomial must be linear in L");
    }
    const auto as_int = [](const Rational& r) {
        if (denominator(r) != 1) {
            throw std::runtime_error("class coefficients must be integers");
        }
        return numerator(r).convert_to<std::int64_t>();
    };
    return {as_int(p.coefficient(Exponents{0})), as_int(p.coefficient(Exponents{1}))};
}

int run_verify(const CaseRegistry& registry, const std::vector<std::string>& tags) {
    bool all_ok = true;
    for (const auto& tag : tags) {
        const CaseReport report = analyze_case(registry, tag);
        std::vector<std::string> failed;
        for (const auto& check : report.checks) {
            if (!check.passed) failed.push_back(check.name);
        }
        if (failed.empty()) {
            std::cout << tag << ": PASS\n";
        } else {
            all_ok = false;
            std::cout << tag << ": FAIL (";
            for (std::size_t i = 0; i < failed.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << failed[i];
            }
            std::cout << ")\n";
        }
    }
    if (all_ok) {
        std::cout << tags.size() << "/" << tags.size()
                  << " cases verified: PH(q,t) = q^-1 WH(q,t)\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the weight/perverse polynomial identity "
                 "for the nine affine cubic moduli spaces"};
    app.require_subcommand(1);

    std::string registry_path;
    app.add_option("--registry", registry_path, "case registry JSON file (default: built in)");

    auto* analyze = app.add_subcommand("analyze", "full report for one case");
    std::string analyze_tag;
    std::vector<std::string> analyze_params;
    analyze->add_option("case", analyze_tag, "case tag, e.g. VI or III(D7)")->required();
    analyze->add_option("--param", analyze_params, "parameter override name=value");

    auto* verify = app.add_subcommand("verify-pw", "verify the identity and all checks");
    std::string verify_tag;
    bool verify_all = false;
    verify->add_option("case", verify_tag, "single case tag");
    verify->add_flag("--all", verify_all, "verify every registry case (default)");

    auto* table = app.add_subcommand("table", "emit the two result tables");
    std::string format_name = "text";
    table->add_option("--format", format_name, "text, json, csv, or latex");

    auto* classify_cmd =
        app.add_subcommand("classify-singularity", "classify a germ from a file");
    std::string classify_path;
    classify_cmd->add_option("file", classify_path, "germ file (vars:/poly: lines)")
        ->required();

    auto* milnor_cmd = app.add_subcommand("milnor", "Milnor number of a germ from a file");
    std::string milnor_path;
    milnor_cmd->add_option("file", milnor_path, "germ file (vars:/poly: lines)")->required();

    auto* kodaira_cmd =
        app.add_subcommand("kodaira-class", "identify a fiber from its class");
    std::string class_arg;
    kodaira_cmd->add_option("class", class_arg, "a,b,c,d or a polynomial in L")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const CaseRegistry registry =
            registry_path.empty() ? shipped_registry() : load_registry(registry_path);

        if (*analyze) {
            const CaseReport report =
                analyze_case(registry, analyze_tag, parse_param_overrides(analyze_params));
            std::cout << describe_case(report);
            return report.all_checks_passed() ? 0 : 1;
        }

        if (*verify) {
            std::vector<std::string> tags;
            if (!verify_tag.empty() && !verify_all) {
                tags.push_back(verify_tag);
            } else {
                for (const auto& record : registry.cases) tags.push_back(record.tag);
            }
            return run_verify(registry, tags);
        }

        if (*table) {
            const TableFormat format = parse_table_format(format_name);
            std::vector<CaseReport> reports;
            for (const auto& record : registry.cases) {
                reports.push_back(analyze_case(registry, record.tag));
            }
            const std::string document = emit_tables(reports, format);
            const char* out_dir = std::getenv("PW_OUTPUT_DIR");
            if (out_dir != nullptr && *out_dir != '\0') {
                const std::map<TableFormat, std::string> ext = {
                    {TableFormat::Text, "txt"},
                    {TableFormat::Json, "json"},
                    {TableFormat::Csv, "csv"},
                    {TableFormat::Latex, "tex"}};
                const std::string path =
                    std::string(out_dir) + "/pw_table." + ext.at(format);
                std::ofstream out(path);
                if (!out) throw std::runtime_error("cannot write '" + path + "'");
                out << document;
                std::cout << path << "\n";
            } else {
                std::cout << document;
            }
            return 0;
        }

        if (*classify_cmd) {
            const MultiPoly germ = read_poly_file(classify_path);
            const int corank = hessian_corank(germ);
            std::cout << "corank: " << corank << "\n";
            if (corank >= 2) {
                throw std::runtime_error("non-A singularity, out of scope");
            }
            const int mu = milnor_number(germ);
            std::cout << "milnor: " << mu << "\n";
            std::cout << "type: A_" << mu << "\n";
            const MultiPoly f2 = graded_part(germ, 2);
            const MultiPoly f3 = graded_part(germ, 3);
            if (germ.variables().size() == 3 && germ == f2 + f3) {
                const BruceWallResult bw = bruce_wall_classify(f2, f3);
                if (bw.k != 0 && bw.k != mu) {
                    throw std::logic_error("normal form disagrees with the Milnor number");
                }
                std::cout << "route: "
                          << (bw.k != 0 ? "normal form and Milnor number agree"
                                        : "Milnor number only")
                          << "\n";
            } else {
                std::cout << "route: Milnor number only\n";
            }
            return 0;
        }

        if (*milnor_cmd) {
            const int mu = milnor_number(read_poly_file(milnor_path));
            std::cout << "milnor: " << mu << "\n";
            return 0;
        }

        if (*kodaira_cmd) {
            const MotivicClass cls = parse_class_argument(class_arg);
            const std::string tag = identify_fiber(cls);
            std::cout << "class: " << cls.str() << "\n";
            std::cout << "fiber: " << tag << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
