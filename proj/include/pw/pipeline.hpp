#pragma once

// Orchestration: run the weight side and the perverse side for one case,
// compare them, and emit the result tables.

#include "pw/cubic_surface.hpp"
#include "pw/kodaira.hpp"
#include "pw/nerve_weight.hpp"
#include "pw/singularity.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pw {

struct NamedCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CaseReport {
    std::string tag;
    std::vector<std::pair<std::string, Rational>> parameters;  // registry order
    ProjectiveCubic cubic;
    SmoothCertificate affine_smooth;
    std::vector<SingularityReport> singularities;  // x1-, x2-, x3-vertex order
    int N = 0;                                     // total boundary Milnor number
    WeightReport weight;
    DolbeaultReport dolbeault;
    std::string betti_status;  // "proven" or "expected" diffeomorphism
    std::vector<NamedCheck> checks;

    bool all_checks_passed() const;
};

// Full per-case run: cubic -> boundary singularities -> nerve and WH on one
// side, fiber -> PH on the other, with every cross-check recorded. Failed
// comparisons are recorded as failed checks rather than thrown; errors that
// leave the supported geometry propagate with the case tag attached.
CaseReport analyze_case(const CaseRegistry& registry, const std::string& tag,
                        const std::map<std::string, Rational>& overrides = {});

// Exact coefficient test PH(q,t) == q^-1 WH(q,t).
bool verify_pw(const CaseReport& report);

// 1 + (1 + d) + chi == 12.
bool euler_consistency(const CaseReport& report);

// 5 - N == 1 + d: the two sides predict the same second Betti number.
bool betti_match(const CaseReport& report);

// "A_2 + A_1 + A_1" (descending), or "none" when the boundary is smooth.
std::string singularity_summary(const CaseReport& report);

enum class TableFormat { Text, Json, Csv, Latex };

// Accepts "text", "json", "csv", "latex"; throws std::invalid_argument otherwise.
TableFormat parse_table_format(const std::string& name);

// Renders the two result tables (fiber/PH and singularities/WH) for the
// given reports. Byte-deterministic for fixed input.
std::string emit_tables(const std::vector<CaseReport>& reports, TableFormat format);

// Human-readable single-case report for the command line.
std::string describe_case(const CaseReport& report);

}  // namespace pw
