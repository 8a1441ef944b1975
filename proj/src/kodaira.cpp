#include "pw/kodaira.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pw {

namespace {

KodairaFiber cycle_fiber(const std::string& tag, int n) {
    KodairaFiber f;
    f.tag = tag;
    f.multiplicities.assign(n, 1);
    if (n == 1) {
        f.edges = {{0, 0}};  // one component with one node
    } else if (n == 2) {
        f.edges = {{0, 1}, {0, 1}};
    } else {
        for (int i = 0; i < n; ++i) f.edges.emplace_back(i, (i + 1) % n);
    }
    return f;
}

// Chain of n-3 multiplicity-2 components with a pair of reduced leaves
// attached at each end.
KodairaFiber d_type_fiber(const std::string& tag, int n) {
    KodairaFiber f;
    f.tag = tag;
    const int chain = n - 3;
    f.multiplicities.assign(chain, 2);
    for (int i = 0; i + 1 < chain; ++i) f.edges.emplace_back(i, i + 1);
    for (int leaf = 0; leaf < 4; ++leaf) {
        f.multiplicities.push_back(1);
        const int id = static_cast<int>(f.multiplicities.size()) - 1;
        f.edges.emplace_back(leaf < 2 ? 0 : chain - 1, id);
    }
    return f;
}

KodairaFiber chain_with_branch(const std::string& tag, std::vector<int> chain_mults,
                               int branch_at, int branch_mult) {
    KodairaFiber f;
    f.tag = tag;
    f.multiplicities = std::move(chain_mults);
    for (int i = 0; i + 1 < static_cast<int>(f.multiplicities.size()); ++i) {
        f.edges.emplace_back(i, i + 1);
    }
    f.multiplicities.push_back(branch_mult);
    f.edges.emplace_back(branch_at, static_cast<int>(f.multiplicities.size()) - 1);
    return f;
}

bool is_connected(const KodairaFiber& fiber) {
    const int n = static_cast<int>(fiber.multiplicities.size());
    if (n == 0) return false;
    std::vector<int> stack = {0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
        const int at = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : fiber.edges) {
            const int other = a == at ? b : (b == at ? a : -1);
            if (other >= 0 && !seen[other]) {
                seen[other] = true;
                stack.push_back(other);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!seen[i]) return false;
    }
    return true;
}

}  // namespace

KodairaFiber make_fiber(const std::string& tag) {
    if (tag.size() >= 2 && tag[0] == 'I' && tag.find_first_not_of("0123456789", 1) == std::string::npos) {
        const int n = std::stoi(tag.substr(1));
        if (n >= 1) return cycle_fiber(tag, n);
    }
    if (tag == "II") return {tag, {1}, {}};
    if (tag == "III") return {tag, {1, 1}, {{0, 1}, {0, 1}}};
    if (tag == "IV") return {tag, {1, 1, 1}, {{0, 1}, {0, 2}, {1, 2}}};
    if (tag.size() == 5 && tag[0] == 'D' && tag.substr(2) == "(1)" && tag[1] >= '4' && tag[1] <= '8') {
        return d_type_fiber(tag, tag[1] - '0');
    }
    if (tag == "E6(1)") {
        KodairaFiber f;
        f.tag = tag;
        f.multiplicities = {3, 2, 1, 2, 1, 2, 1};
        f.edges = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
        return f;
    }
    if (tag == "E7(1)") return chain_with_branch(tag, {1, 2, 3, 4, 3, 2, 1}, 3, 2);
    if (tag == "E8(1)") return chain_with_branch(tag, {1, 2, 3, 4, 5, 6, 4, 2}, 5, 3);
    throw std::invalid_argument("make_fiber: unknown fiber tag '" + tag + "'");
}

int euler_characteristic(const KodairaFiber& fiber) {
    // Non-transverse intersections collapse points the dual graph double
    // counts, so the three additive tags are tabulated directly.
    if (fiber.tag == "II") return 2;
    if (fiber.tag == "III") return 3;
    if (fiber.tag == "IV") return 4;
    return 2 * static_cast<int>(fiber.multiplicities.size()) -
           static_cast<int>(fiber.edges.size());
}

HodgePolynomial perverse_polynomial(int d) {
    if (d < 0 || d > 4) {
        throw std::invalid_argument("perverse_polynomial: d must lie in 0..4");
    }
    HodgePolynomial PH;
    PH.add(-1, 0, 1);
    PH.add(-2, 2, d);
    PH.add(-3, 2, 1);
    return PH;
}

LatticeCertificate lattice_certificate(const KodairaFiber& fiber) {
    const int n = static_cast<int>(fiber.multiplicities.size());
    if (n == 0) throw std::invalid_argument("lattice_certificate: empty fiber");

    LatticeCertificate cert;
    cert.intersection.assign(n, std::vector<Rational>(n, Rational(0)));
    if (n > 1) {
        for (int i = 0; i < n; ++i) cert.intersection[i][i] = -2;
        for (const auto& [a, b] : fiber.edges) {
            cert.intersection[a][b] += 1;
            cert.intersection[b][a] += 1;
        }
    }
    // A single component is the whole fiber class, which squares to zero.

    const CongruenceDiagonalization cd = congruence_diagonalize(cert.intersection);
    cert.pivots = cd.pivots;
    for (const auto& p : cert.pivots) {
        if (p > 0) {
            throw std::logic_error("lattice_certificate: intersection form has a positive direction");
        }
        if (p == 0) ++cert.radical_dim;
    }
    if (cert.radical_dim != 1) {
        throw std::logic_error("lattice_certificate: radical dimension is not one");
    }

    const std::vector<std::vector<Rational>> kernel = kernel_basis(cert.intersection);
    if (kernel.size() != 1) {
        throw std::logic_error("lattice_certificate: kernel dimension disagrees with the pivots");
    }
    // Scale to the primitive integer vector with positive entries.
    Integer denom_lcm = 1;
    for (const auto& v : kernel.front()) {
        denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(v));
    }
    std::vector<Integer> generator;
    Integer content = 0;
    for (const auto& v : kernel.front()) {
        const Rational scaled = v * Rational(denom_lcm);
        generator.push_back(numerator(scaled));
        content = boost::multiprecision::gcd(content, generator.back());
    }
    if (content == 0) throw std::logic_error("lattice_certificate: zero kernel vector");
    bool any_negative = false;
    for (auto& g : generator) {
        g /= content;
        if (g < 0) any_negative = true;
    }
    if (any_negative) {
        for (auto& g : generator) g = -g;
    }
    for (const auto& g : generator) {
        if (g <= 0) {
            throw std::logic_error("lattice_certificate: radical generator is not positive");
        }
    }
    cert.radical_generator = generator;

    for (int i = 0; i < n; ++i) {
        if (generator[i] != fiber.multiplicities[i]) {
            throw std::logic_error(
                "lattice_certificate: radical generator differs from the multiplicities");
        }
    }
    return cert;
}

bool b1_vanishing_check(const KodairaFiber& fiber) {
    return is_connected(fiber) &&
           fiber.edges.size() + 1 == fiber.multiplicities.size();
}

DolbeaultReport analyze_fiber(const KodairaFiber& fiber) {
    DolbeaultReport report;
    report.fiber = fiber;
    report.chi = euler_characteristic(fiber);
    report.d = 10 - report.chi;
    if (report.d < 0 || report.d > 4) {
        throw std::invalid_argument(
            "analyze_fiber: Euler characteristic must lie in 6..10");
    }
    report.b2_dolbeault = 1 + report.d;
    report.b1_vanishes = b1_vanishing_check(fiber);
    report.lattice = lattice_certificate(fiber);
    report.PH = perverse_polynomial(report.d);
    if (1 + report.b2_dolbeault + report.chi != 12) {
        throw std::logic_error("analyze_fiber: Betti numbers and chi do not sum to 12");
    }
    return report;
}

std::string MotivicClass::str() const {
    if (c0 == 0 && c1 == 0) return "0";
    std::ostringstream out;
    if (c1 != 0) {
        if (c1 == -1) {
            out << "-";
        } else if (c1 != 1) {
            out << c1;
        }
        out << "L";
    }
    if (c0 != 0) {
        if (c1 != 0) out << (c0 > 0 ? " + " : " - ") << (c0 > 0 ? c0 : -c0);
        else out << c0;
    }
    return out.str();
}

MotivicClass motivic_class(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return {a - c + d, b + c + d};
}

MotivicClass fiber_class(const std::string& tag) {
    if (tag.size() >= 2 && tag[0] == 'I' &&
        tag.find_first_not_of("0123456789", 1) == std::string::npos) {
        return {0, std::stoi(tag.substr(1))};
    }
    if (tag == "II") return {1, 1};
    if (tag == "III") return {1, 2};
    if (tag == "IV") return {1, 3};
    throw std::invalid_argument("fiber_class: no class recorded for tag '" + tag + "'");
}

std::string identify_fiber(const MotivicClass& cls) {
    for (int n = 1; n <= 99; ++n) {
        const std::string tag = "I" + std::to_string(n);
        if (fiber_class(tag) == cls) return tag;
    }
    for (const std::string tag : {"II", "III", "IV"}) {
        if (fiber_class(tag) == cls) return tag;
    }
    throw std::invalid_argument("class not in the table");
}

}  // namespace pw
