#include "pw/kodaira.hpp"

#include <doctest.h>

#include <map>
#include <string>
#include <vector>

using namespace pw;

namespace {

// Multiplicity-weighted adjacency must annihilate the multiplicity vector:
// every component meets the rest of the fiber in (self-intersection) many
// points counted with multiplicity.
void check_fiber_class_relation(const KodairaFiber& f) {
    const int n = static_cast<int>(f.multiplicities.size());
    if (n == 1) return;  // single component, zero matrix by convention
    std::vector<long long> pairing(n, 0);
    for (int i = 0; i < n; ++i) pairing[i] = -2LL * f.multiplicities[i];
    for (const auto& [a, b] : f.edges) {
        pairing[a] += f.multiplicities[b];
        pairing[b] += f.multiplicities[a];
    }
    for (int i = 0; i < n; ++i) CHECK(pairing[i] == 0);
}

}  // namespace

TEST_SUITE_BEGIN("kodaira");

TEST_CASE("fiber construction and Euler characteristics") {
    const std::map<std::string, int> expected_chi = {
        {"I1", 1},     {"I2", 2},     {"I3", 3},     {"I5", 5},     {"II", 2},
        {"III", 3},    {"IV", 4},     {"D4(1)", 6},  {"D5(1)", 7},  {"D6(1)", 8},
        {"D7(1)", 9},  {"D8(1)", 10}, {"E6(1)", 8},  {"E7(1)", 9},  {"E8(1)", 10},
    };
    for (const auto& [tag, chi] : expected_chi) {
        const KodairaFiber f = make_fiber(tag);
        CHECK(f.tag == tag);
        CHECK(euler_characteristic(f) == chi);
        check_fiber_class_relation(f);
    }

    CHECK(make_fiber("D4(1)").multiplicities == std::vector<int>{2, 1, 1, 1, 1});
    CHECK(make_fiber("E8(1)").multiplicities ==
          std::vector<int>{1, 2, 3, 4, 5, 6, 4, 2, 3});
    CHECK(make_fiber("I1").edges == std::vector<std::pair<int, int>>{{0, 0}});
    CHECK(make_fiber("I2").edges.size() == 2);
    CHECK(make_fiber("IV").edges.size() == 3);

    for (const std::string bad : {"I0", "Ix", "D9(1)", "E5(1)", "V", ""}) {
        CHECK_THROWS_AS(make_fiber(bad), std::invalid_argument);
    }
}

TEST_CASE("perverse polynomial closed form") {
    CHECK(perverse_polynomial(0).str() == "q^-1 + q^-3*t^2");
    CHECK(perverse_polynomial(1).str() == "q^-1 + q^-2*t^2 + q^-3*t^2");
    CHECK(perverse_polynomial(4).str() == "q^-1 + 4*q^-2*t^2 + q^-3*t^2");
    CHECK(perverse_polynomial(1).latex() == "q^{-1} + q^{-2}t^2 + q^{-3}t^2");
    CHECK_THROWS_AS(perverse_polynomial(5), std::invalid_argument);
    CHECK_THROWS_AS(perverse_polynomial(-1), std::invalid_argument);
}

TEST_CASE("lattice certificates for every constructible fiber") {
    for (const std::string tag :
         {"I1", "I2", "I3", "I7", "II", "III", "IV", "D4(1)", "D5(1)", "D6(1)",
          "D7(1)", "D8(1)", "E6(1)", "E7(1)", "E8(1)"}) {
        const KodairaFiber f = make_fiber(tag);
        const LatticeCertificate cert = lattice_certificate(f);
        CHECK(cert.radical_dim == 1);
        for (const auto& p : cert.pivots) CHECK(p <= 0);
        REQUIRE(cert.radical_generator.size() == f.multiplicities.size());
        for (std::size_t i = 0; i < f.multiplicities.size(); ++i) {
            CHECK(cert.radical_generator[i] == f.multiplicities[i]);
        }
    }
}

TEST_CASE("lattice certificate rejects corrupted fibers") {
    KodairaFiber wrong_mult = make_fiber("D4(1)");
    wrong_mult.multiplicities[1] = 3;
    CHECK_THROWS_AS(lattice_certificate(wrong_mult), std::logic_error);

    KodairaFiber extra_edge = make_fiber("D4(1)");
    extra_edge.edges.emplace_back(1, 2);
    CHECK_THROWS_AS(lattice_certificate(extra_edge), std::logic_error);
}

TEST_CASE("tree test certifies vanishing first Betti number") {
    for (const std::string tag :
         {"II", "D4(1)", "D5(1)", "D6(1)", "D7(1)", "D8(1)", "E6(1)", "E7(1)", "E8(1)"}) {
        CHECK(b1_vanishing_check(make_fiber(tag)));
    }
    for (const std::string tag : {"I1", "I2", "I5", "III", "IV"}) {
        CHECK_FALSE(b1_vanishing_check(make_fiber(tag)));
    }
}

TEST_CASE("fiber analysis report") {
    const DolbeaultReport d8 = analyze_fiber(make_fiber("D8(1)"));
    CHECK(d8.chi == 10);
    CHECK(d8.d == 0);
    CHECK(d8.b2_dolbeault == 1);
    CHECK(d8.b1_vanishes);
    CHECK(d8.PH.str() == "q^-1 + q^-3*t^2");

    const DolbeaultReport e6 = analyze_fiber(make_fiber("E6(1)"));
    CHECK(e6.chi == 8);
    CHECK(e6.d == 2);
    CHECK(e6.b2_dolbeault == 3);
    CHECK(e6.PH == perverse_polynomial(2));

    const DolbeaultReport d4 = analyze_fiber(make_fiber("D4(1)"));
    CHECK(d4.d == 4);
    CHECK(d4.PH.str() == "q^-1 + 4*q^-2*t^2 + q^-3*t^2");

    // chi outside 6..10 has no moduli-space reading.
    CHECK_THROWS_AS(analyze_fiber(make_fiber("I2")), std::invalid_argument);
}

TEST_CASE("motivic classes") {
    CHECK(motivic_class(1, 1, 0, 0) == MotivicClass{1, 1});
    CHECK(motivic_class(2, 0, 1, 0) == MotivicClass{1, 1});
    CHECK(motivic_class(0, 2, 0, 0).str() == "2L");
    CHECK(MotivicClass{1, 3}.str() == "3L + 1");
    CHECK(MotivicClass{0, 0}.str() == "0");
    CHECK(MotivicClass{7, 0}.str() == "7");
    CHECK(MotivicClass{-1, -1}.str() == "-L - 1");

    CHECK(fiber_class("I2") == MotivicClass{0, 2});
    CHECK(fiber_class("I3") == MotivicClass{0, 3});
    CHECK(fiber_class("I4") == MotivicClass{0, 4});
    CHECK(fiber_class("II") == MotivicClass{1, 1});
    CHECK(fiber_class("III") == MotivicClass{1, 2});
    CHECK(fiber_class("IV") == MotivicClass{1, 3});
    CHECK_THROWS_AS(fiber_class("D4(1)"), std::invalid_argument);

    CHECK(identify_fiber({0, 2}) == "I2");
    CHECK(identify_fiber({0, 3}) == "I3");
    CHECK(identify_fiber({0, 4}) == "I4");
    CHECK(identify_fiber({1, 2}) == "III");
    CHECK(identify_fiber({1, 3}) == "IV");
    for (const std::string tag :
         {"I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9", "II", "III", "IV"}) {
        CHECK(identify_fiber(fiber_class(tag)) == tag);
    }
    CHECK_THROWS_WITH_AS(identify_fiber({5, 0}), "class not in the table",
                         std::invalid_argument);
    CHECK_THROWS_AS(identify_fiber({0, 0}), std::invalid_argument);
}

TEST_SUITE_END();
