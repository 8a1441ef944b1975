#include "pw/singularity.hpp"

#include "helpers.hpp"
#include "pw/cubic_surface.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <string>

using namespace pw;

namespace {

const std::vector<std::string> kChartVars = {"x0", "x1", "x2"};

MultiPoly chart_poly(const std::string& text) { return parse_poly(text, kChartVars); }

// A chart built directly from a germ, bypassing vertex_chart.
VertexChart synthetic_chart(const std::string& text) {
    VertexChart chart;
    chart.vertex = kVertexX3;
    chart.local_vars = kChartVars;
    chart.chart_poly = chart_poly(text);
    chart.f2 = graded_part(chart.chart_poly, 2);
    chart.f3 = graded_part(chart.chart_poly, 3);
    return chart;
}

}  // namespace

TEST_SUITE_BEGIN("singularity");

TEST_CASE("hessian corank of small germs") {
    CHECK(hessian_corank(chart_poly("x1*x2 + x0^2")) == 0);
    CHECK(hessian_corank(chart_poly("x1*x2 + x0^3")) == 1);
    CHECK(hessian_corank(chart_poly("x1^2 + x0^3")) == 2);
    CHECK(hessian_corank(chart_poly("x0^3 + x1^3 + x2^3")) == 3);
    CHECK(hessian_corank(chart_poly("x0^2 + x1^2 + x2^2")) == 0);
}

TEST_CASE("milnor numbers of model germs") {
    CHECK(milnor_number(chart_poly("x0^2 + x1^2 + x2^2")) == 1);
    for (int k = 1; k <= 4; ++k) {
        const MultiPoly g =
            chart_poly("x1*x2 + x0^" + std::to_string(k + 1));
        CHECK(milnor_number(g) == k);
    }
    // Two-variable germs work the same way.
    CHECK(milnor_number(parse_poly("x1^2 + x2^3", {"x1", "x2"})) == 2);
    CHECK(milnor_number(parse_poly("x1^3 + x2^3", {"x1", "x2"})) == 4);
    // Branch orders {1,3} against the quadratic part x1*x2.
    CHECK(milnor_number(chart_poly("x1*x2 + x2*x0^2 + x1^3")) == 5);
}

TEST_CASE("milnor number rejects bad input") {
    CHECK_THROWS_AS(milnor_number(chart_poly("x1*x2 + 1")), std::invalid_argument);
    CHECK_THROWS_AS(milnor_number(chart_poly("x0 + x1*x2")), std::invalid_argument);
    // Singular along the whole x0 axis: no finite answer.
    CHECK_THROWS_WITH_AS(milnor_number(chart_poly("x1*x2")),
                         "non-isolated or cap exceeded", std::runtime_error);
    CHECK_THROWS_WITH_AS(milnor_number(chart_poly("0")),
                         "non-isolated or cap exceeded", std::runtime_error);
}

TEST_CASE("milnor number is invariant under linear changes of coordinates") {
    std::mt19937_64 rng(23);
    const std::vector<MultiPoly> germs = {
        chart_poly("x1*x2 + x0^2"),
        chart_poly("x1*x2 + x0^3"),
        chart_poly("x1*x2 + x2*x0^2 + x1^2*x0"),
    };
    for (const auto& g : germs) {
        const int mu = milnor_number(g);
        for (int trial = 0; trial < 5; ++trial) {
            const QMatrix m = pwtest::random_invertible_matrix(rng, 3);
            const MultiPoly moved = compose(g, pwtest::linear_images(m, kChartVars));
            CHECK(milnor_number(moved) == mu);
        }
    }
}

TEST_CASE("normal-form route on model cubic germs") {
    const auto run = [](const std::string& text) {
        const MultiPoly g = chart_poly(text);
        return bruce_wall_classify(graded_part(g, 2), graded_part(g, 3));
    };

    SUBCASE("corank 0 is A_1 regardless of the cubic part") {
        const BruceWallResult res = run("x1*x2 - 2*x0^2 + x0^3");
        CHECK(res.corank == 0);
        CHECK(res.k == 1);
    }
    SUBCASE("cubic part off the kernel line gives A_2") {
        const BruceWallResult res = run("x1*x2 + x0^3");
        CHECK(res.corank == 1);
        CHECK(res.k == 2);
        CHECK_FALSE(res.branch_orders.has_value());
    }
    SUBCASE("branch orders 1,1 give A_3") {
        const BruceWallResult res = run("x1*x2 + x1*x0^2 + x2*x0^2");
        CHECK(res.k == 3);
        REQUIRE(res.branch_orders.has_value());
        CHECK(*res.branch_orders == std::pair<int, int>{1, 1});
    }
    SUBCASE("branch orders 1,2 give A_4") {
        const BruceWallResult res = run("x1*x2 + x1*x0^2 + x2^2*x0");
        CHECK(res.k == 4);
        CHECK(*res.branch_orders == std::pair<int, int>{1, 2});
    }
    SUBCASE("branch orders 1,3 give A_5") {
        const BruceWallResult res = run("x1*x2 + x2*x0^2 + x1^3");
        CHECK(res.k == 5);
        CHECK(*res.branch_orders == std::pair<int, int>{1, 3});
        CHECK(milnor_number(chart_poly("x1*x2 + x2*x0^2 + x1^3")) == 5);
    }
    SUBCASE("quadratic part anisotropic over the rationals stays undecided") {
        const BruceWallResult res = run("x1^2 + x2^2 + x0^3");
        CHECK(res.corank == 1);
        CHECK(res.k == 0);
    }
    SUBCASE("branch orders 2,2 stay undecided; the germ is not isolated") {
        const BruceWallResult res = run("x1*x2 + x1^2*x0 + x2^2*x0");
        CHECK(res.k == 0);
        CHECK_THROWS_AS(milnor_number(chart_poly("x1*x2 + x1^2*x0 + x2^2*x0")),
                        std::runtime_error);
    }
    SUBCASE("corank at least 2 is out of the route's scope") {
        CHECK(run("x1^2 + x0^3 + x2^3").corank == 2);
        CHECK(run("x1^2 + x0^3 + x2^3").k == 0);
        CHECK(run("x0^3 + x1^3 + x2^3").corank == 3);
    }
}

TEST_CASE("classify on synthetic charts") {
    SUBCASE("anisotropic quadratic part falls back to the Milnor route") {
        const SingularityReport report = classify(synthetic_chart("x1^2 + x2^2 + x0^3"));
        CHECK(report.corank == 1);
        CHECK(report.milnor == 2);
        CHECK(report.ade_k == 2);
        CHECK_FALSE(report.normal_form.has_value());
        CHECK(ade_label(report) == "A_2");
    }
    SUBCASE("corank 2 or more is rejected") {
        CHECK_THROWS_WITH_AS(classify(synthetic_chart("x1^2 + x0^3 + x2^3")),
                             "non-A singularity, out of scope", std::runtime_error);
        CHECK_THROWS_WITH_AS(classify(synthetic_chart("x0^3 + x1^3 + x2^3")),
                             "non-A singularity, out of scope", std::runtime_error);
    }
    SUBCASE("smooth chart origins are rejected") {
        CHECK_THROWS_AS(classify(synthetic_chart("x1 + x1*x2 + x0^2")),
                        std::invalid_argument);
    }
}

TEST_CASE("the thirteen singular vertex charts classify as expected") {
    const CaseRegistry& reg = shipped_registry();
    int charts_seen = 0;
    for (const auto& record : reg.cases) {
        const ProjectiveCubic cubic = make_case(record);
        const auto charts = singular_points_at_infinity(cubic);
        int mu_total = 0;
        for (std::size_t i = 0; i < charts.size(); ++i) {
            const SingularityReport report = classify(charts[i]);
            ++charts_seen;
            mu_total += report.milnor;
            CHECK(report.milnor == record.expected_singularities[i].milnor);
            CHECK(report.ade_k == report.milnor);
            CHECK(report.vertex == charts[i].vertex);
            // A_1 exactly at the nondegenerate quadratic parts.
            CHECK((report.corank == 0) == (report.milnor == 1));
        }
        // Total boundary Milnor number stays within the geometric range.
        CHECK(mu_total >= 0);
        CHECK(mu_total <= 4);
    }
    CHECK(charts_seen == 13);
}

TEST_CASE("normal-form details for the deeper chart singularities") {
    const CaseRegistry& reg = shipped_registry();
    const auto single_report = [&](const std::string& tag) {
        const auto charts = singular_points_at_infinity(make_case(reg.find(tag)));
        REQUIRE(charts.size() == 1);
        return classify(charts.front());
    };

    const SingularityReport d7 = single_report("III(D7)");
    CHECK(d7.ade_k == 3);
    REQUIRE(d7.normal_form.has_value());
    CHECK(d7.normal_form->branch_orders == std::pair<int, int>{1, 1});

    const SingularityReport d8 = single_report("III(D8)");
    CHECK(d8.ade_k == 4);
    REQUIRE(d8.normal_form.has_value());
    CHECK(d8.normal_form->branch_orders == std::pair<int, int>{1, 2});

    const SingularityReport v_degen = single_report("V_degen");
    CHECK(v_degen.ade_k == 2);
    REQUIRE(v_degen.normal_form.has_value());
    CHECK(v_degen.normal_form->k == 2);
}

TEST_CASE("chart classification is stable under admissible parameter changes") {
    const CaseRegistry& reg = shipped_registry();
    std::mt19937_64 rng(67);
    for (const auto& record : reg.cases) {
        for (int trial = 0; trial < 3; ++trial) {
            std::map<std::string, Rational> params;
            for (const auto& name : record.parameters) {
                Rational v = pwtest::random_rational(rng, 3, 2);
                if (std::find(record.nonzero.begin(), record.nonzero.end(), name) !=
                        record.nonzero.end() &&
                    v == 0) {
                    v = 2;
                }
                params[name] = v;
            }
            const auto charts = singular_points_at_infinity(make_case(record, params));
            REQUIRE(charts.size() == record.expected_singularities.size());
            for (std::size_t i = 0; i < charts.size(); ++i) {
                CHECK(classify(charts[i]).milnor ==
                      record.expected_singularities[i].milnor);
            }
        }
    }
}

TEST_SUITE_END();
