// Exact linear algebra, univariate helpers, and the Groebner routine that
// back the geometry modules.

#include "pw/groebner.hpp"
#include "pw/linalg.hpp"
#include "pw/univariate.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace pw;

namespace {
Rational q(long long n, long long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_SUITE_BEGIN("support");

TEST_CASE("rank and kernel of small exact matrices") {
    CHECK(matrix_rank({}) == 0);
    CHECK(matrix_rank({{q(0), q(0)}, {q(0), q(0)}}) == 0);
    CHECK(matrix_rank({{q(1), q(2)}, {q(2), q(4)}}) == 1);
    CHECK(matrix_rank({{q(1), q(2)}, {q(3), q(4)}}) == 2);
    CHECK(matrix_rank({{q(1, 2), q(1, 3), q(0)}, {q(3), q(2), q(0)}}) == 1);
    CHECK(matrix_rank({{q(1, 2), q(1, 3), q(0)}, {q(3), q(1), q(0)}}) == 2);

    const auto k = kernel_basis({{q(1), q(1), q(1)}});
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(v[0] + v[1] + v[2] == 0);

    const auto k2 = kernel_basis({{q(1), q(2)}, {q(2), q(4)}});
    REQUIRE(k2.size() == 1);
    CHECK(k2[0][0] + 2 * k2[0][1] == 0);

    CHECK(kernel_basis({{q(1), q(0)}, {q(0), q(1)}}).empty());
}

TEST_CASE("congruence diagonalization preserves the form and exposes signature") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 1 + trial % 4;
        QMatrix m(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                m[i][j] = pwtest::random_rational(rng);
                m[j][i] = m[i][j];
            }
        }
        const auto res = congruence_diagonalize(m);
        REQUIRE(res.pivots.size() == n);
        // P m P^T must equal diag(pivots).
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational entry(0);
                for (std::size_t a = 0; a < n; ++a) {
                    for (std::size_t b = 0; b < n; ++b) {
                        entry += res.transform[i][a] * m[a][b] * res.transform[j][b];
                    }
                }
                CHECK(entry == (i == j ? res.pivots[i] : Rational(0)));
            }
        }
        int nonzero = 0;
        for (const auto& p : res.pivots) {
            if (p != 0) ++nonzero;
        }
        CHECK(nonzero == matrix_rank(m));
    }

    // Hyperbolic plane: indefinite, so one pivot of each sign.
    const auto hyp = congruence_diagonalize({{q(0), q(1)}, {q(1), q(0)}});
    CHECK(((hyp.pivots[0] > 0) != (hyp.pivots[1] > 0)));

    CHECK_THROWS_AS(congruence_diagonalize({{q(0), q(1)}, {q(2), q(0)}}), std::invalid_argument);
}

TEST_CASE("sparse echelon rank agrees with dense rank") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> fill(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 2 + trial % 6, cols = 2 + (trial * 3) % 7;
        QMatrix dense(rows, std::vector<Rational>(cols, Rational(0)));
        SparseEchelon sparse;
        for (std::size_t i = 0; i < rows; ++i) {
            SparseEchelon::SparseRow row;
            for (std::size_t j = 0; j < cols; ++j) {
                if (fill(rng) != 0) continue;
                const Rational v = pwtest::random_rational(rng);
                if (v == 0) continue;
                dense[i][j] = v;
                row.emplace_back(static_cast<int>(j), v);
            }
            sparse.insert(std::move(row));
        }
        CHECK(sparse.rank() == matrix_rank(dense));
    }
}

TEST_CASE("univariate degree, order at zero, gcd") {
    using U = UniPoly;
    const U z;  // zero polynomial
    CHECK(degree(z) == -1);

    U p = {q(0), q(0), q(3), q(1)};  // 3 t^2 + t^3
    CHECK(degree(p) == 3);
    CHECK(order_at_zero(p) == 2);

    const U a = {q(-1), q(0), q(1)};  // t^2 - 1
    const U b = {q(1), q(1)};         // t + 1
    const U g = unipoly_gcd(a, b);
    // gcd is monic: t + 1.
    REQUIRE(degree(g) == 1);
    CHECK(g[0] == 1);
    CHECK(g[1] == 1);

    const U c = {q(0), q(0), q(1)};  // t^2
    const U d = {q(0), q(2)};        // 2 t
    const U g2 = unipoly_gcd(c, d);
    REQUIRE(degree(g2) == 1);
    CHECK(g2[0] == 0);
    CHECK(g2[1] == 1);

    CHECK(degree(unipoly_gcd(z, z)) == -1);
    CHECK(degree(unipoly_gcd(b, z)) == 1);
    CHECK(is_monomial(c));
    CHECK_FALSE(is_monomial(a));
}

TEST_CASE("groebner reduction certifies smooth and singular ideals") {
    const std::vector<std::string> vars = {"x1", "x2", "x3"};
    const auto make = [&](const std::string& s) { return parse_poly(s, vars); };

    // The unit ideal, reached only through S-polynomial reduction.
    SUBCASE("unit ideal") {
        const auto basis = reduced_groebner_basis({make("x1*x2 - 1"), make("x1")});
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == make("1"));
        CHECK(ideal_contains_one({make("x1*x2 - 1"), make("x1")}));
    }

    SUBCASE("proper monomial ideal") {
        const auto basis = reduced_groebner_basis({make("x1^2"), make("x1*x2")});
        CHECK_FALSE(ideal_contains_one({make("x1^2"), make("x1*x2")}));
        REQUIRE(basis.size() == 2);
    }

    SUBCASE("textbook pair") {
        // Reduced basis of (x1^2 + x2, x1*x2 + 1) under graded reverse lex.
        const auto basis =
            reduced_groebner_basis({make("x1^2 + x2"), make("x1*x2 + 1")});
        CHECK_FALSE(ideal_contains_one({make("x1^2 + x2"), make("x1*x2 + 1")}));
        // The S-polynomial x2*(x1^2 + x2) - x1*(x1*x2 + 1) reduces to x2^2 - x1,
        // which completes the basis.
        REQUIRE(basis.size() == 3);
        bool found = false;
        for (const auto& g : basis) {
            if (g == make("x2^2 - x1")) found = true;
        }
        CHECK(found);
    }

    SUBCASE("singular surface has a proper jacobian ideal") {
        const MultiPoly f = make("x1^3 + x2^2 + x3^2");
        const std::vector<MultiPoly> gens = {f, partial_derivative(f, "x1"),
                                             partial_derivative(f, "x2"),
                                             partial_derivative(f, "x3")};
        CHECK_FALSE(ideal_contains_one(gens));
    }

    SUBCASE("smooth affine cubic has the unit jacobian ideal") {
        const MultiPoly f = make("x1*x2*x3 + x1 + x2 + 1");
        const std::vector<MultiPoly> gens = {f, partial_derivative(f, "x1"),
                                             partial_derivative(f, "x2"),
                                             partial_derivative(f, "x3")};
        CHECK(ideal_contains_one(gens));
    }

    SUBCASE("zero generators give the zero ideal") {
        CHECK_FALSE(ideal_contains_one({MultiPoly(vars)}));
        CHECK(reduced_groebner_basis({MultiPoly(vars)}).empty());
    }
}

TEST_SUITE_END();
