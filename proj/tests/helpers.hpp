#pragma once

// Shared helpers for the unit tests: deterministic random rationals,
// polynomials, and invertible rational matrices.

#include "pw/linalg.hpp"
#include "pw/multipoly.hpp"

#include <random>
#include <string>
#include <vector>

namespace pwtest {

inline pw::Rational random_rational(std::mt19937_64& rng, int num_range = 5, int den_range = 3) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return pw::make_rational(num(rng), den(rng));
}

inline pw::MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                                 int max_terms = 6, int max_degree = 3) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> exponent(0, max_degree);
    pw::MultiPoly p(vars);
    const int n = term_count(rng);
    for (int t = 0; t < n; ++t) {
        pw::Exponents e(vars.size(), 0);
        int budget = max_degree;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const int k = std::min(exponent(rng), budget);
            e[i] = k;
            budget -= k;
        }
        p.add_term(e, random_rational(rng));
    }
    return p;
}

// Invertible square matrix with small rational entries.
inline pw::QMatrix random_invertible_matrix(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        pw::QMatrix m(n, std::vector<pw::Rational>(n));
        for (auto& row : m) {
            for (auto& v : row) v = random_rational(rng, 3, 2);
        }
        if (pw::matrix_rank(m) == static_cast<int>(n)) return m;
    }
}

// Linear coordinate change x_i := sum_j m[i][j] x_j as substitution images.
inline std::vector<pw::MultiPoly> linear_images(const pw::QMatrix& m,
                                                const std::vector<std::string>& vars) {
    std::vector<pw::MultiPoly> images;
    for (std::size_t i = 0; i < m.size(); ++i) {
        pw::MultiPoly form(vars);
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            pw::Exponents e(vars.size(), 0);
            e[j] = 1;
            form.add_term(e, m[i][j]);
        }
        images.push_back(form);
    }
    return images;
}

}  // namespace pwtest
