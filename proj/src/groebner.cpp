#include "pw/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pw {

bool grevlex_less(const Exponents& a, const Exponents& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i > 0; --i) {
        const int diff = a[i - 1] - b[i - 1];
        if (diff != 0) return diff > 0;
    }
    return false;
}

std::pair<Exponents, Rational> leading_term(const MultiPoly& p) {
    if (p.is_zero()) throw std::domain_error("leading term of the zero polynomial");
    auto best = p.terms().begin();
    for (auto it = std::next(best); it != p.terms().end(); ++it) {
        if (grevlex_less(best->first, it->first)) best = it;
    }
    return {best->first, best->second};
}

namespace {

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Exponents quotient(const Exponents& num, const Exponents& den) {
    Exponents q(num.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = num[i] - den[i];
    return q;
}

MultiPoly monomial_times(const Exponents& e, const Rational& c, const MultiPoly& p) {
    MultiPoly r(p.variables());
    for (const auto& [pe, pc] : p.terms()) {
        Exponents sum(pe.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = pe[i] + e[i];
        r.add_term(sum, c * pc);
    }
    return r;
}

MultiPoly monic(const MultiPoly& p) {
    const auto [e, c] = leading_term(p);
    return (Rational(1) / c) * p;
}

bool is_nonzero_constant(const MultiPoly& p) {
    return !p.is_zero() && p.total_degree() == 0;
}

}  // namespace

MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& basis) {
    MultiPoly remainder(p.variables());
    while (!p.is_zero()) {
        const auto [pe, pc] = leading_term(p);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const auto [ge, gc] = leading_term(g);
            if (!divides(ge, pe)) continue;
            p -= monomial_times(quotient(pe, ge), pc / gc, g);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(pe, pc);
            MultiPoly lead(p.variables());
            lead.add_term(pe, pc);
            p -= lead;
        }
    }
    return remainder;
}

std::vector<MultiPoly> reduced_groebner_basis(std::vector<MultiPoly> gens) {
    std::vector<MultiPoly> basis;
    for (auto& g : gens) {
        if (!g.is_zero()) basis.push_back(monic(g));
    }
    if (basis.empty()) return {};
    const std::vector<std::string>& vars = basis.front().variables();
    const MultiPoly one = MultiPoly::constant(vars, Rational(1));
    // A nonzero constant anywhere settles the whole computation.
    for (const auto& g : basis) {
        if (is_nonzero_constant(g)) return {one};
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    }
    while (!pairs.empty()) {
        const auto [i, j] = pairs.back();
        pairs.pop_back();
        const auto [ei, ci] = leading_term(basis[i]);
        const auto [ej, cj] = leading_term(basis[j]);
        Exponents lcm(ei.size());
        bool coprime = true;
        for (std::size_t k = 0; k < lcm.size(); ++k) {
            lcm[k] = std::max(ei[k], ej[k]);
            if (ei[k] > 0 && ej[k] > 0) coprime = false;
        }
        // Buchberger's first criterion: coprime leading monomials reduce to 0.
        if (coprime) continue;
        const MultiPoly spoly = monomial_times(quotient(lcm, ei), Rational(1) / ci, basis[i]) -
                                monomial_times(quotient(lcm, ej), Rational(1) / cj, basis[j]);
        const MultiPoly reduced = normal_form(spoly, basis);
        if (reduced.is_zero()) continue;
        if (is_nonzero_constant(reduced)) return {one};
        basis.push_back(monic(reduced));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // Minimalize: drop anything whose leading monomial another element divides.
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto [ei, ci] = leading_term(basis[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto [ej, cj] = leading_term(basis[j]);
            if (!divides(ej, ei)) continue;
            // Equal leading monomials: keep the earlier element only.
            redundant = (ej != ei) || (j < i);
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Tail-reduce each element against the others for the unique reduced basis.
    std::vector<MultiPoly> reduced_basis;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        const MultiPoly r = normal_form(minimal[i], others);
        if (!r.is_zero()) reduced_basis.push_back(monic(r));
    }
    std::sort(reduced_basis.begin(), reduced_basis.end(),
              [](const MultiPoly& a, const MultiPoly& b) {
                  return grevlex_less(leading_term(a).first, leading_term(b).first);
              });
    return reduced_basis;
}

bool ideal_contains_one(const std::vector<MultiPoly>& gens) {
    const auto basis = reduced_groebner_basis(gens);
    return basis.size() == 1 && !basis.front().is_zero() && basis.front().total_degree() == 0;
}

}  // namespace pw
