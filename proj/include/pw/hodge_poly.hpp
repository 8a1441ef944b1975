#pragma once

// Two-variable Laurent polynomials in q and t with integer coefficients,
// as used for the weight and perversity refinements of cohomology.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace pw {

// Display and iteration order: descending q exponent, then ascending t.
struct HodgeTermOrder {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    }
};

class HodgePolynomial {
public:
    using TermMap = std::map<std::pair<int, int>, std::int64_t, HodgeTermOrder>;

    HodgePolynomial() = default;

    // Adds c * q^q_exp * t^t_exp; zero totals are erased.
    void add(int q_exp, int t_exp, std::int64_t c) {
        if (c == 0) return;
        const auto key = std::make_pair(q_exp, t_exp);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else if ((it->second += c) == 0) {
            terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t coefficient(int q_exp, int t_exp) const {
        const auto it = terms_.find({q_exp, t_exp});
        return it == terms_.end() ? 0 : it->second;
    }

    // The same polynomial multiplied by q^shift.
    HodgePolynomial shifted_q(int shift) const {
        HodgePolynomial out;
        for (const auto& [key, c] : terms_) out.add(key.first + shift, key.second, c);
        return out;
    }

    // Value at q = t = 1.
    std::int64_t coefficient_sum() const {
        std::int64_t total = 0;
        for (const auto& [key, c] : terms_) total += c;
        return total;
    }

    bool operator==(const HodgePolynomial& other) const { return terms_ == other.terms_; }
    bool operator!=(const HodgePolynomial& other) const { return !(*this == other); }

    // Plain text, e.g. "1 + 4*q^-1*t^2 + q^-2*t^2".
    std::string str() const { return render(false); }

    // LaTeX math, e.g. "1 + 4q^{-1}t^2 + q^{-2}t^2".
    std::string latex() const { return render(true); }

private:
    static std::string power(const std::string& var, int exp, bool tex) {
        if (exp == 1) return var;
        std::string e = std::to_string(exp);
        if (tex && (exp < 0 || exp > 9)) e = "{" + e + "}";
        return var + "^" + e;
    }

    std::string render(bool tex) const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            const auto [qe, te] = key;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            const std::int64_t mag = c < 0 ? -c : c;
            std::string vars;
            if (qe != 0) vars += power("q", qe, tex);
            if (te != 0) {
                if (!vars.empty() && !tex) vars += "*";
                vars += power("t", te, tex);
            }
            if (vars.empty()) {
                out << mag;
            } else if (mag == 1) {
                out << vars;
            } else {
                out << mag << (tex ? "" : "*") << vars;
            }
        }
        return out.str();
    }

    TermMap terms_;
};

}  // namespace pw
