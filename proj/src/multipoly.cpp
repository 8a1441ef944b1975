#include "pw/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pw {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PolyParseError::PolyParseError(const std::string& what, std::size_t position)
    : std::invalid_argument("poly parse error at position " + std::to_string(position) +
                            ": " + what),
      position_(position) {}

MultiPoly::MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
    MultiPoly p(std::move(variables));
    p.add_term(Exponents(p.variables_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
    MultiPoly p(std::move(variables));
    Exponents e(p.variables_.size(), 0);
    e[static_cast<std::size_t>(p.variable_index(name))] = 1;
    p.add_term(e, Rational(1));
    return p;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Graded order: the last term has maximal total degree.
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

bool MultiPoly::is_homogeneous_of_degree(int d) const {
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    }
    return true;
}

int MultiPoly::variable_index(const std::string& name) const {
    const auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) {
        throw std::invalid_argument("unknown variable '" + name + "'");
    }
    return static_cast<int>(it - variables_.begin());
}

bool MultiPoly::depends_on(const std::string& name) const {
    const auto idx = static_cast<std::size_t>(variable_index(name));
    for (const auto& [e, c] : terms_) {
        if (e[idx] != 0) return true;
    }
    return false;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != variables_.size()) {
        throw std::invalid_argument("exponent vector length mismatch");
    }
    if (c == 0) return;
    const auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::require_same_variables(const MultiPoly& rhs) const {
    if (variables_ != rhs.variables_) {
        throw std::invalid_argument("polynomials over different variable lists");
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(variables_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    require_same_variables(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    require_same_variables(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    lhs.require_same_variables(rhs);
    MultiPoly r(lhs.variables_);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    MultiPoly r(p.variables());
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms()) r.add_term(e, c * pc);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return variables_ == rhs.variables_ && terms_ == rhs.terms_;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Reverse iteration prints the highest graded-lex term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        const bool negative = c < 0;
        const Rational abs_c = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string monomial;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            const int k = it->first[i];
            if (k == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += variables_[i];
            if (k > 1) monomial += "^" + std::to_string(k);
        }
        if (monomial.empty()) {
            out << to_string(abs_c);
        } else if (abs_c == 1) {
            out << monomial;
        } else {
            out << to_string(abs_c) << "*" << monomial;
        }
    }
    return out.str();
}

namespace {

// Recursive-descent parser over a tiny token stream.
class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& variables)
        : text_(text), variables_(variables) {}

    MultiPoly run() {
        MultiPoly p = parse_expr();
        skip_space();
        if (pos_ != text_.size()) {
            throw PolyParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_ + 1);
        }
        return p;
    }

private:
    MultiPoly zero() const { return MultiPoly(variables_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek_char(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept_char(char c) {
        if (!peek_char(c)) return false;
        ++pos_;
        return true;
    }

    MultiPoly parse_expr() {
        bool negative = false;
        if (accept_char('-')) {
            negative = true;
        } else {
            accept_char('+');
        }
        MultiPoly result = parse_term();
        if (negative) result = -result;
        for (;;) {
            if (accept_char('+')) {
                result += parse_term();
            } else if (accept_char('-')) {
                result -= parse_term();
            } else {
                return result;
            }
        }
    }

    MultiPoly parse_term() {
        MultiPoly result = parse_factor();
        while (accept_char('*')) result = result * parse_factor();
        return result;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_primary();
        if (!accept_char('^')) return base;
        skip_space();
        const std::size_t at = pos_;
        const Integer n = parse_integer("exponent");
        if (n < 0 || n > 64) throw PolyParseError("exponent out of range", at + 1);
        MultiPoly result = MultiPoly::constant(variables_, Rational(1));
        for (Integer i = 0; i < n; ++i) result = result * base;
        return result;
    }

    MultiPoly parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) throw PolyParseError("unexpected end of input", pos_ + 1);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_integer("number");
            if (accept_char('/')) {
                skip_space();
                const std::size_t at = pos_;
                const Integer den = parse_integer("denominator");
                if (den == 0) throw PolyParseError("zero denominator", at + 1);
                return MultiPoly::constant(variables_, make_rational(num, den));
            }
            return MultiPoly::constant(variables_, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                name += text_[pos_++];
            }
            if (std::find(variables_.begin(), variables_.end(), name) == variables_.end()) {
                throw PolyParseError("unknown variable '" + name + "'", at + 1);
            }
            return MultiPoly::variable(variables_, name);
        }
        if (accept_char('(')) {
            MultiPoly inner = parse_expr();
            if (!accept_char(')')) throw PolyParseError("expected ')'", pos_ + 1);
            return inner;
        }
        throw PolyParseError("unexpected '" + std::string(1, c) + "'", pos_ + 1);
    }

    Integer parse_integer(const std::string& what) {
        skip_space();
        const std::size_t at = pos_;
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits += text_[pos_++];
        }
        if (digits.empty()) throw PolyParseError("expected " + what, at + 1);
        return Integer(digits);
    }

    const std::string& text_;
    const std::vector<std::string>& variables_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(text, variables).run();
}

MultiPoly homogenize(const MultiPoly& p, int degree, const std::string& new_var) {
    if (!p.is_zero() && degree < p.total_degree()) {
        throw std::domain_error("homogenize: degree " + std::to_string(degree) +
                                " is smaller than the total degree " +
                                std::to_string(p.total_degree()));
    }
    std::vector<std::string> vars = p.variables();
    std::size_t idx;
    const auto it = std::find(vars.begin(), vars.end(), new_var);
    if (it != vars.end()) {
        if (p.depends_on(new_var)) {
            throw std::invalid_argument("homogenize: polynomial already depends on '" +
                                        new_var + "'");
        }
        idx = static_cast<std::size_t>(it - vars.begin());
    } else {
        idx = vars.size();
        vars.push_back(new_var);
    }
    MultiPoly r(vars);
    for (const auto& [e, c] : p.terms()) {
        Exponents ext = e;
        ext.resize(vars.size(), 0);
        const int d = std::accumulate(ext.begin(), ext.end(), 0);
        ext[idx] = degree - d;
        r.add_term(ext, c);
    }
    return r;
}

MultiPoly partial_derivative(const MultiPoly& p, const std::string& var) {
    const auto idx = static_cast<std::size_t>(p.variable_index(var));
    MultiPoly r(p.variables());
    for (const auto& [e, c] : p.terms()) {
        if (e[idx] == 0) continue;
        Exponents d = e;
        --d[idx];
        r.add_term(d, c * Rational(e[idx]));
    }
    return r;
}

MultiPoly graded_part(const MultiPoly& p, int d) {
    MultiPoly r(p.variables());
    for (const auto& [e, c] : p.terms()) {
        if (std::accumulate(e.begin(), e.end(), 0) == d) r.add_term(e, c);
    }
    return r;
}

MultiPoly substitute(const MultiPoly& p, const std::string& var, const Rational& value) {
    const auto idx = static_cast<std::size_t>(p.variable_index(var));
    MultiPoly r(p.variables());
    for (const auto& [e, c] : p.terms()) {
        Rational scaled = c;
        for (int k = 0; k < e[idx]; ++k) scaled *= value;
        Exponents cleared = e;
        cleared[idx] = 0;
        r.add_term(cleared, scaled);
    }
    return r;
}

MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& value) {
    if (p.variables() != value.variables()) {
        throw std::invalid_argument("substitute: value over a different variable list");
    }
    p.variable_index(var);
    std::vector<MultiPoly> images;
    images.reserve(p.variables().size());
    for (const auto& name : p.variables()) {
        images.push_back(name == var ? value : MultiPoly::variable(p.variables(), name));
    }
    return compose(p, images);
}

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& point) {
    if (point.size() != p.variables().size()) {
        throw std::invalid_argument("evaluate: point length does not match variable count");
    }
    Rational total(0);
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        }
        total += term;
    }
    return total;
}

MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& images) {
    if (images.size() != p.variables().size()) {
        throw std::invalid_argument("compose: one image per variable required");
    }
    const std::vector<std::string>& target =
        images.empty() ? p.variables() : images.front().variables();
    for (const auto& im : images) {
        if (im.variables() != target) {
            throw std::invalid_argument("compose: images over different variable lists");
        }
    }
    // Cached powers; exponents in this codebase are tiny.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    const MultiPoly one = MultiPoly::constant(target, Rational(1));
    MultiPoly total(target);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = c * one;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& pw_i = powers[i];
            if (pw_i.empty()) pw_i.push_back(one);
            while (static_cast<int>(pw_i.size()) <= e[i]) {
                pw_i.push_back(pw_i.back() * images[i]);
            }
            term = term * pw_i[static_cast<std::size_t>(e[i])];
        }
        total += term;
    }
    return total;
}

MultiPoly extend_variables(const MultiPoly& p, const std::vector<std::string>& variables) {
    std::vector<std::size_t> where(p.variables().size());
    for (std::size_t i = 0; i < p.variables().size(); ++i) {
        const auto it = std::find(variables.begin(), variables.end(), p.variables()[i]);
        if (it == variables.end()) {
            throw std::invalid_argument("extend_variables: '" + p.variables()[i] +
                                        "' missing from the target list");
        }
        where[i] = static_cast<std::size_t>(it - variables.begin());
    }
    MultiPoly r(variables);
    for (const auto& [e, c] : p.terms()) {
        Exponents ext(variables.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ext[where[i]] = e[i];
        r.add_term(ext, c);
    }
    return r;
}

MultiPoly restrict_variables(const MultiPoly& p, const std::vector<std::string>& variables) {
    std::vector<int> target(p.variables().size(), -1);
    for (std::size_t i = 0; i < p.variables().size(); ++i) {
        const auto it = std::find(variables.begin(), variables.end(), p.variables()[i]);
        if (it != variables.end()) target[i] = static_cast<int>(it - variables.begin());
    }
    MultiPoly r(variables);
    for (const auto& [e, c] : p.terms()) {
        Exponents cut(variables.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (target[i] < 0) {
                throw std::invalid_argument("restrict_variables: polynomial depends on '" +
                                            p.variables()[i] + "'");
            }
            cut[static_cast<std::size_t>(target[i])] = e[i];
        }
        r.add_term(cut, c);
    }
    return r;
}

}  // namespace pw
