#include "cadsel/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cadsel {

Polynomial Polynomial::constant(std::size_t nvars, BigInt c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
    return p;
}

Polynomial Polynomial::monomial(std::size_t nvars, Exponents e, BigInt c) {
    if (e.size() != nvars) throw std::invalid_argument("monomial: exponent arity mismatch");
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

void Polynomial::add_term(const Exponents& e, const BigInt& c) {
    if (e.size() != nvars_) throw std::invalid_argument("add_term: exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
    Polynomial r = Polynomial::constant(nvars_, 1);
    for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool Polynomial::canonical_less(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    GrlexDesc before;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return before(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

std::uint32_t Polynomial::degree_in(std::size_t v) const {
    if (v >= nvars_) throw std::out_of_range("variable index out of range");
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t t = 0;
        for (auto x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

std::vector<std::size_t> Polynomial::variables_mentioned() const {
    std::vector<bool> seen(nvars_, false);
    for (const auto& [e, c] : terms_)
        for (std::size_t v = 0; v < nvars_; ++v)
            if (e[v] > 0) seen[v] = true;
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars_; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

std::vector<Monomial> Polynomial::monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        std::uint64_t t = 0;
        for (auto x : e) t += x;
        out.push_back({e, c, t});
    }
    return out;
}

Polynomial Polynomial::derivative(std::size_t v) const {
    if (v >= nvars_) throw std::out_of_range("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents ne = e;
        ne[v] -= 1;
        r.add_term(ne, c * e[v]);
    }
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t v) const {
    std::uint32_t d = degree_in(v);
    std::vector<Polynomial> out(d + 1, Polynomial(nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        std::uint32_t k = ne[v];
        ne[v] = 0;
        out[k].add_term(ne, c);
    }
    return out;
}

Polynomial Polynomial::leading_coefficient_in(std::size_t v) const {
    auto coeffs = coefficients_in(v);
    return coeffs.back();
}

BigInt Polynomial::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return *this;
    BigInt g = content();
    Polynomial r(nvars_);
    bool negate = terms_.begin()->second < 0;
    for (const auto& [e, c] : terms_) {
        BigInt q = c / g;
        r.terms_.emplace(e, negate ? -q : q);
    }
    return r;
}

std::optional<Polynomial> Polynomial::divided_exactly_by(const Polynomial& d) const {
    if (nvars_ != d.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(nvars_);
    const auto& dlead = *d.terms_.begin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.begin();
        // leading term of the quotient step: rlead / dlead
        Exponents qe(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (rlead.first[i] < dlead.first[i]) return std::nullopt;
            qe[i] = rlead.first[i] - dlead.first[i];
        }
        BigInt qc = rlead.second / dlead.second;
        if (qc * dlead.second != rlead.second) return std::nullopt;
        Polynomial step = Polynomial::monomial(nvars_, qe, qc);
        quot = quot + step;
        rem = rem - step * d;
    }
    return quot;
}

Polynomial Polynomial::substitute(std::size_t v, const BigInt& value) const {
    if (v >= nvars_) throw std::out_of_range("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        BigInt pw = 1;
        for (std::uint32_t i = 0; i < e[v]; ++i) pw *= value;
        Exponents ne = e;
        ne[v] = 0;
        r.add_term(ne, c * pw);
    }
    return r;
}

BigInt Polynomial::evaluate(std::span<const BigInt> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point arity mismatch");
    BigInt total = 0;
    for (const auto& [e, c] : terms_) {
        BigInt t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
        total += t;
    }
    return total;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
    if (names.size() != nvars_) throw std::invalid_argument("variable name arity mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x > 0; });
        bool coeff_shown = (a != 1) || !any_var;
        if (coeff_shown) out += a.str();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) out += "*";
            out += names[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
            need_star = true;
        }
    }
    return out;
}

namespace {

struct Token {
    enum Kind { Integer, Name, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;  // 1-based
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t pos = i_ + 1;
        if (i_ >= s_.size()) return {Token::End, "", pos};
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{Token::Integer, s_.substr(i_, j - i_), pos};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            Token t{Token::Name, s_.substr(i_, j - i_), pos};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Plus, "+", pos};
            case '-': return {Token::Minus, "-", pos};
            case '*': return {Token::Star, "*", pos};
            case '^': return {Token::Caret, "^", pos};
            case '(': return {Token::LParen, "(", pos};
            case ')': return {Token::RParen, ")", pos};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, std::span<const std::string> vars)
        : lexer_(text), vars_(vars) {
        cur_ = lexer_.next();
    }

    Polynomial parse() {
        Polynomial p = expression();
        if (cur_.kind != Token::End)
            throw ParseError("unexpected trailing input '" + cur_.text + "'", cur_.pos);
        return p;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    Polynomial expression() {
        bool neg = false;
        if (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            neg = cur_.kind == Token::Minus;
            advance();
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool sub = cur_.kind == Token::Minus;
            advance();
            Polynomial t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (cur_.kind == Token::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (cur_.kind == Token::Caret) {
            advance();
            if (cur_.kind != Token::Integer)
                throw ParseError("expected positive integer exponent", cur_.pos);
            if (cur_.text == "0" || cur_.text.find_first_not_of('0') == std::string::npos)
                throw ParseError("expected positive integer exponent", cur_.pos);
            if (cur_.text.size() > 6)
                throw ParseError("exponent too large", cur_.pos);
            std::uint32_t k = static_cast<std::uint32_t>(std::stoul(cur_.text));
            advance();
            return base.pow(k);
        }
        return base;
    }

    Polynomial atom() {
        switch (cur_.kind) {
            case Token::Integer: {
                BigInt c(cur_.text);
                advance();
                return Polynomial::constant(vars_.size(), c);
            }
            case Token::Name: {
                auto it = std::find(vars_.begin(), vars_.end(), cur_.text);
                if (it == vars_.end())
                    throw ParseError("unknown variable '" + cur_.text + "'", cur_.pos);
                Exponents e(vars_.size(), 0);
                e[static_cast<std::size_t>(it - vars_.begin())] = 1;
                advance();
                return Polynomial::monomial(vars_.size(), std::move(e), 1);
            }
            case Token::LParen: {
                advance();
                Polynomial p = expression();
                if (cur_.kind != Token::RParen)
                    throw ParseError("expected ')'", cur_.pos);
                advance();
                return p;
            }
            default:
                throw ParseError("expected a coefficient, variable, or '('", cur_.pos);
        }
    }

    Lexer lexer_;
    std::span<const std::string> vars_;
    Token cur_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::span<const std::string> variables) {
    for (std::size_t i = 0; i < variables.size(); ++i)
        for (std::size_t j = i + 1; j < variables.size(); ++j)
            if (variables[i] == variables[j])
                throw std::invalid_argument("duplicate variable name '" + variables[i] + "'");
    return Parser(text, variables).parse();
}

}  // namespace cadsel
