// Exact sparse multivariate polynomials over arbitrary-precision integers.
// Terms live in a map keyed by exponent vector under a graded-lex order
// (total degree first, then lexicographic), leading term first, which makes
// every traversal and serialization deterministic.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cadsel {

using BigInt = boost::multiprecision::cpp_int;
using Exponents = std::vector<std::uint32_t>;

// true when a precedes b, i.e. a is graded-lex *greater* (descending map).
struct GrlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        std::uint64_t ta = 0, tb = 0;
        for (auto e : a) ta += e;
        for (auto e : b) tb += e;
        if (ta != tb) return ta > tb;
        return a > b;  // lexicographic on the exponent vector
    }
};

struct Monomial {
    Exponents exponents;
    BigInt coefficient;
    std::uint64_t total_degree = 0;
};

class Polynomial {
public:
    using TermMap = std::map<Exponents, BigInt, GrlexDesc>;

    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, BigInt c);
    // coefficient * prod(v_i ^ e_i) for a single exponent vector
    static Polynomial monomial(std::size_t nvars, Exponents e, BigInt c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Combines with any existing term; drops the term if the sum is zero.
    void add_term(const Exponents& e, const BigInt& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial pow(std::uint32_t k) const;
    bool operator==(const Polynomial& o) const = default;

    // Total order on same-arity polynomials; only used to keep sets canonical.
    static bool canonical_less(const Polynomial& a, const Polynomial& b);

    // Max exponent of v over all terms; 0 for the zero polynomial.
    std::uint32_t degree_in(std::size_t v) const;
    // Max total degree over terms; 0 for the zero polynomial.
    std::uint64_t total_degree() const;
    bool mentions(std::size_t v) const { return degree_in(v) > 0; }
    std::vector<std::size_t> variables_mentioned() const;

    // One Monomial per stored term, leading term first.
    std::vector<Monomial> monomials() const;

    Polynomial derivative(std::size_t v) const;
    // Coefficient polynomials of v^0 .. v^deg (all with the same arity, free
    // of v). size() == degree_in(v) + 1; for the zero polynomial size 1.
    std::vector<Polynomial> coefficients_in(std::size_t v) const;
    Polynomial leading_coefficient_in(std::size_t v) const;

    // gcd of |coefficients|; 0 for the zero polynomial.
    BigInt content() const;
    // Divided by content, then negated if the leading coefficient is negative.
    Polynomial primitive_part() const;

    // Quotient when the division is exact, nullopt otherwise.
    std::optional<Polynomial> divided_exactly_by(const Polynomial& d) const;

    // Substitute an integer value for variable v (arity unchanged).
    Polynomial substitute(std::size_t v, const BigInt& value) const;
    BigInt evaluate(std::span<const BigInt> point) const;

    std::string to_string(std::span<const std::string> names) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

// Thrown by parse_polynomial with a 1-based character position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar: integer coefficients, + - *, ^ with positive integer literal
// exponents, optional parentheses, whitespace insignificant.
Polynomial parse_polynomial(const std::string& text, std::span<const std::string> variables);

}  // namespace cadsel
