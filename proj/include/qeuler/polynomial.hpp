#pragma once

#include "qeuler/bigint.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qeuler {

/// Dense polynomial in one variable, index = exponent, trailing zeros trimmed.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient at `e`, zero outside the stored range.
    BigInt coeff(int e) const;
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// e.g. "1+4x+x^2", or with descending order "q^3+5q^2+10q+10".
    std::string render(char var, bool descending = false) const;

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Sparse polynomial in x and q: (x-exponent d, q-exponent m) -> coefficient.
class BivariatePolynomial {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, BigInt>;

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const BigInt& c);
    static BivariatePolynomial monomial(int d, int m, const BigInt& c = 1);
    static BivariatePolynomial x() { return monomial(1, 0); }
    static BivariatePolynomial q() { return monomial(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds `c` to the coefficient at (d, m); prunes zeros.
    void add_term(int d, int m, const BigInt& c);

    BivariatePolynomial& operator+=(const BivariatePolynomial& other);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    BivariatePolynomial scaled(const BigInt& c) const;

    /// P(x, q) -> P(qx, q)
    BivariatePolynomial substitute_x_qx() const;

    BigInt coeff_xq(int d, int m) const;
    /// The q-polynomial multiplying x^d.
    UnivariatePolynomial coeff_x(int d) const;
    /// P(x, 1)
    UnivariatePolynomial eval_q1() const;
    /// Sum of all coefficients, P(1, 1).
    BigInt mass() const;
    int x_degree() const;

    /// "1+x(q+3)+x^2": ascending in x, descending in q inside parentheses.
    std::string render() const;
    /// One "d m coefficient" line per term, sorted by (d, m).
    std::string to_lines() const;

    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

private:
    Terms terms_;
};

inline BivariatePolynomial add(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a + b; }
inline BivariatePolynomial mul(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a * b; }

struct ParseNote {
    std::size_t offset = 0;
    std::string message;
};

struct LenientParse {
    BivariatePolynomial value;
    std::vector<ParseNote> notes;
};

/// Strict parser for the canonical text; accepts optional whitespace and
/// LaTeX-style braced exponents. Throws std::invalid_argument.
BivariatePolynomial parse_polynomial(std::string_view text);

/// Like parse_polynomial, but tolerates a missing '+' between groups and
/// repeated q-exponents inside a group (summed), recording a note for each.
LenientParse parse_polynomial_lenient(std::string_view text);

/// Inverse of to_lines. Throws std::invalid_argument.
BivariatePolynomial parse_lines(std::string_view text);

} // namespace qeuler
