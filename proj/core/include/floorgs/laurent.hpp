#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace floorgs {

/// Raised when an exact coefficient operation would leave the int64 range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Raised when an exact division leaves a nonzero remainder.
class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
} // namespace checked

/// Exact rational number with checked int64 numerator/denominator.
/// The denominator is always positive and the fraction is reduced.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// Exact square root if both numerator and denominator are perfect squares.
    bool exact_sqrt(Rational& out) const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;

    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Laurent polynomial in q with half-integer exponents and integer
/// coefficients. Exponents are stored doubled: key k stands for q^(k/2).
class SymLaurent {
public:
    using Terms = std::map<int, std::int64_t>;

    SymLaurent() = default;
    SymLaurent(std::int64_t c); // NOLINT(google-explicit-constructor)

    /// c * q^(doubled_exp / 2)
    static SymLaurent monomial(std::int64_t c, int doubled_exp);
    static SymLaurent from_terms(const Terms& terms);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Doubled exponent of the leading / trailing term. Undefined on zero.
    int max_exp2() const;
    int min_exp2() const;

    std::int64_t coeff2(int doubled_exp) const;
    /// Coefficient of q^exp for an integer exponent.
    std::int64_t coeff(int exp) const { return coeff2(2 * exp); }

    /// coeff(e) == coeff(-e) for every e.
    bool is_palindromic() const;
    bool has_integer_exponents() const;
    bool has_nonnegative_coeffs() const;

    /// p(q) -> p(q^k); k must be positive.
    SymLaurent dilate(int k) const;

    SymLaurent& operator+=(const SymLaurent& o);
    SymLaurent& operator-=(const SymLaurent& o);
    SymLaurent& operator*=(const SymLaurent& o);

    friend SymLaurent operator+(SymLaurent a, const SymLaurent& b) { return a += b; }
    friend SymLaurent operator-(SymLaurent a, const SymLaurent& b) { return a -= b; }
    friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b);
    friend SymLaurent operator-(const SymLaurent& a);
    friend bool operator==(const SymLaurent&, const SymLaurent&) = default;

    SymLaurent scaled(std::int64_t c) const;

    /// Divide every coefficient by d; throws InexactDivision unless all are divisible.
    SymLaurent divided_exactly(std::int64_t d) const;

    /// Canonical serialization, e.g. `1*q^1 + 10*q^0 + 1*q^-1`.
    std::string to_string() const;

    /// Human-oriented form used in tables, e.g. `q + 10 + q^-1`.
    std::string to_pretty() const;

private:
    void add_term(int e2, std::int64_t c);

    Terms terms_;
};

/// Quantum integer [n](q) = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}).
SymLaurent qint(int n);

/// {n}(q) = (q^{n/2} + q^{-n/2}) / (q^{1/2} + q^{-1/2}); exact only for odd n.
SymLaurent qbrace(int n);

/// [n]^2 = [n](q)^2
SymLaurent bracket_sq(int n);

/// [n]_2 = [n](q^2)
SymLaurent bracket_sub2(int n);

/// Exact quotient by long division over descending exponents.
SymLaurent exact_div(const SymLaurent& num, const SymLaurent& den);

/// [w1][w2][w1+w2] / [2], the weight of two edges paired at a common vertex.
SymLaurent e2_factor(int w1, int w2);

/// Evaluate at q = q0. Half-integer exponents need an exact square root of q0.
Rational eval(const SymLaurent& p, const Rational& q0);

/// Coefficient of q^(top_deg - i).
std::int64_t codeg_coeff(const SymLaurent& p, int top_deg, int i);

} // namespace floorgs
