#include "floorgs/laurent.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace floorgs {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

} // namespace checked

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0)
        throw std::domain_error("zero denominator");
    if (d < 0) {
        n = checked::sub(0, n);
        d = checked::sub(0, d);
    }
    const std::int64_t g = std::gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

namespace {

bool exact_isqrt(std::int64_t v, std::int64_t& root)
{
    if (v < 0)
        return false;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    root = r;
    return r * r == v;
}

} // namespace

bool Rational::exact_sqrt(Rational& out) const
{
    std::int64_t rn, rd;
    if (!exact_isqrt(num_, rn) || !exact_isqrt(den_, rd))
        return false;
    out = Rational(rn, rd);
    return true;
}

Rational operator+(const Rational& a, const Rational& b)
{
    return {checked::add(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)),
            checked::mul(a.den_, b.den_)};
}

Rational operator-(const Rational& a, const Rational& b)
{
    return {checked::sub(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)),
            checked::mul(a.den_, b.den_)};
}

Rational operator*(const Rational& a, const Rational& b)
{
    return {checked::mul(a.num_, b.num_), checked::mul(a.den_, b.den_)};
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_ == 0)
        throw std::domain_error("division by zero");
    return {checked::mul(a.num_, b.den_), checked::mul(a.den_, b.num_)};
}

std::string Rational::to_string() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

// -------------------------------------------------------------- SymLaurent

SymLaurent::SymLaurent(std::int64_t c)
{
    if (c != 0)
        terms_.emplace(0, c);
}

SymLaurent SymLaurent::monomial(std::int64_t c, int doubled_exp)
{
    SymLaurent p;
    p.add_term(doubled_exp, c);
    return p;
}

SymLaurent SymLaurent::from_terms(const Terms& terms)
{
    SymLaurent p;
    for (const auto& [e, c] : terms)
        p.add_term(e, c);
    return p;
}

void SymLaurent::add_term(int e2, std::int64_t c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e2, c);
    if (!inserted) {
        it->second = checked::add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

int SymLaurent::max_exp2() const { return terms_.rbegin()->first; }
int SymLaurent::min_exp2() const { return terms_.begin()->first; }

std::int64_t SymLaurent::coeff2(int doubled_exp) const
{
    auto it = terms_.find(doubled_exp);
    return it == terms_.end() ? 0 : it->second;
}

bool SymLaurent::is_palindromic() const
{
    for (const auto& [e, c] : terms_)
        if (coeff2(-e) != c)
            return false;
    return true;
}

bool SymLaurent::has_integer_exponents() const
{
    for (const auto& [e, c] : terms_)
        if (e % 2 != 0)
            return false;
    return true;
}

bool SymLaurent::has_nonnegative_coeffs() const
{
    for (const auto& [e, c] : terms_)
        if (c < 0)
            return false;
    return true;
}

SymLaurent SymLaurent::dilate(int k) const
{
    if (k <= 0)
        throw std::invalid_argument("dilation factor must be positive");
    SymLaurent r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e * k, c);
    return r;
}

SymLaurent& SymLaurent::operator+=(const SymLaurent& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

SymLaurent& SymLaurent::operator-=(const SymLaurent& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, checked::sub(0, c));
    return *this;
}

SymLaurent& SymLaurent::operator*=(const SymLaurent& o)
{
    *this = *this * o;
    return *this;
}

SymLaurent operator*(const SymLaurent& a, const SymLaurent& b)
{
    SymLaurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, checked::mul(ca, cb));
    return r;
}

SymLaurent operator-(const SymLaurent& a)
{
    return a.scaled(-1);
}

SymLaurent SymLaurent::scaled(std::int64_t c) const
{
    SymLaurent r;
    for (const auto& [e, v] : terms_)
        r.add_term(e, checked::mul(v, c));
    return r;
}

SymLaurent SymLaurent::divided_exactly(std::int64_t d) const
{
    if (d == 0)
        throw std::domain_error("division by zero");
    SymLaurent r;
    for (const auto& [e, v] : terms_) {
        if (v % d != 0)
            throw InexactDivision("coefficient " + std::to_string(v) + " not divisible by " +
                                  std::to_string(d));
        r.add_term(e, v / d);
    }
    return r;
}

namespace {

std::string exponent_text(int e2)
{
    if (e2 % 2 == 0)
        return std::to_string(e2 / 2);
    return std::to_string(e2) + "/2";
}

} // namespace

std::string SymLaurent::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        os << it->second << "*q^" << exponent_text(it->first);
    }
    return os.str();
}

std::string SymLaurent::to_pretty() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e2 = it->first;
        std::int64_t c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            c = std::llabs(c);
        }
        first = false;
        if (e2 == 0) {
            os << c;
            continue;
        }
        if (c != 1)
            os << c;
        os << "q";
        if (e2 != 2)
            os << "^" << exponent_text(e2);
    }
    return os.str();
}

// ---------------------------------------------------------------- brackets

SymLaurent qint(int n)
{
    if (n == 0)
        return {};
    if (n < 0)
        return -qint(-n);
    SymLaurent r;
    for (int e2 = n - 1; e2 >= -(n - 1); e2 -= 2)
        r += SymLaurent::monomial(1, e2);
    return r;
}

SymLaurent qbrace(int n)
{
    const SymLaurent num = SymLaurent::monomial(1, n) + SymLaurent::monomial(1, -n);
    const SymLaurent den = SymLaurent::monomial(1, 1) + SymLaurent::monomial(1, -1);
    return exact_div(num, den);
}

SymLaurent bracket_sq(int n)
{
    const SymLaurent b = qint(n);
    return b * b;
}

SymLaurent bracket_sub2(int n)
{
    return qint(n).dilate(2);
}

SymLaurent exact_div(const SymLaurent& num, const SymLaurent& den)
{
    if (den.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (num.is_zero())
        return {};
    const int lead_e = den.max_exp2();
    const std::int64_t lead_c = den.coeff2(lead_e);
    const int den_span = den.max_exp2() - den.min_exp2();

    SymLaurent quotient;
    SymLaurent rest = num;
    while (!rest.is_zero()) {
        if (rest.max_exp2() - rest.min_exp2() < den_span)
            throw InexactDivision("nonzero remainder " + rest.to_string());
        const int e = rest.max_exp2();
        const std::int64_t c = rest.coeff2(e);
        if (c % lead_c != 0)
            throw InexactDivision("leading coefficient not divisible");
        const SymLaurent term = SymLaurent::monomial(c / lead_c, e - lead_e);
        quotient += term;
        rest -= term * den;
    }
    return quotient;
}

SymLaurent e2_factor(int w1, int w2)
{
    if (w1 < 1 || w2 < 1)
        throw std::invalid_argument("edge weights must be positive");
    SymLaurent r = exact_div(qint(w1) * qint(w2) * qint(w1 + w2), qint(2));
    if (!r.has_integer_exponents())
        throw std::logic_error("e2 factor with half-integer exponent");
    return r;
}

Rational eval(const SymLaurent& p, const Rational& q0)
{
    if (p.is_zero())
        return Rational(0);
    if (q0.num() == 0 && p.min_exp2() < 0)
        throw std::domain_error("negative exponent evaluated at q = 0");

    Rational base = q0;
    bool half = !p.has_integer_exponents();
    if (half && !q0.exact_sqrt(base))
        throw std::domain_error("half-integer exponent needs an exact square root of " +
                                q0.to_string());

    Rational sum(0);
    for (const auto& [e2, c] : p.terms()) {
        int k = half ? e2 : e2 / 2;
        Rational power(1);
        const Rational step = k >= 0 ? base : Rational(1) / base;
        for (int i = 0; i < std::abs(k); ++i)
            power = power * step;
        sum = sum + power * Rational(c);
    }
    return sum;
}

std::int64_t codeg_coeff(const SymLaurent& p, int top_deg, int i)
{
    return p.coeff(top_deg - i);
}

} // namespace floorgs
