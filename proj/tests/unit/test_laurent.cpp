#include "floorgs/laurent.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using namespace floorgs;

namespace {

SymLaurent q(int doubled_exp, std::int64_t c = 1)
{
    return SymLaurent::monomial(c, doubled_exp);
}

} // namespace

TEST_CASE("quantum integers")
{
    CHECK(qint(1) == SymLaurent(1));
    CHECK(qint(0).is_zero());
    CHECK(qint(3) == q(2) + q(0) + q(-2));
    CHECK(qint(2) == q(1) + q(-1));
    CHECK(qint(-3) == -qint(3));
    for (int n = 1; n <= 12; ++n) {
        CHECK(qint(n).is_palindromic());
        CHECK(qint(n).has_integer_exponents() == (n % 2 == 1));
    }
}

TEST_CASE("braces are exact for odd n only")
{
    CHECK(qbrace(1) == SymLaurent(1));
    CHECK(qbrace(3) == q(2) - q(0) + q(-2));
    CHECK_THROWS_AS(qbrace(2), InexactDivision);
    CHECK_THROWS_AS(qbrace(4), InexactDivision);
}

TEST_CASE("squares and q^2 substitution")
{
    CHECK(bracket_sq(2) == q(2) + q(0, 2) + q(-2));
    CHECK(bracket_sub2(2) == q(2) + q(-2));
    CHECK(bracket_sub2(3) == q(4) + q(0) + q(-4));
    CHECK(qint(3).dilate(2) == bracket_sub2(3));
}

TEST_CASE("canonical serialization")
{
    CHECK((q(2) + q(0, 10) + q(-2)).to_string() == "1*q^1 + 10*q^0 + 1*q^-1");
    CHECK(qint(2).to_string() == "1*q^1/2 + 1*q^-1/2");
    CHECK((q(2) - q(0)).to_string() == "1*q^1 + -1*q^0");
    CHECK(SymLaurent().to_string() == "0");
    CHECK((q(2) + q(0, 10) + q(-2)).to_pretty() == "q + 10 + q^-1");
}

TEST_CASE("exact division")
{
    CHECK(exact_div(qint(6), qint(2)) == bracket_sub2(3));
    CHECK(exact_div(qint(6), qint(3)) == q(3) + q(-3));
    CHECK_THROWS_AS(exact_div(qint(3), qint(2)), InexactDivision);
    CHECK_THROWS_AS((q(0, 3)).divided_exactly(2), InexactDivision);
}

TEST_CASE("bracket identities")
{
    const SymLaurent two = qint(2);
    for (int a = -5; a <= 5; ++a) {
        for (int b = -5; b <= 5; ++b) {
            const SymLaurent lhs = (qint(a) * qint(b) * qint(a + b)).scaled(2);
            CHECK(lhs == two * (bracket_sq(a + b) * bracket_sub2(a) - bracket_sub2(a + b) * bracket_sq(a)));
            CHECK(lhs == two * (bracket_sq(a) * bracket_sub2(b) + bracket_sub2(a) * bracket_sq(b)));
        }
    }
    for (int k = 1; k <= 8; ++k)
        CHECK(exact_div(qint(2 * k), two) == bracket_sub2(k));
    for (int w = 1; w <= 9; w += 2)
        CHECK(qint(w) * qbrace(w) == bracket_sub2(w));
}

TEST_CASE("e2 factor matches the two-term expansion")
{
    for (int w1 = 1; w1 <= 8; ++w1) {
        for (int w2 = 1; w2 <= 8; ++w2) {
            const SymLaurent e = e2_factor(w1, w2);
            CHECK(e.has_integer_exponents());
            CHECK(e.is_palindromic());
            CHECK(e == (bracket_sq(w1) * bracket_sub2(w2) + bracket_sub2(w1) * bracket_sq(w2))
                           .divided_exactly(2));
        }
    }
    CHECK(e2_factor(1, 1) == SymLaurent(1));
}

TEST_CASE("evaluation")
{
    for (int n = 0; n <= 10; ++n)
        CHECK(eval(qint(n), Rational(1)) == Rational(n));
    CHECK(eval(q(1), Rational(4)) == Rational(2));
    CHECK(eval(q(-2) + q(2), Rational(2)) == Rational(5, 2));
    CHECK(eval(q(2) + q(0, 10) + q(-2), Rational(1)) == Rational(12));
    CHECK_THROWS(eval(q(1), Rational(2)));
}

TEST_CASE("codegree coefficients")
{
    const SymLaurent p = q(2) + q(0, 10) + q(-2);
    CHECK(codeg_coeff(p, 1, 1) == 10);
    CHECK(codeg_coeff(p, 1, 0) == 1);
    CHECK(codeg_coeff(p, 1, 5) == 0);
    CHECK(codeg_coeff(SymLaurent(), 3, 2) == 0);
}

TEST_CASE("overflow is reported")
{
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(SymLaurent(big) + SymLaurent(1), OverflowError);
    CHECK_THROWS_AS(SymLaurent(big).scaled(2), OverflowError);
    CHECK_THROWS_AS(q(0, big) * q(0, 3), OverflowError);
}

TEST_CASE("random bracket products stay palindromic")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> w(1, 6), kind(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        SymLaurent p(1);
        for (int k = 0; k < 4; ++k) {
            switch (kind(rng)) {
            case 0: p *= bracket_sq(w(rng)); break;
            case 1: p *= bracket_sub2(w(rng)); break;
            default: p *= e2_factor(w(rng), w(rng)); break;
            }
        }
        CHECK(p.is_palindromic());
        CHECK(p.has_nonnegative_coeffs());
    }
}
