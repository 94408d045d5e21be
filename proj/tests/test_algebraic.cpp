#include <posring/algebraic.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace posring;

namespace {
AlgebraicNumber sqrt5() {
    return AlgebraicNumber(IntPolynomial::parse("x^2 - 5"), Rational(2), Rational(3));
}
}  // namespace

TEST_CASE("algebraic number construction sanity") {
    CHECK_NOTHROW(sqrt5());
    // Interval that does not isolate a root.
    CHECK_THROWS_AS(AlgebraicNumber(IntPolynomial::parse("x^2 - 5"), Rational(3), Rational(4)),
                    invalid_input);
    // Reducible minimal polynomial.
    CHECK_THROWS_AS(AlgebraicNumber(IntPolynomial::parse("x^2 - 1"), Rational(0), Rational(3)),
                    invalid_input);
}

TEST_CASE("comparisons against rationals: sqrt5 between 9/4 and 5/2") {
    AlgebraicNumber a = sqrt5();
    // Oracle: 5 < 81/16 = (9/4)^2 and (11/5)^2 = 121/25 < 5.
    CHECK(a.compare(Rational(9, 4)) < 0);
    CHECK(a.compare(Rational(11, 5)) > 0);
    CHECK(a.compare(Rational(2)) > 0);
    CHECK(a.compare(Rational(3)) < 0);
    // Continued-fraction convergents: 38/17 < sqrt5 < 161/72
    // ((38/17)^2 = 1444/289 < 5 < 25921/5184 = (161/72)^2).
    CHECK(a.compare(Rational(38, 17)) > 0);
    CHECK(a.compare(Rational(161, 72)) < 0);
}

TEST_CASE("degree-1 polynomials give rational values") {
    AlgebraicNumber r(IntPolynomial::parse("3x - 2"), Rational(0), Rational(1));
    CHECK(r.is_rational());
    CHECK(r.rational_value() == Rational(2, 3));
    CHECK_FALSE(sqrt5().is_rational());
}

TEST_CASE("refinement shrinks the isolator around the root") {
    AlgebraicNumber a = sqrt5();
    for (int i = 0; i < 10; ++i) a = a.refined();
    RationalInterval iv = a.isolator();
    CHECK(iv.hi - iv.lo <= Rational(1, 1000));
    // 5 stays inside the square of the interval.
    CHECK(iv.lo * iv.lo < 5);
    CHECK(iv.hi * iv.hi > 5);
}

TEST_CASE("alg_sign evaluates polynomial expressions in alpha exactly") {
    AlgebraicNumber a = sqrt5();
    // alpha^2 - 5 = 0
    CHECK(alg_sign(a, IntPolynomial::parse("x^2 - 5")) == 0);
    // alpha - 2 > 0, 3 - alpha > 0
    CHECK(alg_sign(a, IntPolynomial::parse("x - 2")) > 0);
    CHECK(alg_sign(a, IntPolynomial::parse("-x + 3")) > 0);
    // alpha^3 - 11 = 5*alpha - 11 > 0 since alpha > 11/5
    CHECK(alg_sign(a, IntPolynomial::parse("x^3 - 11")) > 0);
    // alpha^4 - 25 = 0
    CHECK(alg_sign(a, IntPolynomial::parse("x^4 - 25")) == 0);
    // 2*alpha - 5 < 0 since alpha < 5/2
    CHECK(alg_sign(a, IntPolynomial::parse("2x - 5")) < 0);
}

TEST_CASE("alg_sign on a cube root") {
    AlgebraicNumber c(IntPolynomial::parse("x^3 - 2"), Rational(1), Rational(2));
    CHECK(alg_sign(c, IntPolynomial::parse("x^3 - 2")) == 0);
    // cbrt2 > 5/4 since (5/4)^3 = 125/64 < 2
    CHECK(c.compare(Rational(5, 4)) > 0);
    // cbrt2 < 13/10 since (13/10)^3 = 2197/1000 > 2
    CHECK(c.compare(Rational(13, 10)) < 0);
    // c^6 - 4 = 0
    CHECK(alg_sign(c, IntPolynomial::parse("x^6 - 4")) == 0);
}
