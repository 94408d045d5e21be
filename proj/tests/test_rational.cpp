#include <posring/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace posring;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("2/3") == Rational(2, 3));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("4/6") == Rational(2, 3));  // canonicalized
    CHECK(to_string(Rational(9, 4)) == "9/4");
    CHECK(to_string(Rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), invalid_input);
    CHECK_THROWS_AS(parse_rational("abc"), invalid_input);
}

TEST_CASE("floor, ceil, powers") {
    CHECK(floor_int(Rational(7, 2)) == 3);
    CHECK(floor_int(Rational(-7, 2)) == -4);
    CHECK(ceil_int(Rational(7, 2)) == 4);
    CHECK(ceil_int(Rational(6, 2)) == 3);
    CHECK(pow_int(Integer(2), 10) == 1024);
    CHECK(pow_rat(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow_rat(Rational(5), 0) == 1);
}

TEST_CASE("primality and factorization") {
    // Oracle: first primes by hand.
    std::vector<long> first = {2, 3, 5, 7, 11, 13, 17, 19};
    std::vector<Integer> got = primes_up_to(20);
    REQUIRE(got.size() == first.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(got[i] == first[i]);
    CHECK(is_prime(Integer(97)));
    CHECK_FALSE(is_prime(Integer(91)));  // 7 * 13
    CHECK_FALSE(is_prime(Integer(1)));

    // 360 = 2^3 * 3^2 * 5
    auto f = factor_integer(Integer(360));
    REQUIRE(f.size() == 3);
    CHECK((f[0].first == 2 && f[0].second == 3));
    CHECK((f[1].first == 3 && f[1].second == 2));
    CHECK((f[2].first == 5 && f[2].second == 1));

    // d(36) = 9 divisors
    CHECK(divisors(Integer(36)).size() == 9);
    Integer prod = 1;
    for (const Integer& d : divisors(Integer(12))) prod *= d;
    CHECK(prod == 1728);  // 12^(6/2)
}

TEST_CASE("prime-support predicate") {
    CHECK(supported_on_primes_of(Integer(27), Integer(6)));    // 3 | 6
    CHECK(supported_on_primes_of(Integer(12), Integer(6)));    // 2, 3 | 6
    CHECK_FALSE(supported_on_primes_of(Integer(10), Integer(6)));  // 5 does not divide 6
    CHECK(supported_on_primes_of(Integer(1), Integer(7)));
}
