#include <posring/expsemiring.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace posring;

namespace {

/// Independent Diophantine oracle for L(e^1) over E(unitfrac<=P): lengths of
/// the nonnegative solutions of sum (lcm/p) c_p = lcm over primes p <= P.
std::vector<unsigned> diophantine_lengths(long P) {
    std::vector<long> ps;
    for (const Integer& p : primes_up_to(P)) ps.push_back(mpz_get_si(p.get_mpz_t()));
    long l = 1;
    for (long p : ps) l = std::lcm(l, p);
    std::set<unsigned> lens;
    std::vector<long> c(ps.size(), 0);
    std::function<void(std::size_t, long, unsigned)> rec = [&](std::size_t i, long rem,
                                                               unsigned count) {
        if (rem == 0 && count > 0) {
            lens.insert(count);
            return;
        }
        if (i == ps.size() || rem <= 0) return;
        long w = l / ps[i];
        for (long k = 0; k * w <= rem; ++k) rec(i + 1, rem - k * w, count + k);
    };
    rec(0, l, 0);
    return {lens.begin(), lens.end()};
}

SearchBudget big_budget() {
    SearchBudget b = SearchBudget::defaults();
    b.max_length = 16;
    b.max_exponent = 16;
    b.max_candidates = 200000;
    return b;
}

}  // namespace

TEST_CASE("ExpSum arithmetic and exact division") {
    ExpSum a = ExpSum::exponential(Rational(1, 2)) + ExpSum::exponential(Rational(1, 3));
    ExpSum b = ExpSum::exponential(Rational(1, 2));
    ExpSum prod = a * b;
    auto q = prod.divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    // A single exponential does not divide a two-term sum exactly.
    CHECK_FALSE(b.divide_exact(a).has_value());
    CHECK(ExpSum::from_json(prod.to_json()) == prod);
}

TEST_CASE("L(e^1) over E(unitfrac<=P) equals the Diophantine oracle") {
    for (long P : {3, 5}) {
        ExponentMonoid M = ExponentMonoid::unit_fractions(P);
        ExpSemiringMultiplicativeView view(M);
        auto [lens, complete] = length_set(view, ExpSum::exponential(1), big_budget());
        INFO("P = " << P);
        CHECK(complete);
        CHECK(lens == diophantine_lengths(P));
    }
    // Oracle shape sanity: primes themselves.
    CHECK(diophantine_lengths(5) == std::vector<unsigned>{2, 3, 5});
    CHECK(diophantine_lengths(7) == std::vector<unsigned>{2, 3, 5, 7});
}

TEST_CASE("sums of exponentials can be atoms; their powers have unique length") {
    ExponentMonoid M = ExponentMonoid::finitely_generated({Rational(2), Rational(3)});
    ExpSemiringMultiplicativeView view(M);
    ExpSum s = ExpSum::exponential(2) + ExpSum::exponential(3);
    CHECK(is_atom(view, s, big_budget()).status == AtomStatus::Atom);
    auto [lens, complete] = length_set(view, s * s, big_budget());
    CHECK(lens == std::vector<unsigned>{2});
}

TEST_CASE("divisor-closedness of the exponential elements: random split trials") {
    std::vector<ExponentMonoid> families = {
        ExponentMonoid::unit_fractions(5),
        ExponentMonoid::floor_sqrt_over_p(13),
        ExponentMonoid::mixed_squares(3),
    };
    for (const auto& M : families) {
        DivisorClosedReport rep = check_divisor_closed(M, 100);
        INFO("family " << M.describe());
        CHECK(rep.trials == 100);
        CHECK(rep.violations == 0);
    }
}

TEST_CASE("ACCP probe terminates on the unit-fraction family") {
    AccpProbeResult r = accp_probe(ExponentMonoid::unit_fractions(5), 6, big_budget());
    CHECK(r.stable);
    CHECK(r.longest_seen <= 6);
    CHECK_FALSE(r.fail_chain.has_value());
}

TEST_CASE("exponent monoid membership and atoms") {
    ExponentMonoid M = ExponentMonoid::unit_fractions(5);
    CHECK(M.is_member(Rational(1)));           // 2 * (1/2)
    CHECK(M.is_member(Rational(31, 30)));      // 1/2 + 1/3 + 1/5
    CHECK_FALSE(M.is_member(Rational(1, 7)));
    CHECK(M.atoms() == std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 5)});

    FactorizationSet<Rational> fs = exp_monoid_factorizations(M, Rational(1),
                                                              SearchBudget::defaults());
    CHECK(fs.complete);
    CHECK(fs.lengths() == std::vector<unsigned>{2, 3, 5});
}

TEST_CASE("family descriptors") {
    CHECK(ExponentMonoid::unit_fractions(5).describe() == "unitfrac<=5");
    CHECK(ExponentMonoid::floor_sqrt_over_p(13).describe() == "floorsqrt<=13");
    CHECK(ExponentMonoid::mixed_squares(4).describe() == "mixedsq<=4");
    CHECK(ExponentMonoid::mixed_squares(2).generators().size() == 4);
}
