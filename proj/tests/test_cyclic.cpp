#include <posring/cyclic.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace posring;

namespace {
const SearchBudget kBudget = SearchBudget::defaults();

CyclicRationalSemiring S(long n, long d) { return CyclicRationalSemiring{Rational(n, d)}; }
}  // namespace

TEST_CASE("membership in N0[2/3] with witness re-evaluation") {
    CyclicRationalSemiring s = S(2, 3);
    for (const char* t : {"2/3", "4/3", "2", "13/9", "4/9"}) {
        MembershipResult m = is_member(s, parse_rational(t), kBudget);
        REQUIRE(m.status == MemberStatus::Yes);
        REQUIRE(m.witness.has_value());
        CHECK(m.witness->eval(Rational(2, 3)) == parse_rational(t));  // exact re-check
    }
    // 1/3: multiply by 9: 4a + 6b + 9c = 3 has no solution with c forced odd.
    CHECK(is_member(s, Rational(1, 3), kBudget).status == MemberStatus::No);
    // denominator obstruction: prime 5 outside den(q) = 3
    CHECK(is_member(s, Rational(2, 5), kBudget).status == MemberStatus::No);
}

TEST_CASE("membership for q > 1 is an exact knapsack") {
    CyclicRationalSemiring s = S(3, 2);
    CHECK(is_member(s, Rational(9, 4), kBudget).status == MemberStatus::Yes);
    CHECK(is_member(s, Rational(13, 4), kBudget).status == MemberStatus::Yes);  // 9/4+1
    CHECK(is_member(s, Rational(3, 4), kBudget).status == MemberStatus::No);
    CHECK(is_member(s, Rational(1, 2), kBudget).status == MemberStatus::No);
}

TEST_CASE("membership in N0[1/d] always yields a single-term witness") {
    CyclicRationalSemiring s = S(1, 2);
    MembershipResult m = is_member(s, Rational(3, 8), kBudget);
    REQUIRE(m.status == MemberStatus::Yes);
    CHECK(m.witness->eval(Rational(1, 2)) == Rational(3, 8));
}

TEST_CASE("additive atoms: powers of q when num(q) > 1, none when num(q) = 1") {
    AtomListing l = additive_atoms(S(2, 3), 6);
    std::vector<std::string> expect;
    for (int i = 0; i < 6; ++i) expect.push_back(to_string(pow_rat(Rational(2, 3), i)));
    CHECK(l.atoms == expect);
    CHECK(l.truncated);

    AtomListing anti = additive_atoms(S(1, 2), 6);
    CHECK(anti.atoms.empty());
    CHECK_FALSE(anti.truncated);

    AtomListing n0 = additive_atoms(S(3, 1), 6);
    CHECK(n0.atoms == std::vector<std::string>{"1"});
}

TEST_CASE("atom horizon for algebraic parameters") {
    CyclicAlgebraicSemiring sqrt5{
        AlgebraicNumber(IntPolynomial::parse("x^2 - 5"), Rational(2), Rational(3))};
    AtomHorizon h = atom_horizon(sqrt5);
    CHECK(h.kind == HorizonKind::Finite);
    CHECK(h.n == 2);
    REQUIRE(h.witness.has_value());
    // alpha^2 = witness(alpha) re-checked through the sign oracle.
    IntPolynomial diff = IntPolynomial::monomial(1, 2) - *h.witness;
    CHECK(alg_sign(sqrt5.alpha, diff) == 0);

    CyclicAlgebraicSemiring cbrt2{
        AlgebraicNumber(IntPolynomial::parse("x^3 - 2"), Rational(1), Rational(2))};
    AtomHorizon h2 = atom_horizon(cbrt2);
    CHECK(h2.kind == HorizonKind::Finite);
    CHECK(h2.n == 3);

    CHECK(additive_atoms(sqrt5, 10).atoms.size() == 2);
    CHECK(additive_atoms(cbrt2, 10).atoms.size() == 3);
}

TEST_CASE("ACCP failure chain for q = 2/3, no chain for q = 3/2") {
    auto res = accp_fail_chain(S(2, 3), 10);
    REQUIRE(std::holds_alternative<AccpFailChain>(res));
    const AccpFailChain& c = std::get<AccpFailChain>(res);
    REQUIRE(c.elements.size() == 11);
    // Independent re-verification of every step in this test.
    SearchBudget deep = kBudget;
    deep.max_exponent = 16;
    for (std::size_t i = 0; i + 1 < c.elements.size(); ++i) {
        CHECK(c.elements[i] == c.elements[i + 1] + c.differences[i]);
        CHECK(c.elements[i + 1] < c.elements[i]);
        CHECK(is_member(S(2, 3), c.differences[i], deep).status == MemberStatus::Yes);
    }
    // Known closed form: x_n = 2 * (2/3)^n.
    CHECK(c.elements[0] == 2);
    CHECK(c.elements[1] == Rational(4, 3));
    CHECK(c.elements[10] == Rational(2) * pow_rat(Rational(2, 3), 10));

    CHECK(std::holds_alternative<NoChain>(accp_fail_chain(S(3, 2), 6)));
    CHECK(std::holds_alternative<NoChain>(accp_fail_chain(S(5, 1), 6)));
}

TEST_CASE("additive factorizations of 2 in N0[2/3]") {
    SearchBudget b = kBudget;
    b.max_length = 5;
    FactorizationSet<Rational> fs = cyclic_additive_factorizations(S(2, 3), Rational(2), b);
    CHECK_FALSE(fs.complete);  // lengths grow without bound
    CHECK(fs.lengths() == std::vector<unsigned>{2, 3, 4, 5});
    for (const auto& f : fs.factorizations) {
        Rational sum(0);
        for (const Rational& a : f.expanded()) sum += a;
        CHECK(sum == 2);
    }
    // Doubling the budget only adds longer factorizations (prefix property).
    FactorizationSet<Rational> fs2 = cyclic_additive_factorizations(S(2, 3), Rational(2),
                                                                    b.doubled());
    std::vector<unsigned> l2 = fs2.lengths();
    REQUIRE(l2.size() >= 4);
    CHECK(std::vector<unsigned>(l2.begin(), l2.begin() + 4) == fs.lengths());
}

TEST_CASE("antimatter additive factorizations are unsupported") {
    CHECK_THROWS_AS(cyclic_additive_factorizations(S(1, 2), Rational(1), kBudget), unsupported);
}

TEST_CASE("multiplicative views") {
    // q > 1: complete divisor closure.
    CyclicRationalMultiplicativeView v32(S(3, 2));
    FactorizationSet<Rational> f94 = enumerate_factorizations(v32, Rational(9, 4), kBudget);
    CHECK(f94.complete);
    CHECK(f94.lengths() == std::vector<unsigned>{2});
    REQUIRE(f94.factorizations.size() == 1);
    CHECK(f94.factorizations[0].expanded() ==
          std::vector<Rational>{Rational(3, 2), Rational(3, 2)});

    // N0[1/2]: units are the powers of 2; 9/16 ~ 9 = 3 * 3 in the quotient.
    CyclicRationalMultiplicativeView vh(S(1, 2));
    CHECK(vh.is_unit(Rational(1, 4)));
    CHECK(vh.is_unit(Rational(8)));
    CHECK_FALSE(vh.is_unit(Rational(3, 2)));
    FactorizationSet<Rational> f916 = enumerate_factorizations(vh, Rational(9, 16), kBudget);
    CHECK(f916.complete);
    CHECK(f916.lengths() == std::vector<unsigned>{2});

    CHECK(reduce_mod_units(2, Rational(3, 4)) == 3);
    CHECK(reduce_mod_units(2, Rational(48)) == 3);
}

TEST_CASE("additive view atom classification matches the closed form") {
    CyclicRationalAdditiveView v(S(2, 3));
    CHECK(is_atom(v, Rational(4, 9), kBudget).status == AtomStatus::Atom);
    AtomAnswer<Rational> a = is_atom(v, Rational(4, 3), kBudget);
    REQUIRE(a.status == AtomStatus::NotAtom);
    CHECK(a.witness->first + a.witness->second == Rational(4, 3));
}
