#include "natpoly_oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace posring;

namespace {
NatPolynomial NP(const std::string& s) { return NatPolynomial::parse(s); }
}  // namespace

TEST_CASE("irreducibility in N0[x] differs from Q[x]") {
    // x^3 + 1 = (x+1)(x^2-x+1) over Z, but the second factor has a negative
    // coefficient: no nonnegative split exists, so x^3 + 1 is an N0[x] atom.
    CHECK(is_irreducible_natpoly(NP("x^3 + 1")).irreducible);
    CHECK(is_irreducible_natpoly(NP("x + 1")).irreducible);
    CHECK(is_irreducible_natpoly(NP("x^2 + x + 1")).irreducible);
    CHECK(is_irreducible_natpoly(NP("2")).irreducible);
    CHECK(is_irreducible_natpoly(NP("x")).irreducible);

    IrreducibilityResult r = is_irreducible_natpoly(NP("x^2 + 3x + 2"));
    CHECK_FALSE(r.irreducible);
    REQUIRE(r.witness.has_value());
    CHECK(NatPolynomial(static_cast<const IntPolynomial&>(r.witness->first) *
                        r.witness->second) == NP("x^2 + 3x + 2"));

    CHECK_FALSE(is_irreducible_natpoly(NP("4")).irreducible);
    CHECK_THROWS_AS(is_irreducible_natpoly(NP("1")), invalid_input);
}

TEST_CASE("the LF counterexample has exactly two factorizations, both length 2") {
    // (x+1)(x+2)(x^2-x+3) = x^4 + 2x^3 + 2x^2 + 7x + 6
    NatPolynomial f = NP("x^4 + 2x^3 + 2x^2 + 7x + 6");
    FactorizationSet<NatPolynomial> fs = factorizations_natpoly(f);
    CHECK(fs.complete);
    REQUIRE(fs.factorizations.size() == 2);
    CHECK(fs.factorizations[0].length() == 2);
    CHECK(fs.factorizations[1].length() == 2);
    CHECK_FALSE(fs.factorizations[0] == fs.factorizations[1]);
    for (const auto& fac : fs.factorizations) {
        IntPolynomial prod(Integer(1));
        for (const auto& p : fac.expanded()) {
            prod = prod * p;
            CHECK(is_irreducible_natpoly(p).irreducible);
        }
        CHECK(NatPolynomial(prod) == f);
    }

    Certificate c = natpoly_notlf_certificate();
    CHECK(c.kind == CertKind::NotLF);
    CHECK(c.verified);
    CHECK(c.payload["element"] == "x^4 + 2x^3 + 2x^2 + 7x + 6");
}

TEST_CASE("the HF counterexample family") {
    Certificate c = hf_witness_family(2, 1);
    CHECK(c.kind == CertKind::NotHF);
    CHECK(c.verified);
    CHECK(c.payload["lengths"] == nlohmann::json::array({2, 3}));
    // (x+2)^2 (x^2-x+1) (x+1) expanded by hand.
    CHECK(c.payload["element"] == "x^5 + 4x^4 + 4x^3 + x^2 + 4x + 4");

    Certificate c32 = hf_witness_family(3, 2);
    CHECK(c32.payload["lengths"] == nlohmann::json::array({3, 5}));

    CHECK_THROWS_AS(hf_witness_family(5, 1), unsupported);
    CHECK_THROWS_AS(hf_witness_family(1, 1), invalid_input);
}

TEST_CASE("library factorizations agree with the trial-division oracle") {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> coeff(0, 4), deg(0, 6);
    unsigned done = 0;
    while (done < 60) {
        IntPolynomial p;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) p.set_coeff(static_cast<unsigned>(i), coeff(rng));
        if (p.is_zero() || p.is_one()) continue;
        NatPolynomial f(p);
        INFO("f = " << f.to_text());
        CHECK(posring_test::normalized_library_factorizations(f) ==
              posring_test::oracle_factorizations(f));
        ++done;
    }
}

TEST_CASE("multiplicative view closes the enumeration") {
    NatPolyMultiplicativeView view;
    NatPolynomial f = NP("x^2 + 3x + 2");
    FactorizationSet<NatPolynomial> fs = enumerate_factorizations(view, f, SearchBudget::defaults());
    CHECK(fs.complete);
    REQUIRE(fs.factorizations.size() == 1);
    CHECK(fs.factorizations[0].length() == 2);
    AtomAnswer<NatPolynomial> a = is_atom(view, NP("x^3 + 1"), SearchBudget::defaults());
    CHECK(a.status == AtomStatus::Atom);
}
