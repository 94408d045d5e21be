#include <posring/numerical.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace posring;

namespace {

/// Independent coin-change oracle: the set of factorization lengths of n over
/// the given generators, by direct dynamic programming on counts.
std::set<unsigned> coin_length_set(const std::vector<unsigned long>& gens, unsigned long n) {
    std::vector<std::set<unsigned>> L(n + 1);
    L[0].insert(0);
    for (unsigned long v = 1; v <= n; ++v)
        for (unsigned long g : gens)
            if (v >= g)
                for (unsigned l : L[v - g]) L[v].insert(l + 1);
    return L[n];
}

}  // namespace

TEST_CASE("Frobenius numbers") {
    CHECK(NumericalMonoid({3, 5}).frobenius() == 7);    // ab - a - b = 15 - 8
    CHECK(NumericalMonoid({2, 3}).frobenius() == 1);
    CHECK(NumericalMonoid({6, 9, 20}).frobenius() == 43);
    CHECK_THROWS_AS(NumericalMonoid({4, 6}), invalid_input);  // gcd 2
}

TEST_CASE("membership and Apery sets") {
    NumericalMonoid S({3, 5});
    for (long x : {0, 3, 5, 6, 8, 9, 10}) CHECK(S.is_member(Integer(x)));
    for (long x : {1, 2, 4, 7}) CHECK_FALSE(S.is_member(Integer(x)));
    CHECK(S.is_member(Integer(1000000)));
    // Apery(3) = least members in each class mod 3: {0, 10, 5}.
    auto ap = S.apery(3);
    REQUIRE(ap.size() == 3);
    CHECK(ap[0] == 0);
    CHECK(ap[1] == 10);
    CHECK(ap[2] == 5);
}

TEST_CASE("additive length sets match the coin-change oracle up to 60") {
    for (auto gens : {std::vector<unsigned long>{3, 5}, std::vector<unsigned long>{6, 9, 20}}) {
        NumericalMonoid S(gens);
        NumericalAdditiveView view(S);
        for (unsigned long n = 1; n <= 60; ++n) {
            if (!S.is_member(Integer(n))) continue;
            auto [lens, complete] = length_set(view, Integer(n), SearchBudget::defaults());
            INFO("n = " << n);
            CHECK(complete);
            CHECK(std::set<unsigned>(lens.begin(), lens.end()) == coin_length_set(gens, n));
        }
    }
}

TEST_CASE("multiplicative atoms of <3,5> up to 35") {
    // Oracle: hand trial division; 9 = 3*3, 15 = 3*5, 24 = 3*8, 25 = 5*5,
    // 30 = 3*10, 33 = 3*11 are the only composites-in-S splittable in S.
    NumericalMonoid S({3, 5});
    AtomListing l = mult_atoms_up_to(S, 35);
    CHECK(l.truncated);
    CHECK(l.atoms == std::vector<std::string>{"3",  "5",  "6",  "8",  "10", "11", "12", "13",
                                              "14", "16", "17", "19", "20", "21", "22", "23",
                                              "26", "28", "29", "31", "32", "34", "35"});
    CHECK(is_mult_atom(S, Integer(8)));
    CHECK(is_mult_atom(S, Integer(32)));
    CHECK_FALSE(is_mult_atom(S, Integer(64)));  // 8 * 8
    CHECK_FALSE(is_mult_atom(S, Integer(96)));  // 3 * 32 = 12 * 8
}

TEST_CASE("multiplicative length set of 2^15: partitions of 15 into {3,4,5}") {
    NumericalMonoid S({3, 5});
    NumericalMultiplicativeView view(S);
    SearchBudget b = SearchBudget::defaults();
    auto [lens, complete] = length_set(view, pow_int(Integer(2), 15), b);
    CHECK(complete);
    // Atom powers of 2 inside S are 8, 16, 32 (2^6 = 8*8 onward split), so
    // the lengths are the sizes of partitions of 15 into parts 3, 4, 5.
    CHECK(lens == std::vector<unsigned>{3, 4, 5});
}

TEST_CASE("the Remark witnesses for <3,5> with q = 2, n = 3") {
    NumericalMonoid S({3, 5});
    auto [notlf, nothf] = remark_witnesses(S, 2, 3);
    CHECK(notlf.kind == CertKind::NotLF);
    CHECK(notlf.verified);
    CHECK(notlf.payload["element"] == "96");  // 3 * 32 = 12 * 8
    CHECK(notlf.payload["factorizationA"] == nlohmann::json::array({"3", "32"}));
    CHECK(notlf.payload["factorizationB"] == nlohmann::json::array({"12", "8"}));

    CHECK(nothf.kind == CertKind::NotHF);
    CHECK(nothf.verified);
    CHECK(nothf.payload["element"] == "32768");  // 8^5 = 32^3
    CHECK(nothf.payload["lengths"] == nlohmann::json::array({3, 5}));

    // Hypothesis violations surface as unsupported, not as wrong certificates.
    CHECK_THROWS_AS(remark_witnesses(S, 2, 2), unsupported);   // 2^2 = 4 outside S
    CHECK_THROWS_AS(remark_witnesses(S, 3, 3), unsupported);   // 3 inside S
    CHECK_THROWS_AS(remark_witnesses(S, 4, 3), invalid_input); // q not prime
}

TEST_CASE("length-factorial spot checks") {
    // <3,5>: no two distinct equal-length additive factorizations below 60;
    // <3,5,7>: 10 = 3+7 = 5+5 already violates it.
    auto scan = [](const std::vector<unsigned long>& gens) -> std::optional<unsigned long> {
        NumericalMonoid S(gens);
        NumericalAdditiveView view(S);
        for (unsigned long n = 1; n <= 60; ++n) {
            if (!S.is_member(Integer(n))) continue;
            auto fs = enumerate_factorizations(view, Integer(n), SearchBudget::defaults());
            std::multiset<unsigned> lens;
            for (const auto& f : fs.factorizations) lens.insert(f.length());
            for (unsigned l : lens)
                if (lens.count(l) > 1) return n;
        }
        return std::nullopt;
    };
    CHECK_FALSE(scan({3, 5}).has_value());
    auto hit = scan({3, 5, 7});
    REQUIRE(hit.has_value());
    CHECK(*hit == 10);
}
