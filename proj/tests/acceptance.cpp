// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] must be the path to the posring CLI binary (used by the
// end-to-end criterion).

#include <posring/refute.hpp>

#include "natpoly_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <sys/wait.h>

using namespace posring;

namespace {

int failures = 0;

void criterion(int n, const std::string& title, double limit_seconds,
               const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (error.empty() && secs > limit_seconds) {
        std::ostringstream os;
        os << "exceeded time limit (" << secs << "s > " << limit_seconds << "s)";
        error = os.str();
    }
    if (error.empty()) {
        std::printf("PASS criterion %d: %s (%.2fs)\n", n, title.c_str(), secs);
    } else {
        std::printf("FAIL criterion %d: %s -- %s\n", n, title.c_str(), error.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

// --- criterion bodies -------------------------------------------------------

void atoms_formulas() {
    AtomListing a = additive_atoms(CyclicRationalSemiring{Rational(2, 3)}, 6);
    std::vector<std::string> expect;
    for (unsigned i = 0; i < 6; ++i) expect.push_back(to_string(pow_rat(Rational(2, 3), i)));
    require(a.atoms == expect, "additive atoms of N0[2/3] are not the powers (2/3)^i");

    require(additive_atoms(CyclicRationalSemiring{Rational(1, 2)}, 6).atoms.empty(),
            "N0[1/2] must be antimatter");

    auto alg_count = [](const std::string& poly, long lo, long hi) {
        CyclicAlgebraicSemiring S{
            AlgebraicNumber(IntPolynomial::parse(poly), Rational(lo), Rational(hi))};
        return additive_atoms(S, 10).atoms.size();
    };
    require(alg_count("x^2 - 5", 2, 3) == 2, "N0[sqrt 5] must have exactly 2 additive atoms");
    require(alg_count("x^3 - 2", 1, 2) == 3, "N0[cbrt 2] must have exactly 3 additive atoms");

    // S_2 predicates versus a brute-force grid with denominators <= 12.
    RaySemiring S{Rational(2)};
    Rational limit = Rational(6);
    for (long d = 1; d <= 12; ++d) {
        for (Integer n = 1; Rational(n, d) <= limit; ++n) {
            Rational x = make_rational(n, d);
            if (!S.is_member(x)) continue;
            bool add_oracle = true;
            if (x >= 4) add_oracle = false;
            for (Integer y = 1; add_oracle && Rational(y) < x; ++y)
                if (S.is_member(x - Rational(y))) add_oracle = false;
            require(is_additive_atom(S, x) == add_oracle,
                    "additive atom predicate disagrees at " + to_string(x));
            if (x == 1) continue;
            bool mul_oracle = true;
            if (x >= 4) mul_oracle = false;
            for (Integer y = 2; mul_oracle && Rational(y) <= x; ++y) {
                Rational z = x / Rational(y);
                if (z != 1 && S.is_member(z)) mul_oracle = false;
            }
            require(is_mult_atom(S, x) == mul_oracle,
                    "multiplicative atom predicate disagrees at " + to_string(x));
        }
    }
}

void accp_separation() {
    CyclicRationalSemiring S{Rational(2, 3)};
    auto res = accp_fail_chain(S, 10);
    auto* chain = std::get_if<AccpFailChain>(&res);
    require(chain != nullptr, "accp_fail_chain(2/3, 10) must produce a chain");
    Certificate c = accp_fail_chain_certificate(S, *chain);  // throws if re-check fails
    require(c.verified, "chain certificate not verified");
    require(c.payload["elements"].size() == 11, "chain must have N+1 = 11 elements");

    auto none = accp_fail_chain(CyclicRationalSemiring{Rational(3, 2)}, 10);
    require(std::holds_alternative<NoChain>(none), "accp_fail_chain(3/2) must report NoChain");
}

void bfs_separation() {
    for (long P : {3L, 5L, 7L}) {
        // Independent Diophantine oracle: lengths of the nonnegative solutions
        // of sum (lcm/p) c_p = lcm over primes p <= P.
        std::vector<long> ps;
        for (const Integer& p : primes_up_to(P)) ps.push_back(mpz_get_si(p.get_mpz_t()));
        long l = 1;
        for (long p : ps) l = std::lcm(l, p);
        std::set<unsigned> oracle;
        std::function<void(std::size_t, long, unsigned)> rec = [&](std::size_t i, long rem,
                                                                   unsigned count) {
            if (rem == 0 && count > 0) {
                oracle.insert(count);
                return;
            }
            if (i == ps.size() || rem <= 0) return;
            long w = l / ps[i];
            for (long k = 0; k * w <= rem; ++k) rec(i + 1, rem - k * w, count + k);
        };
        rec(0, l, 0);

        ExponentMonoid M = ExponentMonoid::unit_fractions(P);
        ExpSemiringMultiplicativeView view(M);
        SearchBudget b = SearchBudget::defaults();
        b.max_length = 16;
        b.max_exponent = 16;
        b.max_candidates = 200000;
        auto [lens, complete] = length_set(view, ExpSum::exponential(1), b);
        require(complete, "length set of e^1 did not close for P=" + std::to_string(P));
        require(std::set<unsigned>(lens.begin(), lens.end()) == oracle,
                "length set of e^1 disagrees with the Diophantine oracle for P=" +
                    std::to_string(P));
    }
}

void ffs_separation() {
    RaySemiring S{Rational(2)};
    Certificate c = non_ff_family(S, Rational(9, 2), 25);
    require(c.verified, "non_ff_family certificate not verified");
    const auto& pairs = c.payload["factorizations"];
    require(pairs.size() == 25, "expected 25 factorizations");
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& p : pairs) {
        require(p.size() == 2, "each factorization must have length 2");
        Rational a = parse_rational(p[0].get<std::string>());
        Rational b = parse_rational(p[1].get<std::string>());
        require(a + b == Rational(9, 2), "pair does not sum to 9/2");
        require(is_additive_atom(S, a) && is_additive_atom(S, b), "pair part is not an atom");
        seen.insert({p[0].get<std::string>(), p[1].get<std::string>()});
    }
    require(seen.size() == 25, "factorizations must be pairwise distinct");
}

void hfs_lfs_separation() {
    NatPolynomial f = NatPolynomial::parse("x^4 + 2x^3 + 2x^2 + 7x + 6");
    FactorizationSet<NatPolynomial> fs = factorizations_natpoly(f);
    require(fs.complete && fs.factorizations.size() == 2,
            "expected exactly 2 factorizations of (x+1)(x+2)(x^2-x+3)");
    require(fs.factorizations[0].length() == 2 && fs.factorizations[1].length() == 2 &&
                !(fs.factorizations[0] == fs.factorizations[1]),
            "the 2 factorizations must be distinct and both of length 2");

    Certificate c = hf_witness_family(2, 1);
    require(c.verified, "hf_witness_family(2,1) not verified");
    require(c.payload["lengths"] == nlohmann::json::array({2, 3}),
            "hf_witness_family(2,1) must have lengths {2,3}");
    unsigned certified = 0;
    for (const char* key : {"factorizationA", "factorizationB"})
        for (const auto& part : c.payload[key]) {
            require(is_irreducible_natpoly(NatPolynomial::parse(part.get<std::string>()))
                        .irreducible,
                    "part is not irreducible: " + part.get<std::string>());
            ++certified;
        }
    require(certified == 5, "expected five involved irreducibles");
}

void oracle_equivalence() {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> coeff(0, 4), deg(0, 6);
    unsigned done = 0;
    while (done < 200) {
        IntPolynomial p;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) p.set_coeff(static_cast<unsigned>(i), coeff(rng));
        if (p.is_zero() || p.is_one()) continue;
        NatPolynomial f(p);
        require(posring_test::normalized_library_factorizations(f) ==
                    posring_test::oracle_factorizations(f),
                "library/oracle mismatch for " + f.to_text());
        ++done;
    }
}

void divisor_closedness() {
    std::vector<ExponentMonoid> families = {
        ExponentMonoid::unit_fractions(5),
        ExponentMonoid::floor_sqrt_over_p(13),
        ExponentMonoid::mixed_squares(3),
    };
    unsigned total = 0;
    for (const auto& M : families) {
        DivisorClosedReport rep = check_divisor_closed(M, 170);
        require(rep.violations == 0, "divisor-closedness violation in " + M.describe());
        total += rep.trials;
    }
    require(total >= 500, "expected at least 500 trials in total");
}

void numerical_remark() {
    NumericalMonoid S({3, 5});
    auto [notlf, nothf] = remark_witnesses(S, 2, 3);
    require(notlf.verified && notlf.kind == CertKind::NotLF, "NotLF witness not verified");
    require(notlf.payload["factorizationA"] == nlohmann::json::array({"3", "32"}) &&
                notlf.payload["factorizationB"] == nlohmann::json::array({"12", "8"}),
            "NotLF witness must be 3*32 = 12*8");
    require(nothf.verified && nothf.kind == CertKind::NotHF, "NotHF witness not verified");
    require(nothf.payload["element"] == "32768" &&
                nothf.payload["lengths"] == nlohmann::json::array({3, 5}),
            "NotHF witness must be 8^5 = 32^3 with lengths {3,5}");

    // Additive length sets up to 60 against the coin-change oracle.
    std::vector<std::set<unsigned>> L(61);
    L[0].insert(0);
    for (unsigned v = 1; v <= 60; ++v)
        for (unsigned g : {3u, 5u})
            if (v >= g)
                for (unsigned l : L[v - g]) L[v].insert(l + 1);
    NumericalAdditiveView view(S);
    for (unsigned v = 1; v <= 60; ++v) {
        if (!S.is_member(Integer(v))) continue;
        auto [lens, complete] = length_set(view, Integer(v), SearchBudget::defaults());
        require(complete && std::set<unsigned>(lens.begin(), lens.end()) == L[v],
                "additive length set mismatch at " + std::to_string(v));
    }
}

std::string cli_path;

std::string run_cli(const std::string& args, int& exit_code) {
    std::string cmd = cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void diagram_end_to_end() {
    int code1 = -1, code2 = -1;
    std::string out1 = run_cli("verify-diagram --json", code1);
    std::string out2 = run_cli("verify-diagram --json", code2);
    require(code1 == 0 && code2 == 0, "verify-diagram must exit 0");
    nlohmann::json a = nlohmann::json::parse(out1);
    nlohmann::json b = nlohmann::json::parse(out2);
    require(a["allVerified"] == true, "allVerified must be true");
    for (const auto& sep : a["separations"])
        for (const auto& c : sep["certificates"])
            require(c["verified"] == true, "every certificate must be verified");
    a.erase("generatedAt");
    b.erase("generatedAt");
    require(a == b, "verify-diagram output must be deterministic up to the timestamp");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: " << argv[0] << " <path-to-posring-cli>\n";
        return 2;
    }
    cli_path = argv[1];

    criterion(1, "atom formulas match closed forms and the grid oracle", 10.0, atoms_formulas);
    criterion(2, "ACCP separation: descending chain in N0[2/3], none in N0[3/2]", 1.0,
              accp_separation);
    criterion(3, "BFS separation: L(e^1) equals the Diophantine oracle for P in {3,5,7}", 30.0,
              bfs_separation);
    criterion(4, "FFS separation: 25 distinct verified pairs summing to 9/2 in S_2", 1.0,
              ffs_separation);
    criterion(5, "HFS/LFS separation: the N0[x] witnesses", 5.0, hfs_lfs_separation);
    criterion(6, "oracle equivalence on 200 random nonnegative polynomials", 120.0,
              oracle_equivalence);
    criterion(7, "divisor-closedness: 510 random split trials, zero violations", 30.0,
              divisor_closedness);
    criterion(8, "numerical-monoid witnesses and coin-change length sets", 10.0, numerical_remark);
    criterion(9, "verify-diagram end-to-end: exit 0, verified, deterministic", 300.0,
              diagram_end_to_end);

    return failures == 0 ? 0 : 1;
}
