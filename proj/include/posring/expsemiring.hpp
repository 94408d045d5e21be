#pragma once

// Exponential semirings E(M): formal N-linear combinations of symbols e^m
// over a Puiseux monoid M given by a finite generator list.  The basis is
// free by axiom; no real-number evaluation of e^m ever happens.

#include <posring/certificate.hpp>
#include <posring/monoid_view.hpp>

#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace posring {

enum class ExpFamilyKind { FinitelyGenerated, UnitFractions, FloorSqrtOverP, MixedSquares };

class ExponentMonoid {
public:
    static ExponentMonoid finitely_generated(std::vector<Rational> gens) {
        return ExponentMonoid(ExpFamilyKind::FinitelyGenerated, 0, std::move(gens));
    }

    /// <1/p : p prime <= P>.
    static ExponentMonoid unit_fractions(long P) {
        std::vector<Rational> gens;
        for (const Integer& p : primes_up_to(P)) gens.push_back(Rational(1) / Rational(p));
        if (gens.empty()) throw invalid_input("unit_fractions: no prime <= cap");
        return ExponentMonoid(ExpFamilyKind::UnitFractions, P, std::move(gens));
    }

    /// <floor(sqrt(p))/p : p prime <= P>.
    static ExponentMonoid floor_sqrt_over_p(long P) {
        std::vector<Rational> gens;
        for (const Integer& p : primes_up_to(P)) {
            Integer r;
            mpz_sqrt(r.get_mpz_t(), p.get_mpz_t());
            gens.push_back(make_rational(r, p));
        }
        if (gens.empty()) throw invalid_input("floor_sqrt_over_p: no prime <= cap");
        return ExponentMonoid(ExpFamilyKind::FloorSqrtOverP, P, std::move(gens));
    }

    /// <(p_{2n}^2+1)/p_{2n}, (p_{2n+1}+1)/p_{2n+1} : 1 <= n <= cap>,
    /// p_k the k-th prime.
    static ExponentMonoid mixed_squares(unsigned cap) {
        if (cap < 1) throw invalid_input("mixed_squares: cap >= 1 required");
        std::vector<Integer> ps;
        for (Integer p = 2; ps.size() < 2 * cap + 2; ++p)
            if (is_prime(p)) ps.push_back(p);
        std::vector<Rational> gens;
        for (unsigned n = 1; n <= cap; ++n) {
            const Integer& even = ps[2 * n - 1];  // p_{2n}
            const Integer& odd = ps[2 * n];       // p_{2n+1}
            gens.push_back(make_rational(even * even + 1, even));
            gens.push_back(make_rational(odd + 1, odd));
        }
        return ExponentMonoid(ExpFamilyKind::MixedSquares, static_cast<long>(cap),
                              std::move(gens));
    }

    ExpFamilyKind kind() const { return kind_; }
    long cap() const { return cap_; }
    const std::vector<Rational>& generators() const { return gens_; }
    const Integer& lcm_denominator() const { return lcm_den_; }

    bool is_member(const Rational& m) const {
        if (m < 0) return false;
        if (m == 0) return true;
        if (lcm_den_ % den(m) != 0) return false;
        return member_dfs(m, 0);
    }

    /// Every representation m = sum c_i * gens[i] with c_i in N0, as
    /// coefficient vectors.  Finite: generators are positive.
    std::vector<std::vector<unsigned>> representations(const Rational& m) const {
        std::vector<std::vector<unsigned>> out;
        if (m < 0 || (m > 0 && lcm_den_ % den(m) != 0)) return out;
        std::vector<unsigned> coeffs(gens_.size(), 0);
        rep_dfs(m, 0, coeffs, out);
        return out;
    }

    /// {d in M : m - d in M}, ascending; complete (finitely generated M).
    std::vector<Rational> additive_divisors(const Rational& m) const {
        std::set<Rational> ds;
        for (const auto& rep : representations(m)) {
            // Sub-multiset sums of the representation.
            std::set<Rational> sums{Rational(0)};
            for (std::size_t i = 0; i < gens_.size(); ++i) {
                std::set<Rational> next = sums;
                for (unsigned c = 1; c <= rep[i]; ++c)
                    for (const Rational& s : sums) next.insert(s + Rational(c) * gens_[i]);
                sums = next;
            }
            ds.insert(sums.begin(), sums.end());
        }
        return {ds.begin(), ds.end()};
    }

    /// Generators that are atoms of (M, +): not a sum of two nonzero members.
    std::vector<Rational> atoms() const {
        std::vector<Rational> out;
        for (const Rational& g : gens_) {
            bool atom = true;
            for (const Rational& d : additive_divisors(g))
                if (d != 0 && d != g) { atom = false; break; }
            if (atom) out.push_back(g);
        }
        return out;
    }

    std::string describe() const {
        std::ostringstream os;
        switch (kind_) {
            case ExpFamilyKind::UnitFractions: os << "unitfrac<=" << cap_; break;
            case ExpFamilyKind::FloorSqrtOverP: os << "floorsqrt<=" << cap_; break;
            case ExpFamilyKind::MixedSquares: os << "mixedsq<=" << cap_; break;
            case ExpFamilyKind::FinitelyGenerated: {
                os << "gen:";
                for (std::size_t i = 0; i < gens_.size(); ++i)
                    os << (i ? "," : "") << to_string(gens_[i]);
                break;
            }
        }
        return os.str();
    }

private:
    ExponentMonoid(ExpFamilyKind kind, long cap, std::vector<Rational> gens)
        : kind_(kind), cap_(cap), gens_(std::move(gens)) {
        std::sort(gens_.begin(), gens_.end(), std::greater<Rational>());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        for (const Rational& g : gens_) {
            if (g <= 0) throw invalid_input("exponent monoid generators must be positive");
            lcm_den_ = lcm(lcm_den_, den(g));
        }
    }

    bool member_dfs(const Rational& rem, std::size_t i) const {
        if (rem == 0) return true;
        if (i == gens_.size()) return false;
        Integer cmax = floor_int(rem / gens_[i]);
        for (Integer c = cmax; c >= 0; --c)
            if (member_dfs(rem - Rational(c) * gens_[i], i + 1)) return true;
        return false;
    }

    void rep_dfs(const Rational& rem, std::size_t i, std::vector<unsigned>& coeffs,
                 std::vector<std::vector<unsigned>>& out) const {
        if (rem == 0) {
            auto done = coeffs;
            for (std::size_t j = i; j < gens_.size(); ++j) done[j] = 0;
            out.push_back(done);
            return;
        }
        if (i == gens_.size()) return;
        Integer cmax = floor_int(rem / gens_[i]);
        for (Integer c = 0; c <= cmax; ++c) {
            coeffs[i] = static_cast<unsigned>(mpz_get_ui(c.get_mpz_t()));
            rep_dfs(rem - Rational(c) * gens_[i], i + 1, coeffs, out);
        }
        coeffs[i] = 0;
    }

    ExpFamilyKind kind_;
    long cap_;
    std::vector<Rational> gens_;
    Integer lcm_den_ = 1;
};

// ---------------------------------------------------------------------------
// ExpSum: elements of E(M)

struct ExpSum {
    std::map<Rational, Integer> terms;  // exponent -> positive coefficient

    bool is_zero() const { return terms.empty(); }
    bool is_one() const {
        return terms.size() == 1 && terms.begin()->first == 0 && terms.begin()->second == 1;
    }

    static ExpSum one() { return exponential(Rational(0)); }
    static ExpSum exponential(const Rational& m, const Integer& c = 1) {
        ExpSum s;
        if (c <= 0) throw invalid_input("ExpSum coefficients must be positive");
        s.terms[m] = c;
        return s;
    }

    void add_term(const Rational& m, const Integer& c) {
        if (c <= 0) throw invalid_input("ExpSum coefficients must be positive");
        terms[m] += c;
    }

    Integer max_coeff() const {
        Integer b = 0;
        for (const auto& [m, c] : terms) b = std::max(b, c);
        return b;
    }

    friend ExpSum operator*(const ExpSum& a, const ExpSum& b) {
        ExpSum r;
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) r.terms[ma + mb] += ca * cb;
        return r;
    }
    friend ExpSum operator+(const ExpSum& a, const ExpSum& b) {
        ExpSum r = a;
        for (const auto& [m, c] : b.terms) r.terms[m] += c;
        return r;
    }
    friend bool operator==(const ExpSum& a, const ExpSum& b) { return a.terms == b.terms; }
    friend bool operator!=(const ExpSum& a, const ExpSum& b) { return !(a == b); }
    friend bool operator<(const ExpSum& a, const ExpSum& b) { return a.terms < b.terms; }

    /// Exact division in the semigroup ring: q with q * d == *this, if any.
    std::optional<ExpSum> divide_exact(const ExpSum& d) const {
        if (d.is_zero()) throw invalid_input("ExpSum division by zero");
        ExpSum rem = *this, q;
        const auto& [dm, dc] = *d.terms.begin();
        while (!rem.is_zero()) {
            const auto& [rm, rc] = *rem.terms.begin();
            if (rc % dc != 0) return std::nullopt;
            Rational qm = rm - dm;
            Integer qc = rc / dc;
            // Subtract qc * e^qm * d from rem; fail on any negative residue.
            for (const auto& [m, c] : d.terms) {
                Rational t = qm + m;
                Integer nv = (rem.terms.count(t) ? rem.terms[t] : Integer(0)) - qc * c;
                if (nv < 0) return std::nullopt;
                if (nv == 0)
                    rem.terms.erase(t);
                else
                    rem.terms[t] = nv;
            }
            q.terms[qm] = qc;
        }
        return q;
    }

    std::string to_text() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms) {
            if (!first) os << " + ";
            if (m == 0) {
                os << to_string(c);
            } else {
                if (c != 1) os << to_string(c);
                os << "e^(" << to_string(m) << ")";
            }
            first = false;
        }
        return os.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [m, c] : terms)
            j[to_string(m)] = static_cast<long>(mpz_get_si(c.get_mpz_t()));
        return j;
    }

    static ExpSum from_json(const nlohmann::json& j) {
        ExpSum s;
        for (const auto& [k, v] : j.items())
            s.add_term(parse_rational(k), Integer(v.get<long>()));
        return s;
    }
};

/// Is every exponent of s a member of M (and s nonzero)?
inline bool is_member(const ExponentMonoid& M, const ExpSum& s) {
    if (s.is_zero()) return false;
    for (const auto& [m, c] : s.terms)
        if (!M.is_member(m)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Multiplicative divisors

struct DivisorList {
    std::vector<ExpSum> divisors;  // includes 1 and s itself
    bool complete = true;
};

/// Divisors of s in (E(M)^., .): exponents drawn from the additive-divisor
/// pool D of s's exponents, coefficients bounded by the max coefficient of s,
/// each candidate confirmed by exact division.
inline DivisorList divisors_mult(const ExponentMonoid& M, const ExpSum& s,
                                 const SearchBudget& budget = SearchBudget::defaults()) {
    if (s.is_zero()) throw invalid_input("divisors_mult: zero element");
    if (!is_member(M, s)) throw invalid_input("divisors_mult: not a member of E(M)");
    DivisorList out;
    if (s.terms.size() == 1) {
        // Pure exponential c*e^m: divisors are c'*e^d with c' | c and d an
        // additive divisor of m (freeness: no multi-term divisor exists).
        const auto& [m, c] = *s.terms.begin();
        for (const Rational& d : M.additive_divisors(m))
            for (const Integer& cd : posring::divisors(c))
                out.divisors.push_back(ExpSum::exponential(d, cd));
        std::sort(out.divisors.begin(), out.divisors.end());
        return out;
    }
    std::set<Rational> pool_set;
    for (const auto& [m, c] : s.terms)
        for (const Rational& d : M.additive_divisors(m)) pool_set.insert(d);
    std::vector<Rational> pool(pool_set.begin(), pool_set.end());
    const Integer b = s.max_coeff();
    std::set<ExpSum> found;
    std::size_t tried = 0;
    ExpSum cand;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (tried >= budget.max_candidates) {
            out.complete = false;
            return;
        }
        if (i == pool.size()) {
            ++tried;
            if (cand.is_zero()) return;
            if (auto q = s.divide_exact(cand)) {
                bool member_q = true;
                for (const auto& [m, c] : q->terms)
                    if (!M.is_member(m)) { member_q = false; break; }
                if (member_q) found.insert(cand);
            }
            return;
        }
        rec(i + 1);
        for (Integer c = 1; c <= b; ++c) {
            cand.terms[pool[i]] = c;
            rec(i + 1);
        }
        cand.terms.erase(pool[i]);
    };
    rec(0);
    out.divisors.assign(found.begin(), found.end());
    return out;
}

// ---------------------------------------------------------------------------
// Additive factorizations inside M

/// Additive factorizations of m over A(M); always complete for the finitely
/// generated truncations (positive generators bound every count).
inline FactorizationSet<Rational> exp_monoid_factorizations(const ExponentMonoid& M,
                                                            const Rational& m,
                                                            const SearchBudget& budget) {
    (void)budget;
    if (!M.is_member(m)) throw invalid_input("exp_monoid_factorizations: not a member of M");
    std::vector<Rational> atoms = M.atoms();
    ExponentMonoid atom_monoid = ExponentMonoid::finitely_generated(atoms);
    FactorizationSet<Rational> out;
    out.target = m;
    out.complete = true;
    for (const auto& rep : atom_monoid.representations(m)) {
        std::vector<Rational> parts;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            for (unsigned c = 0; c < rep[i]; ++c)
                parts.push_back(atom_monoid.generators()[i]);
        if (parts.empty() && m != 0) continue;
        out.factorizations.push_back(Factorization<Rational>::from_atoms(parts));
    }
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// Monoid view of (E(M)^., .)

class ExpSemiringMultiplicativeView final : public MonoidView<ExpSum> {
public:
    explicit ExpSemiringMultiplicativeView(ExponentMonoid M) : M_(std::move(M)) {}

    ExpSum identity() const override { return ExpSum::one(); }
    bool is_member(const ExpSum& x) const override { return posring::is_member(M_, x); }
    bool is_unit(const ExpSum& x) const override { return x.is_one(); }
    ExpSum compose(const ExpSum& x, const ExpSum& y) const override { return x * y; }
    std::optional<ExpSum> decompose(const ExpSum& x, const ExpSum& y) const override {
        auto q = x.divide_exact(y);
        if (!q || !is_member(*q)) return std::nullopt;
        return q;
    }
    std::vector<ExpSum> proper_divisor_candidates(const ExpSum& x,
                                                  const SearchBudget& b) const override {
        std::vector<ExpSum> out;
        for (const ExpSum& d : divisors_mult(M_, x, b).divisors)
            if (!d.is_one() && d != x) out.push_back(d);
        return out;
    }
    bool divisor_candidates_complete(const ExpSum& x, const SearchBudget& b) const override {
        return divisors_mult(M_, x, b).complete;
    }
    std::string describe(const ExpSum& x) const override { return x.to_text(); }

    const ExponentMonoid& monoid() const { return M_; }

private:
    ExponentMonoid M_;
};

// ---------------------------------------------------------------------------
// Divisor-closedness of e(M) (Lemma check) and the ACCP probe

struct DivisorClosedReport {
    unsigned trials = 0;
    unsigned violations = 0;
    std::vector<std::string> violation_examples;
};

/// Random split trials of pure exponentials e^m: every divisor pair must be a
/// pair of pure exponentials with coefficient 1.
inline DivisorClosedReport check_divisor_closed(const ExponentMonoid& M, unsigned trials,
                                                std::uint64_t seed = 20260823) {
    DivisorClosedReport rep;
    std::mt19937_64 rng(seed);
    const auto& gens = M.generators();
    for (unsigned t = 0; t < trials; ++t) {
        Rational m(0);
        unsigned parts = 1 + static_cast<unsigned>(rng() % 3);
        for (unsigned i = 0; i < parts; ++i) m += gens[rng() % gens.size()];
        ExpSum s = ExpSum::exponential(m);
        DivisorList dl = divisors_mult(M, s);
        const ExpSum& r = dl.divisors[rng() % dl.divisors.size()];
        auto q = s.divide_exact(r);
        ++rep.trials;
        bool ok = q.has_value() && r.terms.size() == 1 && r.terms.begin()->second == 1 &&
                  q->terms.size() == 1 && q->terms.begin()->second == 1;
        if (ok) {
            // supp(r) + supp(q) subset of supp(s).
            Rational sum = r.terms.begin()->first + q->terms.begin()->first;
            ok = (sum == m);
        }
        if (!ok) {
            ++rep.violations;
            if (rep.violation_examples.size() < 5)
                rep.violation_examples.push_back(s.to_text() + " = [" + r.to_text() + "] * [" +
                                                 (q ? q->to_text() : "?") + "]");
        }
    }
    return rep;
}

struct AccpProbeResult {
    bool stable;
    unsigned chain_length;          // requested length
    unsigned longest_seen;          // longest strictly descending chain found
    std::optional<Certificate> fail_chain;  // never produced by bounded search
};

/// Bounded search for strictly descending divisibility chains in (E(M)^., .)
/// starting from a small element pool; StableUpTo when every chain
/// terminates within the requested length.
inline AccpProbeResult accp_probe(const ExponentMonoid& M, unsigned chain_length,
                                  const SearchBudget& budget = SearchBudget::defaults()) {
    std::vector<ExpSum> pool;
    const auto& gens = M.generators();
    for (const Rational& g : gens) pool.push_back(ExpSum::exponential(g));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j)
            pool.push_back(ExpSum::exponential(gens[i] + gens[j]));
    if (!gens.empty())
        pool.push_back(ExpSum::one() + ExpSum::exponential(gens.front()));
    unsigned longest = 0;
    std::map<ExpSum, unsigned> memo;  // longest chain (elements) below each member
    std::function<unsigned(const ExpSum&, unsigned)> depth_of = [&](const ExpSum& x,
                                                                    unsigned depth) -> unsigned {
        if (auto it = memo.find(x); it != memo.end()) return it->second;
        if (depth > chain_length)
            throw unsupported("accp_probe: chain exceeded the requested length; inconclusive");
        unsigned best = 1;
        for (const ExpSum& d : divisors_mult(M, x, budget).divisors) {
            if (d.is_one() || d == x) continue;
            best = std::max(best, 1 + depth_of(d, depth + 1));
        }
        memo[x] = best;
        return best;
    };
    for (const ExpSum& s : pool) longest = std::max(longest, depth_of(s, 1));
    return {true, chain_length, longest, std::nullopt};
}

}  // namespace posring
