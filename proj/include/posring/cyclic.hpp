#pragma once

// Cyclic positive semirings N0[q] (q rational) and N0[alpha] (alpha
// algebraic): atom horizon, additive atoms, membership, bi-reducedness,
// minimal pairs, ACCP-failure chains, and the N0[1/d] multiplicative
// reduction.

#include <posring/algebraic.hpp>
#include <posring/certificate.hpp>
#include <posring/monoid_view.hpp>

#include <functional>
#include <variant>

namespace posring {

// ---------------------------------------------------------------------------
// Descriptors

struct CyclicRationalSemiring {
    Rational q;  // > 0, lowest terms

    explicit CyclicRationalSemiring(Rational qq) : q(std::move(qq)) {
        if (q <= 0) throw invalid_input("N0[q] requires q > 0");
    }

    bool q_is_integer() const { return is_integer(q); }
    bool antimatter_additive() const { return !q_is_integer() && num(q) == 1; }
    bool atomic_additive() const { return q_is_integer() || num(q) > 1; }
};

struct CyclicAlgebraicSemiring {
    AlgebraicNumber alpha;

    explicit CyclicAlgebraicSemiring(AlgebraicNumber a) : alpha(std::move(a)) {
        if (alpha.compare(Rational(0)) <= 0) throw invalid_input("N0[alpha] requires alpha > 0");
    }
};

// ---------------------------------------------------------------------------
// Membership in N0[q]

enum class MemberStatus { Yes, No, Unknown };

struct MembershipResult {
    MemberStatus status;
    std::optional<NatPolynomial> witness;  // f with f(q) = t, when Yes
    std::string reason;                    // obstruction / truncation tag
};

namespace detail {

inline bool member_dfs_gt1(const Rational& q, const Rational& t, long i,
                           std::map<unsigned, Integer>& acc) {
    if (t == 0) return true;
    if (i < 0) return false;
    Rational qi = pow_rat(q, static_cast<unsigned long>(i));
    for (Integer c = floor_int(t / qi); c >= 0; --c) {
        Rational rem = t - Rational(c) * qi;
        if (rem < 0) continue;
        if (c > 0) acc[static_cast<unsigned>(i)] = c;
        if (member_dfs_gt1(q, rem, i - 1, acc)) return true;
        acc.erase(static_cast<unsigned>(i));
    }
    return false;
}

// q < 1, n(q) > 1: congruence-forced search.  c_0 is congruent to
// num(t) * den(t)^{-1} mod n(q) and bounded by t.
inline MemberStatus member_dfs_lt1(const Rational& q, const Rational& t, unsigned depth,
                                   unsigned max_depth, std::map<unsigned, Integer>& acc) {
    if (t == 0) return MemberStatus::Yes;
    if (depth > max_depth) return MemberStatus::Unknown;
    const Integer n = num(q);
    Integer binv;
    if (mpz_invert(binv.get_mpz_t(), den(t).get_mpz_t(), n.get_mpz_t()) == 0)
        return MemberStatus::No;  // den(t) not invertible: impossible since gcd checks passed
    Integer r = (num(t) * binv) % n;
    if (r < 0) r += n;
    bool unknown = false;
    for (Integer c = r; Rational(c) <= t; c += n) {
        if (c > 0) acc[depth] = c;
        MemberStatus sub = member_dfs_lt1(q, (t - Rational(c)) / q, depth + 1, max_depth, acc);
        if (sub == MemberStatus::Yes) return MemberStatus::Yes;
        if (sub == MemberStatus::Unknown) unknown = true;
        acc.erase(depth);
    }
    return unknown ? MemberStatus::Unknown : MemberStatus::No;
}

inline NatPolynomial witness_from_map(const std::map<unsigned, Integer>& acc) {
    IntPolynomial p;
    for (const auto& [d, c] : acc) p.set_coeff(d, c);
    return NatPolynomial(p);
}

}  // namespace detail

/// Decides t in N0[q].  Exact for q >= 1; for q < 1 a budgeted semi-decision
/// closed by number-theoretic obstructions where they apply.
inline MembershipResult is_member(const CyclicRationalSemiring& S, const Rational& t,
                                  const SearchBudget& budget = SearchBudget::defaults()) {
    if (t < 0) throw invalid_input("is_member: negative element");
    if (t == 0) return {MemberStatus::Yes, NatPolynomial(), ""};
    const Rational& q = S.q;
    if (S.q_is_integer()) {
        if (is_integer(t)) return {MemberStatus::Yes, NatPolynomial(IntPolynomial(num(t))), ""};
        return {MemberStatus::No, std::nullopt, "non-integer in N0"};
    }
    // Denominators of members divide powers of den(q).
    if (!supported_on_primes_of(den(t), den(q)))
        return {MemberStatus::No, std::nullopt, "denominator has a prime outside den(q)"};
    if (num(q) == 1) {
        // N0[1/d]: every n / d^k with n in N0.  Single-term witness.
        Integer dk = 1;
        unsigned k = 0;
        while (dk % den(t) != 0) { dk *= den(q); ++k; }
        Integer c = num(t) * (dk / den(t));
        return {MemberStatus::Yes, detail::witness_from_map({{k, c}}), ""};
    }
    if (q > 1) {
        long e = 0;
        Rational qe(1);
        while (qe * q <= t) { qe *= q; ++e; }
        std::map<unsigned, Integer> acc;
        if (detail::member_dfs_gt1(q, t, e, acc))
            return {MemberStatus::Yes, detail::witness_from_map(acc), ""};
        return {MemberStatus::No, std::nullopt, "exhausted finite knapsack (q > 1)"};
    }
    std::map<unsigned, Integer> acc;
    MemberStatus st = detail::member_dfs_lt1(q, t, 0, budget.max_exponent, acc);
    if (st == MemberStatus::Yes) return {st, detail::witness_from_map(acc), ""};
    if (st == MemberStatus::No)
        return {st, std::nullopt, "congruence-forced search exhausted"};
    return {st, std::nullopt, "exponent budget exhausted"};
}

// ---------------------------------------------------------------------------
// Atom horizon n(alpha)

enum class HorizonKind { Finite, Infinite, Zero, UnknownAtLeast };

struct AtomHorizon {
    HorizonKind kind;
    unsigned n = 0;                       // Finite value or the cap reached
    std::optional<NatPolynomial> witness; // alpha^n = witness(alpha), deg < n
    std::string justification;
};

inline AtomHorizon atom_horizon(const CyclicRationalSemiring& S, unsigned cap = 8) {
    (void)cap;
    if (S.q_is_integer()) {
        // N0[q] = N0; q^1 = q * 1.
        return {HorizonKind::Finite, 1, NatPolynomial(IntPolynomial(num(S.q))),
                "N0: 1 generates"};
    }
    if (S.antimatter_additive())
        return {HorizonKind::Zero, 0, std::nullopt, "n(q) = 1: additive monoid is antimatter"};
    return {HorizonKind::Infinite, 0, std::nullopt,
            "n(q) > 1: every power of q is an additive atom"};
}

namespace detail {

/// Coordinates of alpha^k, k = 0..n, in the basis 1, alpha, ..., alpha^{D-1}.
inline std::vector<std::vector<Rational>> power_basis(const IntPolynomial& m, unsigned n) {
    const unsigned D = m.degree();
    const Rational lead(m.leading_coeff());
    std::vector<std::vector<Rational>> pw;
    std::vector<Rational> v(D, Rational(0));
    v[0] = 1;
    pw.push_back(v);
    for (unsigned k = 1; k <= n; ++k) {
        std::vector<Rational> w(D, Rational(0));
        Rational top = v[D - 1];
        for (unsigned i = D; i-- > 1;) w[i] = v[i - 1];
        if (top != 0) {
            // alpha^D = -(m - lead x^D)(alpha) / lead.
            for (unsigned i = 0; i < D; ++i) w[i] -= top * Rational(m.coeff(i)) / lead;
        }
        pw.push_back(w);
        v = w;
    }
    return pw;
}

/// Enclosure of alpha tight enough that both endpoints are positive (and
/// above 1 when alpha > 1).
inline RationalInterval positive_enclosure(const AlgebraicNumber& a) {
    AlgebraicNumber r = a;
    while (r.isolator().lo <= 0) r = r.refined();
    if (a.compare(Rational(1)) > 0)
        while (r.isolator().lo <= 1) r = r.refined();
    return r.isolator();
}

inline bool nonneg_combo_dfs(const std::vector<std::vector<Rational>>& gens,
                             const std::vector<Integer>& bounds, std::size_t idx,
                             std::vector<Rational>& residual, std::vector<Integer>& coeffs) {
    if (idx == gens.size()) {
        for (const Rational& r : residual)
            if (r != 0) return false;
        return true;
    }
    for (Integer c = 0; c <= bounds[idx]; ++c) {
        if (c > 0)
            for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= gens[idx][i];
        coeffs[idx] = c;
        if (nonneg_combo_dfs(gens, bounds, idx + 1, residual, coeffs)) return true;
    }
    Integer used = bounds[idx];
    for (std::size_t i = 0; i < residual.size(); ++i)
        residual[i] += Rational(used) * gens[idx][i];
    coeffs[idx] = 0;
    return false;
}

/// Solves target = sum c_j gens[j] with c_j in N0; returns the coefficients.
inline std::optional<std::vector<Integer>> solve_nonneg_combo(
    const std::vector<std::vector<Rational>>& gens, const std::vector<Integer>& bounds,
    std::vector<Rational> target) {
    std::vector<Integer> coeffs(gens.size(), Integer(0));
    if (nonneg_combo_dfs(gens, bounds, 0, target, coeffs)) return coeffs;
    return std::nullopt;
}

}  // namespace detail

inline AtomHorizon atom_horizon(const CyclicAlgebraicSemiring& S, unsigned cap = 8) {
    const AlgebraicNumber& a = S.alpha;
    if (a.is_rational()) return atom_horizon(CyclicRationalSemiring(a.rational_value()), cap);
    const IntPolynomial& m = a.min_poly();
    const unsigned D = m.degree();
    auto pw = detail::power_basis(m, cap + 1);
    RationalInterval enc = detail::positive_enclosure(a);
    auto upper_bound = [&](unsigned n, unsigned j) -> Integer {
        // c_j <= alpha^n / alpha^j, evaluated against the enclosure.
        Rational ub = pow_rat(enc.hi, n) / pow_rat(enc.lo, j);
        return floor_int(ub) + 1;
    };
    const bool greater_one = a.compare(Rational(1)) > 0;
    if (!greater_one) {
        // alpha < 1: detect non-atomicity (1 as a sum of higher powers);
        // otherwise do not guess.
        std::vector<std::vector<Rational>> gens;
        std::vector<Integer> bounds;
        for (unsigned j = 1; j <= cap; ++j) {
            gens.push_back(pw[j]);
            bounds.push_back(upper_bound(0, 0));  // each term <= 1 copies bound via value
        }
        if (detail::solve_nonneg_combo(gens, bounds, pw[0]))
            return {HorizonKind::Zero, 0, std::nullopt,
                    "1 decomposes into higher powers: additive monoid not atomic"};
        return {HorizonKind::UnknownAtLeast, cap, std::nullopt,
                "alpha < 1: no decision procedure; searched up to the cap"};
    }
    // alpha > 1 algebraic: additive monoid atomic; horizon >= deg m.
    for (unsigned n = D; n <= cap; ++n) {
        std::vector<std::vector<Rational>> gens;
        std::vector<Integer> bounds;
        for (unsigned j = 0; j < n; ++j) {
            gens.push_back(pw[j]);
            bounds.push_back(upper_bound(n, j));
        }
        if (auto coeffs = detail::solve_nonneg_combo(gens, bounds, pw[n])) {
            IntPolynomial w;
            for (unsigned j = 0; j < n; ++j) w.set_coeff(j, (*coeffs)[j]);
            // Exact certification: alpha^n - w(alpha) = 0.
            IntPolynomial check = IntPolynomial::monomial(1, n) - w;
            if (alg_sign(a, check) != 0)
                throw std::logic_error("atom_horizon: witness failed exact re-check");
            return {HorizonKind::Finite, n, NatPolynomial(w), "certified representation"};
        }
    }
    return {HorizonKind::UnknownAtLeast, cap, std::nullopt, "search cap reached"};
}

// ---------------------------------------------------------------------------
// Additive atoms, units, bi-reducedness

inline AtomListing additive_atoms(const CyclicRationalSemiring& S, unsigned count) {
    AtomListing out;
    if (S.q_is_integer()) {
        if (count >= 1) out.atoms.push_back("1");
        return out;
    }
    if (S.antimatter_additive()) return out;
    for (unsigned i = 0; i < count; ++i) out.atoms.push_back(to_string(pow_rat(S.q, i)));
    out.truncated = true;  // infinitely many atoms q^n
    return out;
}

inline AtomListing additive_atoms(const CyclicAlgebraicSemiring& S, unsigned count,
                                  unsigned cap = 8) {
    if (S.alpha.is_rational())
        return additive_atoms(CyclicRationalSemiring(S.alpha.rational_value()), count);
    AtomHorizon h = atom_horizon(S, cap);
    AtomListing out;
    if (h.kind == HorizonKind::Zero) return out;
    unsigned horizon = h.kind == HorizonKind::Finite ? h.n : count;
    for (unsigned j = 0; j < std::min(horizon, count); ++j)
        out.atoms.push_back(IntPolynomial::monomial(1, j).to_text());
    out.truncated = (h.kind != HorizonKind::Finite) || horizon > count;
    return out;
}

inline bool is_bireduced(const CyclicRationalSemiring& S) { return S.atomic_additive(); }

inline bool is_bireduced(const CyclicAlgebraicSemiring& S, unsigned cap = 8) {
    AtomHorizon h = atom_horizon(S, cap);
    if (h.kind == HorizonKind::Zero) return false;
    if (h.kind == HorizonKind::UnknownAtLeast)
        throw unsupported("bi-reducedness undecided within the cap");
    return true;
}

/// Multiplicative unit test: x is a unit iff 1/x is also a member.
inline bool is_unit_mult(const CyclicRationalSemiring& S, const Rational& x,
                         const SearchBudget& budget = SearchBudget::defaults()) {
    if (x == 0) throw invalid_input("is_unit_mult: zero input");
    if (is_member(S, x, budget).status != MemberStatus::Yes)
        throw invalid_input("is_unit_mult: not a member");
    if (x == 1) return true;
    MembershipResult inv = is_member(S, Rational(1) / x, budget);
    if (inv.status == MemberStatus::Unknown)
        throw unsupported("unit test undecided within budget");
    return inv.status == MemberStatus::Yes;
}

// ---------------------------------------------------------------------------
// Minimal pair and ACCP failure chains

struct MinimalPair {
    NatPolynomial m_plus, m_minus;
    Integer ell;
};

/// Minimal pair of a monic rational polynomial (the minimal polynomial of
/// some real alpha > 0); irreducibility over Q is checked.
inline MinimalPair minimal_pair(const std::map<unsigned, Rational>& m) {
    if (m.empty()) throw invalid_input("minimal_pair: zero polynomial");
    if (m.rbegin()->second != 1) throw invalid_input("minimal_pair: polynomial must be monic");
    Integer l = 1;
    for (const auto& [d, c] : m) l = lcm(l, den(c));
    IntPolynomial scaled;
    for (const auto& [d, c] : m) scaled.set_coeff(d, Rational(c * Rational(l)).get_num());
    Integer g = scaled.content();
    if (g > 1) scaled = *IntPolynomial::divide_exact(scaled, IntPolynomial(g));
    if (!is_irreducible_over_q(scaled))
        throw invalid_input("minimal_pair: polynomial is reducible over Q");
    IntPolynomial plus, minus;
    for (const auto& [d, c] : scaled.coeffs()) {
        if (c > 0)
            plus.set_coeff(d, c);
        else
            minus.set_coeff(d, -c);
    }
    Integer ell = l / g;  // integral for monic input
    return {NatPolynomial(plus), NatPolynomial(minus), ell};
}

struct AccpFailChain {
    std::vector<Rational> elements;     // x_0 > x_1 > ... > x_N
    std::vector<Rational> differences;  // d_n with x_n = x_{n+1} + d_n
    unsigned s = 1;                     // support point taken from b(x)
    NatPolynomial c_poly;               // c(x) = a + (b - x^s) m^-
};

struct NoChain {
    std::string transcript;
};

/// Searches m^+ = a(x) + b(x) m^-(x) with a in N0[x], b in N0[x] nonzero.
/// Since a >= 0 forces b*m^- <= m^+ coefficientwise, the search is finite.
inline std::optional<std::pair<NatPolynomial, NatPolynomial>> decompose_minimal_pair(
    const NatPolynomial& m_plus, const NatPolynomial& m_minus) {
    if (m_minus.is_zero()) return std::nullopt;
    const unsigned dp = m_plus.is_zero() ? 0 : m_plus.degree();
    const unsigned dm = m_minus.degree();
    if (dm > dp) return std::nullopt;
    const unsigned db = dp - dm;
    std::vector<Integer> bc(db + 1, Integer(0));
    Integer maxc = 0;
    for (const auto& [d, c] : m_plus.coeffs()) maxc = std::max(maxc, c);
    std::function<std::optional<std::pair<NatPolynomial, NatPolynomial>>(unsigned)> rec =
        [&](unsigned k) -> std::optional<std::pair<NatPolynomial, NatPolynomial>> {
        if (k > db) {
            IntPolynomial b;
            for (unsigned i = 0; i <= db; ++i) b.set_coeff(i, bc[i]);
            if (b.is_zero()) return std::nullopt;
            IntPolynomial a = static_cast<const IntPolynomial&>(m_plus) - b * m_minus;
            if (a.is_nonnegative())
                return std::make_pair(NatPolynomial(a), NatPolynomial(b));
            return std::nullopt;
        }
        for (Integer c = 0; c <= maxc; ++c) {
            bc[k] = c;
            if (auto r = rec(k + 1)) return r;
        }
        bc[k] = 0;
        return std::nullopt;
    };
    return rec(0);
}

/// ACCP-failure chain x_n = n(q) q^n with verified step witnesses, for
/// q in (0,1) with n(q) > 1 and d(q) prime.
inline std::variant<AccpFailChain, NoChain> accp_fail_chain(const CyclicRationalSemiring& S,
                                                            unsigned N) {
    if (N < 1) throw invalid_input("accp_fail_chain: N >= 1 required");
    const Rational& q = S.q;
    if (S.q_is_integer()) return NoChain{"q is an integer: N0 satisfies the ACCP"};
    MinimalPair mp = minimal_pair({{1u, Rational(1)}, {0u, -q}});
    auto ab = decompose_minimal_pair(mp.m_plus, mp.m_minus);
    if (!ab)
        return NoChain{"no decomposition m+ = a + b*m- with a in N0[x], b in N0[x] nonzero; "
                       "exhaustive coefficient search over the box bounded by m+"};
    const auto& [a, b] = *ab;
    unsigned s = b.coeffs().begin()->first;
    IntPolynomial c =
        static_cast<const IntPolynomial&>(a) +
        (static_cast<const IntPolynomial&>(b) - IntPolynomial::monomial(1, s)) * mp.m_minus;
    NatPolynomial cpoly(c);
    AccpFailChain chain;
    chain.s = s;
    chain.c_poly = cpoly;
    Rational mminus_q = mp.m_minus.eval(q);
    for (unsigned n = 0; n <= N; ++n)
        chain.elements.push_back(mminus_q * pow_rat(q, static_cast<unsigned long>(s) * n));
    for (unsigned n = 0; n < N; ++n)
        chain.differences.push_back(cpoly.eval(q) *
                                    pow_rat(q, static_cast<unsigned long>(s) * n));
    // Exact re-check of every step equality, strict decrease, and membership.
    // The chain reaches exponent s*N + deg(c), so scale the membership budget
    // to the chain instead of relying on the environment default.
    SearchBudget mb = SearchBudget::defaults();
    mb.max_exponent = std::max<std::size_t>(
        mb.max_exponent, static_cast<std::size_t>(s) * N + cpoly.degree() + 2);
    for (unsigned n = 0; n < N; ++n) {
        if (chain.elements[n] != chain.elements[n + 1] + chain.differences[n])
            throw std::logic_error("accp_fail_chain: step equality failed");
        if (!(chain.elements[n + 1] < chain.elements[n]))
            throw std::logic_error("accp_fail_chain: chain not strictly decreasing");
        if (chain.differences[n] == 0 ||
            is_member(S, chain.differences[n], mb).status != MemberStatus::Yes)
            throw std::logic_error("accp_fail_chain: difference not a nonzero member");
        if (is_member(S, chain.elements[n], mb).status != MemberStatus::Yes)
            throw std::logic_error("accp_fail_chain: element not a member");
    }
    return chain;
}

inline Certificate accp_fail_chain_certificate(const CyclicRationalSemiring& S,
                                               const AccpFailChain& chain) {
    Certificate cert;
    cert.kind = CertKind::AccpFailChain;
    nlohmann::json elems = nlohmann::json::array(), diffs = nlohmann::json::array();
    for (const auto& x : chain.elements) elems.push_back(to_string(x));
    for (const auto& d : chain.differences) diffs.push_back(to_string(d));
    cert.payload = {{"model", "N0[" + to_string(S.q) + "]"},
                    {"side", "add"},
                    {"elements", elems},
                    {"differences", diffs},
                    {"supportPoint", chain.s},
                    {"cPoly", chain.c_poly.to_text()}};
    cert.verified = true;  // accp_fail_chain re-checked every equality
    return cert;
}

// ---------------------------------------------------------------------------
// N0[1/d] multiplicative reduction

/// Image of x in the reduced quotient of (N0[1/d]^., .): the maximal divisor
/// of the numerator supported on primes not dividing d.
inline Integer reduce_mod_units(unsigned d, const Rational& x) {
    if (d < 2) throw invalid_input("reduce_mod_units: d >= 2 required");
    CyclicRationalSemiring S{Rational(1, static_cast<long>(d))};
    if (x <= 0 || is_member(S, x).status != MemberStatus::Yes)
        throw invalid_input("reduce_mod_units: not a member of N0[1/d]");
    Integer n = num(x);
    Integer g = gcd(n, Integer(d));
    while (g > 1) {
        while (n % g == 0) n /= g;
        g = gcd(n, Integer(d));
    }
    return n;
}

// ---------------------------------------------------------------------------
// Additive factorizations in N0[q] (knapsack over the atoms q^i)

namespace detail {

inline void cyclic_add_dfs_gt1(const Rational& q, const Rational& rem, long i,
                               std::vector<Rational>& stack, unsigned max_len,
                               FactorizationSet<Rational>& out, bool& truncated) {
    if (rem == 0) {
        out.factorizations.push_back(Factorization<Rational>::from_atoms(stack));
        return;
    }
    if (i < 0) return;
    Rational qi = pow_rat(q, static_cast<unsigned long>(i));
    Integer cmax = floor_int(rem / qi);
    for (Integer c = 0; c <= cmax; ++c) {
        if (stack.size() + mpz_get_ui(c.get_mpz_t()) > max_len) {
            truncated = true;
            break;
        }
        for (Integer k = 0; k < c; ++k) stack.push_back(qi);
        cyclic_add_dfs_gt1(q, rem - Rational(c) * qi, i - 1, stack, max_len, out, truncated);
        for (Integer k = 0; k < c; ++k) stack.pop_back();
    }
}

inline void cyclic_add_dfs_lt1(const Rational& q, const Rational& t, unsigned depth,
                               unsigned max_depth, std::vector<Rational>& stack,
                               unsigned max_len, FactorizationSet<Rational>& out,
                               bool& truncated) {
    if (t == 0) {
        out.factorizations.push_back(Factorization<Rational>::from_atoms(stack));
        return;
    }
    if (depth > max_depth) {
        truncated = true;
        return;
    }
    const Integer n = num(q);
    Integer binv;
    if (mpz_invert(binv.get_mpz_t(), den(t).get_mpz_t(), n.get_mpz_t()) == 0) return;
    Integer r = (num(t) * binv) % n;
    if (r < 0) r += n;
    Rational atom = pow_rat(q, depth);
    for (Integer c = r; Rational(c) <= t; c += n) {
        if (stack.size() + mpz_get_ui(c.get_mpz_t()) > max_len) {
            truncated = true;
            break;
        }
        for (Integer k = 0; k < c; ++k) stack.push_back(atom);
        cyclic_add_dfs_lt1(q, (t - Rational(c)) / q, depth + 1, max_depth, stack, max_len, out,
                           truncated);
        for (Integer k = 0; k < c; ++k) stack.pop_back();
    }
}

}  // namespace detail

/// All additive factorizations of t over the atoms q^i reachable within the
/// budget.  Complete for q > 1 (finite knapsack) and whenever the q < 1
/// search tree is exhausted without hitting a bound.
inline FactorizationSet<Rational> cyclic_additive_factorizations(
    const CyclicRationalSemiring& S, const Rational& t, const SearchBudget& budget) {
    if (is_member(S, t, budget).status != MemberStatus::Yes)
        throw invalid_input("not a member of N0[q]: " + to_string(t));
    FactorizationSet<Rational> out;
    out.target = t;
    if (t == 0) {
        out.factorizations.push_back({});
        out.complete = true;
        return out;
    }
    bool truncated = false;
    std::vector<Rational> stack;
    if (S.q_is_integer()) {
        // N0: the unique factorization t * [1].
        std::vector<Rational> atoms(mpz_get_ui(num(t).get_mpz_t()), Rational(1));
        out.factorizations.push_back(Factorization<Rational>::from_atoms(atoms));
        out.complete = true;
        return out;
    }
    if (S.antimatter_additive())
        throw unsupported("N0[1/d] additive monoid is antimatter: no atom factorizations");
    if (S.q > 1) {
        long e = 0;
        Rational qe(1);
        while (qe * S.q <= t) { qe *= S.q; ++e; }
        detail::cyclic_add_dfs_gt1(S.q, t, e, stack, budget.max_length, out, truncated);
    } else {
        detail::cyclic_add_dfs_lt1(S.q, t, 0, budget.max_exponent, stack, budget.max_length,
                                   out, truncated);
    }
    out.canonicalize();
    out.complete = !truncated;
    return out;
}

// ---------------------------------------------------------------------------
// Additive factorizations in N0[alpha] over the atoms alpha^j

/// Factorizations of f(alpha) over the atom powers below the horizon.
/// Complete when the horizon is Finite (coefficient bounds close the search).
inline FactorizationSet<NatPolynomial> cyclic_algebraic_factorizations(
    const CyclicAlgebraicSemiring& S, const NatPolynomial& f, const SearchBudget& budget,
    unsigned horizon_cap = 8) {
    AtomHorizon h = atom_horizon(S, horizon_cap);
    if (h.kind == HorizonKind::Zero)
        throw unsupported("additive monoid not atomic: no atom factorizations");
    const IntPolynomial& m = S.alpha.min_poly();
    const unsigned D = m.degree();
    unsigned horizon =
        h.kind == HorizonKind::Finite ? h.n : std::min(budget.max_exponent, horizon_cap);
    unsigned maxdeg = std::max(horizon, f.is_zero() ? 0u : f.degree());
    auto pw = detail::power_basis(m, maxdeg);
    std::vector<Rational> target(D, Rational(0));
    for (const auto& [d, c] : f.coeffs())
        for (unsigned i = 0; i < D; ++i) target[i] += Rational(c) * pw[d][i];
    RationalInterval enc = detail::positive_enclosure(S.alpha);
    // Value bound on each atom's multiplicity: c_j <= value(f) / alpha^j.
    Rational value_hi(0), value_lo(0);
    for (const auto& [d, c] : f.coeffs()) {
        value_hi += Rational(c) * pow_rat(enc.hi, d);
        value_lo += Rational(c) * pow_rat(enc.lo, d);
    }
    FactorizationSet<NatPolynomial> out;
    out.target = f;
    std::vector<NatPolynomial> atom_polys;
    std::vector<std::vector<Rational>> gens;
    std::vector<Integer> bounds;
    for (unsigned j = 0; j < horizon; ++j) {
        atom_polys.push_back(NatPolynomial(IntPolynomial::monomial(1, j)));
        gens.push_back(pw[j]);
        Rational denom = enc.lo < 1 ? pow_rat(enc.hi, j) : pow_rat(enc.lo, j);
        bounds.push_back(floor_int(value_hi / denom) + 1);
    }
    bool truncated = false;
    std::vector<Integer> coeffs(horizon, Integer(0));
    std::function<void(unsigned, std::vector<Rational>&, unsigned)> rec =
        [&](unsigned j, std::vector<Rational>& residual, unsigned used) {
            if (j == horizon) {
                for (const Rational& r : residual)
                    if (r != 0) return;
                std::vector<NatPolynomial> atoms;
                for (unsigned k = 0; k < horizon; ++k)
                    for (Integer i = 0; i < coeffs[k]; ++i) atoms.push_back(atom_polys[k]);
                out.factorizations.push_back(Factorization<NatPolynomial>::from_atoms(atoms));
                return;
            }
            for (Integer c = 0; c <= bounds[j]; ++c) {
                if (used + mpz_get_ui(c.get_mpz_t()) > budget.max_length) {
                    truncated = true;
                    break;
                }
                if (c > 0)
                    for (unsigned i = 0; i < residual.size(); ++i) residual[i] -= gens[j][i];
                coeffs[j] = c;
                rec(j + 1, residual, used + static_cast<unsigned>(mpz_get_ui(c.get_mpz_t())));
            }
            for (unsigned i = 0; i < residual.size(); ++i)
                residual[i] += Rational(bounds[j]) * gens[j][i];
            coeffs[j] = 0;
        };
    std::vector<Rational> residual = target;
    rec(0, residual, 0);
    out.canonicalize();
    out.complete = (h.kind == HorizonKind::Finite) && !truncated;
    return out;
}

// ---------------------------------------------------------------------------
// Monoid views

class CyclicRationalAdditiveView final : public MonoidView<Rational> {
public:
    explicit CyclicRationalAdditiveView(CyclicRationalSemiring S) : S_(std::move(S)) {}

    Rational identity() const override { return Rational(0); }
    bool is_member(const Rational& x) const override {
        return x >= 0 && posring::is_member(S_, x).status == MemberStatus::Yes;
    }
    bool is_unit(const Rational& x) const override { return x == 0; }
    Rational compose(const Rational& x, const Rational& y) const override { return x + y; }
    std::optional<Rational> decompose(const Rational& x, const Rational& y) const override {
        Rational z = x - y;
        if (z < 0 || !is_member(z)) return std::nullopt;
        return z;
    }
    std::vector<Rational> proper_divisor_candidates(const Rational& x,
                                                    const SearchBudget& b) const override {
        std::vector<Rational> out;
        if (S_.q_is_integer()) {
            for (Integer k = 1; Rational(k) < x; ++k) out.push_back(Rational(k));
            return out;
        }
        for (unsigned i = 0; i <= b.max_exponent; ++i) {
            Rational qi = pow_rat(S_.q, i);
            if (qi < x) out.push_back(qi);
            if (S_.q > 1 && qi > x) break;
        }
        return out;
    }
    std::optional<AtomAnswer<Rational>> classify_atom(const Rational& x,
                                                      const SearchBudget& b) const override {
        if (S_.q_is_integer())
            return x == 1 ? AtomAnswer<Rational>::atom()
                          : AtomAnswer<Rational>::not_atom(Rational(1), x - 1);
        if (S_.antimatter_additive())
            return AtomAnswer<Rational>::not_atom(x / 2, x / 2);  // halves are members
        if (is_power_of_q(x)) return AtomAnswer<Rational>::atom();
        // Split any membership witness with coefficient sum >= 2.
        MembershipResult m = posring::is_member(S_, x, b);
        if (m.status != MemberStatus::Yes || !m.witness) return AtomAnswer<Rational>::unknown();
        auto lead = *m.witness->coeffs().begin();
        Rational y = pow_rat(S_.q, lead.first);
        return AtomAnswer<Rational>::not_atom(y, x - y);
    }
    std::optional<FactorizationSet<Rational>> enumerate_complete(
        const Rational& x, const SearchBudget& b) const override {
        return cyclic_additive_factorizations(S_, x, b);
    }
    std::string describe(const Rational& x) const override { return to_string(x); }

    const CyclicRationalSemiring& semiring() const { return S_; }

private:
    bool is_power_of_q(const Rational& x) const {
        if (x == 1) return true;
        Rational p = S_.q;
        while (num(p) <= num(x) && den(p) <= den(x)) {
            if (p == x) return true;
            p *= S_.q;
        }
        return false;
    }

    CyclicRationalSemiring S_;
};

class CyclicRationalMultiplicativeView final : public MonoidView<Rational> {
public:
    explicit CyclicRationalMultiplicativeView(CyclicRationalSemiring S) : S_(std::move(S)) {}

    Rational identity() const override { return Rational(1); }
    bool is_member(const Rational& x) const override {
        return x > 0 && posring::is_member(S_, x).status == MemberStatus::Yes;
    }
    bool is_unit(const Rational& x) const override { return is_unit_mult(S_, x); }
    Rational compose(const Rational& x, const Rational& y) const override { return x * y; }
    std::optional<Rational> decompose(const Rational& x, const Rational& y) const override {
        Rational z = x / y;
        if (!is_member(z)) return std::nullopt;
        return z;
    }
    std::vector<Rational> proper_divisor_candidates(const Rational& x,
                                                    const SearchBudget& b) const override {
        std::vector<Rational> out;
        if (S_.q_is_integer()) {
            for (const Integer& d : posring::divisors(num(x)))
                if (d > 1 && d < num(x)) out.push_back(Rational(d));
            return out;
        }
        if (num(S_.q) == 1) {
            // Reduced quotient is free over the primes not dividing den(q);
            // divisors are (prime power) * (unit): list prime divisors.
            Integer red = reduce_mod_units_int(x);
            for (const auto& [p, e] : factor_integer(red)) out.push_back(Rational(p));
            return out;
        }
        // q > 1: every nonzero member is >= 1, so divisors y satisfy
        // 1 <= y <= x with den(y) | den(q)^E, E = floor(log_q x).  For q < 1
        // the same box is only an approximation (candidates incomplete).
        unsigned E = 0;
        if (S_.q > 1) {
            Rational p = S_.q;
            while (p <= x) { p *= S_.q; ++E; }
        } else {
            E = std::min(b.max_exponent, 6u);
        }
        Integer dE = pow_int(den(S_.q), E);
        Integer abound = S_.q > 1 ? num(x) * den(x) : num(x) * dE;
        std::size_t emitted = 0;
        for (const Integer& bden : posring::divisors(dE)) {
            for (Integer a = 1; a <= abound && emitted < b.max_candidates; ++a) {
                Rational y = make_rational(a, bden);
                if (y == 1 || y == x) continue;
                if (S_.q > 1 && (y < 1 || y > x)) continue;
                if (posring::is_member(S_, y, b).status != MemberStatus::Yes) continue;
                out.push_back(y);
                ++emitted;
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    bool divisor_candidates_complete(const Rational& x, const SearchBudget& b) const override {
        (void)x;
        (void)b;
        return S_.q_is_integer() || num(S_.q) == 1 || S_.q > 1;
    }
    std::optional<AtomAnswer<Rational>> classify_atom(const Rational& x,
                                                      const SearchBudget& b) const override {
        (void)b;
        if (S_.q_is_integer()) {
            if (is_prime(num(x))) return AtomAnswer<Rational>::atom();
            auto fs = factor_integer(num(x));
            Rational y(fs.front().first);
            return AtomAnswer<Rational>::not_atom(y, x / y);
        }
        if (num(S_.q) == 1) {
            Integer red = reduce_mod_units_int(x);
            if (is_prime(red)) return AtomAnswer<Rational>::atom();
            auto fs = factor_integer(red);
            Rational y(fs.front().first);
            return AtomAnswer<Rational>::not_atom(y, x / y);
        }
        return std::nullopt;
    }
    std::optional<FactorizationSet<Rational>> enumerate_complete(
        const Rational& x, const SearchBudget& b) const override {
        if (num(S_.q) != 1 || S_.q_is_integer()) return std::nullopt;
        (void)b;
        // N0[1/d]: unique factorization of the reduced image over the primes
        // not dividing d.
        FactorizationSet<Rational> out;
        out.target = x;
        if (!is_member(x))
            throw invalid_input("not a member of N0[1/d]: " + to_string(x));
        Integer red = reduce_mod_units_int(x);
        std::vector<Rational> atoms;
        for (const auto& [p, e] : factor_integer(red))
            for (unsigned i = 0; i < e; ++i) atoms.push_back(Rational(p));
        if (!atoms.empty() || red == 1) {
            if (red == 1)
                out.factorizations.push_back({});
            else
                out.factorizations.push_back(Factorization<Rational>::from_atoms(atoms));
        }
        out.complete = true;
        return out;
    }
    std::string describe(const Rational& x) const override { return to_string(x); }

private:
    Integer reduce_mod_units_int(const Rational& x) const {
        Integer n = num(x);
        Integer g = gcd(n, den(S_.q));
        while (g > 1) {
            while (n % g == 0) n /= g;
            g = gcd(n, den(S_.q));
        }
        return n;
    }

    CyclicRationalSemiring S_;
};

}  // namespace posring
