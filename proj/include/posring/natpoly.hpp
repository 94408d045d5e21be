#pragma once

// The multiplicative monoid of N0[x]: irreducibility and complete
// factorization enumeration via Z[x] factoring plus nonnegative
// recombination, and the HF/LF counterexample families.

#include <posring/certificate.hpp>
#include <posring/monoid_view.hpp>
#include <posring/poly_factor.hpp>

#include <set>

namespace posring {

namespace detail {

/// The "prime items" of f in N0[x]: integer content split into primes plus
/// the primitive Z[x]-irreducible factors (positive leading coefficients, so
/// the product recomposes f exactly).  Every N0[x] divisor of f is a product
/// of a sub-multiset, by unique factorization in Z[x].
inline std::vector<IntPolynomial> natpoly_prime_items(const NatPolynomial& f) {
    IntPolyFactorization z = factor_int_poly(f);
    std::vector<IntPolynomial> items;
    for (const auto& [p, e] : factor_integer(z.content))
        for (unsigned i = 0; i < e; ++i) items.push_back(IntPolynomial(p));
    for (const auto& g : z.factors) items.push_back(g);
    std::sort(items.begin(), items.end());
    return items;
}

inline IntPolynomial product_of(const std::vector<IntPolynomial>& items,
                                const std::vector<bool>& pick, bool value) {
    IntPolynomial p(Integer(1));
    for (std::size_t i = 0; i < items.size(); ++i)
        if (pick[i] == value) p = p * items[i];
    return p;
}

/// Does any bipartition of `items` into two nonempty parts have both
/// products coefficient-nonnegative?  Returns the witness parts.
inline std::optional<std::pair<IntPolynomial, IntPolynomial>> nonneg_bipartition(
    const std::vector<IntPolynomial>& items) {
    const std::size_t n = items.size();
    if (n < 2) return std::nullopt;
    std::vector<bool> pick(n, false);
    // Item 0 fixed in the first part; iterate over the other 2^(n-1) - 1
    // assignments with a nonempty second part.
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << (n - 1)); ++mask) {
        for (std::size_t i = 1; i < n; ++i) pick[i] = (mask >> (i - 1)) & 1;
        IntPolynomial a = product_of(items, pick, false);
        if (!a.is_nonnegative()) continue;
        IntPolynomial b = product_of(items, pick, true);
        if (!b.is_nonnegative()) continue;
        return std::make_pair(a, b);
    }
    return std::nullopt;
}

}  // namespace detail

struct IrreducibilityResult {
    bool irreducible;
    std::optional<std::pair<NatPolynomial, NatPolynomial>> witness;  // split when reducible
};

/// Is f an atom of (N0[x]^., .)?  f must be nonzero and not the unit 1.
inline IrreducibilityResult is_irreducible_natpoly(const NatPolynomial& f) {
    if (f.is_zero() || f.is_one())
        throw invalid_input("is_irreducible_natpoly: input must differ from 0 and 1");
    auto items = detail::natpoly_prime_items(f);
    if (auto w = detail::nonneg_bipartition(items))
        return {false, std::make_pair(NatPolynomial(w->first), NatPolynomial(w->second))};
    return {true, std::nullopt};
}

/// All factorizations of f into N0[x]-irreducibles.  Always complete: every
/// factorization is a partition of the Z[x] prime-item multiset into groups
/// with nonnegative products.
inline FactorizationSet<NatPolynomial> factorizations_natpoly(const NatPolynomial& f) {
    if (f.is_zero()) throw invalid_input("factorizations_natpoly: zero polynomial");
    FactorizationSet<NatPolynomial> out;
    out.target = f;
    out.complete = true;
    if (f.is_one()) {
        out.factorizations.push_back({});
        return out;
    }
    auto items = detail::natpoly_prime_items(f);
    const std::size_t n = items.size();
    // Enumerate set partitions of the item indices; deduplicate the induced
    // block-product multisets (equal items make distinct partitions collide).
    std::set<std::vector<IntPolynomial>> seen;
    std::vector<std::vector<std::size_t>> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            std::vector<IntPolynomial> prods;
            for (const auto& blk : blocks) {
                IntPolynomial p(Integer(1));
                for (std::size_t j : blk) p = p * items[j];
                if (!p.is_nonnegative()) return;
                prods.push_back(p);
            }
            std::sort(prods.begin(), prods.end());
            if (!seen.insert(prods).second) return;
            // Every block must itself be an N0[x] atom.
            for (const auto& blk : blocks) {
                if (blk.size() < 2) continue;
                std::vector<IntPolynomial> sub;
                for (std::size_t j : blk) sub.push_back(items[j]);
                if (detail::nonneg_bipartition(sub)) return;
            }
            std::vector<NatPolynomial> atoms;
            for (const auto& p : prods) atoms.push_back(NatPolynomial(p));
            out.factorizations.push_back(Factorization<NatPolynomial>::from_atoms(atoms));
            return;
        }
        // Index loop: recursion grows `blocks`, which would invalidate
        // range-for iterators.
        const std::size_t nblocks = blocks.size();
        for (std::size_t bi = 0; bi < nblocks; ++bi) {
            blocks[bi].push_back(i);
            rec(i + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
    out.canonicalize();
    return out;
}

/// NotHF witness: [(x+n)^n (x^2-x+1)] (x+1)^k = (x+n)^n [x^3+1] (x+1)^{k-1},
/// with lengths k+1 and n+k.
inline Certificate hf_witness_family(unsigned n, unsigned k) {
    if (n < 2 || k < 1) throw invalid_input("hf_witness_family: need n >= 2, k >= 1");
    if (n > 4 || k > 3)
        throw unsupported("hf_witness_family: desk-scale caps are n <= 4, k <= 3");
    const IntPolynomial xpn = IntPolynomial::parse("x+" + std::to_string(n));
    const IntPolynomial xp1 = IntPolynomial::parse("x+1");
    const IntPolynomial q = IntPolynomial::parse("x^2-x+1");
    IntPolynomial big = q;
    for (unsigned i = 0; i < n; ++i) big = big * xpn;  // (x+n)^n (x^2-x+1)
    const IntPolynomial cube = q * xp1;                // x^3+1
    std::vector<NatPolynomial> fa, fb;
    fa.push_back(NatPolynomial(big));
    for (unsigned i = 0; i < k; ++i) fa.push_back(NatPolynomial(xp1));
    for (unsigned i = 0; i < n; ++i) fb.push_back(NatPolynomial(xpn));
    fb.push_back(NatPolynomial(cube));
    for (unsigned i = 0; i < k - 1; ++i) fb.push_back(NatPolynomial(xp1));
    // Verification pass: equal products, all parts irreducible, length gap.
    IntPolynomial pa(Integer(1)), pb(Integer(1));
    for (const auto& g : fa) pa = pa * g;
    for (const auto& g : fb) pb = pb * g;
    if (pa != pb) throw std::logic_error("hf_witness_family: products differ");
    for (const auto& g : fa)
        if (!is_irreducible_natpoly(g).irreducible)
            throw std::logic_error("hf_witness_family: part not irreducible: " + g.to_text());
    for (const auto& g : fb)
        if (!is_irreducible_natpoly(g).irreducible)
            throw std::logic_error("hf_witness_family: part not irreducible: " + g.to_text());
    if (fa.size() == fb.size()) throw std::logic_error("hf_witness_family: equal lengths");
    auto parts_json = [](const std::vector<NatPolynomial>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& g : v) a.push_back(g.to_text());
        return a;
    };
    Certificate cert;
    cert.kind = CertKind::NotHF;
    cert.payload = {{"model", "N0[x]"},
                    {"side", "mul"},
                    {"element", NatPolynomial(pa).to_text()},
                    {"factorizationA", parts_json(fa)},
                    {"factorizationB", parts_json(fb)},
                    {"lengths", nlohmann::json::array({k + 1, n + k})}};
    cert.verified = true;
    return cert;
}

/// NotLF witness: (x+1)(x+2)(x^2-x+3) has the two distinct length-2
/// factorizations [x^3+2x+3][x+2] and [x^3+x^2+x+6][x+1].
inline Certificate natpoly_notlf_certificate() {
    const NatPolynomial xp1 = NatPolynomial::parse("x+1");
    const NatPolynomial xp2 = NatPolynomial::parse("x+2");
    const IntPolynomial q = IntPolynomial::parse("x^2-x+3");
    const NatPolynomial u = NatPolynomial(xp1 * q);  // x^3+2x+3
    const NatPolynomial v = NatPolynomial(xp2 * q);  // x^3+x^2+x+6
    NatPolynomial elem = NatPolynomial(u * xp2);
    if (NatPolynomial(v * xp1) != elem)
        throw std::logic_error("natpoly_notlf_certificate: products differ");
    for (const NatPolynomial* g : {&u, &v, &xp1, &xp2})
        if (!is_irreducible_natpoly(*g).irreducible)
            throw std::logic_error("natpoly_notlf_certificate: part not irreducible");
    // Re-derive via full enumeration: exactly these two factorizations exist.
    auto fs = factorizations_natpoly(elem);
    if (fs.factorizations.size() != 2)
        throw std::logic_error("natpoly_notlf_certificate: unexpected factorization count");
    Certificate cert;
    cert.kind = CertKind::NotLF;
    cert.payload = {{"model", "N0[x]"},
                    {"side", "mul"},
                    {"element", elem.to_text()},
                    {"factorizationA", nlohmann::json::array({u.to_text(), xp2.to_text()})},
                    {"factorizationB", nlohmann::json::array({v.to_text(), xp1.to_text()})},
                    {"lengths", nlohmann::json::array({2, 2})}};
    cert.verified = true;
    return cert;
}

// ---------------------------------------------------------------------------
// Monoid view

class NatPolyMultiplicativeView final : public MonoidView<NatPolynomial> {
public:
    NatPolynomial identity() const override { return NatPolynomial(Integer(1)); }
    bool is_member(const NatPolynomial& x) const override { return !x.is_zero(); }
    bool is_unit(const NatPolynomial& x) const override { return x.is_one(); }
    NatPolynomial compose(const NatPolynomial& x, const NatPolynomial& y) const override {
        return NatPolynomial(static_cast<const IntPolynomial&>(x) * y);
    }
    std::optional<NatPolynomial> decompose(const NatPolynomial& x,
                                           const NatPolynomial& y) const override {
        auto z = IntPolynomial::divide_exact(x, y);
        if (!z || !z->is_nonnegative()) return std::nullopt;
        return NatPolynomial(*z);
    }
    std::vector<NatPolynomial> proper_divisor_candidates(const NatPolynomial& x,
                                                         const SearchBudget& b) const override {
        (void)b;
        auto items = detail::natpoly_prime_items(x);
        const std::size_t n = items.size();
        std::set<IntPolynomial> seen;
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << n); ++mask) {
            IntPolynomial p(Integer(1));
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1) p = p * items[i];
            if (p.is_nonnegative()) seen.insert(p);
        }
        std::vector<NatPolynomial> out;
        for (const auto& p : seen) out.push_back(NatPolynomial(p));
        return out;
    }
    bool divisor_candidates_complete(const NatPolynomial&, const SearchBudget&) const override {
        return true;
    }
    std::optional<FactorizationSet<NatPolynomial>> enumerate_complete(
        const NatPolynomial& x, const SearchBudget& b) const override {
        (void)b;
        return factorizations_natpoly(x);
    }
    std::string describe(const NatPolynomial& x) const override { return x.to_text(); }
};

}  // namespace posring
