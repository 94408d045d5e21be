#pragma once

// Positive monoids inside Q + Q*omega (omega irrational, known only through a
// rational enclosure): atoms, bounded factorization, HF certificates via
// linear length functionals.  These are monoids, not semirings; there is
// deliberately no multiplication here.

#include <posring/certificate.hpp>
#include <posring/monoid_view.hpp>

#include <functional>
#include <sstream>

namespace posring {

struct OmegaSpec {
    Rational lo, hi;          // 1 < lo < omega < hi
    bool non_quadratic = true;  // assumed, never verified

    OmegaSpec(Rational l, Rational h, bool nq = true)
        : lo(std::move(l)), hi(std::move(h)), non_quadratic(nq) {
        if (!(1 < lo && lo < hi))
            throw invalid_input("omega enclosure requires 1 < lo < hi");
    }

    /// Enclosure used for the reserved symbol `pi`.
    static OmegaSpec pi() { return OmegaSpec(Rational(25, 8), Rational(7, 2)); }
};

struct Rank2Element {
    Rational a, b;  // a + b*omega

    friend bool operator==(const Rank2Element& x, const Rank2Element& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const Rank2Element& x, const Rank2Element& y) { return !(x == y); }
    friend bool operator<(const Rank2Element& x, const Rank2Element& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
    Rank2Element operator+(const Rank2Element& o) const { return {a + o.a, b + o.b}; }
    Rank2Element operator-(const Rank2Element& o) const { return {a - o.a, b - o.b}; }

    bool is_zero() const { return a == 0 && b == 0; }

    Rational value_lo(const OmegaSpec& w) const { return a + b * (b >= 0 ? w.lo : w.hi); }
    Rational value_hi(const OmegaSpec& w) const { return a + b * (b >= 0 ? w.hi : w.lo); }

    /// Sign of the real value.  Exact when b = 0; otherwise decided by the
    /// enclosure (throws when the enclosure is too coarse — never zero, since
    /// {1, omega} is Q-linearly independent).
    int sign(const OmegaSpec& w) const {
        if (b == 0) return a < 0 ? -1 : (a == 0 ? 0 : 1);
        Rational lo = value_lo(w), hi = value_hi(w);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        throw unsupported("rank2: omega enclosure too coarse to decide a sign; supply a "
                          "tighter interval");
    }

    std::string to_text() const {
        std::ostringstream os;
        if (b == 0) return to_string(a);
        if (a != 0) os << to_string(a) << " + ";
        if (b != 1) os << to_string(b) << "*";
        os << "w";
        return os.str();
    }
};

class Rank2Monoid {
public:
    Rank2Monoid(OmegaSpec omega, std::vector<Rank2Element> gens,
                std::optional<unsigned> family_cap = std::nullopt)
        : omega_(std::move(omega)), gens_(std::move(gens)), family_cap_(family_cap) {
        if (gens_.empty()) throw invalid_input("rank2: empty generator list");
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        for (const auto& g : gens_)
            if (g.sign(omega_) <= 0)
                throw invalid_input("rank2: generator with nonpositive value: " + g.to_text());
    }

    /// The parametric family {q + (1-q)omega : q in Q cap [0,1], den(q) <= cap}.
    static Rank2Monoid family(unsigned cap, OmegaSpec omega) {
        if (cap < 1) throw invalid_input("rank2 family: cap >= 1 required");
        std::vector<Rank2Element> gens;
        for (unsigned d = 1; d <= cap; ++d)
            for (Integer n = 0; n <= d; ++n) {
                Rational q = make_rational(n, d);
                gens.push_back({q, Rational(1) - q});
            }
        return Rank2Monoid(std::move(omega), std::move(gens), cap);
    }

    const OmegaSpec& omega() const { return omega_; }
    const std::vector<Rank2Element>& generators() const { return gens_; }
    std::optional<unsigned> family_cap() const { return family_cap_; }

    /// True when every generator value is below twice the minimum generator
    /// value (then no generator is a sum of two nonzero members, so the atom
    /// set is exactly the generator set).
    bool band_condition() const {
        Rational min_lo = gens_.front().value_lo(omega_);
        Rational max_hi = gens_.front().value_hi(omega_);
        for (const auto& g : gens_) {
            min_lo = std::min(min_lo, g.value_lo(omega_));
            max_hi = std::max(max_hi, g.value_hi(omega_));
        }
        return max_hi < 2 * min_lo;
    }

    /// Exact membership: x = sum c_i g_i with c_i in N0, searched with value
    /// bounds from the enclosure.  Decidable (coordinates are exact).
    bool is_member(const Rank2Element& x) const {
        if (x.is_zero()) return true;
        if (x.value_hi(omega_) < 0) return false;
        return member_dfs(x, 0, nullptr);
    }

    std::vector<Rank2Element> atoms() const {
        if (!band_condition() && gens_.size() > 4)
            throw unsupported("rank2 atoms: band condition fails and more than 4 generators; "
                              "the atom listing would be unverified");
        std::vector<Rank2Element> out;
        for (const auto& g : gens_) {
            bool atom = true;
            if (!band_condition()) {
                // g = y + z with nonzero members y, z? Equivalent: some
                // representation of g with coefficient sum >= 2.
                auto reps = representations(g);
                for (const auto& r : reps) {
                    unsigned total = 0;
                    for (unsigned c : r) total += c;
                    if (total >= 2) { atom = false; break; }
                }
            }
            if (atom) out.push_back(g);
        }
        return out;
    }

    /// All representations of x over the generators (coefficient vectors).
    std::vector<std::vector<unsigned>> representations(const Rank2Element& x) const {
        std::vector<std::vector<unsigned>> out;
        std::vector<unsigned> coeffs(gens_.size(), 0);
        rep_dfs(x, 0, coeffs, out);
        return out;
    }

private:
    bool member_dfs(const Rank2Element& rem, std::size_t i,
                    std::vector<unsigned>* coeffs) const {
        if (rem.is_zero()) return true;
        if (i == gens_.size()) return false;
        if (rem.value_hi(omega_) < 0) return false;
        Integer cmax = coeff_bound(rem, gens_[i]);
        for (Integer c = cmax; c >= 0; --c) {
            Rank2Element next = rem;
            for (Integer k = 0; k < c; ++k) next = next - gens_[i];
            if (coeffs) (*coeffs)[i] = static_cast<unsigned>(mpz_get_ui(c.get_mpz_t()));
            if (member_dfs(next, i + 1, coeffs)) return true;
        }
        return false;
    }

    void rep_dfs(const Rank2Element& rem, std::size_t i, std::vector<unsigned>& coeffs,
                 std::vector<std::vector<unsigned>>& out) const {
        if (rem.is_zero()) {
            auto done = coeffs;
            for (std::size_t j = i; j < gens_.size(); ++j) done[j] = 0;
            out.push_back(done);
            return;
        }
        if (i == gens_.size()) return;
        if (rem.value_hi(omega_) < 0) return;
        Integer cmax = coeff_bound(rem, gens_[i]);
        for (Integer c = 0; c <= cmax; ++c) {
            Rank2Element next = rem;
            for (Integer k = 0; k < c; ++k) next = next - gens_[i];
            coeffs[i] = static_cast<unsigned>(mpz_get_ui(c.get_mpz_t()));
            rep_dfs(next, i + 1, coeffs, out);
        }
        coeffs[i] = 0;
    }

    Integer coeff_bound(const Rank2Element& rem, const Rank2Element& g) const {
        Rational hi = rem.value_hi(omega_);
        if (hi <= 0) return 0;
        Rational lo = g.value_lo(omega_);
        return floor_int(hi / lo);
    }

    OmegaSpec omega_;
    std::vector<Rank2Element> gens_;
    std::optional<unsigned> family_cap_;
};

inline AtomListing atoms_rank2(const Rank2Monoid& M) {
    AtomListing out;
    for (const auto& g : M.atoms()) out.atoms.push_back(g.to_text());
    return out;
}

/// Linear length functional L(a + b*omega) = u*a + v*b with L = 1 on every
/// atom; its existence forces all factorizations of an element to share one
/// length (HFM certificate for the truncated presentation).
inline std::optional<Certificate> hf_certificate(const Rank2Monoid& M) {
    std::vector<Rank2Element> atoms = M.atoms();
    // Solve u*a_i + v*b_i = 1 exactly.
    std::optional<Rational> u, v;
    // Find two independent rows.
    for (std::size_t i = 0; i < atoms.size() && !u; ++i)
        for (std::size_t j = i + 1; j < atoms.size() && !u; ++j) {
            Rational det = atoms[i].a * atoms[j].b - atoms[j].a * atoms[i].b;
            if (det == 0) continue;
            u = (atoms[j].b - atoms[i].b) / det;
            v = (atoms[i].a - atoms[j].a) / det;
        }
    if (!u) {
        // Rank <= 1: all atom coordinate rows proportional; try a solution of
        // the single constraint with the other coefficient zero.
        const auto& g = atoms.front();
        if (g.a != 0) {
            u = Rational(1) / g.a;
            v = Rational(0);
        } else {
            u = Rational(0);
            v = Rational(1) / g.b;
        }
    }
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& g : atoms) {
        if (*u * g.a + *v * g.b != 1) return std::nullopt;  // inconsistent system
        checks.push_back(g.to_text());
    }
    Certificate cert;
    cert.kind = CertKind::HFLinearFunctional;
    cert.payload = {{"u", to_string(*u)},
                    {"v", to_string(*v)},
                    {"atoms", checks},
                    {"functional", "L(a + b*w) = u*a + v*b"}};
    cert.verified = true;
    return cert;
}

/// `count` distinct verified length-2 factorizations of 1 + omega in the
/// parametric family monoid, indexed by q1 + q2 = 1.
inline Certificate non_ff_witness_rank2(const Rank2Monoid& M, unsigned count) {
    if (!M.family_cap())
        throw invalid_input("non_ff_witness_rank2: requires the parametric family monoid");
    const unsigned cap = *M.family_cap();
    std::vector<std::pair<Rational, Rational>> pairs;
    // q1 descending from 1/2 so small caps yield the central pairs first.
    std::vector<Rational> qs;
    for (unsigned d = 2; d <= cap; ++d)
        for (Integer n = 1; 2 * n <= d; ++n) qs.push_back(make_rational(n, d));
    std::sort(qs.begin(), qs.end(), std::greater<Rational>());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    for (const Rational& q1 : qs) {
        if (pairs.size() == count) break;
        pairs.emplace_back(q1, Rational(1) - q1);
    }
    if (pairs.size() < count)
        throw unsupported("non_ff_witness_rank2: family cap too small for the requested count");
    nlohmann::json plist = nlohmann::json::array();
    const Rank2Element target{Rational(1), Rational(1)};  // 1 + omega
    const auto& gens = M.generators();
    for (const auto& [q1, q2] : pairs) {
        Rank2Element x{q1, Rational(1) - q1}, y{q2, Rational(1) - q2};
        if (x + y != target) throw std::logic_error("non_ff_witness_rank2: sum check failed");
        for (const auto& e : {x, y})
            if (std::find(gens.begin(), gens.end(), e) == gens.end())
                throw std::logic_error("non_ff_witness_rank2: summand not a generator");
        plist.push_back(nlohmann::json::array({x.to_text(), y.to_text()}));
    }
    Certificate cert;
    cert.kind = CertKind::NonFFFamily;
    cert.payload = {{"model", "rank2family(cap=" + std::to_string(cap) + ")"},
                    {"side", "add"},
                    {"element", target.to_text()},
                    {"factorizations", plist},
                    {"count", count}};
    cert.verified = true;
    return cert;
}

// ---------------------------------------------------------------------------
// Additive view

class Rank2AdditiveView final : public MonoidView<Rank2Element> {
public:
    explicit Rank2AdditiveView(Rank2Monoid M) : M_(std::move(M)) {}

    Rank2Element identity() const override { return {Rational(0), Rational(0)}; }
    bool is_member(const Rank2Element& x) const override { return M_.is_member(x); }
    bool is_unit(const Rank2Element& x) const override { return x.is_zero(); }
    Rank2Element compose(const Rank2Element& x, const Rank2Element& y) const override {
        return x + y;
    }
    std::optional<Rank2Element> decompose(const Rank2Element& x,
                                          const Rank2Element& y) const override {
        Rank2Element z = x - y;
        if (!z.is_zero() && z.value_hi(M_.omega()) < 0) return std::nullopt;
        if (!M_.is_member(z)) return std::nullopt;
        return z;
    }
    std::vector<Rank2Element> proper_divisor_candidates(const Rank2Element& x,
                                                        const SearchBudget&) const override {
        std::vector<Rank2Element> out;
        for (const auto& g : M_.generators())
            if (g != x && decompose(x, g)) out.push_back(g);
        return out;
    }
    std::optional<FactorizationSet<Rank2Element>> enumerate_complete(
        const Rank2Element& x, const SearchBudget&) const override {
        std::vector<Rank2Element> atoms = M_.atoms();
        Rank2Monoid atom_monoid(M_.omega(), atoms);
        FactorizationSet<Rank2Element> out;
        out.target = x;
        out.complete = true;
        const auto& sorted_atoms = atom_monoid.generators();
        for (const auto& rep : atom_monoid.representations(x)) {
            std::vector<Rank2Element> parts;
            for (std::size_t i = 0; i < sorted_atoms.size(); ++i)
                for (unsigned c = 0; c < rep[i]; ++c) parts.push_back(sorted_atoms[i]);
            if (parts.empty() && !x.is_zero()) continue;
            out.factorizations.push_back(Factorization<Rank2Element>::from_atoms(parts));
        }
        out.canonicalize();
        return out;
    }
    std::string describe(const Rank2Element& x) const override { return x.to_text(); }

private:
    Rank2Monoid M_;
};

}  // namespace posring
