#pragma once

// Numerical monoids <g_1, ..., g_k>: membership, Frobenius number, Apery
// sets, additive factorizations, and the multiplicative-atom identities
// (with 1 adjoined as the multiplicative identity).

#include <posring/certificate.hpp>
#include <posring/monoid_view.hpp>

#include <sstream>

namespace posring {

class NumericalMonoid {
public:
    explicit NumericalMonoid(std::vector<unsigned long> gens) : gens_(std::move(gens)) {
        if (gens_.empty()) throw invalid_input("numerical monoid: empty generator list");
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        unsigned long g = 0;
        for (unsigned long x : gens_) {
            if (x == 0) throw invalid_input("numerical monoid: zero generator");
            g = std::gcd(g, x);
        }
        if (g != 1) throw invalid_input("numerical monoid: generators must have gcd 1");
        build_table();
    }

    const std::vector<unsigned long>& generators() const { return gens_; }

    bool is_member(const Integer& n) const {
        if (n < 0) return false;
        if (n > frobenius_) return true;
        return reachable_[static_cast<std::size_t>(mpz_get_ui(n.get_mpz_t()))];
    }

    long frobenius() const { return frobenius_; }

    /// Apery set of m: least member in each residue class mod m.
    std::vector<Integer> apery(unsigned long m) const {
        if (m == 0) throw invalid_input("apery: modulus must be positive");
        std::vector<Integer> out;
        for (unsigned long r = 0; r < m; ++r) {
            Integer n = r;
            while (!is_member(n)) n += m;
            out.push_back(n);
        }
        return out;
    }

    bool contains_all_from() const { return true; }

    std::string describe() const {
        std::ostringstream os;
        os << "numerical(";
        for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
        os << ")";
        return os.str();
    }

private:
    void build_table() {
        // Coin DP up to a safe bound; Frobenius = largest gap.
        std::size_t bound = gens_.front() * gens_.back() + 1;
        reachable_.assign(bound + 1, false);
        reachable_[0] = true;
        for (std::size_t i = 1; i <= bound; ++i)
            for (unsigned long g : gens_)
                if (i >= g && reachable_[i - g]) { reachable_[i] = true; break; }
        frobenius_ = -1;
        for (std::size_t i = 0; i <= bound; ++i)
            if (!reachable_[i]) frobenius_ = static_cast<long>(i);
    }

    std::vector<unsigned long> gens_;
    std::vector<bool> reachable_;
    long frobenius_ = -1;
};

// ---------------------------------------------------------------------------
// Multiplicative atoms and the Remark identities

/// All multiplicative atoms of (S^. union {1}, .) in [2, B]: members with no
/// factorization into two members of S (1 is the adjoined unit, not a
/// candidate divisor).  Exact by trial division.
inline AtomListing mult_atoms_up_to(const NumericalMonoid& S, long B) {
    if (B < 2) throw invalid_input("mult_atoms_up_to: bound must be >= 2");
    AtomListing out;
    for (long x = 2; x <= B; ++x) {
        if (!S.is_member(x)) continue;
        bool atom = true;
        for (const Integer& d : divisors(Integer(x))) {
            if (d == 1 || d == x) continue;
            if (S.is_member(d) && S.is_member(Integer(x) / d)) { atom = false; break; }
        }
        if (atom) out.atoms.push_back(std::to_string(x));
    }
    out.truncated = true;  // atoms above B exist in general
    return out;
}

inline bool is_mult_atom(const NumericalMonoid& S, const Integer& x) {
    if (x < 2 || !S.is_member(x)) throw invalid_input("is_mult_atom: not a member >= 2");
    for (const Integer& d : divisors(x)) {
        if (d == 1 || d == x) continue;
        if (S.is_member(d) && S.is_member(x / d)) return false;
    }
    return true;
}

/// The Remark's two certificates for a prime q outside S:
/// NotLF: p*q^{2n-1} = (p*q^{n-1})*q^n (distinct length-2 factorizations);
/// NotHF: (q^n)^{2n-1} = (q^{2n-1})^n (lengths 2n-1 and n).
inline std::pair<Certificate, Certificate> remark_witnesses(const NumericalMonoid& S,
                                                            unsigned long q, unsigned n) {
    if (!is_prime(Integer(q))) throw invalid_input("remark_witnesses: q must be prime");
    if (S.is_member(Integer(q)))
        throw unsupported("remark_witnesses: q must lie outside S");
    if (n < 2) throw unsupported("remark_witnesses: n >= 2 required");
    Integer qn = pow_int(q, n), q2n1 = pow_int(q, 2 * n - 1), qn1 = pow_int(q, n - 1);
    if (!S.is_member(qn)) throw unsupported("remark_witnesses: q^n not a member");
    if (!S.is_member(q2n1)) throw unsupported("remark_witnesses: q^(2n-1) not a member");
    if (S.is_member(qn1)) throw unsupported("remark_witnesses: q^(n-1) must lie outside S");
    // A prime p inside S (exists: S is cofinite).
    Integer p = 2;
    while (!S.is_member(p) || !is_prime(p)) ++p;
    Integer pq = p * qn1;
    if (!S.is_member(pq)) throw unsupported("remark_witnesses: p*q^(n-1) not a member");
    // Atomicity of all four bases.
    for (const Integer& a : {p, pq, qn, q2n1})
        if (!is_mult_atom(S, a))
            throw std::logic_error("remark_witnesses: base element is not an atom: " +
                                   to_string(a));
    auto int_list = [](std::vector<Integer> xs) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& x : xs) a.push_back(to_string(x));
        return a;
    };
    Certificate notlf;
    {
        Integer elem = p * q2n1;
        if (elem != pq * qn) throw std::logic_error("remark_witnesses: NotLF equality failed");
        notlf.kind = CertKind::NotLF;
        notlf.payload = {{"model", S.describe()},
                         {"side", "mul"},
                         {"element", to_string(elem)},
                         {"factorizationA", int_list({p, q2n1})},
                         {"factorizationB", int_list({pq, qn})},
                         {"lengths", nlohmann::json::array({2, 2})}};
        notlf.verified = true;
    }
    Certificate nothf;
    {
        Integer elem = pow_int(q, n * (2 * n - 1));
        std::vector<Integer> fa(2 * n - 1, qn), fb(n, q2n1);
        Integer pa = 1, pb = 1;
        for (const auto& x : fa) pa *= x;
        for (const auto& x : fb) pb *= x;
        if (pa != elem || pb != elem)
            throw std::logic_error("remark_witnesses: NotHF equality failed");
        nothf.kind = CertKind::NotHF;
        nothf.payload = {{"model", S.describe()},
                         {"side", "mul"},
                         {"element", to_string(elem)},
                         {"factorizationA", int_list(fa)},
                         {"factorizationB", int_list(fb)},
                         {"lengths", nlohmann::json::array({n, 2 * n - 1})}};
        nothf.verified = true;
    }
    return {notlf, nothf};
}

// ---------------------------------------------------------------------------
// Monoid views

class NumericalAdditiveView final : public MonoidView<Integer> {
public:
    explicit NumericalAdditiveView(NumericalMonoid S) : S_(std::move(S)) {}

    Integer identity() const override { return 0; }
    bool is_member(const Integer& x) const override { return S_.is_member(x); }
    bool is_unit(const Integer& x) const override { return x == 0; }
    Integer compose(const Integer& x, const Integer& y) const override { return x + y; }
    std::optional<Integer> decompose(const Integer& x, const Integer& y) const override {
        Integer z = x - y;
        if (z < 0 || !S_.is_member(z)) return std::nullopt;
        return z;
    }
    std::vector<Integer> proper_divisor_candidates(const Integer& x,
                                                   const SearchBudget&) const override {
        std::vector<Integer> out;
        for (Integer y = 1; y < x; ++y)
            if (S_.is_member(y) && S_.is_member(x - y)) out.push_back(y);
        return out;
    }
    bool divisor_candidates_complete(const Integer&, const SearchBudget&) const override {
        return true;
    }
    std::optional<AtomAnswer<Integer>> classify_atom(const Integer& x,
                                                     const SearchBudget&) const override {
        // Atoms of a numerical monoid are its minimal generators.
        for (Integer y = 1; y < x; ++y)
            if (S_.is_member(y) && S_.is_member(x - y))
                return AtomAnswer<Integer>::not_atom(y, x - y);
        return AtomAnswer<Integer>::atom();
    }
    std::optional<FactorizationSet<Integer>> enumerate_complete(
        const Integer& x, const SearchBudget&) const override {
        // Complete coin-style enumeration over the minimal generators.
        FactorizationSet<Integer> out;
        out.target = x;
        out.complete = true;
        std::vector<Integer> atoms;
        for (unsigned long g : S_.generators())
            if (is_atom_gen(g)) atoms.push_back(g);
        std::vector<Integer> stack;
        std::function<void(Integer, std::size_t)> rec = [&](Integer rem, std::size_t i) {
            if (rem == 0) {
                if (!stack.empty() || x == 0)
                    out.factorizations.push_back(Factorization<Integer>::from_atoms(stack));
                return;
            }
            if (i == atoms.size()) return;
            Integer cmax = rem / atoms[i];
            for (Integer c = 0; c <= cmax; ++c) {
                for (Integer k = 0; k < c; ++k) stack.push_back(atoms[i]);
                rec(rem - c * atoms[i], i + 1);
                for (Integer k = 0; k < c; ++k) stack.pop_back();
            }
        };
        rec(x, 0);
        out.canonicalize();
        return out;
    }
    std::string describe(const Integer& x) const override { return to_string(x); }

private:
    bool is_atom_gen(unsigned long g) const {
        for (unsigned long y = 1; y < g; ++y)
            if (S_.is_member(Integer(y)) && S_.is_member(Integer(g - y))) return false;
        return true;
    }

    NumericalMonoid S_;
};

class NumericalMultiplicativeView final : public MonoidView<Integer> {
public:
    explicit NumericalMultiplicativeView(NumericalMonoid S) : S_(std::move(S)) {}

    Integer identity() const override { return 1; }
    bool is_member(const Integer& x) const override { return x == 1 || S_.is_member(x); }
    bool is_unit(const Integer& x) const override { return x == 1; }
    Integer compose(const Integer& x, const Integer& y) const override { return x * y; }
    std::optional<Integer> decompose(const Integer& x, const Integer& y) const override {
        if (y == 0 || x % y != 0) return std::nullopt;
        Integer z = x / y;
        if (!is_member(z)) return std::nullopt;
        return z;
    }
    std::vector<Integer> proper_divisor_candidates(const Integer& x,
                                                   const SearchBudget&) const override {
        std::vector<Integer> out;
        for (const Integer& d : divisors(x))
            if (d != 1 && d != x && S_.is_member(d)) out.push_back(d);
        return out;
    }
    bool divisor_candidates_complete(const Integer&, const SearchBudget&) const override {
        return true;
    }
    std::string describe(const Integer& x) const override { return to_string(x); }

private:
    NumericalMonoid S_;
};

}  // namespace posring
