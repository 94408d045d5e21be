#pragma once

// Ray semirings S_r = N0 union R_{>=r} (r > 1), restricted to exact rational
// elements: membership, closed-form atom predicates, and the counterexample
// generators for r = 2.

#include <posring/certificate.hpp>
#include <posring/monoid_view.hpp>

namespace posring {

struct RaySemiring {
    Rational r;

    explicit RaySemiring(Rational rr) : r(std::move(rr)) {
        if (r <= 1)
            throw unsupported(
                "ray semiring requires r > 1: S_1 has an antimatter multiplicative monoid and "
                "S_r with r < 1 collapses to the whole nonnegative ray");
    }

    bool is_member(const Rational& x) const {
        return (x >= 0 && is_integer(x)) || x >= r;
    }
};

/// Closed form: A_+(S_r) = ({1} union [r, r+1)) minus {ceil(r)}.
inline bool is_additive_atom(const RaySemiring& S, const Rational& x) {
    if (!S.is_member(x) || x == 0)
        throw invalid_input("is_additive_atom: not a nonzero member of S_r");
    if (x == Rational(ceil_int(S.r))) return false;
    return x == 1 || (x >= S.r && x < S.r + 1);
}

/// Closed form: A_x(S_r) = (P_{<r^2} union [r, r^2)) minus P*(S_r)_{>1}.
inline bool is_mult_atom(const RaySemiring& S, const Rational& x) {
    if (!S.is_member(x) || x == 0 || x == 1)
        throw invalid_input("is_mult_atom: not a member of S_r minus {0, 1}");
    Rational r2 = S.r * S.r;
    bool in_base = (is_integer(x) && is_prime(num(x)) && x < r2) || (x >= S.r && x < r2);
    if (!in_base) return false;
    // Exclusion: x = p * s with p prime and s in S_r, s > 1.
    for (Integer p = 2; Rational(p) < x; ++p) {
        if (!is_prime(p)) continue;
        Rational s = x / Rational(p);
        if (s > 1 && S.is_member(s)) return false;
    }
    return true;
}

inline bool is_mult_unit(const RaySemiring&, const Rational& x) { return x == 1; }

/// NonFFFamily: count distinct verified length-2 additive factorizations of
/// target in (4,5) inside S_2, via the pairs (2 + 1/n, target - 2 - 1/n).
inline Certificate non_ff_family(const RaySemiring& S, const Rational& target, unsigned count) {
    if (S.r != 2)
        throw unsupported("non_ff_family is implemented for r = 2 (shift parameters otherwise)");
    if (!(target > 4 && target < 5))
        throw unsupported("non_ff_family: target must lie strictly inside (4, 5)");
    if (count < 1) throw invalid_input("non_ff_family: count >= 1 required");
    Integer n0 = floor_int(Rational(1) / (target - 4)) + 1;
    if (n0 < 2) n0 = 2;
    nlohmann::json pairs = nlohmann::json::array();
    std::vector<std::pair<Rational, Rational>> fams;
    for (Integer n = n0; fams.size() < count; ++n) {
        Rational a = Rational(2) + Rational(1) / Rational(n);
        Rational b = target - a;
        if (a + b != target) throw std::logic_error("non_ff_family: sum check failed");
        if (!is_additive_atom(S, a) || !is_additive_atom(S, b))
            throw std::logic_error("non_ff_family: summand not an additive atom");
        // Factorizations are multisets: normalize and skip reorderings
        // (e.g. n and 2n/(n-2) produce the same unordered pair).
        std::pair<Rational, Rational> key = a <= b ? std::make_pair(a, b)
                                                   : std::make_pair(b, a);
        if (std::find(fams.begin(), fams.end(), key) != fams.end()) continue;
        fams.push_back(key);
        pairs.push_back(nlohmann::json::array({to_string(key.first), to_string(key.second)}));
    }
    Certificate cert;
    cert.kind = CertKind::NonFFFamily;
    cert.payload = {{"model", "ray(2)"},
                    {"side", "add"},
                    {"element", to_string(target)},
                    {"factorizations", pairs},
                    {"count", count}};
    cert.verified = true;
    return cert;
}

/// The four S_2 counterexample certificates: additive NotHF and NotLF on 5,
/// multiplicative NotHF on 8 and NotLF on 6.
inline std::vector<Certificate> s2_counterexamples() {
    RaySemiring S{Rational(2)};
    auto add_atom = [&](const Rational& x) { return is_additive_atom(S, x); };
    auto mul_atom = [&](const Rational& x) { return is_mult_atom(S, x); };
    auto rat_list = [](std::initializer_list<Rational> xs) {
        nlohmann::json a = nlohmann::json::array();
        for (const Rational& x : xs) a.push_back(to_string(x));
        return a;
    };
    std::vector<Certificate> out;
    {
        // 5 = 1+1+1+1+1 = 5/2 + 5/2: additive lengths 5 and 2.
        for (const Rational& x : {Rational(1), Rational(5, 2)})
            if (!add_atom(x)) throw std::logic_error("s2: additive atom check failed");
        if (Rational(5, 2) + Rational(5, 2) != 5 || Rational(1) * 5 != 5)
            throw std::logic_error("s2: additive NotHF equality failed");
        Certificate c;
        c.kind = CertKind::NotHF;
        c.payload = {{"model", "ray(2)"},
                     {"side", "add"},
                     {"element", "5"},
                     {"factorizationA", rat_list({1, 1, 1, 1, 1})},
                     {"factorizationB", rat_list({Rational(5, 2), Rational(5, 2)})},
                     {"lengths", nlohmann::json::array({2, 5})}};
        c.verified = true;
        out.push_back(c);
    }
    {
        // 5 = 5/2 + 5/2 = 7/3 + 8/3: two distinct length-2 factorizations.
        for (const Rational& x : {Rational(5, 2), Rational(7, 3), Rational(8, 3)})
            if (!add_atom(x)) throw std::logic_error("s2: additive atom check failed");
        if (Rational(7, 3) + Rational(8, 3) != 5)
            throw std::logic_error("s2: additive NotLF equality failed");
        Certificate c;
        c.kind = CertKind::NotLF;
        c.payload = {{"model", "ray(2)"},
                     {"side", "add"},
                     {"element", "5"},
                     {"factorizationA", rat_list({Rational(5, 2), Rational(5, 2)})},
                     {"factorizationB", rat_list({Rational(7, 3), Rational(8, 3)})},
                     {"lengths", nlohmann::json::array({2, 2})}};
        c.verified = true;
        out.push_back(c);
    }
    {
        // 2^3 = 3 * (8/3): multiplicative lengths 3 and 2.
        for (const Rational& x : {Rational(2), Rational(3), Rational(8, 3)})
            if (!mul_atom(x)) throw std::logic_error("s2: multiplicative atom check failed");
        if (Rational(3) * Rational(8, 3) != 8)
            throw std::logic_error("s2: multiplicative NotHF equality failed");
        Certificate c;
        c.kind = CertKind::NotHF;
        c.payload = {{"model", "ray(2)"},
                     {"side", "mul"},
                     {"element", "8"},
                     {"factorizationA", rat_list({2, 2, 2})},
                     {"factorizationB", rat_list({Rational(3), Rational(8, 3)})},
                     {"lengths", nlohmann::json::array({2, 3})}};
        c.verified = true;
        out.push_back(c);
    }
    {
        // 2 * 3 = (14/5) * (15/7): two distinct length-2 factorizations.
        for (const Rational& x : {Rational(2), Rational(3), Rational(14, 5), Rational(15, 7)})
            if (!mul_atom(x)) throw std::logic_error("s2: multiplicative atom check failed");
        if (Rational(14, 5) * Rational(15, 7) != 6)
            throw std::logic_error("s2: multiplicative NotLF equality failed");
        Certificate c;
        c.kind = CertKind::NotLF;
        c.payload = {{"model", "ray(2)"},
                     {"side", "mul"},
                     {"element", "6"},
                     {"factorizationA", rat_list({2, 3})},
                     {"factorizationB", rat_list({Rational(14, 5), Rational(15, 7)})},
                     {"lengths", nlohmann::json::array({2, 2})}};
        c.verified = true;
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Monoid views (candidate grids over bounded denominators; the atom sets are
// uncountable, so enumeration is never complete)

namespace detail {

inline std::vector<Rational> ray_grid(const Rational& lo, const Rational& hi, unsigned max_den) {
    std::vector<Rational> out;
    for (unsigned d = 1; d <= max_den; ++d)
        for (Integer n = ceil_int(lo * Rational(d)); Rational(n, d) <= hi; ++n) {
            Rational x = make_rational(n, d);
            if (x >= lo && x <= hi) out.push_back(x);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

class RayAdditiveView final : public MonoidView<Rational> {
public:
    explicit RayAdditiveView(RaySemiring S) : S_(std::move(S)) {}

    Rational identity() const override { return Rational(0); }
    bool is_member(const Rational& x) const override { return S_.is_member(x); }
    bool is_unit(const Rational& x) const override { return x == 0; }
    Rational compose(const Rational& x, const Rational& y) const override { return x + y; }
    std::optional<Rational> decompose(const Rational& x, const Rational& y) const override {
        Rational z = x - y;
        if (z < 0 || !S_.is_member(z)) return std::nullopt;
        return z;
    }
    std::vector<Rational> proper_divisor_candidates(const Rational& x,
                                                    const SearchBudget& b) const override {
        std::vector<Rational> out;
        unsigned max_den = std::max(2u, b.max_exponent);
        for (const Rational& y : detail::ray_grid(Rational(1), x, max_den))
            if (y < x && S_.is_member(y)) out.push_back(y);
        return out;
    }
    std::optional<AtomAnswer<Rational>> classify_atom(const Rational& x,
                                                      const SearchBudget&) const override {
        if (is_additive_atom(S_, x)) return AtomAnswer<Rational>::atom();
        // Witness: 1 + (x-1) if valid, else split inside the ray.
        if (x > 1 && S_.is_member(x - 1))
            return AtomAnswer<Rational>::not_atom(Rational(1), x - 1);
        return AtomAnswer<Rational>::not_atom(x / 2, x / 2);  // x >= 2r here
    }
    std::string describe(const Rational& x) const override { return to_string(x); }

private:
    RaySemiring S_;
};

class RayMultiplicativeView final : public MonoidView<Rational> {
public:
    explicit RayMultiplicativeView(RaySemiring S) : S_(std::move(S)) {}

    Rational identity() const override { return Rational(1); }
    bool is_member(const Rational& x) const override { return x > 0 && S_.is_member(x); }
    bool is_unit(const Rational& x) const override { return x == 1; }
    Rational compose(const Rational& x, const Rational& y) const override { return x * y; }
    std::optional<Rational> decompose(const Rational& x, const Rational& y) const override {
        Rational z = x / y;
        if (!is_member(z)) return std::nullopt;
        return z;
    }
    std::vector<Rational> proper_divisor_candidates(const Rational& x,
                                                    const SearchBudget& b) const override {
        std::vector<Rational> out;
        unsigned max_den = std::max(2u, b.max_exponent);
        for (const Rational& y : detail::ray_grid(S_.r, x / S_.r, max_den))
            if (y != x && is_member(y)) out.push_back(y);
        for (Integer k = 2; Rational(k) * S_.r <= x; ++k) out.push_back(Rational(k));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    std::optional<AtomAnswer<Rational>> classify_atom(const Rational& x,
                                                      const SearchBudget&) const override {
        if (is_mult_atom(S_, x)) return AtomAnswer<Rational>::atom();
        // Witness search on the exclusion form x = p * s, else s in the ray.
        for (Integer p = 2; Rational(p) < x; ++p) {
            if (!is_prime(p)) continue;
            Rational s = x / Rational(p);
            if (s > 1 && S_.is_member(s))
                return AtomAnswer<Rational>::not_atom(Rational(p), s);
        }
        if (x >= S_.r * S_.r) {
            Rational y = x / S_.r >= S_.r ? S_.r : x / S_.r;
            if (S_.is_member(y) && S_.is_member(x / y) && y != 1 && x / y != 1)
                return AtomAnswer<Rational>::not_atom(y, x / y);
        }
        return AtomAnswer<Rational>::unknown();
    }
    std::string describe(const Rational& x) const override { return to_string(x); }

private:
    RaySemiring S_;
};

}  // namespace posring
