#pragma once

// Real algebraic numbers as (minimal polynomial, isolating rational interval).
// Signs of Z[x]-expressions are decided symbolically (reduction mod the
// minimal polynomial) followed by interval refinement; zero tests are exact.

#include <posring/poly_factor.hpp>

namespace posring {

struct RationalInterval {
    Rational lo, hi;

    RationalInterval operator+(const RationalInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RationalInterval operator*(const RationalInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
    }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    Rational width() const { return hi - lo; }
};

/// Rational-coefficient polynomial as integer polynomial / positive denominator.
struct RationalPolynomial {
    IntPolynomial numer;
    Integer denom = 1;

    static RationalPolynomial from_map(const std::map<unsigned, Rational>& m) {
        Integer l = 1;
        for (const auto& [d, c] : m) l = lcm(l, den(c));
        RationalPolynomial r;
        r.denom = l;
        for (const auto& [d, c] : m) {
            Rational scaled = c * Rational(l);
            r.numer.set_coeff(d, scaled.get_num());
        }
        return r;
    }
};

/// Remainder of f modulo m over Q, scaled to an integer polynomial: returns r
/// with deg r < deg m and f == q*m + r/k for some k in N, q in Q[x].
inline IntPolynomial poly_mod_scaled(const IntPolynomial& f, const IntPolynomial& m) {
    if (m.is_zero()) throw invalid_input("modulus is zero");
    std::map<unsigned, Rational> rem;
    if (f.is_zero()) return IntPolynomial();
    for (const auto& [d, c] : f.coeffs()) rem[d] = Rational(c);
    auto degree_of = [&]() -> long {
        while (!rem.empty() && rem.rbegin()->second == 0) rem.erase(std::prev(rem.end()));
        return rem.empty() ? -1 : static_cast<long>(rem.rbegin()->first);
    };
    const long dm = static_cast<long>(m.degree());
    const Rational lm(m.leading_coeff());
    long dr;
    while ((dr = degree_of()) >= dm) {
        Rational cq = rem.rbegin()->second / lm;
        unsigned shift = static_cast<unsigned>(dr - dm);
        for (const auto& [d, c] : m.coeffs()) {
            Rational& slot = rem[d + shift];
            slot -= cq * Rational(c);
        }
    }
    // Clear denominators; only the sign of the value matters downstream.
    Integer l = 1;
    for (const auto& [d, c] : rem)
        if (c != 0) l = lcm(l, den(c));
    IntPolynomial out;
    for (const auto& [d, c] : rem)
        if (c != 0) out.set_coeff(d, Rational(c * Rational(l)).get_num());
    return out;
}

class AlgebraicNumber {
public:
    /// minPoly must be irreducible over Q, primitive, positive leading
    /// coefficient; (lo, hi) must isolate exactly one real root.
    AlgebraicNumber(IntPolynomial min_poly, Rational lo, Rational hi)
        : min_poly_(std::move(min_poly)), iv_{std::move(lo), std::move(hi)} {
        if (min_poly_.is_zero() || min_poly_.degree() == 0)
            throw invalid_input("minimal polynomial must have degree >= 1");
        if (min_poly_.leading_coeff() < 0 || min_poly_.content() != 1)
            throw invalid_input("minimal polynomial must be primitive with positive leading coefficient");
        if (!is_irreducible_over_q(min_poly_))
            throw invalid_input("minimal polynomial is reducible over Q: " + min_poly_.to_text());
        if (min_poly_.degree() == 1) {
            // Rational number; collapse the interval onto the root.
            Rational root = -Rational(min_poly_.coeff(0)) / Rational(min_poly_.coeff(1));
            iv_ = {root, root};
        } else {
            if (!(iv_.lo < iv_.hi)) throw invalid_input("empty isolating interval");
            if (sign_at(min_poly_, iv_.lo) * sign_at(min_poly_, iv_.hi) >= 0)
                throw invalid_input("interval does not isolate a root of " + min_poly_.to_text());
        }
    }

    const IntPolynomial& min_poly() const { return min_poly_; }
    const RationalInterval& isolator() const { return iv_; }
    bool is_rational() const { return min_poly_.degree() == 1; }
    Rational rational_value() const {
        if (!is_rational()) throw invalid_input("not a rational algebraic number");
        return iv_.lo;
    }

    /// Halved isolating interval (new value; this object is immutable).
    AlgebraicNumber refined() const {
        if (is_rational()) return *this;
        AlgebraicNumber r = *this;
        Rational mid = (iv_.lo + iv_.hi) / 2;
        // Irreducible of degree >= 2 has no rational root, so the sign at mid
        // is never zero.
        if (sign_at(min_poly_, iv_.lo) * sign_at(min_poly_, mid) < 0)
            r.iv_.hi = mid;
        else
            r.iv_.lo = mid;
        return r;
    }

    /// Exact comparison with a rational.  The isolating interval is open, so
    /// an endpoint hit already decides the comparison (no rational equals the
    /// root when deg >= 2).
    int compare(const Rational& q) const {
        if (is_rational()) return rational_value() < q ? -1 : (rational_value() == q ? 0 : 1);
        AlgebraicNumber a = *this;
        while (true) {
            if (q <= a.iv_.lo) return 1;
            if (q >= a.iv_.hi) return -1;
            a = a.refined();
        }
    }

    static int sign_at(const IntPolynomial& f, const Rational& x) {
        Rational v = f.eval(x);
        return v < 0 ? -1 : (v == 0 ? 0 : 1);
    }

private:
    IntPolynomial min_poly_;
    RationalInterval iv_;
};

/// Sign of f(alpha): 0 iff minPoly divides f over Q; otherwise decided by
/// interval refinement on the reduced remainder.
inline int alg_sign(const AlgebraicNumber& alpha, const IntPolynomial& f) {
    if (f.is_zero()) return 0;
    if (alpha.is_rational()) return AlgebraicNumber::sign_at(f, alpha.rational_value());
    IntPolynomial r = poly_mod_scaled(f, alpha.min_poly());
    if (r.is_zero()) return 0;
    const IntPolynomial& m = alpha.min_poly();
    Rational lo = alpha.isolator().lo, hi = alpha.isolator().hi;
    auto msign = [&](const Rational& x) { return AlgebraicNumber::sign_at(m, x); };
    const int sign_lo = msign(lo);
    while (true) {
        // m is irreducible of degree >= 2, so r(alpha) != 0; the loop stalls
        // only if an endpoint sits on a root of r.  Move such an endpoint
        // inward while keeping the interval isolating.
        if (AlgebraicNumber::sign_at(r, lo) == 0) {
            Rational cand = lo + (hi - lo) / 4;
            if (msign(cand) == sign_lo)
                lo = cand;
            else
                hi = cand;
            continue;
        }
        if (AlgebraicNumber::sign_at(r, hi) == 0) {
            Rational cand = hi - (hi - lo) / 4;
            if (msign(cand) == sign_lo)
                lo = cand;
            else
                hi = cand;
            continue;
        }
        RationalInterval x{lo, hi};
        RationalInterval acc{Rational(0), Rational(0)};
        for (unsigned d = r.degree() + 1; d-- > 0;) {
            acc = acc * x;
            Integer c = r.coeff(d);
            acc = acc + RationalInterval{Rational(c), Rational(c)};
        }
        if (!acc.contains_zero()) return acc.lo > 0 ? 1 : -1;
        Rational mid = (lo + hi) / 2;
        if (msign(mid) == sign_lo)
            lo = mid;
        else
            hi = mid;
    }
}

}  // namespace posring
