#pragma once

// Exact factorization over Z[x] by Kronecker interpolation.  Intended for
// desk-scale inputs (degree <= 12 or so); correctness over speed.

#include <posring/int_polynomial.hpp>

namespace posring {

struct IntPolyFactorization {
    int sign = 1;               // +-1
    Integer content = 1;        // positive
    std::vector<IntPolynomial> factors;  // primitive, irreducible over Q, sorted

    IntPolynomial recompose() const {
        IntPolynomial p(Integer(sign) * content);
        for (const auto& f : factors) p = p * f;
        return p;
    }
};

namespace detail {

/// Lagrange interpolation through (xs[i], ys[i]); nullopt unless the result
/// has integer coefficients.
inline std::optional<IntPolynomial> interpolate_integer(const std::vector<Integer>& xs,
                                                        const std::vector<Integer>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> dense(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        // Basis polynomial prod_{j!=i} (x - xs[j]) / (xs[i] - xs[j]).
        std::vector<Rational> basis{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis.push_back(Rational(0));
            for (std::size_t k = basis.size() - 1; k > 0; --k)
                basis[k] = basis[k - 1] - Rational(xs[j]) * basis[k];
            basis[0] = -Rational(xs[j]) * basis[0];
            denom *= Rational(xs[i] - xs[j]);
        }
        Rational scale = Rational(ys[i]) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) dense[k] += scale * basis[k];
    }
    IntPolynomial out;
    for (std::size_t k = 0; k < n; ++k) {
        if (dense[k] == 0) continue;
        if (!is_integer(dense[k])) return std::nullopt;
        out.set_coeff(static_cast<unsigned>(k), dense[k].get_num());
    }
    return out;
}

inline std::vector<Integer> signed_divisors(const Integer& v) {
    std::vector<Integer> out;
    for (const Integer& d : divisors(v)) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

/// Finds a proper factor of the primitive polynomial p (deg >= 2) with degree
/// in [1, deg(p)/2], or nullopt when p is irreducible over Q.
inline std::optional<IntPolynomial> kronecker_find_factor(const IntPolynomial& p) {
    const unsigned deg = p.degree();
    // Evaluation points 0, 1, -1, 2, -2, ...; an integer root gives an
    // immediate linear factor.
    std::vector<Integer> points;
    for (long k = 0; points.size() < deg / 2 + 1; ++k) {
        if (k == 0)
            points.push_back(0);
        else {
            points.push_back(k);
            points.push_back(-k);
        }
    }
    points.resize(deg / 2 + 1);
    std::vector<Integer> values;
    for (const Integer& a : points) {
        Integer v = p.eval_int(a);
        if (v == 0)
            return IntPolynomial::from_dense({-a, 1});  // x - a
        values.push_back(v);
    }
    for (unsigned fdeg = 1; fdeg <= deg / 2; ++fdeg) {
        std::vector<Integer> xs(points.begin(), points.begin() + fdeg + 1);
        std::vector<std::vector<Integer>> choices;
        for (unsigned i = 0; i <= fdeg; ++i) choices.push_back(signed_divisors(values[i]));
        std::vector<std::size_t> idx(fdeg + 1, 0);
        // Fix the first value positive; factors come in +-g pairs.
        const std::size_t half0 = choices[0].size();
        for (std::size_t i0 = 0; i0 < half0; i0 += 2) {
            idx[0] = i0;
            // Odometer over the remaining points.
            std::fill(idx.begin() + 1, idx.end(), 0);
            while (true) {
                std::vector<Integer> ys;
                for (unsigned i = 0; i <= fdeg; ++i) ys.push_back(choices[i][idx[i]]);
                if (auto g = interpolate_integer(xs, ys)) {
                    if (!g->is_zero() && !g->coeffs().empty() && g->degree() == fdeg) {
                        if (IntPolynomial::divide_exact(p, *g)) return g;
                    }
                }
                // Advance odometer positions 1..fdeg.
                unsigned pos = 1;
                for (; pos <= fdeg; ++pos) {
                    if (++idx[pos] < choices[pos].size()) break;
                    idx[pos] = 0;
                }
                if (pos > fdeg) break;
            }
        }
    }
    return std::nullopt;
}

inline void factor_primitive(const IntPolynomial& p, std::vector<IntPolynomial>& out) {
    if (p.degree() == 0) return;  // unit +-1 after content extraction
    if (p.degree() == 1) {
        out.push_back(p);
        return;
    }
    if (auto g = kronecker_find_factor(p)) {
        IntPolynomial gg = *g;
        if (gg.leading_coeff() < 0) gg = -gg;
        Integer c = gg.content();
        if (c > 1) {
            auto prim = IntPolynomial::divide_exact(gg, IntPolynomial(c));
            gg = *prim;
        }
        auto q = IntPolynomial::divide_exact(p, gg);
        factor_primitive(gg, out);
        factor_primitive(*q, out);
    } else {
        out.push_back(p);
    }
}

}  // namespace detail

/// Factors f = sign * content * prod(factors) with primitive irreducible
/// factors in the canonical (degree, coefficient-lexicographic) order.
inline IntPolyFactorization factor_int_poly(const IntPolynomial& f) {
    if (f.is_zero()) throw invalid_input("factor_int_poly: zero polynomial");
    IntPolyFactorization out;
    out.sign = f.leading_coeff() < 0 ? -1 : 1;
    IntPolynomial p = out.sign < 0 ? -f : f;
    out.content = p.content();
    if (out.content > 1) p = *IntPolynomial::divide_exact(p, IntPolynomial(out.content));
    // Strip powers of x.
    if (!p.coeffs().count(0)) {
        unsigned k = p.coeffs().begin()->first;
        IntPolynomial shifted;
        for (const auto& [d, c] : p.coeffs()) shifted.set_coeff(d - k, c);
        for (unsigned i = 0; i < k; ++i) out.factors.push_back(IntPolynomial::monomial(1, 1));
        p = shifted;
    }
    if (p.degree() >= 1) detail::factor_primitive(p, out.factors);
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

inline bool is_irreducible_over_q(const IntPolynomial& f) {
    if (f.is_zero() || f.degree() == 0) return false;
    auto fac = factor_int_poly(f);
    return fac.factors.size() == 1 && fac.content == 1;
}

}  // namespace posring
