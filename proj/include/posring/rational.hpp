#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals
// (GMP-backed) plus the small number-theory helpers used across the library.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace posring {

using Integer = mpz_class;
using Rational = mpq_class;

struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reduced numerator of a positive rational.
inline Integer num(const Rational& q) { return q.get_num(); }

/// Reduced (positive) denominator.
inline Integer den(const Rational& q) { return q.get_den(); }

inline Rational make_rational(const Integer& n, const Integer& d) {
    if (d == 0) throw invalid_input("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_int(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_int(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer pow_int(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rational pow_rat(const Rational& b, unsigned long e) {
    Rational r(pow_int(b.get_num(), e), pow_int(b.get_den(), e));
    r.canonicalize();
    return r;
}

inline bool is_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline std::vector<Integer> primes_up_to(long bound) {
    std::vector<Integer> out;
    for (Integer p = 2; p <= bound; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

/// Prime factorization n = prod p_i^e_i, n >= 1, ascending primes.
inline std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
    if (n < 1) throw invalid_input("factor_integer requires n >= 1");
    std::vector<std::pair<Integer, unsigned>> out;
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// All positive divisors of n >= 1, ascending.
inline std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factor_integer(n < 0 ? Integer(-n) : n)) {
        std::size_t sz = out.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// True when every prime factor of n divides m.
inline bool supported_on_primes_of(Integer n, const Integer& m) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    Integer g = gcd(n, m);
    while (g > 1) {
        while (n % g == 0) n /= g;
        g = gcd(n, m);
    }
    return n == 1;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::string to_string(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str()
                            : q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "7/3", "-2", with optional surrounding whitespace.
inline Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw invalid_input("empty rational literal");
    try {
        Rational q(t);
        if (q.get_den() == 0) throw invalid_input("rational with zero denominator: '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw invalid_input("cannot parse rational: '" + s + "'");
    }
}

}  // namespace posring
