#pragma once

// Sparse univariate polynomials with arbitrary-precision integer coefficients,
// in canonical form (no stored zero coefficients).  NatPolynomial restricts
// the coefficients to positive integers on each support point.

#include <posring/rational.hpp>

#include <map>
#include <sstream>

#include <json.hpp>

namespace posring {

class IntPolynomial {
public:
    using coeff_map = std::map<unsigned, Integer>;

    IntPolynomial() = default;

    explicit IntPolynomial(const Integer& c) {
        if (c != 0) coeffs_[0] = c;
    }

    static IntPolynomial monomial(const Integer& c, unsigned deg) {
        IntPolynomial p;
        if (c != 0) p.coeffs_[deg] = c;
        return p;
    }

    /// Dense construction from [c0, c1, ...].
    static IntPolynomial from_dense(const std::vector<Integer>& cs) {
        IntPolynomial p;
        for (unsigned i = 0; i < cs.size(); ++i)
            if (cs[i] != 0) p.coeffs_[i] = cs[i];
        return p;
    }

    const coeff_map& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_.count(0) && coeffs_.at(0) == 1; }

    unsigned degree() const {
        if (is_zero()) throw invalid_input("degree of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    Integer coeff(unsigned d) const {
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? Integer(0) : it->second;
    }

    Integer leading_coeff() const { return coeffs_.rbegin()->second; }

    std::vector<unsigned> support() const {
        std::vector<unsigned> s;
        for (const auto& [d, c] : coeffs_) s.push_back(d);
        return s;
    }

    /// gcd of the coefficients (0 for the zero polynomial).
    Integer content() const {
        Integer g = 0;
        for (const auto& [d, c] : coeffs_) g = gcd(g, c);
        return g < 0 ? Integer(-g) : g;
    }

    bool is_nonnegative() const {
        for (const auto& [d, c] : coeffs_)
            if (c < 0) return false;
        return true;
    }

    void set_coeff(unsigned d, const Integer& c) {
        if (c == 0)
            coeffs_.erase(d);
        else
            coeffs_[d] = c;
    }

    IntPolynomial operator-() const {
        IntPolynomial r;
        for (const auto& [d, c] : coeffs_) r.coeffs_[d] = -c;
        return r;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r = a;
        for (const auto& [d, c] : b.coeffs_) r.set_coeff(d, r.coeff(d) + c);
        return r;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r = a;
        for (const auto& [d, c] : b.coeffs_) r.set_coeff(d, r.coeff(d) - c);
        return r;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_)
                r.set_coeff(da + db, r.coeff(da + db) + ca * cb);
        return r;
    }

    friend IntPolynomial operator*(const Integer& k, const IntPolynomial& a) {
        IntPolynomial r;
        if (k == 0) return r;
        for (const auto& [d, c] : a.coeffs_) r.coeffs_[d] = k * c;
        return r;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
        return !(a == b);
    }

    /// Canonical order: degree, then coefficients lexicographically from the
    /// top degree down.  Fixes the byte-for-byte output ordering.
    friend bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return !b.is_zero() && a.is_zero();
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (unsigned d = a.degree() + 1; d-- > 0;) {
            Integer ca = a.coeff(d), cb = b.coeff(d);
            if (ca != cb) return ca < cb;
        }
        return false;
    }

    Rational eval(const Rational& x) const {
        if (is_zero()) return Rational(0);
        // Horner over the dense range.
        Rational acc(0);
        unsigned prev = degree();
        acc = Rational(coeffs_.rbegin()->second);
        for (auto it = std::next(coeffs_.rbegin()); it != coeffs_.rend(); ++it) {
            acc *= pow_rat(x, prev - it->first);
            acc += Rational(it->second);
            prev = it->first;
        }
        if (prev > 0) acc *= pow_rat(x, prev);
        return acc;
    }

    Integer eval_int(const Integer& x) const {
        Rational v = eval(Rational(x));
        return v.get_num();
    }

    /// Exact division; nullopt when b does not divide a over the integers.
    static std::optional<IntPolynomial> divide_exact(const IntPolynomial& a,
                                                     const IntPolynomial& b) {
        if (b.is_zero()) throw invalid_input("division by zero polynomial");
        if (a.is_zero()) return IntPolynomial();
        if (a.degree() < b.degree()) return std::nullopt;
        IntPolynomial rem = a, q;
        const Integer lb = b.leading_coeff();
        const unsigned db = b.degree();
        while (!rem.is_zero() && rem.degree() >= db) {
            Integer lr = rem.leading_coeff();
            if (lr % lb != 0) return std::nullopt;
            unsigned dq = rem.degree() - db;
            Integer cq = lr / lb;
            q.set_coeff(dq, cq);
            rem = rem - monomial(cq, dq) * b;
        }
        if (!rem.is_zero()) return std::nullopt;
        return q;
    }

    std::string to_text() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            Integer c = it->second;
            unsigned d = it->first;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            Integer ac = c < 0 ? Integer(-c) : c;
            if (ac != 1 || d == 0) os << ac.get_str();
            if (d >= 1) os << "x";
            if (d >= 2) os << "^" << d;
            first = false;
        }
        return os.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json m = nlohmann::json::object();
        for (const auto& [d, c] : coeffs_) m[std::to_string(d)] = c.get_str();
        return nlohmann::json{{"coeffs", m}};
    }

    static IntPolynomial from_json(const nlohmann::json& j) {
        IntPolynomial p;
        for (const auto& [k, v] : j.at("coeffs").items())
            p.set_coeff(static_cast<unsigned>(std::stoul(k)), Integer(v.get<std::string>()));
        return p;
    }

    /// Parses "3x^2 + 2x + 1", "x^2-x+1", "x", "7".
    static IntPolynomial parse(const std::string& s);

private:
    coeff_map coeffs_;
};

inline IntPolynomial IntPolynomial::parse(const std::string& s) {
    IntPolynomial p;
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw invalid_input("empty polynomial literal");
    std::size_t i = 0;
    bool any = false;
    while (i < t.size()) {
        int sign = 1;
        while (i < t.size() && (t[i] == '+' || t[i] == '-')) {
            if (t[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= t.size()) throw invalid_input("dangling sign in polynomial: '" + s + "'");
        std::string digits;
        while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) digits += t[i++];
        Integer c = digits.empty() ? Integer(1) : Integer(digits);
        if (i < t.size() && t[i] == '*') ++i;
        unsigned d = 0;
        if (i < t.size() && (t[i] == 'x' || t[i] == 'X')) {
            ++i;
            d = 1;
            if (i < t.size() && t[i] == '^') {
                ++i;
                std::string ed;
                while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) ed += t[i++];
                if (ed.empty()) throw invalid_input("missing exponent in polynomial: '" + s + "'");
                d = static_cast<unsigned>(std::stoul(ed));
            }
        } else if (digits.empty()) {
            throw invalid_input("cannot parse polynomial: '" + s + "'");
        }
        p.set_coeff(d, p.coeff(d) + sign * c);
        any = true;
    }
    if (!any) throw invalid_input("cannot parse polynomial: '" + s + "'");
    return p;
}

/// Polynomial with positive integer coefficients on each support point
/// (an element of N0[x] when nonzero; zero is representable for arithmetic).
class NatPolynomial : public IntPolynomial {
public:
    NatPolynomial() = default;

    explicit NatPolynomial(const IntPolynomial& p) : IntPolynomial(p) {
        if (!p.is_nonnegative())
            throw invalid_input("NatPolynomial with negative coefficient: " + p.to_text());
    }

    explicit NatPolynomial(const Integer& c) : IntPolynomial(check_nonneg(c)) {}

    static NatPolynomial parse(const std::string& s) {
        return NatPolynomial(IntPolynomial::parse(s));
    }

private:
    static Integer check_nonneg(const Integer& c) {
        if (c < 0) throw invalid_input("NatPolynomial with negative constant");
        return c;
    }
};

}  // namespace posring
