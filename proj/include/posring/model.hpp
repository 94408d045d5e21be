#pragma once

// SemiringModel: tagged descriptor of one semiring instance plus the
// model-string grammar (parse/print round-trips on canonical forms).

#include <posring/cyclic.hpp>
#include <posring/expsemiring.hpp>
#include <posring/natpoly.hpp>
#include <posring/numerical.hpp>
#include <posring/rank2.hpp>
#include <posring/ray.hpp>

#include <variant>

namespace posring {

enum class Side { Add, Mul };

inline Side parse_side(const std::string& s) {
    if (s == "add") return Side::Add;
    if (s == "mul") return Side::Mul;
    throw invalid_input("side must be 'add' or 'mul', got '" + s + "'");
}

inline std::string to_string(Side s) { return s == Side::Add ? "add" : "mul"; }

struct NatPolyModel {};  // N0[x]

struct SemiringModel {
    std::variant<CyclicRationalSemiring, CyclicAlgebraicSemiring, NatPolyModel, ExponentMonoid,
                 RaySemiring, Rank2Monoid, NumericalMonoid>
        value;

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&value);
    }
};

namespace detail {

inline std::string strip_spaces(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    return t;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

/// Tiny expression parser for rank2 generators: rational literals, the
/// reserved symbol `pi`, sums, and a trailing /den on a parenthesized sum.
/// Handles the documented forms: `pi`, `2`, `(pi+2)/2`, `3/2*pi`, `1+1/2*pi`.
inline Rank2Element parse_rank2_expr(const std::string& raw) {
    std::string s = strip_spaces(raw);
    if (s.empty()) throw invalid_input("rank2: empty generator expression");
    // (sum)/den
    if (s.front() == '(') {
        int depth = 0;
        std::size_t close = std::string::npos;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')' && --depth == 0) { close = i; break; }
        }
        if (close == std::string::npos) throw invalid_input("rank2: unbalanced parentheses");
        Rank2Element inner = parse_rank2_expr(s.substr(1, close - 1));
        std::string rest = s.substr(close + 1);
        if (rest.empty()) return inner;
        if (rest.front() != '/') throw invalid_input("rank2: expected '/' after ')'");
        Rational d = parse_rational(rest.substr(1));
        return {inner.a / d, inner.b / d};
    }
    // sum of terms
    Rank2Element acc{Rational(0), Rational(0)};
    std::size_t i = 0;
    int sign = 1;
    while (i < s.size()) {
        if (s[i] == '+') { sign = 1; ++i; continue; }
        if (s[i] == '-') { sign = -1; ++i; continue; }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        i = j;
        bool has_pi = false;
        if (auto p = term.find("pi"); p != std::string::npos) {
            has_pi = true;
            term.erase(p, 2);
            if (!term.empty() && term.back() == '*') term.pop_back();
        }
        Rational coeff = term.empty() ? Rational(1) : parse_rational(term);
        coeff *= sign;
        if (has_pi)
            acc.b += coeff;
        else
            acc.a += coeff;
        sign = 1;
    }
    return acc;
}

}  // namespace detail

/// Parses the model grammar: N0 | N0[rat] | N0[alg(poly, rat, rat)] | N0[x] |
/// ray(rat) | E(family) | numerical(ints) | rank2(exprs) | rank2family(...).
inline SemiringModel parse_model(const std::string& raw) {
    std::string s = detail::strip_spaces(raw);
    auto fail = [&](const std::string& why, std::size_t pos) -> SemiringModel {
        throw invalid_input("cannot parse model '" + raw + "' at position " +
                            std::to_string(pos) + ": " + why);
    };
    if (s == "N0") return {CyclicRationalSemiring{Rational(1)}};
    if (s == "N0[x]") return {NatPolyModel{}};
    if (s.rfind("N0[alg(", 0) == 0) {
        if (s.back() != ']' || s[s.size() - 2] != ')') return fail("expected ')]'", s.size());
        auto parts = detail::split(s.substr(7, s.size() - 9), ',');
        if (parts.size() != 3) return fail("alg(...) takes poly, lo, hi", 7);
        IntPolynomial m = IntPolynomial::parse(parts[0]);
        return {CyclicAlgebraicSemiring{
            AlgebraicNumber(m, parse_rational(parts[1]), parse_rational(parts[2]))}};
    }
    if (s.rfind("N0[", 0) == 0) {
        if (s.back() != ']') return fail("expected ']'", s.size());
        return {CyclicRationalSemiring{parse_rational(s.substr(3, s.size() - 4))}};
    }
    if (s.rfind("ray(", 0) == 0) {
        if (s.back() != ')') return fail("expected ')'", s.size());
        return {RaySemiring{parse_rational(s.substr(4, s.size() - 5))}};
    }
    if (s.rfind("E(", 0) == 0) {
        if (s.back() != ')') return fail("expected ')'", s.size());
        std::string fam = s.substr(2, s.size() - 3);
        auto cap_of = [&](const std::string& prefix) {
            return std::stol(fam.substr(prefix.size()));
        };
        if (fam.rfind("unitfrac<=", 0) == 0)
            return {ExponentMonoid::unit_fractions(cap_of("unitfrac<="))};
        if (fam.rfind("floorsqrt<=", 0) == 0)
            return {ExponentMonoid::floor_sqrt_over_p(cap_of("floorsqrt<="))};
        if (fam.rfind("mixedsq<=", 0) == 0)
            return {ExponentMonoid::mixed_squares(
                static_cast<unsigned>(cap_of("mixedsq<=")))};
        if (fam.rfind("gen:", 0) == 0) {
            std::vector<Rational> gens;
            for (const std::string& g : detail::split(fam.substr(4), ','))
                gens.push_back(parse_rational(g));
            return {ExponentMonoid::finitely_generated(std::move(gens))};
        }
        return fail("unknown E(...) family '" + fam + "'", 2);
    }
    if (s.rfind("numerical(", 0) == 0) {
        if (s.back() != ')') return fail("expected ')'", s.size());
        std::vector<unsigned long> gens;
        for (const std::string& g : detail::split(s.substr(10, s.size() - 11), ','))
            gens.push_back(std::stoul(g));
        return {NumericalMonoid{std::move(gens)}};
    }
    if (s.rfind("rank2family(", 0) == 0) {
        if (s.back() != ')') return fail("expected ')'", s.size());
        unsigned cap = 0;
        std::optional<OmegaSpec> omega;
        for (const std::string& kv : detail::split(s.substr(12, s.size() - 13), ',')) {
            if (kv.rfind("cap=", 0) == 0) {
                cap = static_cast<unsigned>(std::stoul(kv.substr(4)));
            } else if (kv.rfind("omega=(", 0) == 0 && kv.back() == ')') {
                auto ends = detail::split(kv.substr(7, kv.size() - 8), ';');
                if (ends.size() == 1) ends = detail::split(kv.substr(7, kv.size() - 8), ',');
                if (ends.size() != 2) return fail("omega=(lo,hi) expected", 12);
                omega = OmegaSpec(parse_rational(ends[0]), parse_rational(ends[1]));
            } else {
                return fail("unknown rank2family key '" + kv + "'", 12);
            }
        }
        if (cap == 0 || !omega) return fail("rank2family needs cap and omega", 12);
        return {Rank2Monoid::family(cap, *omega)};
    }
    if (s.rfind("rank2(", 0) == 0) {
        if (s.back() != ')') return fail("expected ')'", s.size());
        std::vector<Rank2Element> gens;
        for (const std::string& g : detail::split(s.substr(6, s.size() - 7), ';'))
            gens.push_back(detail::parse_rank2_expr(g));
        return {Rank2Monoid{OmegaSpec::pi(), std::move(gens)}};
    }
    return fail("unrecognized model form", 0);
}

/// Canonical printing; parse(print_model(m)) reproduces m.
inline std::string print_model(const SemiringModel& m) {
    if (auto* c = m.as<CyclicRationalSemiring>())
        return c->q == 1 ? "N0" : "N0[" + to_string(c->q) + "]";
    if (auto* a = m.as<CyclicAlgebraicSemiring>())
        return "N0[alg(" + a->alpha.min_poly().to_text() + ", " +
               to_string(a->alpha.isolator().lo) + ", " + to_string(a->alpha.isolator().hi) +
               ")]";
    if (m.as<NatPolyModel>()) return "N0[x]";
    if (auto* e = m.as<ExponentMonoid>()) return "E(" + e->describe() + ")";
    if (auto* r = m.as<RaySemiring>()) return "ray(" + to_string(r->r) + ")";
    if (auto* n = m.as<NumericalMonoid>()) return n->describe();
    if (auto* r2 = m.as<Rank2Monoid>()) {
        if (r2->family_cap()) {
            return "rank2family(cap=" + std::to_string(*r2->family_cap()) + ", omega=(" +
                   to_string(r2->omega().lo) + "," + to_string(r2->omega().hi) + "))";
        }
        std::string out = "rank2(";
        const auto& gens = r2->generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) out += "; ";
            // Reserved symbol for the default pi enclosure.
            std::string t = gens[i].to_text();
            for (std::size_t p; (p = t.find('w')) != std::string::npos;) t.replace(p, 1, "pi");
            out += t;
        }
        return out + ")";
    }
    throw std::logic_error("print_model: unhandled variant");
}

/// Parses an element in the model's element syntax.
inline ExpSum parse_expsum(const std::string& raw) {
    std::string s = detail::strip_spaces(raw);
    if (!s.empty() && s.front() == '{') return ExpSum::from_json(nlohmann::json::parse(raw));
    // "e^m", "e^(m)", "c*e^m", sums joined by '+'.
    ExpSum out;
    for (const std::string& term : detail::split(s, '+')) {
        auto epos = term.find("e^");
        if (epos == std::string::npos) {
            out.add_term(Rational(0), num(parse_rational(term)));
            continue;
        }
        std::string cs = term.substr(0, epos);
        if (!cs.empty() && cs.back() == '*') cs.pop_back();
        Integer c = cs.empty() ? Integer(1) : num(parse_rational(cs));
        std::string ms = term.substr(epos + 2);
        if (!ms.empty() && ms.front() == '(' && ms.back() == ')')
            ms = ms.substr(1, ms.size() - 2);
        out.add_term(parse_rational(ms), c);
    }
    if (out.is_zero()) throw invalid_input("cannot parse ExpSum: '" + raw + "'");
    return out;
}

inline Rank2Element parse_rank2_element(const std::string& raw) {
    std::string s = detail::strip_spaces(raw);
    for (std::size_t p; (p = s.find('w')) != std::string::npos;) s.replace(p, 1, "pi");
    return detail::parse_rank2_expr(s);
}

}  // namespace posring
