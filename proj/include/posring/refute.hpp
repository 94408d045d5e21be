#pragma once

// Refutation driver: dispatches (model, side, property) to the family-specific
// witness constructors, and assembles the four-separation diagram report.
// Properties are universally quantified, so the driver either returns a
// verified Certificate, or NotFound (no witness within budget; not a proof),
// or throws `unsupported` where no search is implemented.

#include <posring/model.hpp>

namespace posring {

enum class Property { Atomic, ACCP, BF, FF, HF, LF };

inline Property parse_property(const std::string& s) {
    if (s == "atomic") return Property::Atomic;
    if (s == "ACCP") return Property::ACCP;
    if (s == "BF") return Property::BF;
    if (s == "FF") return Property::FF;
    if (s == "HF") return Property::HF;
    if (s == "LF") return Property::LF;
    throw invalid_input("property must be one of atomic, ACCP, BF, FF, HF, LF; got '" + s + "'");
}

inline std::string to_string(Property p) {
    switch (p) {
        case Property::Atomic: return "atomic";
        case Property::ACCP: return "ACCP";
        case Property::BF: return "BF";
        case Property::FF: return "FF";
        case Property::HF: return "HF";
        case Property::LF: return "LF";
    }
    return "?";
}

struct NotFound {
    std::string reason;
};

using RefuteResult = std::variant<Certificate, NotFound>;

namespace detail {

/// NotHF/NotLF certificate from two factorizations of the same element,
/// re-checking composition, atomicity, and the length relation.
template <typename E>
Certificate two_factorization_certificate(const MonoidView<E>& view, CertKind kind,
                                          const std::string& model, const std::string& side,
                                          const E& x, const Factorization<E>& fa,
                                          const Factorization<E>& fb,
                                          const SearchBudget& budget) {
    auto recheck = [&](const Factorization<E>& f) {
        E prod = view.identity();
        for (const E& a : f.expanded()) {
            prod = view.compose(prod, a);
            if (posring::is_atom(view, a, budget).status != AtomStatus::Atom)
                throw std::logic_error("certificate re-check: part is not an atom: " +
                                       view.describe(a));
        }
        if (!(prod == x))
            throw std::logic_error("certificate re-check: product mismatch for " +
                                   view.describe(x));
    };
    recheck(fa);
    recheck(fb);
    if (fa == fb) throw std::logic_error("certificate re-check: factorizations coincide");
    if (kind == CertKind::NotHF && fa.length() == fb.length())
        throw std::logic_error("certificate re-check: NotHF needs distinct lengths");
    if (kind == CertKind::NotLF && fa.length() != fb.length())
        throw std::logic_error("certificate re-check: NotLF needs equal lengths");
    auto txt = [&](const Factorization<E>& f) {
        nlohmann::json a = nlohmann::json::array();
        for (const E& p : f.expanded()) a.push_back(view.describe(p));
        return a;
    };
    Certificate c;
    c.kind = kind;
    c.payload = {{"model", model},
                 {"side", side},
                 {"element", view.describe(x)},
                 {"factorizationA", txt(fa)},
                 {"factorizationB", txt(fb)},
                 {"lengths", nlohmann::json::array({fa.length(), fb.length()})}};
    c.verified = true;
    return c;
}

/// Scans the additive monoid of S up to `limit` for the first element with
/// two distinct factorizations that violate `kind`.
inline RefuteResult numerical_additive_scan(const NumericalMonoid& S, CertKind kind,
                                            long limit, const SearchBudget& budget) {
    NumericalAdditiveView view(S);
    for (long n = 1; n <= limit; ++n) {
        if (!S.is_member(n)) continue;
        FactorizationSet<Integer> fs = enumerate_factorizations(view, Integer(n), budget);
        for (std::size_t i = 0; i < fs.factorizations.size(); ++i)
            for (std::size_t j = i + 1; j < fs.factorizations.size(); ++j) {
                bool hit = kind == CertKind::NotHF
                               ? fs.factorizations[i].length() != fs.factorizations[j].length()
                               : fs.factorizations[i].length() == fs.factorizations[j].length();
                if (hit)
                    return two_factorization_certificate(view, kind, S.describe(), "add",
                                                         Integer(n), fs.factorizations[i],
                                                         fs.factorizations[j], budget);
            }
    }
    return NotFound{"no witness among members <= " + std::to_string(limit)};
}

/// Searches the Remark's (q, n) parameters: q the smallest prime outside S,
/// n up to a desk-scale cap.
inline RefuteResult numerical_remark_search(const NumericalMonoid& S, CertKind kind) {
    Integer q = 2;
    while (S.is_member(q) || !is_prime(q)) ++q;
    for (unsigned n = 2; n <= 5; ++n) {
        try {
            auto [notlf, nothf] = remark_witnesses(S, mpz_get_ui(q.get_mpz_t()), n);
            return kind == CertKind::NotLF ? notlf : nothf;
        } catch (const unsupported&) {
            continue;
        }
    }
    throw unsupported("no Remark parameters (q=" + to_string(q) +
                      ", n <= 5) satisfy the hypotheses for " + S.describe());
}

/// Grows the budget until the length set of `x` shows at least three distinct
/// values, witnessing unbounded length sets (not-BF evidence).
inline RefuteResult cyclic_nonbf(const CyclicRationalSemiring& S, SearchBudget budget) {
    if (!(S.q < 1 && num(S.q) > 1))
        return NotFound{"length sets show no unboundedness pattern for this parameter"};
    CyclicRationalAdditiveView view(S);
    Rational x(num(S.q));  // num(q) = den(q)*q + (num-den)*1 seeds long factorizations
    for (int round = 0; round < 3; ++round, budget = budget.doubled()) {
        FactorizationSet<Rational> fs = cyclic_additive_factorizations(S, x, budget);
        std::vector<unsigned> lens = fs.lengths();
        if (lens.size() < 3) continue;
        for (const auto& f : fs.factorizations) {
            Rational sum(0);
            for (const Rational& a : f.expanded()) {
                sum += a;
                if (is_atom(view, a, budget).status != AtomStatus::Atom)
                    throw std::logic_error("cyclic_nonbf: part is not an atom");
            }
            if (sum != x) throw std::logic_error("cyclic_nonbf: sum mismatch");
        }
        nlohmann::json jl = nlohmann::json::array();
        for (unsigned l : lens) jl.push_back(l);
        Certificate c;
        c.kind = CertKind::NonBFFamily;
        c.payload = {{"model", "N0[" + to_string(S.q) + "]"},
                     {"side", "add"},
                     {"element", to_string(x)},
                     {"lengths", jl},
                     {"family",
                      "every length in the observed set extends: substituting num(q) = "
                      "den(q)*q + (num(q)-den(q))*1 into any factorization strictly "
                      "increases its length"}};
        c.verified = true;
        return c;
    }
    return NotFound{"fewer than three lengths observed within the budget"};
}

/// Not-BF evidence for E(unitfrac<=P): the length set of e^1 equals the set
/// of primes <= P, which grows without bound in P.
inline RefuteResult exp_nonbf(const ExponentMonoid& M, const SearchBudget& budget) {
    const std::string fam = M.describe();
    if (fam.rfind("unitfrac<=", 0) != 0)
        throw unsupported("not-BF evidence is implemented for the unitfrac family only");
    long P = std::stol(fam.substr(10));
    ExpSemiringMultiplicativeView view{M};
    SearchBudget big = budget;
    big.max_length = std::max<std::size_t>(big.max_length, static_cast<std::size_t>(P) + 2);
    big.max_candidates = std::max<std::size_t>(big.max_candidates, 200000);
    FactorizationSet<ExpSum> fs = enumerate_factorizations(view, ExpSum::exponential(1), big);
    if (!fs.complete) throw unsupported("exp_nonbf: enumeration did not close");
    std::vector<unsigned> lens = fs.lengths();
    std::vector<unsigned> expect;
    for (const Integer& p : primes_up_to(P)) expect.push_back(mpz_get_ui(p.get_mpz_t()));
    if (lens != expect)
        throw std::logic_error("exp_nonbf: length set of e^1 is not the set of primes <= P");
    for (const auto& f : fs.factorizations) {
        ExpSum prod = ExpSum::one();
        for (const ExpSum& a : f.expanded()) prod = prod * a;
        if (!(prod == ExpSum::exponential(1)))
            throw std::logic_error("exp_nonbf: product mismatch");
    }
    nlohmann::json jl = nlohmann::json::array();
    for (unsigned l : lens) jl.push_back(l);
    Certificate c;
    c.kind = CertKind::NonBFFamily;
    c.payload = {{"model", "E(" + fam + ")"},
                 {"side", "mul"},
                 {"element", "e^1"},
                 {"lengths", jl},
                 {"family",
                  "L(e^1) over E(unitfrac<=P) contains every prime p <= P, so sup L(e^1) "
                  "grows without bound along the family"}};
    c.verified = true;
    return c;
}

}  // namespace detail

inline RefuteResult refute_property(const SemiringModel& model, Side side, Property prop,
                                    const SearchBudget& budget = SearchBudget::defaults()) {
    if (auto* c = model.as<CyclicRationalSemiring>()) {
        if (side == Side::Add) {
            switch (prop) {
                case Property::ACCP:
                    if (c->q < 1 && num(c->q) > 1) {
                        auto res = accp_fail_chain(*c, 6);
                        if (auto* chain = std::get_if<AccpFailChain>(&res))
                            return accp_fail_chain_certificate(*c, *chain);
                        return NotFound{std::get<NoChain>(res).transcript};
                    }
                    if (c->antimatter_additive())
                        throw unsupported(
                            "N0[1/d] is antimatter; no atom-chain certificate applies");
                    return NotFound{"q >= 1 or integral: the additive monoid satisfies ACCP"};
                case Property::BF:
                    return detail::cyclic_nonbf(*c, budget);
                default:
                    return NotFound{"no refutation search implemented for this property"};
            }
        }
        return NotFound{"no multiplicative refutation search implemented for N0[q]"};
    }
    if (model.as<NatPolyModel>()) {
        if (side == Side::Mul && prop == Property::HF) return hf_witness_family(2, 1);
        if (side == Side::Mul && prop == Property::LF) return natpoly_notlf_certificate();
        return NotFound{"no refutation search implemented for this property on N0[x]"};
    }
    if (auto* r = model.as<RaySemiring>()) {
        if (prop == Property::FF && side == Side::Add)
            return non_ff_family(*r, Rational(9, 2), 5);
        if (r->r == 2 && (prop == Property::HF || prop == Property::LF)) {
            std::vector<Certificate> cs = s2_counterexamples();
            // Order: add NotHF, add NotLF, mul NotHF, mul NotLF.
            std::size_t idx = (side == Side::Mul ? 2 : 0) + (prop == Property::LF ? 1 : 0);
            return cs.at(idx);
        }
        if (prop == Property::BF || prop == Property::ACCP || prop == Property::Atomic)
            return NotFound{"ray semirings are bi-BF (closed form); no witness exists"};
        throw unsupported("refutation for ray(r) with r != 2 is not implemented");
    }
    if (auto* e = model.as<ExponentMonoid>()) {
        if (side != Side::Mul)
            return NotFound{"additive refutation searches are not implemented for E(M)"};
        if (prop == Property::BF) return detail::exp_nonbf(*e, budget);
        if (prop == Property::ACCP) {
            AccpProbeResult probe = accp_probe(*e, 6, budget);
            return NotFound{"bounded probe found no descending chain (longest " +
                            std::to_string(probe.longest_seen) + " of " +
                            std::to_string(probe.chain_length) + ")"};
        }
        return NotFound{"no refutation search implemented for this property on E(M)"};
    }
    if (auto* r2 = model.as<Rank2Monoid>()) {
        if (side != Side::Add)
            throw unsupported("rank-2 monoids are additive; no multiplicative side");
        if (prop == Property::FF && r2->family_cap())
            return non_ff_witness_rank2(*r2, std::min(3u, *r2->family_cap() - 1));
        if (prop == Property::HF && hf_certificate(*r2))
            return NotFound{"a linear length functional certifies half-factoriality"};
        return NotFound{"no refutation search implemented for this property on rank-2"};
    }
    if (auto* n = model.as<NumericalMonoid>()) {
        if (side == Side::Mul) {
            if (prop == Property::HF) return detail::numerical_remark_search(*n, CertKind::NotHF);
            if (prop == Property::LF) return detail::numerical_remark_search(*n, CertKind::NotLF);
            return NotFound{"no multiplicative refutation search for this property"};
        }
        if (prop == Property::HF)
            return detail::numerical_additive_scan(*n, CertKind::NotHF, 60, budget);
        if (prop == Property::LF)
            return detail::numerical_additive_scan(*n, CertKind::NotLF, 60, budget);
        return NotFound{"numerical monoids are additively FF; no witness exists"};
    }
    throw unsupported("refutation is not implemented for this model");
}

// ---------------------------------------------------------------------------
// Diagram battery

struct DiagramSeparation {
    std::string implication;
    std::string witness_model;
    std::string side;
    std::vector<std::string> refuted_properties;
    std::string satisfied_property;
    std::string evidence_mode;  // "closed-form" | "probe"
    std::string evidence;       // human-readable justification
    std::vector<Certificate> certificates;
};

struct DiagramReport {
    std::vector<DiagramSeparation> separations;

    bool all_verified() const {
        for (const auto& s : separations)
            for (const auto& c : s.certificates)
                if (!c.verified) return false;
        return true;
    }

    /// Deterministic apart from the generatedAt stamp.
    nlohmann::json to_json(bool with_timestamp = true) const {
        nlohmann::json seps = nlohmann::json::array();
        for (const auto& s : separations) {
            nlohmann::json certs = nlohmann::json::array();
            for (const auto& c : s.certificates) certs.push_back(c.to_json());
            seps.push_back({{"implication", s.implication},
                            {"witnessModel", s.witness_model},
                            {"side", s.side},
                            {"refutedProperties", s.refuted_properties},
                            {"satisfiedProperty", s.satisfied_property},
                            {"evidenceMode", s.evidence_mode},
                            {"evidence", s.evidence},
                            {"certificates", certs}});
        }
        nlohmann::json j = {{"separations", seps}, {"allVerified", all_verified()}};
        if (with_timestamp) j["generatedAt"] = static_cast<long>(std::time(nullptr));
        return j;
    }
};

inline DiagramReport verify_diagram(const SearchBudget& budget = SearchBudget::defaults()) {
    auto cert_of = [](RefuteResult r) {
        if (auto* c = std::get_if<Certificate>(&r)) return *c;
        throw std::logic_error("verify_diagram: expected a certificate, got NotFound: " +
                               std::get<NotFound>(r).reason);
    };
    DiagramReport rep;
    {
        SemiringModel m = parse_model("N0[2/3]");
        rep.separations.push_back(
            {"bi-atomic does not imply bi-ACCP",
             "N0[2/3]",
             "add",
             {"ACCP"},
             "atomic",
             "closed-form",
             "the additive atoms are exactly the powers (2/3)^n, a closed form",
             {cert_of(refute_property(m, Side::Add, Property::ACCP, budget))}});
    }
    {
        SemiringModel m = parse_model("E(unitfrac<=7)");
        AccpProbeResult probe = accp_probe(*m.as<ExponentMonoid>(), 6, budget);
        rep.separations.push_back(
            {"bi-ACCP does not imply bi-BF",
             "E(unitfrac<=7)",
             "mul",
             {"BF"},
             "ACCP",
             "probe",
             "bounded chain probe: every descending divisibility chain from the sample pool "
             "terminated (longest " +
                 std::to_string(probe.longest_seen) + " of " +
                 std::to_string(probe.chain_length) + " allowed)",
             {cert_of(refute_property(m, Side::Mul, Property::BF, budget))}});
    }
    {
        SemiringModel m = parse_model("ray(2)");
        rep.separations.push_back(
            {"bi-BF does not imply bi-FF",
             "ray(2)",
             "add",
             {"FF"},
             "BF",
             "closed-form",
             "1 is not a limit point of the ray semiring, so both monoids are BF",
             {cert_of(refute_property(m, Side::Add, Property::FF, budget))}});
    }
    {
        SemiringModel m = parse_model("N0[x]");
        rep.separations.push_back(
            {"bi-FF implies neither bi-HF nor bi-LF",
             "N0[x]",
             "mul",
             {"HF", "LF"},
             "FF",
             "closed-form",
             "polynomial degree bounds factorization length and each degree admits finitely "
             "many nonnegative divisors, so both monoids are FF",
             {cert_of(refute_property(m, Side::Mul, Property::HF, budget)),
              cert_of(refute_property(m, Side::Mul, Property::LF, budget))}});
    }
    return rep;
}

}  // namespace posring
