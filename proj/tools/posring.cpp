// posring: command-line front end for the positive-semiring factorization
// kernel.  Subcommands: atoms | factorize | lengths | is-atom | is-member |
// accp-chain | refute | verify-diagram.
//
// Exit codes: 0 success, 1 parse/input error, 2 unsupported query,
// 3 verification failure (a certificate failing its own re-check).

#include <posring/refute.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace posring;

struct Options {
    std::string model;
    std::string side = "add";
    std::string element;
    std::string property;
    unsigned count = 8;
    unsigned chain_length = 6;
    bool json = false;
    long budget_length = -1;
    long budget_exponent = -1;
    long budget_candidates = -1;

    SearchBudget budget() const {
        SearchBudget b = SearchBudget::defaults();
        if (budget_length > 0) b.max_length = static_cast<std::size_t>(budget_length);
        if (budget_exponent > 0) b.max_exponent = static_cast<std::size_t>(budget_exponent);
        if (budget_candidates > 0) b.max_candidates = static_cast<std::size_t>(budget_candidates);
        return b;
    }
};

void emit(const Options& opt, const nlohmann::json& j, const std::string& human) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human << "\n";
}

// ---------------------------------------------------------------------------
// Generic view-backed commands

template <typename E>
nlohmann::json factorizations_json(const MonoidView<E>& view, const FactorizationSet<E>& fs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : fs.factorizations) {
        nlohmann::json parts = nlohmann::json::array();
        for (const E& a : f.expanded()) parts.push_back(view.describe(a));
        arr.push_back(parts);
    }
    return arr;
}

template <typename E>
int cmd_factorize(const Options& opt, const MonoidView<E>& view, const E& x) {
    FactorizationSet<E> fs = enumerate_factorizations(view, x, opt.budget());
    nlohmann::json j = {{"model", opt.model},
                        {"side", opt.side},
                        {"element", view.describe(x)},
                        {"factorizations", factorizations_json(view, fs)},
                        {"complete", fs.complete}};
    std::string human = view.describe(x) + ":";
    for (const auto& f : fs.factorizations) {
        human += "\n  ";
        bool first = true;
        for (const E& a : f.expanded()) {
            human += (first ? "[" : "] " + std::string(opt.side == "add" ? "+ [" : "* ["));
            human += view.describe(a);
            first = false;
        }
        human += "]";
    }
    human += fs.complete ? "\n(complete)" : "\n(bounded search; possibly incomplete)";
    emit(opt, j, human);
    return 0;
}

template <typename E>
int cmd_lengths(const Options& opt, const MonoidView<E>& view, const E& x) {
    auto [lens, complete] = length_set(view, x, opt.budget());
    nlohmann::json jl = nlohmann::json::array();
    std::string human = "L(" + view.describe(x) + ") = {";
    for (std::size_t i = 0; i < lens.size(); ++i) {
        jl.push_back(lens[i]);
        human += (i ? ", " : "") + std::to_string(lens[i]);
    }
    human += complete ? "}" : "} (bounded search; possibly incomplete)";
    emit(opt,
         {{"model", opt.model},
          {"side", opt.side},
          {"element", view.describe(x)},
          {"lengths", jl},
          {"complete", complete}},
         human);
    return 0;
}

template <typename E>
int cmd_is_atom(const Options& opt, const MonoidView<E>& view, const E& x) {
    AtomAnswer<E> a = is_atom(view, x, opt.budget());
    nlohmann::json j = {{"model", opt.model}, {"side", opt.side}, {"element", view.describe(x)}};
    std::string human;
    switch (a.status) {
        case AtomStatus::Atom:
            j["status"] = "atom";
            human = view.describe(x) + " is an atom";
            break;
        case AtomStatus::NotAtom: {
            j["status"] = "not-atom";
            j["witness"] = nlohmann::json::array(
                {view.describe(a.witness->first), view.describe(a.witness->second)});
            human = view.describe(x) + " is not an atom: [" + view.describe(a.witness->first) +
                    "] " + (opt.side == "add" ? "+" : "*") + " [" +
                    view.describe(a.witness->second) + "]";
            break;
        }
        case AtomStatus::Unknown:
            j["status"] = "unknown";
            human = view.describe(x) + ": undecided within budget";
            break;
    }
    emit(opt, j, human);
    return 0;
}

template <typename E>
int cmd_is_member(const Options& opt, const MonoidView<E>& view, const E& x) {
    bool m = view.is_member(x);
    emit(opt,
         {{"model", opt.model}, {"side", opt.side}, {"element", view.describe(x)}, {"member", m}},
         view.describe(x) + (m ? " is a member" : " is not a member"));
    return 0;
}

template <typename E>
int run_view(const Options& opt, const std::string& cmd, const MonoidView<E>& view, const E& x) {
    if (cmd == "factorize") return cmd_factorize(opt, view, x);
    if (cmd == "lengths") return cmd_lengths(opt, view, x);
    if (cmd == "is-atom") return cmd_is_atom(opt, view, x);
    if (cmd == "is-member") return cmd_is_member(opt, view, x);
    throw unsupported("command '" + cmd + "' is not available for this model/side");
}

int emit_atom_listing(const Options& opt, const AtomListing& listing) {
    nlohmann::json ja = nlohmann::json::array();
    std::string human;
    for (std::size_t i = 0; i < listing.atoms.size(); ++i) {
        ja.push_back(listing.atoms[i]);
        human += (i ? ", " : "") + listing.atoms[i];
    }
    if (listing.atoms.empty()) human = "(no atoms)";
    if (listing.truncated) human += ", ...";
    emit(opt,
         {{"model", opt.model},
          {"side", opt.side},
          {"atoms", ja},
          {"truncated", listing.truncated}},
         human);
    return 0;
}

// ---------------------------------------------------------------------------
// Per-model dispatch

int cmd_atoms(const Options& opt, const SemiringModel& model, Side side) {
    if (auto* c = model.as<CyclicRationalSemiring>()) {
        if (side == Side::Add) return emit_atom_listing(opt, additive_atoms(*c, opt.count));
        throw unsupported("multiplicative atom listings of N0[q] are not implemented; "
                          "use is-atom");
    }
    if (auto* a = model.as<CyclicAlgebraicSemiring>()) {
        if (side == Side::Add) return emit_atom_listing(opt, additive_atoms(*a, opt.count));
        throw unsupported("multiplicative atom listings of N0[alpha] are not implemented");
    }
    if (model.as<NatPolyModel>()) {
        if (side == Side::Add) {
            AtomListing l;
            for (unsigned i = 0; i < opt.count; ++i)
                l.atoms.push_back(IntPolynomial::monomial(1, i).to_text());
            l.truncated = true;  // one atom x^i per degree
            return emit_atom_listing(opt, l);
        }
        throw unsupported("the multiplicative atoms of N0[x] form an infinite set with no "
                          "enumeration order; use is-atom");
    }
    if (auto* e = model.as<ExponentMonoid>()) {
        if (side == Side::Add) {
            AtomListing l;
            for (const Rational& g : e->atoms()) l.atoms.push_back(to_string(g));
            return emit_atom_listing(opt, l);
        }
        throw unsupported("multiplicative atom listings of E(M) are not implemented; "
                          "use is-atom");
    }
    if (model.as<RaySemiring>())
        throw unsupported("the atoms of a ray semiring form an uncountable set; "
                          "use the is-atom predicate");
    if (auto* r2 = model.as<Rank2Monoid>()) {
        if (side == Side::Add) return emit_atom_listing(opt, atoms_rank2(*r2));
        throw unsupported("rank-2 monoids are additive; no multiplicative side");
    }
    if (auto* n = model.as<NumericalMonoid>()) {
        if (side == Side::Add) {
            AtomListing l;
            NumericalAdditiveView view(*n);
            for (unsigned long g : n->generators())
                if (is_atom(view, Integer(g), opt.budget()).status == AtomStatus::Atom)
                    l.atoms.push_back(std::to_string(g));
            return emit_atom_listing(opt, l);
        }
        // --count doubles as the listing bound for the cofinite integer set.
        return emit_atom_listing(opt, mult_atoms_up_to(*n, std::max(2u, opt.count)));
    }
    throw unsupported("atoms: unhandled model");
}

int dispatch_element_command(const Options& opt, const std::string& cmd,
                             const SemiringModel& model, Side side) {
    if (opt.element.empty()) throw invalid_input("--element is required for " + cmd);
    if (auto* c = model.as<CyclicRationalSemiring>()) {
        Rational x = parse_rational(opt.element);
        if (cmd == "is-member" && side == Side::Add) {
            // Richer answer than the view's bool: status + witness polynomial.
            MembershipResult m = is_member(*c, x, opt.budget());
            nlohmann::json j = {{"model", opt.model}, {"side", opt.side},
                                {"element", to_string(x)}};
            std::string human;
            if (m.status == MemberStatus::Yes) {
                j["member"] = "yes";
                if (m.witness) j["witness"] = m.witness->to_text();
                human = to_string(x) + " is a member" +
                        (m.witness ? " = f(q) with f = " + m.witness->to_text() : "");
            } else if (m.status == MemberStatus::No) {
                j["member"] = "no";
                j["reason"] = m.reason;
                human = to_string(x) + " is not a member (" + m.reason + ")";
            } else {
                j["member"] = "unknown";
                j["reason"] = m.reason;
                human = to_string(x) + ": membership undecided (" + m.reason + ")";
            }
            emit(opt, j, human);
            return 0;
        }
        if (side == Side::Add) return run_view(opt, cmd, CyclicRationalAdditiveView(*c), x);
        return run_view(opt, cmd, CyclicRationalMultiplicativeView(*c), x);
    }
    if (auto* a = model.as<CyclicAlgebraicSemiring>()) {
        if (side != Side::Add)
            throw unsupported("multiplicative queries on N0[alpha] are not implemented");
        NatPolynomial f = NatPolynomial::parse(opt.element);
        if (cmd == "factorize" || cmd == "lengths") {
            FactorizationSet<NatPolynomial> fs =
                cyclic_algebraic_factorizations(*a, f, opt.budget());
            nlohmann::json arr = nlohmann::json::array();
            nlohmann::json jl = nlohmann::json::array();
            std::string human = f.to_text() + " (as an element f(alpha)):";
            for (const auto& fac : fs.factorizations) {
                nlohmann::json parts = nlohmann::json::array();
                for (const auto& p : fac.expanded()) parts.push_back(p.to_text());
                arr.push_back(parts);
            }
            for (unsigned l : fs.lengths()) jl.push_back(l);
            if (cmd == "lengths") {
                for (const auto& l : jl) human += " " + l.dump();
                emit(opt,
                     {{"model", opt.model}, {"side", opt.side}, {"element", f.to_text()},
                      {"lengths", jl}, {"complete", fs.complete}},
                     human);
            } else {
                human += " " + arr.dump();
                emit(opt,
                     {{"model", opt.model}, {"side", opt.side}, {"element", f.to_text()},
                      {"factorizations", arr}, {"complete", fs.complete}},
                     human);
            }
            return 0;
        }
        throw unsupported("command '" + cmd + "' is not implemented for N0[alpha]; "
                          "available: atoms, factorize, lengths");
    }
    if (model.as<NatPolyModel>()) {
        NatPolynomial f = NatPolynomial::parse(opt.element);
        if (side == Side::Mul) return run_view(opt, cmd, NatPolyMultiplicativeView{}, f);
        // Additive side: free on the monomials; answer directly.
        if (cmd == "is-member") {
            emit(opt,
                 {{"model", opt.model}, {"side", "add"}, {"element", f.to_text()},
                  {"member", true}},
                 f.to_text() + " is a member");
            return 0;
        }
        throw unsupported("the additive monoid of N0[x] is free on the monomials x^i; "
                          "only atoms/is-member are exposed");
    }
    if (auto* e = model.as<ExponentMonoid>()) {
        if (side == Side::Mul)
            return run_view(opt, cmd, ExpSemiringMultiplicativeView(*e), parse_expsum(opt.element));
        // Additive side: the exponent monoid M itself (elements are rationals).
        Rational m = parse_rational(opt.element);
        if (cmd == "is-member") {
            bool mem = e->is_member(m);
            emit(opt,
                 {{"model", opt.model}, {"side", "add"}, {"element", to_string(m)},
                  {"member", mem}},
                 to_string(m) + (mem ? " is a member of M" : " is not a member of M"));
            return 0;
        }
        if (cmd == "factorize" || cmd == "lengths") {
            FactorizationSet<Rational> fs = exp_monoid_factorizations(*e, m, opt.budget());
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& fac : fs.factorizations) {
                nlohmann::json parts = nlohmann::json::array();
                for (const Rational& p : fac.expanded()) parts.push_back(to_string(p));
                arr.push_back(parts);
            }
            nlohmann::json jl = nlohmann::json::array();
            for (unsigned l : fs.lengths()) jl.push_back(l);
            emit(opt,
                 {{"model", opt.model}, {"side", "add"}, {"element", to_string(m)},
                  {"factorizations", arr}, {"lengths", jl}, {"complete", fs.complete}},
                 to_string(m) + ": " + arr.dump());
            return 0;
        }
        throw unsupported("command '" + cmd + "' is not implemented on the additive side of M");
    }
    if (auto* r = model.as<RaySemiring>()) {
        Rational x = parse_rational(opt.element);
        if (side == Side::Add) return run_view(opt, cmd, RayAdditiveView(*r), x);
        return run_view(opt, cmd, RayMultiplicativeView(*r), x);
    }
    if (auto* r2 = model.as<Rank2Monoid>()) {
        if (side != Side::Add)
            throw unsupported("rank-2 monoids are additive; no multiplicative side");
        return run_view(opt, cmd, Rank2AdditiveView(*r2), parse_rank2_element(opt.element));
    }
    if (auto* n = model.as<NumericalMonoid>()) {
        Rational xr = parse_rational(opt.element);
        if (!is_integer(xr)) throw invalid_input("numerical-monoid elements are integers");
        Integer x = num(xr);
        if (side == Side::Add) return run_view(opt, cmd, NumericalAdditiveView(*n), x);
        return run_view(opt, cmd, NumericalMultiplicativeView(*n), x);
    }
    throw unsupported("unhandled model");
}

int cmd_accp_chain(const Options& opt, const SemiringModel& model) {
    auto* c = model.as<CyclicRationalSemiring>();
    if (!c)
        throw unsupported("accp-chain is implemented for N0[q]; for E(M) see the bounded "
                          "probe in `refute --property ACCP`");
    auto res = accp_fail_chain(*c, opt.chain_length);
    if (auto* chain = std::get_if<AccpFailChain>(&res)) {
        Certificate cert = accp_fail_chain_certificate(*c, *chain);
        std::string human = "strictly descending divisibility chain:";
        for (const Rational& x : chain->elements) human += " " + to_string(x);
        emit(opt, cert.to_json(), human);
        return 0;
    }
    emit(opt,
         {{"model", opt.model}, {"result", "NoChain"},
          {"transcript", std::get<NoChain>(res).transcript}},
         "no chain: " + std::get<NoChain>(res).transcript);
    return 0;
}

int cmd_refute(const Options& opt, const SemiringModel& model, Side side) {
    if (opt.property.empty()) throw invalid_input("--property is required for refute");
    RefuteResult r = refute_property(model, side, parse_property(opt.property), opt.budget());
    if (auto* cert = std::get_if<Certificate>(&r)) {
        if (!cert->verified) throw std::logic_error("refute: certificate is not verified");
        emit(opt, cert->to_json(),
             to_string(cert->kind) + " certificate for " + opt.model + " (" + opt.side +
                 "):\n" + cert->to_json().dump(2));
        return 0;
    }
    emit(opt,
         {{"model", opt.model}, {"side", opt.side}, {"property", opt.property},
          {"result", "NotFound"}, {"reason", std::get<NotFound>(r).reason}},
         "no witness found: " + std::get<NotFound>(r).reason);
    return 0;
}

int cmd_verify_diagram(const Options& opt) {
    DiagramReport rep = verify_diagram(opt.budget());
    if (!rep.all_verified())
        throw std::logic_error("verify-diagram: a certificate failed verification");
    if (opt.json) {
        std::cout << rep.to_json(true).dump(2) << "\n";
    } else {
        for (const auto& s : rep.separations) {
            std::cout << s.implication << "\n  witness: " << s.witness_model << " ("
                      << s.side << ")\n  refuted:";
            for (const auto& p : s.refuted_properties) std::cout << " " << p;
            std::cout << "\n  satisfied: " << s.satisfied_property << " [" << s.evidence_mode
                      << "] " << s.evidence << "\n  certificates:";
            for (const auto& c : s.certificates)
                std::cout << " " << to_string(c.kind) << (c.verified ? "(verified)" : "(!)");
            std::cout << "\n";
        }
        std::cout << "all certificates verified\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"posring: exact factorization queries in positive semirings"};
    app.require_subcommand(1);

    Options opt;
    std::string cmd;
    for (const char* name : {"atoms", "factorize", "lengths", "is-atom", "is-member",
                             "accp-chain", "refute", "verify-diagram"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->callback([&cmd, name] { cmd = name; });
        if (std::string(name) != "verify-diagram")
            sub->add_option("--model", opt.model, "model string, e.g. 'N0[2/3]'")->required();
        sub->add_option("--side", opt.side, "add | mul")->check(CLI::IsMember({"add", "mul"}));
        sub->add_option("--element", opt.element, "element in the model's syntax");
        sub->add_option("--count", opt.count, "listing size / bound for atoms");
        sub->add_option("--chain-length", opt.chain_length, "chain length for accp-chain");
        sub->add_option("--property", opt.property, "atomic | ACCP | BF | FF | HF | LF");
        sub->add_flag("--json", opt.json, "emit the schema'd JSON object");
        sub->add_option("--budget-length", opt.budget_length, "max factorization length");
        sub->add_option("--budget-exponent", opt.budget_exponent, "max exponent in searches");
        sub->add_option("--budget-candidates", opt.budget_candidates, "max candidates");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cmd == "verify-diagram") return cmd_verify_diagram(opt);
        posring::SemiringModel model = posring::parse_model(opt.model);
        posring::Side side = posring::parse_side(opt.side);
        if (cmd == "atoms") return cmd_atoms(opt, model, side);
        if (cmd == "accp-chain") return cmd_accp_chain(opt, model);
        if (cmd == "refute") return cmd_refute(opt, model, side);
        return dispatch_element_command(opt, cmd, model, side);
    } catch (const posring::unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const posring::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
