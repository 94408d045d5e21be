#pragma once

// Generic monoid-view abstraction and the bounded enumeration engine shared
// by all semiring families.  The properties under study are universally
// quantified, so the engine refutes with witnesses and confirms only when a
// model-specific closure rule certifies exhaustiveness; Unknown and
// incomplete results are first-class.

#include <posring/factorization.hpp>

#include <optional>

namespace posring {

enum class AtomStatus { Atom, NotAtom, Unknown };

/// Printed atom listing shared by the family modules.
struct AtomListing {
    std::vector<std::string> atoms;  // canonical text forms
    bool truncated = false;          // more atoms exist beyond the listing
};

template <typename E>
struct AtomAnswer {
    AtomStatus status;
    std::optional<std::pair<E, E>> witness;  // non-unit pair composing to x

    static AtomAnswer atom() { return {AtomStatus::Atom, std::nullopt}; }
    static AtomAnswer not_atom(E y, E z) {
        return {AtomStatus::NotAtom, std::make_pair(std::move(y), std::move(z))};
    }
    static AtomAnswer unknown() { return {AtomStatus::Unknown, std::nullopt}; }
};

template <typename E>
class MonoidView {
public:
    virtual ~MonoidView() = default;

    virtual E identity() const = 0;
    virtual bool is_member(const E& x) const = 0;
    virtual bool is_unit(const E& x) const = 0;
    virtual E compose(const E& x, const E& y) const = 0;
    /// z with x = y (*) z, if one exists in the monoid.
    virtual std::optional<E> decompose(const E& x, const E& y) const = 0;

    /// Finite overapproximation of the proper (non-unit, non-associate)
    /// divisors of x reachable under the budget.
    virtual std::vector<E> proper_divisor_candidates(const E& x,
                                                     const SearchBudget& b) const = 0;

    /// True when the candidate list provably covers every proper divisor.
    virtual bool divisor_candidates_complete(const E& x, const SearchBudget& b) const {
        (void)x;
        (void)b;
        return false;
    }

    /// Closed-form atom classification where the model has one; Unknown
    /// falls back to the candidate search.
    virtual std::optional<AtomAnswer<E>> classify_atom(const E& x, const SearchBudget& b) const {
        (void)x;
        (void)b;
        return std::nullopt;
    }

    /// Model-specific complete factorization enumeration, when available.
    virtual std::optional<FactorizationSet<E>> enumerate_complete(const E& x,
                                                                  const SearchBudget& b) const {
        (void)x;
        (void)b;
        return std::nullopt;
    }

    virtual std::string describe(const E& x) const = 0;
};

template <typename E>
AtomAnswer<E> is_atom(const MonoidView<E>& view, const E& x, const SearchBudget& budget) {
    if (!view.is_member(x)) throw invalid_input("is_atom: not a member: " + view.describe(x));
    if (view.is_unit(x)) throw invalid_input("is_atom: unit input: " + view.describe(x));
    if (auto closed = view.classify_atom(x, budget)) return *closed;
    for (const E& y : view.proper_divisor_candidates(x, budget)) {
        if (view.is_unit(y)) continue;
        if (auto z = view.decompose(x, y)) {
            if (!view.is_unit(*z)) return AtomAnswer<E>::not_atom(y, *z);
        }
    }
    return view.divisor_candidates_complete(x, budget) ? AtomAnswer<E>::atom()
                                                       : AtomAnswer<E>::unknown();
}

namespace detail {

template <typename E>
void enumerate_rec(const MonoidView<E>& view, const E& x, const std::vector<E>& atoms,
                   std::size_t min_idx, std::vector<E>& stack, FactorizationSet<E>& out,
                   const SearchBudget& budget, bool& truncated) {
    if (view.is_unit(x)) {
        if (!stack.empty()) out.factorizations.push_back(Factorization<E>::from_atoms(stack));
        return;
    }
    if (stack.size() >= budget.max_length) {
        truncated = true;
        return;
    }
    for (std::size_t i = min_idx; i < atoms.size(); ++i) {
        if (auto z = view.decompose(x, atoms[i])) {
            stack.push_back(atoms[i]);
            enumerate_rec(view, *z, atoms, i, stack, out, budget, truncated);
            stack.pop_back();
        }
    }
}

}  // namespace detail

/// Every factorization of x into atoms reachable within the budget,
/// deduplicated as multisets.  complete = true only when the model certifies
/// that the atom-divisor candidates cover all divisors and the length bound
/// was not hit.
template <typename E>
FactorizationSet<E> enumerate_factorizations(const MonoidView<E>& view, const E& x,
                                             const SearchBudget& budget) {
    if (!view.is_member(x))
        throw invalid_input("enumerate_factorizations: not a member: " + view.describe(x));
    if (auto specialized = view.enumerate_complete(x, budget)) return *specialized;

    FactorizationSet<E> out;
    out.target = x;
    if (view.is_unit(x)) {
        out.factorizations.push_back(Factorization<E>{});
        out.complete = true;
        return out;
    }
    bool closure = view.divisor_candidates_complete(x, budget);
    std::vector<E> cands = view.proper_divisor_candidates(x, budget);
    cands.push_back(x);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    std::vector<E> atoms;
    bool atoms_certain = true;
    for (const E& c : cands) {
        if (view.is_unit(c)) continue;
        AtomAnswer<E> a = is_atom(view, c, budget);
        if (a.status == AtomStatus::Atom)
            atoms.push_back(c);
        else if (a.status == AtomStatus::Unknown)
            atoms_certain = false;
    }
    bool truncated = false;
    std::vector<E> stack;
    detail::enumerate_rec(view, x, atoms, 0, stack, out, budget, truncated);
    out.canonicalize();
    out.complete = closure && atoms_certain && !truncated;
    return out;
}

template <typename E>
std::pair<std::vector<unsigned>, bool> length_set(const MonoidView<E>& view, const E& x,
                                                  const SearchBudget& budget) {
    FactorizationSet<E> fs = enumerate_factorizations(view, x, budget);
    return {fs.lengths(), fs.complete};
}

}  // namespace posring
