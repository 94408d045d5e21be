#pragma once

// Factorizations as multisets of atoms with multiplicities, and the
// deduplicated, canonically ordered sets of them returned by the enumerators.

#include <posring/budget.hpp>

#include <functional>
#include <vector>

namespace posring {

template <typename E>
struct Factorization {
    /// (atom, multiplicity), atoms strictly ascending in the canonical order.
    std::vector<std::pair<E, unsigned>> parts;

    unsigned length() const {
        unsigned l = 0;
        for (const auto& [a, m] : parts) l += m;
        return l;
    }

    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.parts == b.parts;
    }
    friend bool operator<(const Factorization& a, const Factorization& b) {
        return a.parts < b.parts;
    }

    /// Builds from an unsorted list of atoms (with repeats).
    static Factorization from_atoms(std::vector<E> atoms) {
        std::sort(atoms.begin(), atoms.end());
        Factorization f;
        for (const E& a : atoms) {
            if (!f.parts.empty() && f.parts.back().first == a)
                ++f.parts.back().second;
            else
                f.parts.emplace_back(a, 1u);
        }
        return f;
    }

    std::vector<E> expanded() const {
        std::vector<E> out;
        for (const auto& [a, m] : parts)
            for (unsigned i = 0; i < m; ++i) out.push_back(a);
        return out;
    }
};

template <typename E>
struct FactorizationSet {
    E target{};
    std::vector<Factorization<E>> factorizations;  // deduplicated, sorted
    bool complete = false;

    std::vector<unsigned> lengths() const {
        std::vector<unsigned> ls;
        for (const auto& f : factorizations) ls.push_back(f.length());
        std::sort(ls.begin(), ls.end());
        ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
        return ls;
    }

    void canonicalize() {
        std::sort(factorizations.begin(), factorizations.end());
        factorizations.erase(std::unique(factorizations.begin(), factorizations.end()),
                             factorizations.end());
    }
};

}  // namespace posring
