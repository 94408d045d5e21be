#pragma once

#include <posring/rational.hpp>

#include <cstdlib>

namespace posring {

/// Bounds for every enumeration in the library; searches halt within budget
/// and report truncation instead of running open-ended.
struct SearchBudget {
    unsigned max_length = 8;
    unsigned max_exponent = 8;
    unsigned max_candidates = 20000;

    SearchBudget() = default;
    SearchBudget(unsigned len, unsigned exp, unsigned cand)
        : max_length(len), max_exponent(exp), max_candidates(cand) {
        if (len < 1 || exp < 1 || cand < 1) throw invalid_input("budget bounds must be >= 1");
    }

    /// Default budget, scaled by POSRING_BUDGET_DEFAULT when set.
    static SearchBudget defaults() {
        SearchBudget b;
        if (const char* env = std::getenv("POSRING_BUDGET_DEFAULT")) {
            long v = std::atol(env);
            if (v >= 1) {
                b.max_length = static_cast<unsigned>(v);
                b.max_exponent = static_cast<unsigned>(v);
                b.max_candidates = static_cast<unsigned>(v) * 2500u;
            }
        }
        return b;
    }

    SearchBudget doubled() const {
        return SearchBudget(max_length * 2, max_exponent * 2, max_candidates * 2);
    }
};

}  // namespace posring
