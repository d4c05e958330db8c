// oracle.hpp -- independent generate-test-reject enumeration used to
// certify the exact generator at small sizes.
#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "adfa/canonical.hpp"

namespace adfa {

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

/// Enumerates every labeled transition table, final set and initial
/// state; keeps the trim acyclic ones (minimal too in madfa mode);
/// deduplicates by canonical string and returns the class count.
/// Throws BudgetExceededError when (n+1)^(n*k) * 2^n * n exceeds the
/// budget.
std::uint64_t oracle_count(int n, int k, Mode mode,
                           std::uint64_t budget = kDefaultOracleBudget);

/// The deduplicated canonical cell strings themselves.
std::set<std::vector<int>> oracle_strings(int n, int k, Mode mode,
                                          std::uint64_t budget = kDefaultOracleBudget);

struct CrossCheckReport {
    std::uint64_t generator_count = 0;
    std::uint64_t oracle_count = 0;
    std::vector<std::vector<int>> only_generator; ///< cells emitted but never enumerated
    std::vector<std::vector<int>> only_oracle;    ///< cells enumerated but never emitted

    bool pass() const {
        return generator_count == oracle_count && only_generator.empty() &&
               only_oracle.empty();
    }
};

/// Runs the generator and the oracle side by side and reports the counts
/// and the symmetric difference of the string sets. A non-empty
/// difference is a failing report, not an error.
CrossCheckReport cross_check(int n, int k, Mode mode,
                             std::uint64_t budget = kDefaultOracleBudget);

} // namespace adfa
