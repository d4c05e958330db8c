// oracle.cpp

#include "adfa/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "adfa/generator.hpp"

namespace adfa {

namespace {

void check_budget(int n, int k, std::uint64_t budget) {
    double total = std::pow(n + 1, static_cast<double>(n) * k) * std::pow(2.0, n) * n;
    if (!(total <= static_cast<double>(budget)))
        throw BudgetExceededError("oracle space for n=" + std::to_string(n) +
                                  ", k=" + std::to_string(k) +
                                  " exceeds the configured budget");
}

} // namespace

std::set<std::vector<int>> oracle_strings(int n, int k, Mode mode, std::uint64_t budget) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("oracle needs n >= 1 and k >= 1");
    check_budget(n, k, budget);

    std::set<std::vector<int>> canon;
    Automaton aut;
    aut.n = n;
    aut.k = k;
    aut.delta.assign(static_cast<size_t>(n + 1) * k, 0);
    aut.finals.assign(n + 1, 0);

    // Odometer over all transition tables for states 1..n.
    std::vector<int> table(static_cast<size_t>(n) * k, 0);
    for (;;) {
        std::copy(table.begin(), table.end(), aut.delta.begin() + k);
        // Acyclicity does not depend on the final set or initial state.
        if (is_acyclic(aut)) {
            for (int mask = 1; mask < (1 << n); ++mask) {
                for (int s = 1; s <= n; ++s) aut.finals[s] = (mask >> (s - 1)) & 1;
                for (int initial = 1; initial <= n; ++initial) {
                    aut.initial = initial;
                    if (!is_trim(aut)) continue;
                    if (mode == Mode::madfa && !is_minimal(aut)) continue;
                    canon.insert(encode(aut, mode).cells);
                }
            }
        }
        int pos = static_cast<int>(table.size()) - 1;
        while (pos >= 0 && table[pos] == n) table[pos--] = 0;
        if (pos < 0) break;
        ++table[pos];
    }
    return canon;
}

std::uint64_t oracle_count(int n, int k, Mode mode, std::uint64_t budget) {
    return oracle_strings(n, k, mode, budget).size();
}

CrossCheckReport cross_check(int n, int k, Mode mode, std::uint64_t budget) {
    std::set<std::vector<int>> from_oracle = oracle_strings(n, k, mode, budget);
    std::set<std::vector<int>> from_generator;
    generate(n, k, mode, [&](const CanonicalString& cs) {
        from_generator.insert(cs.cells);
        return true;
    });

    CrossCheckReport report;
    report.generator_count = from_generator.size();
    report.oracle_count = from_oracle.size();
    std::set_difference(from_generator.begin(), from_generator.end(),
                        from_oracle.begin(), from_oracle.end(),
                        std::back_inserter(report.only_generator));
    std::set_difference(from_oracle.begin(), from_oracle.end(),
                        from_generator.begin(), from_generator.end(),
                        std::back_inserter(report.only_oracle));
    return report;
}

} // namespace adfa
