// automaton.hpp -- data model for trim acyclic automata and the
// structural operations on them: predicates, ranks, language tests,
// mergeability and minimization.
#pragma once

#include <set>
#include <vector>

#include "adfa/errors.hpp"

namespace adfa {

/// Complete deterministic finite automaton over symbol indices 0..k-1.
///
/// State 0 is the dead state: it absorbs every undefined transition and
/// loops to itself on every symbol. States 1..n are the useful states.
/// The transition table is total and stored row-major, (n+1) rows of k
/// entries. Symbol names exist only at the I/O boundary; internally a
/// symbol is its index under the alphabet order.
struct Automaton {
    int n = 0;                ///< number of useful states
    int k = 0;                ///< alphabet size
    int initial = 1;          ///< initial state, in [1, n]
    std::vector<int> delta;   ///< (n+1) * k transition targets
    std::vector<char> finals; ///< per-state finality flags, size n+1

    int next(int state, int symbol) const { return delta[state * k + symbol]; }
    bool is_final(int state) const { return finals[state] != 0; }
};

/// Builds an automaton from per-state transition rows for states 1..n
/// (the dead-state row is implicit). Throws std::invalid_argument if any
/// structural invariant fails.
Automaton make_automaton(int n, int k, int initial,
                         const std::vector<int>& final_states,
                         const std::vector<std::vector<int>>& rows);

/// Throws std::invalid_argument unless the structural invariants hold:
/// total delta with targets in [0, n], all-zero dead-state row, initial
/// in [1, n], and a non-empty final set not containing the dead state.
void check_structure(const Automaton& aut);

/// Per-state ranks of an acyclic automaton. The rank of a state is the
/// length of the longest word in its right language; the dead state has
/// no rank and carries the sentinel -1.
struct RankTable {
    std::vector<int> rank;                 ///< size n+1, rank[0] == -1
    int diameter = 0;                      ///< maximal rank d
    std::vector<std::vector<int>> classes; ///< classes[l] = states of rank l, ascending
    std::vector<int> predead;              ///< states whose every transition is dead
};

/// Longest-path ranks over the useful states.
/// Throws CyclicError if the useful states contain a cycle and
/// NotTrimError if some useful state cannot reach a final state.
RankTable compute_ranks(const Automaton& aut);

bool is_acyclic(const Automaton& aut);
bool is_initially_connected(const Automaton& aut);
bool is_trim(const Automaton& aut);

/// Runs the word from the initial state. Throws BadSymbolError if the
/// word uses a symbol index outside [0, k).
bool accepts(const Automaton& aut, const std::vector<int>& word);

/// The full (finite) language of a trim acyclic automaton, as symbol
/// index sequences. Intended for small instances; the language can be
/// exponential in the state count.
std::set<std::vector<int>> language(const Automaton& aut);

/// True iff s and t agree on finality and have identical transition rows.
bool mergeable(const Automaton& aut, int s, int t);

/// True iff no two distinct useful states are mergeable.
bool is_minimal(const Automaton& aut);

/// Merges mergeable states by increasing rank and returns the reduced
/// automaton. The result accepts the same language, has no mergeable
/// pair and exactly one pre-dead state.
Automaton minimize(const Automaton& aut);

/// True iff the two automata are isomorphic under an order-preserving
/// alphabet correspondence (equal canonical forms).
bool isomorphic(const Automaton& a, const Automaton& b);

namespace detail {

/// Rank computation that reports failures instead of throwing, for use
/// by the string validator.
struct RankStatus {
    enum class Kind { ok, cyclic, useless } kind = Kind::ok;
    int bad_state = 0;     ///< offending state for cyclic/useless
    std::vector<int> rank; ///< valid when kind == ok
    int diameter = 0;
};

RankStatus try_compute_ranks(const Automaton& aut);

} // namespace detail

} // namespace adfa
