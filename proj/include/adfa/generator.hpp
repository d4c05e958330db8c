// generator.hpp -- backtracking exact generation of canonical strings in
// lexicographic order, with pruning of ill-ordered equivalent states.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "adfa/canonical.hpp"

namespace adfa {

/// An ordered sequence of disjoint state groups, all of the same rank,
/// constraining the minimal characteristic word of each group to be
/// strictly below the next group's. Lists are created from runs of equal
/// tuples (one singleton group per state) and from resolving earlier
/// lists; a list with fewer than two groups carries no constraint and is
/// dropped.
struct ConstraintList {
    std::vector<std::vector<int>> groups;
};

/// A recorded transition from a state of the rank being generated into a
/// constrained state: which group and member it hits, on which symbol,
/// and the finality of the referencing state.
struct RefEntry {
    int group = 0;
    int member = 0;
    int symbol = 0;
    int finality = 0;
    int pred = 0;
};

/// References collected while one rank is generated, kept parallel to
/// the constraint-list vector and emptied before each new rank.
struct RefMap {
    std::vector<std::vector<RefEntry>> per_list;
};

struct ResolveOutcome {
    bool ok = false;
    std::vector<ConstraintList> lists; ///< surviving and newly spawned lists
};

/// Settles every constraint list against the references of the rank that
/// just finished. For each list with references: the referenced groups
/// must form a prefix of the list (a later first reference means a larger
/// leading token); along that prefix the minimal (symbol, finality)
/// reference pairs must not decrease; consecutive groups with equal pairs
/// delegate their order to a new list over the referencing states; all
/// referenced groups are resolved and removed. Returns a contradiction
/// when any rule fails, which aborts the branch.
ResolveOutcome resolve_rank(const std::vector<ConstraintList>& prob_l, const RefMap& refs);

struct GenOptions {
    /// Restricts the first free tuple to a contiguous block of its
    /// candidate ordinals, so disjoint blocks partition the stream into
    /// consecutive lexicographic intervals. hi < 0 means unbounded.
    long first_branch_lo = 0;
    long first_branch_hi = -1;
};

/// Receives each emitted string; returning false stops the generation.
using StringSink = std::function<bool(const CanonicalString&)>;

/// Emits every valid canonical string with n useful states over k symbols
/// in strictly increasing lexicographic order of the flat cells, and
/// returns how many were emitted.
std::uint64_t generate(int n, int k, Mode mode, const StringSink& sink,
                       const GenOptions& options = {});

/// Number of canonical strings, without materializing them.
std::uint64_t count(int n, int k, Mode mode);

/// Reference implementation for differential testing: enumerates the
/// strings satisfying every prefix-checkable condition but replaces the
/// characteristic-word pruning with a full validation filter per emitted
/// string. Slow; small sizes only.
std::uint64_t generate_filtered(int n, int k, Mode mode, const StringSink& sink);

/// Number of candidate ordinals at the first free tuple, for planning
/// partition blocks.
long count_top_branches(int n, int k, Mode mode);

} // namespace adfa
