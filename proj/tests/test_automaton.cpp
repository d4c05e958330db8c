#include "doctest.h"

#include <set>

#include "adfa/automaton.hpp"
#include "fixtures.hpp"

using namespace adfa;

namespace {

Automaton single_state(int k) {
    std::vector<int> row(k, 0);
    return make_automaton(1, k, 1, {1}, {row});
}

} // namespace

TEST_CASE("ranks of the minimal 7-state sample") {
    RankTable rt = compute_ranks(fixtures::sample7());
    CHECK(rt.diameter == 5);
    CHECK(rt.rank[7] == 0);
    CHECK(rt.rank[6] == 1);
    CHECK(rt.rank[5] == 2);
    CHECK(rt.rank[4] == 3);
    CHECK(rt.rank[3] == 3);
    CHECK(rt.rank[2] == 4);
    CHECK(rt.rank[1] == 5);
    CHECK(rt.rank[0] == -1);
    CHECK(rt.predead == std::vector<int>{7});
}

TEST_CASE("rank classes of the 9-state sample") {
    RankTable rt = compute_ranks(fixtures::sample9());
    CHECK(rt.diameter == 5);
    CHECK(rt.classes[0] == std::vector<int>{8, 9});
    CHECK(rt.classes[1] == std::vector<int>{7});
    CHECK(rt.classes[2] == std::vector<int>{5});
    CHECK(rt.classes[3] == std::vector<int>{2, 6});
    CHECK(rt.classes[4] == std::vector<int>{3, 4});
    CHECK(rt.classes[5] == std::vector<int>{1});
}

TEST_CASE("single state has rank zero") {
    RankTable rt = compute_ranks(single_state(2));
    CHECK(rt.diameter == 0);
    CHECK(rt.rank[1] == 0);
    CHECK(rt.predead == std::vector<int>{1});
}

TEST_CASE("rank computation rejects cycles and useless states") {
    // Self-loop on a useful state.
    Automaton cyclic = make_automaton(2, 2, 2, {1}, {{0, 0}, {1, 2}});
    CHECK_THROWS_AS(compute_ranks(cyclic), CyclicError);
    CHECK_FALSE(is_acyclic(cyclic));

    // State 2 never reaches a final state.
    Automaton useless = make_automaton(2, 2, 1, {1}, {{2, 0}, {0, 0}});
    CHECK_THROWS_AS(compute_ranks(useless), NotTrimError);
    CHECK_FALSE(is_trim(useless));
    CHECK(is_acyclic(useless));
}

TEST_CASE("trim predicates") {
    CHECK(is_trim(fixtures::sample9()));
    CHECK(is_trim(fixtures::sample7()));
    CHECK(is_trim(fixtures::sample5()));

    // State 2 unreachable from the initial state.
    Automaton disconnected = make_automaton(2, 2, 1, {1, 2}, {{0, 0}, {0, 0}});
    CHECK_FALSE(is_initially_connected(disconnected));
    CHECK_FALSE(is_trim(disconnected));
    CHECK(is_initially_connected(fixtures::sample9()));
}

TEST_CASE("accepts and language") {
    Automaton one = single_state(2);
    CHECK(accepts(one, {}));
    CHECK_FALSE(accepts(one, {0}));
    CHECK(language(one) == std::set<std::vector<int>>{{}});
    CHECK_THROWS_AS(accepts(one, {2}), BadSymbolError);

    // Symbol index 2 goes straight to a final state.
    CHECK(accepts(fixtures::sample5(), {2}));
    CHECK_FALSE(accepts(fixtures::sample5(), {1, 2}));
}

TEST_CASE("minimize preserves the language") {
    Automaton reduced = minimize(fixtures::sample9());
    CHECK(language(reduced) == language(fixtures::sample9()));
    CHECK(language(minimize(fixtures::sample5())) == language(fixtures::sample5()));
}

TEST_CASE("mergeable pairs in the 9-state sample") {
    Automaton aut = fixtures::sample9();
    CHECK(mergeable(aut, 3, 4));
    CHECK(mergeable(aut, 8, 9));
    CHECK(mergeable(aut, 2, 2));
    CHECK_FALSE(mergeable(aut, 2, 3));
}

TEST_CASE("minimize merges by rank") {
    Automaton reduced = minimize(fixtures::sample9());
    CHECK(reduced.n == 7);
    for (int s = 1; s <= reduced.n; ++s)
        for (int t = s + 1; t <= reduced.n; ++t) CHECK_FALSE(mergeable(reduced, s, t));
    CHECK(compute_ranks(reduced).predead.size() == 1);
    CHECK(is_trim(reduced));
    CHECK(is_acyclic(reduced));

    CHECK(isomorphic(minimize(fixtures::sample7()), fixtures::sample7()));
    CHECK(isomorphic(minimize(single_state(2)), single_state(2)));
}

TEST_CASE("minimality checks") {
    CHECK_FALSE(is_minimal(fixtures::sample9()));
    CHECK(is_minimal(fixtures::sample7()));
    CHECK(is_minimal(single_state(3)));
}

TEST_CASE("every trim acyclic two-state automaton is minimal") {
    // Brute force over all transition tables, final sets and initial
    // states at n = 2, k = 2.
    int examined = 0;
    Automaton aut;
    aut.n = 2;
    aut.k = 2;
    aut.delta.assign(6, 0);
    aut.finals.assign(3, 0);
    for (int c0 = 0; c0 <= 2; ++c0)
        for (int c1 = 0; c1 <= 2; ++c1)
            for (int c2 = 0; c2 <= 2; ++c2)
                for (int c3 = 0; c3 <= 2; ++c3)
                    for (int mask = 1; mask < 4; ++mask)
                        for (int initial = 1; initial <= 2; ++initial) {
                            aut.delta = {0, 0, c0, c1, c2, c3};
                            aut.finals = {0, static_cast<char>(mask & 1),
                                          static_cast<char>((mask >> 1) & 1)};
                            aut.initial = initial;
                            if (!is_acyclic(aut) || !is_trim(aut)) continue;
                            ++examined;
                            CHECK(is_minimal(aut));
                        }
    CHECK(examined > 0);
}

TEST_CASE("isomorphism is relabeling invariance") {
    // sample5 with states 3 and 4 swapped.
    Automaton relabeled = make_automaton(5, 3, 5, {1, 2},
                                         {{0, 0, 0},
                                          {0, 0, 0},
                                          {1, 2, 0},
                                          {2, 0, 2},
                                          {4, 3, 1}});
    CHECK(isomorphic(fixtures::sample5(), relabeled));
    CHECK_FALSE(isomorphic(fixtures::sample7(), fixtures::sample5()));
}

TEST_CASE("structural validation") {
    CHECK_THROWS_AS(make_automaton(1, 2, 1, {}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_automaton(1, 2, 2, {1}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_automaton(1, 2, 1, {1}, {{0, 3}}), std::invalid_argument);
    Automaton bad_dead = single_state(2);
    bad_dead.delta[0] = 1;
    CHECK_THROWS_AS(check_structure(bad_dead), std::invalid_argument);
}
