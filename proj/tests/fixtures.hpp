// fixtures.hpp -- shared sample automata and their frozen canonical forms.
#pragma once

#include <vector>

#include "adfa/automaton.hpp"
#include "adfa/canonical.hpp"

namespace fixtures {

// 9 useful states over 3 symbols, trim and acyclic, with two mergeable
// pairs: (8, 9) and (3, 4). Ranks run 0..5; rank 0 and rank 4 each hold
// two states.
inline adfa::Automaton sample9() {
    return adfa::make_automaton(9, 3, 1, {8, 9},
                                {{2, 3, 4},
                                 {5, 5, 0},
                                 {6, 0, 0},
                                 {6, 0, 0},
                                 {7, 8, 8},
                                 {7, 5, 7},
                                 {8, 8, 9},
                                 {0, 0, 0},
                                 {0, 0, 0}});
}

// Minimal automaton with 7 useful states over 3 symbols; also the result
// of minimizing sample9.
inline adfa::Automaton sample7() {
    return adfa::make_automaton(7, 3, 1, {7},
                                {{3, 2, 2},
                                 {4, 0, 0},
                                 {5, 5, 0},
                                 {6, 5, 6},
                                 {6, 7, 7},
                                 {7, 7, 7},
                                 {0, 0, 0}});
}

// 5 useful states over 3 symbols with two equal-tuple final states whose
// order is settled only by their characteristic words.
inline adfa::Automaton sample5() {
    return adfa::make_automaton(5, 3, 5, {1, 2},
                                {{0, 0, 0},
                                 {0, 0, 0},
                                 {2, 0, 2},
                                 {1, 2, 0},
                                 {3, 4, 1}});
}

inline const std::vector<int> kSample7Madfa = {
    0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 2, 1, 1, 0,
    2, 3, 2, 0, 3, 3, 0, 0, 4, 0, 0, 0, 5, 6, 6, 0};

inline const std::vector<int> kSample9Adfa = {
    0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 2, 0, 3, 1, 1, 0,
    3, 4, 3, 0, 4, 4, 0, 0, 5, 0, 0, 0, 5, 0, 0, 0, 6, 7, 8, 0};

inline const std::vector<int> kSample5Adfa = {
    0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1,
    1, 0, 1, 0, 2, 1, 0, 0, 3, 4, 2, 0};

inline adfa::CanonicalString make_string(int n, int k, adfa::Mode mode,
                                         std::vector<int> cells) {
    adfa::CanonicalString cs;
    cs.n = n;
    cs.k = k;
    cs.mode = mode;
    cs.cells = std::move(cells);
    return cs;
}

} // namespace fixtures
