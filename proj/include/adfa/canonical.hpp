// canonical.hpp -- the canonical string form: state tuples, characteristic
// words, the canonical numbering in minimal and general modes, encoding,
// decoding and the condition validator.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "adfa/automaton.hpp"
#include "adfa/errors.hpp"

namespace adfa {

/// Which normal form a string lives in. `madfa` admits only minimal
/// automata (strict tuple order within a rank); `adfa` admits equivalent
/// states and breaks ties between equal tuples by characteristic word.
enum class Mode { adfa, madfa };

/// Validator condition identifiers, in checking order. `N6e` is the
/// relaxed within-rank order used in adfa mode.
enum class Cond { N0, N1, N2, N3, N4, N5, N6, N6e };

const char* cond_name(Cond c);

struct ValidationResult {
    bool ok = true;
    Cond condition = Cond::N0;
    int position = 0; ///< flat-string index of the first violation
};

struct InvalidStringError : Error {
    Cond condition;
    int position;
    InvalidStringError(Cond c, int pos);
};

/// A state's representation: k transition targets under the canonical
/// numbering plus the finality bit.
struct StateTuple {
    std::vector<int> targets;
    int finality = 0;
};

/// The canonical representation of an automaton: n+1 state tuples
/// (index 0 is the dead state) stored as a flat cell sequence of length
/// (k+1)(n+1).
struct CanonicalString {
    int n = 0;
    int k = 0;
    Mode mode = Mode::adfa;
    std::vector<int> cells;

    int width() const { return k + 1; }
    int cell(int state, int j) const { return cells[state * (k + 1) + j]; }
    StateTuple tuple(int state) const;

    bool operator==(const CanonicalString&) const = default;
};

/// One reverse-path step: the rank, symbol and finality of the state the
/// step came from. Tokens order by (rank, symbol, finality).
struct CharToken {
    int rank = 0;
    int symbol = 0;
    int finality = 0;
    auto operator<=>(const CharToken&) const = default;
};

/// The characteristic word of a state: the lexicographically least token
/// sequence over all reverse paths back to the initial state. The initial
/// state's word is empty; a strict prefix sorts before its extensions.
struct CharWord {
    std::vector<CharToken> tokens;
    auto operator<=>(const CharWord&) const = default;
};

/// Canonical state numbering. phi[0] == 0 (dead state); the useful states
/// map bijectively onto 1..n, ascending with rank.
struct Numbering {
    std::vector<int> phi;
};

/// Characteristic word of a single state (see CharWord).
CharWord characteristic_word(const Automaton& aut, const RankTable& ranks, int state);

/// Characteristic words of every useful state, computed together by
/// dynamic programming over the reversed transition graph.
std::vector<CharWord> characteristic_words(const Automaton& aut, const RankTable& ranks);

/// Orders two same-rank states: first by their tuples under the partial
/// numbering (all lower ranks must be numbered; unnumbered slots are -1),
/// then by characteristic word. Throws IncomparableError if two distinct
/// states compare equal on both.
std::strong_ordering compare_states(const Automaton& aut, const Numbering& partial,
                                    int s, int t);

/// The canonical numbering of a trim acyclic automaton. In madfa mode the
/// input must be minimal (NotMinimalError otherwise) and the unique
/// pre-dead state gets number 1; in adfa mode numbering starts at 1 with
/// rank 0 and ties between equal tuples follow the characteristic words.
Numbering canonical_numbering(const Automaton& aut, Mode mode);

/// Canonical string of the automaton under the mode's numbering.
/// Isomorphic inputs yield identical strings.
CanonicalString encode(const Automaton& aut, Mode mode);

/// Reconstructs the automaton a canonical string describes (initial state
/// n). Validates first and throws InvalidStringError on violation.
Automaton decode(const CanonicalString& cs);

/// Checks the normal-form conditions in order N0, N1, N2 (rank
/// structure), N3, N4, N5, then N6 (madfa) or N6' (adfa), and reports the
/// first violation with its flat-string position.
ValidationResult validate(const CanonicalString& cs, Mode mode);

namespace detail {

/// Builds the automaton described by the cells without validating.
Automaton decode_unchecked(const CanonicalString& cs);

} // namespace detail

} // namespace adfa
