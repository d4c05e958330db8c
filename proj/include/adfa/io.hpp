// io.hpp -- text formats: the one-automaton-per-line canonical string
// format and the automaton JSON object.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adfa/automaton.hpp"
#include "adfa/canonical.hpp"

namespace adfa {

/// Renders the cells as nested integer lists with commas only, e.g.
/// "[[0,0,0],[0,0,1],[1,0,0]]".
std::string format_canonical(const CanonicalString& cs);

/// Parses one line of the format above (whitespace between tokens is
/// accepted). Checks the shape only: at least two rows of uniform width
/// at least two, every cell in [0, n]. Throws std::invalid_argument on
/// malformed input; semantic violations are the validator's job.
CanonicalString parse_canonical(const std::string& line, Mode mode);

/// An automaton plus its optional display alphabet (empty when the input
/// carried none). Symbol names never affect any computation.
struct AutomatonDoc {
    Automaton automaton;
    std::vector<std::string> alphabet;
};

/// Parses the JSON object {"n", "k", "alphabet"?, "initial", "finals",
/// "delta"} where delta holds n+1 rows of k targets and row 0 is all
/// zeros. Throws std::invalid_argument if the JSON is malformed or any
/// structural invariant fails.
AutomatonDoc automaton_from_json(const std::string& text);

std::string automaton_to_json(const AutomatonDoc& doc);

/// Compact display form of a characteristic word: rank digits, symbol
/// letters and finality digits, e.g. "1a02b0".
std::string display(const CharWord& word);

} // namespace adfa
