// closed_forms.hpp -- exact closed-form counts for small state numbers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "adfa/canonical.hpp"
#include "adfa/errors.hpp"

namespace adfa {

using BigInt = boost::multiprecision::cpp_int;

enum class CountSource { formula, generator, oracle };

struct CountReport {
    int n = 0;
    int k = 0;
    Mode mode = Mode::adfa;
    BigInt value;
    CountSource source = CountSource::formula;
};

/// Number of minimal automata with n useful states over k symbols, for
/// n in {2, 3}. Throws UnsupportedNError otherwise.
BigInt madfa_formula(int n, int k);

/// Number of automata with n useful states over k symbols, for n in
/// {2, 3, 4}. Throws UnsupportedNError otherwise.
///
/// The four-state sum is evaluated exactly as written, including the
/// final term divided by three (whose divisibility is asserted). It is
/// known to disagree with exhaustive generation -- see the README; the
/// generator and the enumeration oracle are authoritative when they
/// differ.
BigInt adfa_formula(int n, int k);

} // namespace adfa
