// errors.hpp -- exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace adfa {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A cycle exists among the useful states.
struct CyclicError : Error {
    using Error::Error;
};

/// A state is unreachable or cannot reach a final state.
struct NotTrimError : Error {
    using Error::Error;
};

/// A word contains a symbol index outside [0, k).
struct BadSymbolError : Error {
    using Error::Error;
};

/// A minimal-mode operation was applied to a non-minimal automaton.
struct NotMinimalError : Error {
    using Error::Error;
};

/// Two distinct states compared equal under the full state order.
/// This breaks an internal invariant and is never expected on valid input.
struct IncomparableError : Error {
    using Error::Error;
};

/// The exhaustive search space exceeds the configured budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

/// A closed-form formula was requested outside its supported state counts.
struct UnsupportedNError : Error {
    using Error::Error;
};

} // namespace adfa
