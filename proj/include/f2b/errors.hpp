#pragma once

#include <stdexcept>

namespace f2b {

/// Malformed user input: unreadable files, bad vector strings, inconsistent
/// set or multiset data.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configurable resource guard was exceeded. The message names the guard
/// and the flag that raises it.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace f2b
