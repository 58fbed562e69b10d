#pragma once

#include <stdexcept>
#include <string>

namespace citeflow {

// Bad or inconsistent user input (files, flags). Maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structural guarantee was broken inside the library. Maps to exit code 1.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace citeflow
