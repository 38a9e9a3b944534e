#pragma once

#include <stdexcept>
#include <string>

namespace bpoly {

// Malformed textual input (digraph files, polynomial JSON, sign words).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical claim that must hold failed at run time, e.g. a division
// that was supposed to be exact left a remainder.
class ArithmeticError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace bpoly
