#pragma once

#include <stdexcept>
#include <string>

namespace powg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters or malformed input data (CLI exit code 2).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Cayley-table text that cannot be tokenized into a table.
class ParseError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A well-formed table that fails one of the group axioms.
class NotAGroup : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A computation exceeded a configured bound (CLI exit code 3).
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// A closed form evaluated outside its stated range, or whose printed
/// division is not exact.
class FormulaError : public Error {
public:
    using Error::Error;
};

}  // namespace powg
