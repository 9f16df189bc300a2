#pragma once

#include <stdexcept>
#include <string>

namespace wsc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: bad simplex tuples, unparsable files or values.
class InputError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

/// A precondition on the call was violated (e.g. an unvalidated weight function).
class ContractError : public Error {
public:
    using Error::Error;
};

/// Value outside the domain an operation is defined on (e.g. non-integral SNF input).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A weight-function constructor could not honour its preconditions.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// A weight table lacks an entry for some (simplex, face index) pair.
class IncompleteWeightError : public Error {
public:
    using Error::Error;
};

/// Floating-point results disagree with the exact computation they are checked against.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ClassificationError : public Error {
public:
    using Error::Error;
};

}  // namespace wsc
