// errors.hpp
// Exception types shared by every module. The CLI maps them onto exit codes.

#pragma once

#include <stdexcept>
#include <string>

namespace sierpinski {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A request exceeded the configured prime-table hard limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

// An exhaustive search ran out of budget. Never a negative answer.
class BudgetError : public Error {
public:
    using Error::Error;
};

// An internal invariant failed. Firing means a bug, not bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace sierpinski
