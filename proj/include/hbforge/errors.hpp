#pragma once

#include <stdexcept>
#include <string>

namespace hbforge {

// Invalid input or violated precondition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured resource cap was hit; the result is unknown, not wrong.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// A cross-check between independent algorithms failed.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace hbforge
