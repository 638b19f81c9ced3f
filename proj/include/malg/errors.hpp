#pragma once

#include <stdexcept>
#include <string>

namespace malg {

// Malformed input: bad model file, unknown name, dimension mismatch.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside its domain (e.g. a connective on a
// non-commuting pair).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NonCommutingPair : public PreconditionError {
public:
    NonCommutingPair(std::string first, std::string second)
        : PreconditionError("measurements '" + first + "' and '" + second + "' do not commute"),
          first_(std::move(first)), second_(std::move(second)) {}

    const std::string& first() const noexcept { return first_; }
    const std::string& second() const noexcept { return second_; }

private:
    std::string first_;
    std::string second_;
};

// A requested enumeration is larger than the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Broken internal invariant; never caused by user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace malg
