#pragma once

#include <stdexcept>
#include <string>

namespace addseq {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: value outside the accepted target range.
class InvalidTargetError : public Error {
public:
    explicit InvalidTargetError(long long value)
        : Error("invalid target value: " + std::to_string(value)), value_(value) {}
    long long value() const { return value_; }

private:
    long long value_;
};

class EmptyTargetsError : public Error {
public:
    EmptyTargetsError() : Error("target list is empty") {}
};

// Sequence violates the structural preconditions (not ascending, first
// element not 1, duplicate entries).
class InvalidSequenceError : public Error {
public:
    using Error::Error;
};

// An element of a candidate sequence has no formation from its predecessors.
class NotAChainError : public Error {
public:
    explicit NotAChainError(int element)
        : Error("element " + std::to_string(element) +
                " is not the sum of two earlier elements"),
          element_(element) {}
    int element() const { return element_; }

private:
    int element_;
};

class MissingTargetError : public Error {
public:
    explicit MissingTargetError(int target)
        : Error("target " + std::to_string(target) + " missing from sequence"),
          target_(target) {}
    int target() const { return target_; }

private:
    int target_;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

// Depth cap below the minimum feasible depth of the instance.
class InfeasibleDepthError : public Error {
public:
    InfeasibleDepthError(int requested, int minimum)
        : Error("depth cap " + std::to_string(requested) +
                " below minimum feasible depth " + std::to_string(minimum)),
          requested_(requested), minimum_(minimum) {}
    int requested() const { return requested_; }
    int minimum() const { return minimum_; }

private:
    int requested_;
    int minimum_;
};

// Solver assignment cannot be turned back into a sequence. Carries the label
// of the first violated constraint (or the offending variable name).
class DecodeError : public Error {
public:
    explicit DecodeError(const std::string& label)
        : Error("assignment violates " + label), label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

class ResourceExhaustedError : public Error {
public:
    using Error::Error;
};

class NumericalFailureError : public Error {
public:
    using Error::Error;
};

} // namespace addseq
