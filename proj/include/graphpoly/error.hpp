#ifndef GRAPHPOLY_ERROR_HPP
#define GRAPHPOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace graphpoly {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A documented precondition was violated by the caller.
class ContractViolation : public Error {
public:
    explicit ContractViolation(const std::string& what) : Error("contract violation: " + what) {}
};

// An operation whose statement assumes a loopless graph was given a loop.
class LooplessHypothesisError : public ContractViolation {
public:
    explicit LooplessHypothesisError(const std::string& op)
        : ContractViolation(op + " requires a loopless graph (loopless hypothesis)") {}
};

// Over-determined interpolation data was inconsistent; signals a counting bug.
class InterpolationError : public Error {
public:
    explicit InterpolationError(const std::string& what)
        : Error("interpolation inconsistency: " + what) {}
};

// An enumeration guard refused to start an oversized computation.
class GuardExceeded : public Error {
public:
    explicit GuardExceeded(const std::string& what)
        : Error("guard exceeded: " + what + " (pass --force to override)") {}
};

}  // namespace graphpoly

#endif
