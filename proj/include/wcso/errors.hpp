#ifndef WCSO_ERRORS_HPP
#define WCSO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wcso {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Iterative solver ran out of its iteration budget.
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// Residual stopped decreasing long before the tolerance was met.
class IllConditioned : public Error {
public:
    IllConditioned(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// State norm fell below the zero guard where the 0-homogeneous term is undefined.
class DegenerateState : public Error {
public:
    explicit DegenerateState(const std::string& what) : Error(what) {}
};

// A gradient or update was requested from a state that did not converge.
class StateNotConverged : public Error {
public:
    StateNotConverged(const std::string& what, int iterate = -1)
        : Error(what), iterate_(iterate) {}
    int iterate() const { return iterate_; }

private:
    int iterate_;
};

// Optimizer could not produce a feasible step.
class Stalled : public Error {
public:
    explicit Stalled(const std::string& what) : Error(what) {}
};

// Config text could not be read (syntax level). Carries the 1-based line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Config was readable but a field value is out of range.
class ValidationError : public Error {
public:
    ValidationError(const std::string& field, const std::string& what)
        : Error(field + ": " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Filesystem-level failure while importing or exporting.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace wcso

#endif
