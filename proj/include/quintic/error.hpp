#ifndef QUINTIC_ERROR_HPP
#define QUINTIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace quintic {

// Base class for every failure the library can signal.  Algorithmic code
// throws; verification routines return reports instead and reserve
// exceptions for genuinely unusable inputs.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by a non-unit (zero rational, zero rational function, cohomology
// class with non-invertible scalar part, evaluation on a pole, ...).
struct DivisionError : Error {
    using Error::Error;
};

// Substitution that violates a precondition, e.g. composing with a shift
// series that has a nonzero constant term.
struct SubstitutionError : Error {
    using Error::Error;
};

// A pole had a different multiplicity than the operation requires.
struct MultiplicityError : Error {
    int detected_order;
    MultiplicityError(const std::string& msg, int order)
        : Error(msg), detected_order(order) {}
};

// Local expansion data too shallow for the requested residue.
struct TruncationError : Error {
    using Error::Error;
};

// Weight tuples that fail validation (repeats, nonzero sum, pole collisions).
struct DegenerateWeightsError : Error {
    using Error::Error;
};

// A series failed a structural requirement (e.g. the residual part of a
// coefficient is not h^{-d} times a polynomial of degree <= d).
struct StructureError : Error {
    using Error::Error;
};

// A covariance assertion failed: the mirror transform must preserve the
// coupling constants and polynomiality, so a failure is blocking.
struct TheoremViolationError : Error {
    using Error::Error;
};

// Multiple-cover inversion produced a non-integer.  Carries the degree and
// the offending value (as a string, to keep this header light).
struct IntegralityError : Error {
    int degree;
    std::string value;
    IntegralityError(const std::string& msg, int d, std::string v)
        : Error(msg), degree(d), value(std::move(v)) {}
};

// The uniqueness solver could not pin the solution with the z powers
// provided; retry with a larger z_order.
struct InsufficientZOrderError : Error {
    using Error::Error;
};

// The uniqueness solver's constraints are inconsistent: no polynomial
// solution exists for the supplied coupling data.
struct NoPolynomialSolutionError : Error {
    using Error::Error;
};

// A Yukawa coupling series that does not start at the classical value.
struct MalformedCouplingError : Error {
    using Error::Error;
};

// Operands built over different weight specifications were mixed.
struct RingMismatchError : Error {
    using Error::Error;
};

// An identity that exact arithmetic guarantees failed: implementation bug.
struct ConsistencyError : Error {
    using Error::Error;
};

}  // namespace quintic

#endif
