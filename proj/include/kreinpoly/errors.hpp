#ifndef KREINPOLY_ERRORS_HPP
#define KREINPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kreinpoly {

// A request violates a documented precondition (bad parameters, out-of-range
// degrees, non-positive beta, ...).  CLI exit code 2.
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

// Gamma/Pochhammer evaluated at a pole, or a series denominator hits a
// non-positive integer inside its support box.
class PoleError : public PreconditionError {
public:
    explicit PoleError(const std::string& what) : PreconditionError(what) {}
};

// The request is fine but the selected route does not cover it; callers
// should try another route.  CLI exit code 3.
class RouteInapplicableError : public std::runtime_error {
public:
    explicit RouteInapplicableError(const std::string& what) : std::runtime_error(what) {}
};

// A series does not terminate, so exact evaluation is impossible.
class NonTerminatingError : public PreconditionError {
public:
    explicit NonTerminatingError(const std::string& what) : PreconditionError(what) {}
};

// A numerical procedure could not certify the requested accuracy.  Carries
// the best estimate so callers can still inspect it.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

// Exact values with different sqrt(pi) exponents were added.  No in-scope
// formula produces such a sum, so this indicates a logic error.
class MixedRadicalError : public std::logic_error {
public:
    explicit MixedRadicalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace kreinpoly

#endif
