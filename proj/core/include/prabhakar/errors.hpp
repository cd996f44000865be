#ifndef PRABHAKAR_ERRORS_HPP
#define PRABHAKAR_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace prabhakar {

/// Rejected input: parameters or arguments outside the documented domain.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Arguments are formally admissible but outside the numerical envelope
/// (branch violations, non-decaying integrands, divergent resummations, ...).
class envelope_error : public std::runtime_error {
public:
    explicit envelope_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// A series failed to converge within its term budget.  Carries the last
/// term magnitude so callers can report how far away convergence was.
class convergence_error : public envelope_error {
public:
    convergence_error(const std::string& what, double last_term_magnitude,
                      int terms_used)
        : envelope_error(what),
          last_term(last_term_magnitude),
          terms(terms_used) {}

    double last_term;
    int terms;
};

/// A monitored resummation started growing without bound.  Carries the
/// partial sum accumulated before the monitor tripped.
class divergence_error : public envelope_error {
public:
    divergence_error(const std::string& what, double partial, int terms_used)
        : envelope_error(what), partial_sum(partial), terms(terms_used) {}

    double partial_sum;
    int terms;
};

/// Limit extrapolation did not settle.  Carries the samples it saw.
class extrapolation_error : public envelope_error {
public:
    extrapolation_error(const std::string& what, std::vector<double> s)
        : envelope_error(what), samples(std::move(s)) {}

    std::vector<double> samples;
};

} // namespace prabhakar

#endif
