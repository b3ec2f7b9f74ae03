#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace thetaloc {

// Requested series tolerance could not be certified within the configured
// radius cap / point budget. Carries the best bound that was achieved so the
// caller can decide whether it is still useful.
class truncation_error : public std::runtime_error {
public:
    truncation_error(const std::string& what, double best_bound_)
        : std::runtime_error(what), best_bound(best_bound_) {}
    double best_bound;
};

// A magnitude fell into the gap between the "zero" and "nonzero" thresholds,
// so the two-threshold classifier refuses to decide. `offenders` lists the
// characteristics (canonical text form) that could not be classified.
class indeterminate_error : public std::runtime_error {
public:
    indeterminate_error(const std::string& what, std::vector<std::string> offenders_)
        : std::runtime_error(what), offenders(std::move(offenders_)) {}
    std::vector<std::string> offenders;
};

// Numerical degeneracy: near-singular CΩ+D, Im Ω too close to the boundary of
// the Siegel space for reliable summation, and similar conditions.
class degeneracy_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A denominator sample in a ratio check was too small to divide by; the caller
// should resample z.
class resample_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace thetaloc
