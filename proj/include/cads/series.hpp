#pragma once

#include <stdexcept>
#include <string>

namespace cads {

/// Truncation control shared by all infinite-series evaluators.
struct SeriesConfig {
    int max_terms = 2000;
    double rel_tol = 1e-14;
    double abs_tol = 1e-300;
};

/// Argument outside the supported domain (parameter pole, invalid spec, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A series failed to meet its tolerance within the configured term budget.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cads
