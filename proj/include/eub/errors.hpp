#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eub {

struct NotHermitian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotNormalized : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSorted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidChoice : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Carries the enumeration size that would be needed, so a caller can raise
// the budget or fall back to the singular-value relaxation.
struct BudgetExceeded : std::runtime_error {
    std::size_t required;
    BudgetExceeded(const std::string& msg, std::size_t req)
        : std::runtime_error(msg), required(req) {}
};

struct WorkBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooFewMeasurements : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooManyMeasurements : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateChain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LogOfNonpositive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eub
