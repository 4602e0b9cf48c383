#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "eub/quantum.hpp"

namespace eub {

struct MeasurementOrder {
    std::vector<std::size_t> perm;  // 0-based ordering of the measurement list
};

double deutsch_bound(double c1, double log_base = 2.0);
double maassen_uffink_bound(double c1, double log_base = 2.0);
double coles_piani_bound(double c1, double c2, double log_base = 2.0);

// The channel-bound overlap maximum b of the N-measurement chain, evaluated
// by a single dynamic-programming contraction of the consecutive overlap
// matrices.  Returns b itself (the bound is -log b).
double liu_b(const std::vector<MeasurementBasis>& bases);

// Minimum of b over all orderings of the measurement list; ties broken by the
// lexicographically smallest permutation.
std::pair<double, MeasurementOrder> liu_b_min(const std::vector<MeasurementBasis>& bases);

// State-dependent bound I for the given measurement order (order = list order).
double state_dependent_I(const DensityMatrix& rho, const std::vector<MeasurementBasis>& bases,
                         double log_base = 2.0);

enum class AverageMode { full, cyclic };

double average_I(const DensityMatrix& rho, const std::vector<MeasurementBasis>& bases,
                 AverageMode mode, double log_base = 2.0);

}  // namespace eub
