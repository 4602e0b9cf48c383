#pragma once

#include <cstddef>
#include <vector>

#include "eub/majorization.hpp"
#include "eub/quantum.hpp"

namespace eub {

// Per-multi-index vectors built from the cyclic multi-overlap chains.
// Multi-indices are encoded lexicographically, first measurement most
// significant.
struct AdmixtureTensors {
    std::size_t dim = 0;
    std::size_t n_meas = 0;
    // A_raw[i][k]: entry for multi-index pair (i, k) in raw lexicographic k
    // order; A_sorted[i] is the same list rearranged nonincreasing.
    std::vector<std::vector<double>> A_raw;
    std::vector<std::vector<double>> A_sorted;
};

constexpr std::size_t kDefaultWorkBudget = 1'000'000'000;

AdmixtureTensors build_A(const std::vector<MeasurementBasis>& bases,
                         std::size_t work_budget = kDefaultWorkBudget);

// B_i = log(omega . A_i sorted), returned sorted nonincreasing.
std::vector<double> build_B(const AdmixtureTensors& tensors, const MajVector& omega,
                            double log_base = 2.0);

// State-independent lower bound -(1/N) * omega . B.
double admixture_bound(const std::vector<MeasurementBasis>& bases, const MajVector& omega,
                       double log_base = 2.0, std::size_t work_budget = kDefaultWorkBudget);

}  // namespace eub
