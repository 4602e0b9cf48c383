#pragma once

#include <cstddef>
#include <vector>

#include "eub/linalg.hpp"
#include "eub/majorization.hpp"
#include "eub/quantum.hpp"

namespace eub {

// One choice of basis-vector subsets, one subset per measurement.
// Indices are strictly increasing within each measurement.
struct SubsetChoice {
    std::vector<std::vector<std::size_t>> indices;
};

struct OmegaResult {
    // Effective s_k values driving Omega_k = (s_k / N)^N.  For the
    // singular-value relaxation this is 1 + shat_k.
    std::vector<double> s;
    std::vector<double> Omega;
    MajVector omega;
    std::size_t a;                  // index of last Omega < 1 (1-based count)
    std::size_t enumeration_count;  // subset choices examined in total
};

constexpr std::size_t kDefaultBudget = 2'000'000;

// Block matrix with identity diagonal blocks and inner-product off-diagonal
// blocks between the chosen subsets.
ComplexMatrix block_gram(const std::vector<MeasurementBasis>& bases, const SubsetChoice& choice);

// Max top eigenvalue of block_gram over all size compositions
// S_1+...+S_N = k+N-1 (S_m in [1,d]) and all index subsets of those sizes.
double compute_s_k(const std::vector<MeasurementBasis>& bases, std::size_t k,
                   std::size_t budget = kDefaultBudget, std::size_t* count = nullptr);

OmegaResult compute_omega(const std::vector<MeasurementBasis>& bases,
                          std::size_t budget = kDefaultBudget);

// Relaxation: lambda_1 replaced by 1 + sum of top singular values of the
// consecutive-pair blocks, over the same enumeration space.
OmegaResult compute_omega_hat(const std::vector<MeasurementBasis>& bases,
                              std::size_t budget = kDefaultBudget);

// Two-component simplification (Omega_1, 1 - Omega_1).
MajVector omega_simple(const std::vector<MeasurementBasis>& bases,
                       std::size_t budget = kDefaultBudget);

}  // namespace eub
