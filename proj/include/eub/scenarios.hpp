#pragma once

#include <cstdint>
#include <vector>

#include "eub/quantum.hpp"

namespace eub {

// Deterministic generator: splitmix64 state transition, Box-Muller normals.
// All randomness in tests and fixtures flows through this so runs reproduce
// bit-exactly from a 64-bit seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform();  // in [0, 1)
    double gauss();    // standard normal

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// The three-measurement qutrit family: computational basis, a fixed rotation
// in the 1-3 plane, and a (a, phi)-parametrized rotation in the 1-2 plane.
std::vector<MeasurementBasis> paper_three_measurements(double a, double phi);

// Computational, Hadamard, and circular (Y-eigenbasis) qubit bases.
std::vector<MeasurementBasis> mub_qubit();

MeasurementBasis random_basis(std::size_t dim, std::uint64_t seed);
DensityMatrix random_state(std::size_t dim, std::size_t rank, std::uint64_t seed);

}  // namespace eub
