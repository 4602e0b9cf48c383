#pragma once

#include <cstddef>
#include <vector>

namespace eub {

// A majorization bound vector kept in construction order (the consecutive
// Omega differences), never resorted: its partial sums are the Omega_k and
// the Abel-summation dot product below depends on that alignment.
class MajVector {
public:
    explicit MajVector(std::vector<double> entries);

    std::size_t size() const { return e_.size(); }
    double operator[](std::size_t i) const { return e_[i]; }
    const std::vector<double>& values() const { return e_; }

private:
    std::vector<double> e_;
};

// True iff x is majorized by y (top-k partial sums of sorted-descending x
// never exceed those of y by more than `slack`).  Shorter vector is padded
// with zeros.
bool majorizes(const std::vector<double>& y, const std::vector<double>& x, double slack = 1e-9);

// Lexicographic tensor product of distributions (first factor most significant).
std::vector<double> tensor_product(const std::vector<std::vector<double>>& ps);

double shannon_entropy(const std::vector<double>& p, double log_base = 2.0);
double renyi_entropy(const std::vector<double>& p, double alpha, double log_base = 2.0);
double tsallis_entropy(const std::vector<double>& p, double q);

// sum_k omega_k * a_k with omega in construction order and `a` required to be
// sorted nonincreasing.  By Abel summation, for any x majorized by omega,
// the dot product of x sorted descending with `a` is <= the returned value.
double omega_dot_decreasing(const MajVector& omega, const std::vector<double>& a);

}  // namespace eub
