#pragma once

#include <string>
#include <vector>

#include "eub/linalg.hpp"

namespace eub {

// Orthonormal basis of C^d: the eigenvectors of one projective measurement.
class MeasurementBasis {
public:
    explicit MeasurementBasis(std::vector<std::vector<cplx>> vectors, std::string label = "");

    std::size_t dim() const { return dim_; }
    const std::vector<cplx>& vector(std::size_t i) const { return vectors_[i]; }
    const std::string& label() const { return label_; }

private:
    std::size_t dim_;
    std::vector<std::vector<cplx>> vectors_;
    std::string label_;
};

// Hermitian, PSD, unit-trace state.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }

private:
    ComplexMatrix m_;
};

// Probability distribution.  Negative entries down to -1e-12 are clamped to
// zero and the vector renormalized; anything worse is rejected.
class ProbVector {
public:
    explicit ProbVector(std::vector<double> probs);

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    const std::vector<double>& values() const { return p_; }

private:
    std::vector<double> p_;
};

// c(u_x, v_y) = |<u_x|v_y>|^2; doubly stochastic for orthonormal bases.
class OverlapMatrix {
public:
    OverlapMatrix(std::size_t dim, std::vector<double> entries);

    std::size_t dim() const { return dim_; }
    double operator()(std::size_t x, std::size_t y) const { return e_[x * dim_ + y]; }

    double largest() const;
    double second_largest() const;

private:
    std::size_t dim_;
    std::vector<double> e_;
};

ProbVector born_probabilities(const DensityMatrix& rho, const MeasurementBasis& basis);
OverlapMatrix overlap_matrix(const MeasurementBasis& a, const MeasurementBasis& b);
double von_neumann_entropy(const DensityMatrix& rho, double log_base = 2.0);

}  // namespace eub
