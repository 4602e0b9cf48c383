#include "eub/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eub/errors.hpp"

namespace eub {

namespace {
constexpr double kTol = 1e-10;
}

MeasurementBasis::MeasurementBasis(std::vector<std::vector<cplx>> vectors, std::string label)
    : dim_(vectors.size()), vectors_(std::move(vectors)), label_(std::move(label)) {
    if (dim_ == 0) throw DimensionMismatch("MeasurementBasis: empty vector set");
    for (std::size_t i = 0; i < dim_; ++i) {
        if (vectors_[i].size() != dim_)
            throw DimensionMismatch("MeasurementBasis: vector length != dimension");
        const double nrm = std::sqrt(inner_product(vectors_[i], vectors_[i]).real());
        if (std::abs(nrm - 1.0) > kTol)
            throw NotNormalized("MeasurementBasis: vector " + std::to_string(i) +
                                " is not unit norm");
    }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (std::abs(inner_product(vectors_[i], vectors_[j])) > kTol)
                throw NotNormalized("MeasurementBasis: vectors " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are not orthogonal");
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw DimensionMismatch("DensityMatrix: not square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = i; j < m_.cols(); ++j)
            if (std::abs(m_(i, j) - std::conj(m_(j, i))) > kTol)
                throw NotHermitian("DensityMatrix: not Hermitian");
    if (std::abs(m_.trace() - cplx(1.0, 0.0)) > kTol)
        throw NotNormalized("DensityMatrix: trace != 1");
    const auto eig = hermitian_eigenvalues(m_);
    if (eig.eigenvalues.back() < -kTol)
        throw OutOfRange("DensityMatrix: negative eigenvalue beyond tolerance");
}

ProbVector::ProbVector(std::vector<double> probs) : p_(std::move(probs)) {
    double sum = 0.0;
    for (double& x : p_) {
        if (x < -1e-12 || x > 1.0 + 1e-12)
            throw NotNormalized("ProbVector: entry out of [0,1] beyond tolerance");
        if (x < 0.0) x = 0.0;
        sum += x;
    }
    if (std::abs(sum - 1.0) > kTol) throw NotNormalized("ProbVector: entries do not sum to 1");
    for (double& x : p_) x /= sum;
}

OverlapMatrix::OverlapMatrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), e_(std::move(entries)) {
    if (e_.size() != dim_ * dim_) throw DimensionMismatch("OverlapMatrix: entry count");
    for (double x : e_)
        if (x < -1e-12 || x > 1.0 + 1e-12) throw OutOfRange("OverlapMatrix: entry outside [0,1]");
    for (std::size_t x = 0; x < dim_; ++x) {
        double rs = 0.0, cs = 0.0;
        for (std::size_t y = 0; y < dim_; ++y) {
            rs += (*this)(x, y);
            cs += (*this)(y, x);
        }
        if (std::abs(rs - 1.0) > kTol || std::abs(cs - 1.0) > kTol)
            throw NotNormalized("OverlapMatrix: not doubly stochastic");
    }
}

double OverlapMatrix::largest() const { return *std::max_element(e_.begin(), e_.end()); }

double OverlapMatrix::second_largest() const {
    std::vector<double> v = e_;
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v.size() > 1 ? v[1] : v[0];
}

ProbVector born_probabilities(const DensityMatrix& rho, const MeasurementBasis& basis) {
    if (rho.dim() != basis.dim()) throw DimensionMismatch("born_probabilities: dims differ");
    const std::size_t d = rho.dim();
    std::vector<double> p(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto& u = basis.vector(i);
        cplx acc = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
            cplx row = 0.0;
            for (std::size_t c = 0; c < d; ++c) row += rho.matrix()(r, c) * u[c];
            acc += std::conj(u[r]) * row;
        }
        p[i] = std::clamp(acc.real(), -1e-12, 1.0 + 1e-12);
    }
    return ProbVector(std::move(p));
}

OverlapMatrix overlap_matrix(const MeasurementBasis& a, const MeasurementBasis& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("overlap_matrix: dims differ");
    const std::size_t d = a.dim();
    std::vector<double> e(d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            e[x * d + y] = std::norm(inner_product(a.vector(x), b.vector(y)));
    return OverlapMatrix(d, std::move(e));
}

double von_neumann_entropy(const DensityMatrix& rho, double log_base) {
    const auto eig = hermitian_eigenvalues(rho.matrix());
    double h = 0.0;
    for (double lam : eig.eigenvalues)
        if (lam > 0.0) h -= lam * std::log(lam);
    return h / std::log(log_base);
}

}  // namespace eub
