#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace eub {

using cplx = std::complex<double>;

// Dense complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    cplx trace() const;
    double frobenius_norm() const;
    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> e_;
};

struct HermitianEigenResult {
    std::vector<double> eigenvalues;  // sorted nonincreasing
    std::size_t iterations = 0;       // full Jacobi sweeps used
};

enum class TopEigMethod { exact, power };

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
cplx inner_product(const std::vector<cplx>& a, const std::vector<cplx>& b);

// Cyclic Jacobi for complex Hermitian matrices.  `tol` is the target for the
// remaining off-diagonal Frobenius mass relative to the matrix scale.
HermitianEigenResult hermitian_eigenvalues(const ComplexMatrix& m, double tol = 1e-12);

double top_eigenvalue(const ComplexMatrix& m, TopEigMethod method = TopEigMethod::exact,
                      double tol = 1e-10);

double top_singular_value(const ComplexMatrix& m);

}  // namespace eub
