#include "eub/scenarios.hpp"

#include <cmath>

#include "eub/errors.hpp"

namespace eub {

std::uint64_t SplitMix64::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double SplitMix64::gauss() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

std::vector<MeasurementBasis> paper_three_measurements(double a, double phi) {
    if (a < 0.0 || a > 1.0) throw OutOfRange("paper_three_measurements: a must be in [0,1]");
    const double s2 = 1.0 / std::sqrt(2.0);
    const cplx eip = std::polar(1.0, phi);
    const double sa = std::sqrt(a);
    const double sb = std::sqrt(1.0 - a);

    MeasurementBasis m1({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "M1");
    MeasurementBasis m2({{s2, 0, -s2}, {0, 1, 0}, {s2, 0, s2}}, "M2");
    MeasurementBasis m3({{sa, eip * sb, 0.0}, {sb, -eip * sa, 0.0}, {0.0, 0.0, 1.0}}, "M3");
    return {std::move(m1), std::move(m2), std::move(m3)};
}

std::vector<MeasurementBasis> mub_qubit() {
    const double s2 = 1.0 / std::sqrt(2.0);
    const cplx i(0.0, 1.0);
    MeasurementBasis z({{1, 0}, {0, 1}}, "Z");
    MeasurementBasis x({{s2, s2}, {s2, -s2}}, "X");
    MeasurementBasis y({{s2, i * s2}, {s2, -i * s2}}, "Y");
    return {std::move(z), std::move(x), std::move(y)};
}

MeasurementBasis random_basis(std::size_t dim, std::uint64_t seed) {
    if (dim < 2) throw OutOfRange("random_basis: dim must be >= 2");
    SplitMix64 rng(seed);
    std::vector<std::vector<cplx>> v(dim, std::vector<cplx>(dim));
    for (auto& row : v)
        for (auto& z : row) z = cplx(rng.gauss(), rng.gauss());
    // Gram-Schmidt with one re-orthogonalization pass.
    for (std::size_t i = 0; i < dim; ++i) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t j = 0; j < i; ++j) {
                const cplx c = inner_product(v[j], v[i]);
                for (std::size_t t = 0; t < dim; ++t) v[i][t] -= c * v[j][t];
            }
        double nrm = std::sqrt(inner_product(v[i], v[i]).real());
        for (auto& z : v[i]) z /= nrm;
    }
    return MeasurementBasis(std::move(v), "random(" + std::to_string(seed) + ")");
}

DensityMatrix random_state(std::size_t dim, std::size_t rank, std::uint64_t seed) {
    if (dim < 2) throw OutOfRange("random_state: dim must be >= 2");
    if (rank < 1 || rank > dim) throw OutOfRange("random_state: rank must be in [1, dim]");
    SplitMix64 rng(seed);
    ComplexMatrix g(dim, rank);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < rank; ++j) g(i, j) = cplx(rng.gauss(), rng.gauss());
    ComplexMatrix rho = matmul(g, adjoint(g));
    const double tr = rho.trace().real();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) rho(i, j) /= tr;
    // Exact Hermitian symmetrization against rounding in the product.
    for (std::size_t i = 0; i < dim; ++i) {
        rho(i, i) = cplx(rho(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cplx avg = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
            rho(i, j) = avg;
            rho(j, i) = std::conj(avg);
        }
    }
    return DensityMatrix(std::move(rho));
}

}  // namespace eub
