#include "eub/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "eub/errors.hpp"

namespace eub {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : e_) s += std::norm(z);
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : e_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

cplx inner_product(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("inner_product: lengths differ");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

namespace {

constexpr double kHermTol = 1e-10;

void require_hermitian(const ComplexMatrix& m) {
    if (!m.is_square()) throw NotHermitian("matrix is not square");
    if (!m.all_finite()) throw NotHermitian("matrix has non-finite entries");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > kHermTol)
                throw NotHermitian("conjugate symmetry violated beyond 1e-10");
}

double off_diagonal_mass(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

HermitianEigenResult hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
    require_hermitian(m);
    const std::size_t n = m.rows();
    ComplexMatrix a = m;

    const double scale = std::max(1.0, a.frobenius_norm());
    const double target = tol * scale;
    const std::size_t max_sweeps = 100;

    std::size_t sweep = 0;
    while (off_diagonal_mass(a) > target) {
        if (sweep++ >= max_sweeps) throw NoConvergence("Jacobi sweep limit exceeded");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-300) continue;
                const cplx phase = apq / r;  // e^{i theta}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Column update A <- A J with J = diag(1, e^{-i theta}) * G
                const cplx se = s * std::conj(phase);
                const cplx ce = c * std::conj(phase);
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx aip = a(i, p);
                    const cplx aiq = a(i, q);
                    a(i, p) = c * aip - se * aiq;
                    a(i, q) = s * aip + ce * aiq;
                }
                // Row update A <- J^H A
                const cplx sF = s * phase;
                const cplx cF = c * phase;
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx apj = a(p, j);
                    const cplx aqj = a(q, j);
                    a(p, j) = c * apj - sF * aqj;
                    a(q, j) = s * apj + cF * aqj;
                }
                // Keep diagonal exactly real against rounding drift.
                a(p, p) = cplx(a(p, p).real(), 0.0);
                a(q, q) = cplx(a(q, q).real(), 0.0);
            }
        }
    }

    HermitianEigenResult res;
    res.iterations = sweep;
    res.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.eigenvalues[i] = a(i, i).real();
    std::sort(res.eigenvalues.begin(), res.eigenvalues.end(), std::greater<double>());
    return res;
}

double top_eigenvalue(const ComplexMatrix& m, TopEigMethod method, double tol) {
    if (method == TopEigMethod::exact) {
        return hermitian_eigenvalues(m).eigenvalues.front();
    }
    require_hermitian(m);
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0).real();

    // Shift by the max absolute row sum so the target eigenvalue dominates in
    // magnitude (all shifted eigenvalues are nonnegative by Gershgorin).
    double shift = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double rs = 0.0;
        for (std::size_t j = 0; j < n; ++j) rs += std::abs(m(i, j));
        shift = std::max(shift, rs);
    }
    const double scale = std::max(1.0, shift);

    // Deterministic pseudo-random start vector (splitmix64 stream).
    std::vector<cplx> v(n);
    std::uint64_t st = 0x9e3779b97f4a7c15ULL;
    auto next = [&st]() {
        st += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = st;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z = z ^ (z >> 31);
        return static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
    };
    for (auto& z : v) z = cplx(next(), next());

    auto apply = [&](const std::vector<cplx>& x) {
        std::vector<cplx> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            cplx s = shift * x[i];
            for (std::size_t j = 0; j < n; ++j) s += m(i, j) * x[j];
            y[i] = s;
        }
        return y;
    };
    auto normalize = [&](std::vector<cplx>& x) {
        double nn = 0.0;
        for (const cplx& z : x) nn += std::norm(z);
        nn = std::sqrt(nn);
        for (cplx& z : x) z /= nn;
        return nn;
    };
    normalize(v);

    const std::size_t max_steps = 10000;
    double mu = 0.0;
    for (std::size_t step = 0; step < max_steps; ++step) {
        std::vector<cplx> w = apply(v);
        // Rayleigh quotient of the shifted matrix.
        cplx q = 0.0;
        for (std::size_t i = 0; i < n; ++i) q += std::conj(v[i]) * w[i];
        mu = q.real();
        double resid = 0.0;
        for (std::size_t i = 0; i < n; ++i) resid += std::norm(w[i] - mu * v[i]);
        resid = std::sqrt(resid);
        normalize(w);
        v = std::move(w);
        if (resid < tol * scale) return mu - shift;
    }
    throw NoConvergence("power iteration cap exceeded");
}

double top_singular_value(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    ComplexMatrix g = (m.cols() <= m.rows()) ? matmul(adjoint(m), m) : matmul(m, adjoint(m));
    // Symmetrize away rounding asymmetry before the Hermitian solver.
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i; j < g.cols(); ++j) {
            const cplx avg = 0.5 * (g(i, j) + std::conj(g(j, i)));
            g(i, j) = avg;
            g(j, i) = std::conj(avg);
        }
    const double lam = hermitian_eigenvalues(g).eigenvalues.front();
    return std::sqrt(std::max(0.0, lam));
}

}  // namespace eub
