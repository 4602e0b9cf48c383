#include "eub/admixture.hpp"

#include <algorithm>
#include <cmath>

#include "eub/errors.hpp"

namespace eub {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

// Decode lexicographic code into digits (most significant first).
void decode(std::size_t code, std::size_t d, std::vector<std::size_t>& digits) {
    for (std::size_t t = digits.size(); t-- > 0;) {
        digits[t] = code % d;
        code /= d;
    }
}

}  // namespace

AdmixtureTensors build_A(const std::vector<MeasurementBasis>& bases, std::size_t work_budget) {
    const std::size_t n = bases.size();
    if (n < 2) throw TooFewMeasurements("build_A: need at least 2 measurements");
    const std::size_t d = bases.front().dim();
    for (const auto& b : bases)
        if (b.dim() != d) throw DimensionMismatch("build_A: bases of unequal dimension");

    const std::size_t dn = ipow(d, n);
    const std::size_t j_count = (n >= 3) ? dn : 1;
    const std::size_t work = dn * dn * j_count * n;
    if (work > work_budget)
        throw WorkBudgetExceeded("build_A: work estimate " + std::to_string(work) +
                                 " exceeds budget");

    // Overlap matrices of the cyclic consecutive pairs (m, m+1 mod N).
    std::vector<OverlapMatrix> o;
    o.reserve(n);
    for (std::size_t m = 0; m < n; ++m)
        o.push_back(overlap_matrix(bases[m], bases[(m + 1) % n]));

    // Chain tables: chain m threads measurements m, m+1, ..., m-1 (cyclic);
    // T[m][code of (y_0..y_{N-1})] is the product of consecutive overlaps.
    std::vector<std::vector<double>> chain(n, std::vector<double>(dn, 1.0));
    std::vector<std::size_t> y(n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t code = 0; code < dn; ++code) {
            decode(code, d, y);
            double prod = 1.0;
            for (std::size_t t = 0; t + 1 < n; ++t) prod *= o[(m + t) % n](y[t], y[t + 1]);
            chain[m][code] = prod;
        }

    AdmixtureTensors out;
    out.dim = d;
    out.n_meas = n;
    out.A_raw.assign(dn, std::vector<double>(dn, 0.0));

    std::vector<std::size_t> i_idx(n), k_idx(n), j_idx(n), local(n);
    for (std::size_t ic = 0; ic < dn; ++ic) {
        decode(ic, d, i_idx);
        for (std::size_t kc = 0; kc < dn; ++kc) {
            decode(kc, d, k_idx);
            double sum = 0.0;
            for (std::size_t jc = 0; jc < j_count; ++jc) {
                decode(jc, d, j_idx);
                double prod = 1.0;
                for (std::size_t m = 0; m < n && prod != 0.0; ++m) {
                    // Chain m: starts at k_m, middle nodes take the shared j
                    // of the threaded measurement, ends at i_{m-1 mod N}.
                    local[0] = k_idx[m];
                    for (std::size_t t = 1; t + 1 < n; ++t) local[t] = j_idx[(m + t) % n];
                    local[n - 1] = i_idx[(m + n - 1) % n];
                    std::size_t code = 0;
                    for (std::size_t t = 0; t < n; ++t) code = code * d + local[t];
                    prod *= chain[m][code];
                }
                sum += prod;
            }
            out.A_raw[ic][kc] = sum;
        }
    }

    out.A_sorted = out.A_raw;
    for (auto& row : out.A_sorted) std::sort(row.begin(), row.end(), std::greater<double>());
    return out;
}

std::vector<double> build_B(const AdmixtureTensors& tensors, const MajVector& omega,
                            double log_base) {
    std::vector<double> b;
    b.reserve(tensors.A_sorted.size());
    for (std::size_t i = 0; i < tensors.A_sorted.size(); ++i) {
        const double dot = omega_dot_decreasing(omega, tensors.A_sorted[i]);
        if (dot <= 0.0)
            throw LogOfNonpositive("build_B: omega . A is nonpositive at multi-index " +
                                   std::to_string(i));
        b.push_back(std::log(dot) / std::log(log_base));
    }
    std::sort(b.begin(), b.end(), std::greater<double>());
    return b;
}

double admixture_bound(const std::vector<MeasurementBasis>& bases, const MajVector& omega,
                       double log_base, std::size_t work_budget) {
    const AdmixtureTensors tensors = build_A(bases, work_budget);
    const std::vector<double> b = build_B(tensors, omega, log_base);
    return -omega_dot_decreasing(omega, b) / static_cast<double>(bases.size());
}

}  // namespace eub
