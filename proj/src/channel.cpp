#include "eub/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eub/errors.hpp"

namespace eub {

namespace {

double logb(double x, double base) { return std::log(x) / std::log(base); }

std::vector<OverlapMatrix> consecutive_overlaps(const std::vector<MeasurementBasis>& bases) {
    std::vector<OverlapMatrix> o;
    o.reserve(bases.size() - 1);
    for (std::size_t m = 0; m + 1 < bases.size(); ++m)
        o.push_back(overlap_matrix(bases[m], bases[m + 1]));
    return o;
}

std::vector<MeasurementBasis> reorder(const std::vector<MeasurementBasis>& bases,
                                      const std::vector<std::size_t>& perm) {
    std::vector<MeasurementBasis> out;
    out.reserve(perm.size());
    for (std::size_t p : perm) out.push_back(bases[p]);
    return out;
}

}  // namespace

double deutsch_bound(double c1, double log_base) {
    if (c1 <= 0.0 || c1 > 1.0) throw OutOfRange("deutsch_bound: c1 must be in (0,1]");
    return -2.0 * logb((1.0 + std::sqrt(c1)) / 2.0, log_base);
}

double maassen_uffink_bound(double c1, double log_base) {
    if (c1 <= 0.0 || c1 > 1.0) throw OutOfRange("maassen_uffink_bound: c1 must be in (0,1]");
    return -logb(c1, log_base);
}

double coles_piani_bound(double c1, double c2, double log_base) {
    if (c1 <= 0.0 || c1 > 1.0) throw OutOfRange("coles_piani_bound: c1 must be in (0,1]");
    if (c2 <= 0.0 || c2 > c1) throw OutOfRange("coles_piani_bound: need 0 < c2 <= c1");
    return -logb(c1, log_base) + 0.5 * (1.0 - std::sqrt(c1)) * logb(c1 / c2, log_base);
}

double liu_b(const std::vector<MeasurementBasis>& bases) {
    const std::size_t n = bases.size();
    if (n < 2) throw TooFewMeasurements("liu_b: need at least 2 measurements");
    const std::size_t d = bases.front().dim();
    const auto o = consecutive_overlaps(bases);

    // v over the running chain index, seeded with the column max of the first
    // overlap matrix, then contracted through the remaining chain.
    std::vector<double> v(d, 0.0);
    for (std::size_t i2 = 0; i2 < d; ++i2)
        for (std::size_t i1 = 0; i1 < d; ++i1) v[i2] = std::max(v[i2], o[0](i1, i2));
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::vector<double> w(d, 0.0);
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) w[y] += v[x] * o[m](x, y);
        v = std::move(w);
    }
    return *std::max_element(v.begin(), v.end());
}

std::pair<double, MeasurementOrder> liu_b_min(const std::vector<MeasurementBasis>& bases) {
    const std::size_t n = bases.size();
    if (n < 2) throw TooFewMeasurements("liu_b_min: need at least 2 measurements");
    if (n > 8) throw TooManyMeasurements("liu_b_min: N! orbit too large for N > 8");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = 0.0;
    MeasurementOrder witness;
    bool first = true;
    do {
        const double b = liu_b(reorder(bases, perm));
        if (first || b < best) {  // strict: keeps the lexicographically first tie
            best = b;
            witness.perm = perm;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, witness};
}

double state_dependent_I(const DensityMatrix& rho, const std::vector<MeasurementBasis>& bases,
                         double log_base) {
    const std::size_t n = bases.size();
    if (n < 2) throw TooFewMeasurements("state_dependent_I: need at least 2 measurements");
    const std::size_t d = bases.front().dim();
    for (const auto& b : bases)
        if (b.dim() != rho.dim()) throw DimensionMismatch("state_dependent_I: dims differ");

    const auto o = consecutive_overlaps(bases);
    const ProbVector p1 = born_probabilities(rho, bases.front());
    const ProbVector pn = born_probabilities(rho, bases.back());

    // Inner sums over i_1..i_{N-1} as a weighted chain contraction.
    std::vector<double> v(d, 0.0);
    for (std::size_t i2 = 0; i2 < d; ++i2)
        for (std::size_t i1 = 0; i1 < d; ++i1) v[i2] += p1[i1] * o[0](i1, i2);
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::vector<double> w(d, 0.0);
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) w[y] += v[x] * o[m](x, y);
        v = std::move(w);
    }

    double acc = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        if (pn[i] <= 1e-12) continue;  // 0 * log 0 convention
        if (v[i] <= 1e-15)
            throw DegenerateChain("state_dependent_I: zero inner sum with positive weight at "
                                  "outcome " +
                                  std::to_string(i));
        acc -= pn[i] * logb(v[i], log_base);
    }
    return acc;
}

double average_I(const DensityMatrix& rho, const std::vector<MeasurementBasis>& bases,
                 AverageMode mode, double log_base) {
    const std::size_t n = bases.size();
    if (n < 2) throw TooFewMeasurements("average_I: need at least 2 measurements");
    if (mode == AverageMode::cyclic) {
        double sum = 0.0;
        std::vector<std::size_t> perm(n);
        for (std::size_t shift = 0; shift < n; ++shift) {
            for (std::size_t i = 0; i < n; ++i) perm[i] = (shift + i) % n;
            sum += state_dependent_I(rho, reorder(bases, perm), log_base);
        }
        return sum / static_cast<double>(n);
    }
    if (n > 6) throw TooManyMeasurements("average_I: full average limited to N <= 6");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double sum = 0.0;
    std::size_t count = 0;
    do {
        sum += state_dependent_I(rho, reorder(bases, perm), log_base);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum / static_cast<double>(count);
}

}  // namespace eub
