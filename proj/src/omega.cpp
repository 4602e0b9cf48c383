#include "eub/omega.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "eub/errors.hpp"

namespace eub {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// All compositions (S_1..S_N) with S_m in [1,d] and sum == total.
void compositions(std::size_t n, std::size_t d, std::size_t total,
                  std::vector<std::size_t>& cur,
                  const std::function<void(const std::vector<std::size_t>&)>& cb) {
    if (cur.size() == n) {
        if (total == 0) cb(cur);
        return;
    }
    const std::size_t remaining_slots = n - cur.size() - 1;
    for (std::size_t s = 1; s <= d; ++s) {
        if (s > total) break;
        if (total - s < remaining_slots || total - s > remaining_slots * d) continue;
        cur.push_back(s);
        compositions(n, d, total - s, cur, cb);
        cur.pop_back();
    }
}

// Iterate all strictly increasing index subsets of size s from [0,d).
void subsets(std::size_t d, std::size_t s,
             const std::function<void(const std::vector<std::size_t>&)>& cb) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        cb(idx);
        // next combination
        std::size_t i = s;
        while (i > 0) {
            --i;
            if (idx[i] != i + d - s) break;
            if (i == 0) return;
        }
        if (idx[i] == i + d - s) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Shared enumeration of the constrained maximum over block sizes and index
// subsets behind both s_k variants; returns the number
// of choices visited and calls `eval` on each.
std::size_t enumerate_choices(const std::vector<MeasurementBasis>& bases, std::size_t k,
                              std::size_t budget,
                              const std::function<void(const SubsetChoice&)>& eval) {
    const std::size_t n = bases.size();
    const std::size_t d = bases.front().dim();
    const std::size_t total = k + n - 1;

    std::size_t required = 0;
    std::vector<std::size_t> cur;
    compositions(n, d, total, cur, [&](const std::vector<std::size_t>& sizes) {
        std::size_t prod = 1;
        for (std::size_t m = 0; m < n; ++m) prod *= binomial(d, sizes[m]);
        required += prod;
    });
    if (required == 0) throw InvalidChoice("compute_s_k: no valid size composition for this k");
    if (required > budget)
        throw BudgetExceeded("compute_s_k: enumeration of " + std::to_string(required) +
                                 " choices exceeds budget " + std::to_string(budget),
                             required);

    std::size_t visited = 0;
    compositions(n, d, total, cur, [&](const std::vector<std::size_t>& sizes) {
        SubsetChoice choice;
        choice.indices.resize(n);
        std::function<void(std::size_t)> rec = [&](std::size_t m) {
            if (m == n) {
                ++visited;
                eval(choice);
                return;
            }
            subsets(d, sizes[m], [&](const std::vector<std::size_t>& idx) {
                choice.indices[m] = idx;
                rec(m + 1);
            });
        };
        rec(0);
    });
    return visited;
}

void validate(const std::vector<MeasurementBasis>& bases, const SubsetChoice& choice) {
    const std::size_t d = bases.front().dim();
    if (choice.indices.size() != bases.size())
        throw InvalidChoice("SubsetChoice: one subset per measurement required");
    for (const auto& idx : choice.indices) {
        if (idx.empty() || idx.size() > d) throw InvalidChoice("SubsetChoice: bad subset size");
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= d) throw InvalidChoice("SubsetChoice: index out of range");
            if (i > 0 && idx[i] <= idx[i - 1])
                throw InvalidChoice("SubsetChoice: indices not strictly increasing");
        }
    }
}

// Inner-product block between the chosen subsets of two bases.
ComplexMatrix pair_block(const MeasurementBasis& a, const std::vector<std::size_t>& ia,
                         const MeasurementBasis& b, const std::vector<std::size_t>& ib) {
    ComplexMatrix blk(ia.size(), ib.size());
    for (std::size_t x = 0; x < ia.size(); ++x)
        for (std::size_t y = 0; y < ib.size(); ++y)
            blk(x, y) = inner_product(a.vector(ia[x]), b.vector(ib[y]));
    return blk;
}

OmegaResult assemble_omega(const std::vector<MeasurementBasis>& bases, std::size_t budget,
                           const std::function<double(const SubsetChoice&)>& value) {
    const std::size_t n = bases.size();
    const std::size_t d = bases.front().dim();
    if (n < 2) throw TooFewMeasurements("compute_omega: need at least 2 measurements");
    for (const auto& b : bases)
        if (b.dim() != d) throw DimensionMismatch("compute_omega: bases of unequal dimension");

    std::vector<double> s_list, Omega_list;
    std::size_t total_count = 0;
    const std::size_t k_max = n * (d - 1) + 1;
    double s_prev = 0.0;
    for (std::size_t k = 1; k <= k_max; ++k) {
        double best = 0.0;
        total_count += enumerate_choices(bases, k, budget, [&](const SubsetChoice& c) {
            best = std::max(best, value(c));
        });
        // The defining max over a superset cannot decrease; absorb jitter.
        const double s = std::max(best, s_prev);
        s_prev = s;
        double Omega = std::pow(s / static_cast<double>(n), static_cast<double>(n));
        if (!Omega_list.empty()) Omega = std::max(Omega, Omega_list.back());
        if (Omega >= 1.0 - 1e-12) Omega = 1.0;
        s_list.push_back(s);
        Omega_list.push_back(Omega);
        if (Omega == 1.0) break;
    }
    if (Omega_list.back() != 1.0) Omega_list.back() = 1.0;  // full-size choice gives s = N

    std::vector<double> entries;
    entries.reserve(Omega_list.size());
    entries.push_back(Omega_list.front());
    for (std::size_t i = 1; i < Omega_list.size(); ++i)
        entries.push_back(Omega_list[i] - Omega_list[i - 1]);
    for (double& e : entries)
        if (e < 0.0 && e > -1e-12) e = 0.0;

    OmegaResult res{std::move(s_list), std::move(Omega_list), MajVector(std::move(entries)),
                    0, total_count};
    res.a = res.Omega.size() - 1;
    return res;
}

}  // namespace

ComplexMatrix block_gram(const std::vector<MeasurementBasis>& bases, const SubsetChoice& choice) {
    validate(bases, choice);
    const std::size_t n = bases.size();
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t m = 0; m < n; ++m) offset[m + 1] = offset[m] + choice.indices[m].size();
    ComplexMatrix u(offset[n], offset[n]);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t x = 0; x < choice.indices[m].size(); ++x)
            u(offset[m] + x, offset[m] + x) = 1.0;
        for (std::size_t mm = m + 1; mm < n; ++mm) {
            const ComplexMatrix blk =
                pair_block(bases[m], choice.indices[m], bases[mm], choice.indices[mm]);
            for (std::size_t x = 0; x < blk.rows(); ++x)
                for (std::size_t y = 0; y < blk.cols(); ++y) {
                    u(offset[m] + x, offset[mm] + y) = blk(x, y);
                    u(offset[mm] + y, offset[m] + x) = std::conj(blk(x, y));
                }
        }
    }
    return u;
}

double compute_s_k(const std::vector<MeasurementBasis>& bases, std::size_t k, std::size_t budget,
                   std::size_t* count) {
    if (k < 1) throw OutOfRange("compute_s_k: k must be >= 1");
    double best = 0.0;
    const std::size_t visited = enumerate_choices(bases, k, budget, [&](const SubsetChoice& c) {
        best = std::max(best, top_eigenvalue(block_gram(bases, c)));
    });
    if (count) *count = visited;
    return best;
}

OmegaResult compute_omega(const std::vector<MeasurementBasis>& bases, std::size_t budget) {
    return assemble_omega(bases, budget, [&](const SubsetChoice& c) {
        return top_eigenvalue(block_gram(bases, c));
    });
}

OmegaResult compute_omega_hat(const std::vector<MeasurementBasis>& bases, std::size_t budget) {
    return assemble_omega(bases, budget, [&](const SubsetChoice& c) {
        double s = 1.0;
        for (std::size_t m = 0; m + 1 < bases.size(); ++m)
            s += top_singular_value(
                pair_block(bases[m], c.indices[m], bases[m + 1], c.indices[m + 1]));
        return s;
    });
}

MajVector omega_simple(const std::vector<MeasurementBasis>& bases, std::size_t budget) {
    const std::size_t n = bases.size();
    if (n < 2) throw TooFewMeasurements("omega_simple: need at least 2 measurements");
    const double s1 = compute_s_k(bases, 1, budget);
    double Omega1 = std::pow(s1 / static_cast<double>(n), static_cast<double>(n));
    if (Omega1 >= 1.0 - 1e-12) Omega1 = 1.0;
    std::vector<double> entries{Omega1};
    if (Omega1 < 1.0) entries.push_back(1.0 - Omega1);
    return MajVector(std::move(entries));
}

}  // namespace eub
