#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eub/errors.hpp"
#include "eub/majorization.hpp"
#include "eub/scenarios.hpp"

using namespace eub;

namespace {

std::vector<double> random_distribution(std::size_t n, SplitMix64& rng) {
    std::vector<double> p(n);
    double s = 0.0;
    for (double& x : p) {
        x = -std::log(std::max(rng.uniform(), 1e-300));
        s += x;
    }
    for (double& x : p) x /= s;
    return p;
}

std::vector<double> random_majorized_by(const std::vector<double>& y, SplitMix64& rng) {
    const std::size_t n = y.size();
    std::vector<double> x(n, 0.0);
    const std::size_t mixes = 3;
    const auto w = random_distribution(mixes, rng);
    for (std::size_t t = 0; t < mixes; ++t) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.next_u64() % i]);
        for (std::size_t i = 0; i < n; ++i) x[i] += w[t] * y[perm[i]];
    }
    return x;
}

}  // namespace

TEST_CASE("majorizes basics") {
    CHECK(majorizes({0.7, 0.3}, {0.5, 0.5}));
    CHECK_FALSE(majorizes({0.5, 0.5}, {0.7, 0.3}));
    CHECK(majorizes({0.6, 0.4}, {0.6, 0.4}));
    CHECK(majorizes({1.0}, {0.5, 0.3, 0.2}));  // zero padding
    CHECK_THROWS_AS(majorizes({0.6, 0.6}, {0.5, 0.5}), NotNormalized);
}

TEST_CASE("tensor product") {
    const auto a = tensor_product({{0.5, 0.5}, {1.0, 0.0}});
    REQUIRE(a.size() == 4);
    CHECK(a[0] == doctest::Approx(0.5));
    CHECK(a[1] == doctest::Approx(0.0));
    CHECK(a[2] == doctest::Approx(0.5));
    CHECK(a[3] == doctest::Approx(0.0));

    const auto b = tensor_product({{1.0}, {0.3, 0.7}});
    CHECK(b[0] == doctest::Approx(0.3));
    CHECK(b[1] == doctest::Approx(0.7));

    const auto c = tensor_product({{0.6, 0.4}, {0.7, 0.3}});
    CHECK(c[0] == doctest::Approx(0.42));
    CHECK(c[1] == doctest::Approx(0.18));
    CHECK(c[2] == doctest::Approx(0.28));
    CHECK(c[3] == doctest::Approx(0.12));
}

TEST_CASE("entropy family values") {
    CHECK(shannon_entropy({1.0, 0.0}) == doctest::Approx(0.0));
    CHECK(shannon_entropy({0.5, 0.5}) == doctest::Approx(1.0));
    CHECK(shannon_entropy({0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0));

    CHECK(renyi_entropy({0.25, 0.25, 0.25, 0.25}, 2.0) == doctest::Approx(2.0));
    CHECK(renyi_entropy({0.2, 0.2, 0.2, 0.2, 0.2}, 0.5) == doctest::Approx(std::log2(5.0)));
    CHECK(renyi_entropy({1.0, 0.0}, 2.0) == doctest::Approx(0.0));
    CHECK(renyi_entropy({0.75, 0.25}, 2.0) == doctest::Approx(-std::log2(0.625)));
    CHECK_THROWS_AS(renyi_entropy({0.5, 0.5}, -1.0), BadOrder);

    CHECK(tsallis_entropy({1.0, 0.0}, 2.0) == doctest::Approx(0.0));
    CHECK(tsallis_entropy({0.5, 0.5}, 2.0) == doctest::Approx(0.5));
    CHECK(tsallis_entropy({0.25, 0.25, 0.25, 0.25}, 2.0) == doctest::Approx(1.0 - 0.25));
    CHECK_THROWS_AS(tsallis_entropy({0.5, 0.5}, 0.0), BadOrder);
}

TEST_CASE("Schur concavity over generated comparable pairs") {
    SplitMix64 rng(21);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 2 + rng.next_u64() % 6;
        const auto y = random_distribution(n, rng);
        const auto x = random_majorized_by(y, rng);
        REQUIRE(majorizes(y, x));
        CHECK(shannon_entropy(x) >= shannon_entropy(y) - 1e-9);
        CHECK(renyi_entropy(x, 0.5) >= renyi_entropy(y, 0.5) - 1e-9);
        CHECK(renyi_entropy(x, 3.0) >= renyi_entropy(y, 3.0) - 1e-9);
        CHECK(tsallis_entropy(x, 2.0) >= tsallis_entropy(y, 2.0) - 1e-9);
    }
}

TEST_CASE("entropy additivity under tensor product") {
    SplitMix64 rng(22);
    for (int t = 0; t < 100; ++t) {
        const auto p = random_distribution(2 + rng.next_u64() % 4, rng);
        const auto q = random_distribution(2 + rng.next_u64() % 4, rng);
        const auto pq = tensor_product({p, q});
        CHECK(std::accumulate(pq.begin(), pq.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(shannon_entropy(pq) ==
              doctest::Approx(shannon_entropy(p) + shannon_entropy(q)).epsilon(1e-9));
    }
}

TEST_CASE("omega_dot_decreasing") {
    CHECK(omega_dot_decreasing(MajVector({1.0}), {3.5}) == doctest::Approx(3.5));
    CHECK(omega_dot_decreasing(MajVector({0.7, 0.3}), {2.0, 1.0}) == doctest::Approx(1.7));
    CHECK_THROWS_AS(omega_dot_decreasing(MajVector({0.7, 0.3}), {1.0, 2.0}), NotSorted);
}

TEST_CASE("Abel summation contract") {
    SplitMix64 rng(23);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 2 + rng.next_u64() % 6;
        auto w = random_distribution(n, rng);
        // Sorted base vector: its prefix sums then dominate the top-k sums of
        // anything it majorizes, which is what the Abel bound consumes.
        std::sort(w.begin(), w.end(), std::greater<double>());
        const MajVector omega(w);
        auto x = random_majorized_by(w, rng);
        std::vector<double> a(n);
        for (double& v : a) v = rng.gauss();
        std::sort(a.begin(), a.end(), std::greater<double>());
        std::sort(x.begin(), x.end(), std::greater<double>());
        double brute = 0.0;
        for (std::size_t i = 0; i < n; ++i) brute += x[i] * a[i];
        CHECK(brute <= omega_dot_decreasing(omega, a) + 1e-9);
    }
}
