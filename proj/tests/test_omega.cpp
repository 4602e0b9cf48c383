#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "eub/errors.hpp"
#include "eub/majorization.hpp"
#include "eub/omega.hpp"
#include "eub/scenarios.hpp"

using namespace eub;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<MeasurementBasis> mub_pair() {
    auto all = mub_qubit();
    return {all[0], all[1]};
}

std::vector<MeasurementBasis> identical_pair() {
    auto all = mub_qubit();
    return {all[0], all[0]};
}

}  // namespace

TEST_CASE("block gram fundamentals") {
    const auto bases = identical_pair();
    SubsetChoice same{{{0}, {0}}};
    const auto u = block_gram(bases, same);
    REQUIRE(u.rows() == 2);
    CHECK(u(0, 0).real() == doctest::Approx(1.0));
    CHECK(u(0, 1).real() == doctest::Approx(1.0));
    CHECK(u(1, 0).real() == doctest::Approx(1.0));
    CHECK(u(1, 1).real() == doctest::Approx(1.0));

    const auto mub = mub_pair();
    const auto u2 = block_gram(mub, same);
    CHECK(std::abs(u2(0, 1)) == doctest::Approx(kInvSqrt2));
    CHECK(top_eigenvalue(u2) == doctest::Approx(1.0 + kInvSqrt2));

    SubsetChoice bad{{{0, 0}, {0}}};
    CHECK_THROWS_AS(block_gram(mub, bad), InvalidChoice);
}

TEST_CASE("block gram with cross-orthogonal vectors is identity") {
    // Three bases of C^3 sharing |2> in different slots so all the chosen
    // vectors are mutually orthogonal.
    MeasurementBasis b1({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    MeasurementBasis b2({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    MeasurementBasis b3({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    SubsetChoice c{{{0}, {0}, {0}}};
    const auto u = block_gram({b1, b2, b3}, c);
    CHECK(top_eigenvalue(u) == doctest::Approx(1.0));
}

TEST_CASE("s_k values") {
    // Identical bases: choosing the same vector twice gives perfect overlap.
    CHECK(compute_s_k(identical_pair(), 1) == doctest::Approx(2.0));
    // MUB qubit pair.
    CHECK(compute_s_k(mub_pair(), 1) == doctest::Approx(1.0 + kInvSqrt2));
    // Full-size blocks: lambda_1 = N exactly.
    CHECK(compute_s_k(identical_pair(), 3) == doctest::Approx(2.0));
    CHECK(compute_s_k(mub_pair(), 3) == doctest::Approx(2.0));

    CHECK_THROWS_AS(compute_s_k(mub_pair(), 1, 2), BudgetExceeded);
    try {
        compute_s_k(mub_pair(), 1, 2);
    } catch (const BudgetExceeded& e) {
        CHECK(e.required == 4);
    }
}

TEST_CASE("omega for identical bases collapses to (1)") {
    const auto om = compute_omega(identical_pair());
    REQUIRE(om.omega.size() == 1);
    CHECK(om.omega[0] == doctest::Approx(1.0));
    CHECK(shannon_entropy(om.omega.values()) == doctest::Approx(0.0));
}

TEST_CASE("omega for the MUB qubit pair") {
    const auto om = compute_omega(mub_pair());
    const double omega1 = std::pow((1.0 + kInvSqrt2) / 2.0, 2.0);
    REQUIRE(om.omega.size() == 2);
    CHECK(om.omega[0] == doctest::Approx(omega1).epsilon(1e-9));
    CHECK(om.omega[1] == doctest::Approx(1.0 - omega1).epsilon(1e-9));
    CHECK(om.omega[0] == doctest::Approx(0.72855).epsilon(1e-4));
    CHECK(shannon_entropy(om.omega.values()) == doctest::Approx(0.8435).epsilon(1e-3));
    CHECK(om.a == 1);
}

TEST_CASE("omega_hat equals omega for two measurements") {
    for (int t = 0; t < 10; ++t) {
        const std::size_t d = 2 + t % 2;
        std::vector<MeasurementBasis> bases{random_basis(d, 50 + t), random_basis(d, 150 + t)};
        const auto om = compute_omega(bases);
        const auto omh = compute_omega_hat(bases);
        REQUIRE(om.omega.size() == omh.omega.size());
        for (std::size_t i = 0; i < om.omega.size(); ++i)
            CHECK(om.omega[i] == doctest::Approx(omh.omega[i]).epsilon(1e-9));
    }
}

TEST_CASE("omega_hat for identical bases, k=1") {
    const auto omh = compute_omega_hat(identical_pair());
    CHECK(omh.Omega[0] == doctest::Approx(1.0));
}

TEST_CASE("omega_simple") {
    const auto w0 = omega_simple(mub_pair());
    REQUIRE(w0.size() == 2);
    CHECK(w0[0] == doctest::Approx(0.72855).epsilon(1e-4));

    const auto trivial = omega_simple(identical_pair());
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == doctest::Approx(1.0));
}

TEST_CASE("majorization soundness and singular-value relaxation on random instances") {
    for (int t = 0; t < 40; ++t) {
        const std::size_t d = 2 + t % 2;
        const std::size_t n = 2 + (t / 2) % 2;
        std::vector<MeasurementBasis> bases;
        for (std::size_t m = 0; m < n; ++m) bases.push_back(random_basis(d, 1000 + 10 * t + m));
        const auto rho = random_state(d, 1 + t % d, 2000 + t);

        const auto om = compute_omega(bases);
        const auto omh = compute_omega_hat(bases);

        std::vector<std::vector<double>> ps;
        for (const auto& b : bases) ps.push_back(born_probabilities(rho, b).values());
        const auto joint = tensor_product(ps);

        CHECK(majorizes(om.omega.values(), joint));
        // The consecutive-pair hat relaxation majorizes omega only at N=2,
        // where it degenerates to omega exactly; for N >= 3 it drops the
        // non-adjacent blocks and can dip below the true maximum.
        if (n == 2) CHECK(majorizes(omh.omega.values(), om.omega.values()));
        CHECK(majorizes(omega_simple(bases).values(), om.omega.values()));

        // s_k and Omega_k monotone.
        for (std::size_t k = 1; k < om.s.size(); ++k) {
            CHECK(om.s[k] >= om.s[k - 1]);
            CHECK(om.Omega[k] >= om.Omega[k - 1]);
        }

        double hsum = 0.0;
        for (const auto& p : ps) hsum += shannon_entropy(p);
        const double hw = shannon_entropy(om.omega.values());
        CHECK(hsum >= hw - 1e-9);
        if (n == 2) CHECK(shannon_entropy(omh.omega.values()) == doctest::Approx(hw).epsilon(1e-9));
    }
}

TEST_CASE("N=2 degeneration matches the independent pairwise maximizer") {
    // lambda_1([[I, U], [U^H, I]]) = 1 + sigma_1(U); maximize sigma_1 over
    // subset pairs directly as the independent oracle.
    for (int t = 0; t < 8; ++t) {
        const std::size_t d = 2 + t % 2;
        const auto b1 = random_basis(d, 7000 + t);
        const auto b2 = random_basis(d, 8000 + t);
        const std::vector<MeasurementBasis> bases{b1, b2};
        for (std::size_t k = 1; k <= 2 * d - 1; ++k) {
            double expect = 0.0;
            for (std::size_t s1 = 1; s1 <= d; ++s1) {
                const std::size_t total = k + 1;
                if (total < s1 + 1 || total > s1 + d) continue;
                const std::size_t s2 = total - s1;
                std::vector<bool> m1(d, false), m2init(d, false);
                std::fill(m1.end() - static_cast<long>(s1), m1.end(), true);
                do {
                    std::vector<bool> m2(d, false);
                    std::fill(m2.end() - static_cast<long>(s2), m2.end(), true);
                    do {
                        ComplexMatrix u(s1, s2);
                        std::size_t r = 0;
                        for (std::size_t i = 0; i < d; ++i) {
                            if (!m1[i]) continue;
                            std::size_t c = 0;
                            for (std::size_t j = 0; j < d; ++j) {
                                if (!m2[j]) continue;
                                u(r, c++) = inner_product(b1.vector(i), b2.vector(j));
                            }
                            ++r;
                        }
                        expect = std::max(expect, 1.0 + top_singular_value(u));
                    } while (std::next_permutation(m2.begin(), m2.end()));
                } while (std::next_permutation(m1.begin(), m1.end()));
            }
            CHECK(compute_s_k(bases, k) == doctest::Approx(expect).epsilon(1e-9));
        }
    }
}
