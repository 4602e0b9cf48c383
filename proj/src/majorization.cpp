#include "eub/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eub/errors.hpp"

namespace eub {

namespace {
constexpr double kSumTol = 1e-10;

double check_normalized(const std::vector<double>& v, const char* who) {
    const double s = std::accumulate(v.begin(), v.end(), 0.0);
    if (std::abs(s - 1.0) > kSumTol) throw NotNormalized(std::string(who) + ": sum != 1");
    return s;
}
}  // namespace

MajVector::MajVector(std::vector<double> entries) : e_(std::move(entries)) {
    for (double& x : e_) {
        if (x < -1e-12) throw NotNormalized("MajVector: negative entry beyond tolerance");
        if (x < 0.0) x = 0.0;
    }
    check_normalized(e_, "MajVector");
}

bool majorizes(const std::vector<double>& y, const std::vector<double>& x, double slack) {
    check_normalized(y, "majorizes(y)");
    check_normalized(x, "majorizes(x)");
    const std::size_t n = std::max(x.size(), y.size());
    std::vector<double> xs(n, 0.0), ys(n, 0.0);
    std::copy(x.begin(), x.end(), xs.begin());
    std::copy(y.begin(), y.end(), ys.begin());
    std::sort(xs.begin(), xs.end(), std::greater<double>());
    std::sort(ys.begin(), ys.end(), std::greater<double>());
    double px = 0.0, py = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        px += xs[k];
        py += ys[k];
        if (px > py + slack) return false;
    }
    return true;
}

std::vector<double> tensor_product(const std::vector<std::vector<double>>& ps) {
    std::vector<double> out{1.0};
    for (const auto& p : ps) {
        std::vector<double> next;
        next.reserve(out.size() * p.size());
        for (double a : out)
            for (double b : p) next.push_back(a * b);
        out = std::move(next);
    }
    return out;
}

double shannon_entropy(const std::vector<double>& p, double log_base) {
    double h = 0.0;
    for (double x : p)
        if (x > 0.0) h -= x * std::log(x);
    return h / std::log(log_base);
}

double renyi_entropy(const std::vector<double>& p, double alpha, double log_base) {
    if (alpha < 0.0) throw BadOrder("renyi_entropy: alpha < 0");
    if (alpha == 1.0) throw BadOrder("renyi_entropy: alpha == 1, use shannon_entropy");
    double s = 0.0;
    for (double x : p)
        if (x > 0.0) s += std::pow(x, alpha);
    return std::log(s) / ((1.0 - alpha) * std::log(log_base));
}

double tsallis_entropy(const std::vector<double>& p, double q) {
    if (q <= 0.0) throw BadOrder("tsallis_entropy: q <= 0");
    if (q == 1.0) throw BadOrder("tsallis_entropy: q == 1, use shannon_entropy");
    double s = 0.0;
    for (double x : p)
        if (x > 0.0) s += std::pow(x, q);
    return (1.0 - s) / (q - 1.0);
}

double omega_dot_decreasing(const MajVector& omega, const std::vector<double>& a) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] + 1e-12 < a[i + 1]) throw NotSorted("omega_dot_decreasing: a not nonincreasing");
    double s = 0.0;
    const std::size_t n = std::min(omega.size(), a.size());
    for (std::size_t i = 0; i < n; ++i) s += omega[i] * a[i];
    // Entries of omega past a's length pair with implicit zeros of a only if a
    // is genuinely shorter; the callers always pass a of full length.
    return s;
}

}  // namespace eub
