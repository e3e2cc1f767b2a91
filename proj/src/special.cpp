#include "hyphor/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyphor {

namespace {

constexpr int kMaxZeta = 48;

// zeta(2m) for m = 1..kMaxZeta. Closed pi-power forms where the rational
// coefficient is exactly representable; fast direct summation beyond.
const std::array<double, kMaxZeta + 1>& zeta_even() {
    static const std::array<double, kMaxZeta + 1> table = [] {
        std::array<double, kMaxZeta + 1> z{};
        const double pi = std::numbers::pi;
        z[1] = pi * pi / 6.0;
        z[2] = std::pow(pi, 4) / 90.0;
        z[3] = std::pow(pi, 6) / 945.0;
        z[4] = std::pow(pi, 8) / 9450.0;
        z[5] = std::pow(pi, 10) / 93555.0;
        z[6] = 691.0 * std::pow(pi, 12) / 638512875.0;
        for (int m = 7; m <= kMaxZeta; ++m) {
            double s = 1.0;
            for (int k = 2; k <= 64; ++k) s += std::pow(double(k), -2.0 * m);
            z[static_cast<size_t>(m)] = s;
        }
        return z;
    }();
    return table;
}

}  // namespace

double LobachevskyEvaluator::operator()(double x) const {
    if (!std::isfinite(x)) throw std::invalid_argument("lobachevsky: non-finite input");
    if (tolerance > 1e-12 || tolerance <= 0.0)
        throw std::invalid_argument("lobachevsky: tolerance must be in (0, 1e-12]");
    const double pi = std::numbers::pi;
    // Exactly odd and pi-periodic reduction to [-pi/2, pi/2].
    const double r = std::remainder(x, pi);
    const double a = std::fabs(r);
    if (a == 0.0) return 0.0;
    const auto& z = zeta_even();
    const double q = (a / pi) * (a / pi);
    double sum = a - a * std::log(2.0 * a);
    double pw = a;
    const int terms = std::min(max_terms, kMaxZeta);
    for (int m = 1; m <= terms; ++m) {
        pw *= q;
        const double term = z[static_cast<size_t>(m)] * pw / (m * (2.0 * m + 1.0));
        sum += term;
        if (term < tolerance * 1e-3) break;
    }
    return std::copysign(sum, r);
}

double lobachevsky(double x) {
    static const LobachevskyEvaluator ev{};
    return ev(x);
}

}  // namespace hyphor
