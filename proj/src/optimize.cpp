#include "hyphor/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyphor/packing3d.hpp"

namespace hyphor {

namespace {

constexpr double kBfBound = 0.85328;

std::function<double(double)> guarded(const std::function<double(double)>& f) {
    return [&f](double x) {
        double v;
        try {
            v = f(x);
        } catch (const std::exception& e) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            throw std::runtime_error("objective failed at x=" + std::string(buf) +
                                     ": " + e.what());
        }
        if (!std::isfinite(v)) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            throw std::runtime_error("objective non-finite at x=" + std::string(buf));
        }
        return v;
    };
}

std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double a, double b, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {  // ties shrink toward the left
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    const double mid = 0.5 * (a + b);
    return {mid, f(mid)};
}

std::pair<double, double> maximize_phased(const std::function<double(double)>& raw,
                                          const Maximizer1D& m, double phase) {
    if (!(m.lo < m.hi)) throw std::invalid_argument("maximize: needs lo < hi");
    if (m.grid_points < 100)
        throw std::invalid_argument("maximize: needs at least 100 grid points");
    if (!(m.refine_tol > 0.0))
        throw std::invalid_argument("maximize: refine_tol must be positive");
    const auto f = guarded(raw);

    const int n = m.grid_points;
    const double cell = (m.hi - m.lo) / (n - 1);
    std::vector<double> xs(static_cast<size_t>(n));
    std::vector<double> fs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        xs[static_cast<size_t>(i)] = std::min(m.lo + cell * (i + phase), m.hi);
        fs[static_cast<size_t>(i)] = f(xs[static_cast<size_t>(i)]);
    }
    size_t best = 0;
    for (size_t i = 1; i < xs.size(); ++i)
        if (fs[i] > fs[best]) best = i;

    const double blo = xs[best == 0 ? 0 : best - 1];
    const double bhi = xs[best + 1 < xs.size() ? best + 1 : best];
    auto [xr, fr] = (bhi > blo) ? golden_max(f, blo, bhi, m.refine_tol)
                                : std::pair{xs[best], fs[best]};

    // Candidates in ascending x; the first strict improvement wins, so ties
    // resolve toward smaller x and endpoint optima return the endpoint.
    std::vector<std::pair<double, double>> cand = {
        {xs.front(), fs.front()}, {xs[best], fs[best]}, {xr, fr},
        {xs.back(), fs.back()}};
    std::sort(cand.begin(), cand.end());
    std::pair<double, double> out = cand.front();
    for (const auto& c : cand)
        if (c.second > out.second) out = c;
    return out;
}

}  // namespace

std::pair<double, double> maximize(const std::function<double(double)>& f,
                                   const Maximizer1D& m) {
    return maximize_phased(f, m, 0.0);
}

POptResult find_p_opt(double grid_phase) {
    if (!(grid_phase >= 0.0 && grid_phase < 1.0))
        throw std::invalid_argument("find_p_opt: grid_phase must lie in [0, 1)");
    const Maximizer1D m{6.01, 6.99, 1000, 1e-6};
    const auto [p_star, d_star] = maximize_phased(
        [](double p) { return optimize_family_36(p).delta; }, m, grid_phase);
    POptResult r;
    r.p_lo = std::floor(p_star * 100.0) / 100.0;
    r.p_hi = r.p_lo + 0.01;
    r.delta_max = d_star;
    r.p_argmax = p_star;
    r.exceeds_bf_bound = d_star > kBfBound;
    return r;
}

}  // namespace hyphor
