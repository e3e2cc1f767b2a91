#pragma once

// Independent numeric oracles used by the tests: quadrature, Monte Carlo
// volume estimators in upper-half-space coordinates, and elementary
// triangle/packing reconstructions that avoid the library's own formulas.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hyphor/balls.hpp"
#include "hyphor/lorentz.hpp"
#include "hyphor/orthoscheme.hpp"
#include "hyphor/packing2d.hpp"

namespace support {

// ---------------------------------------------------------------- quadrature

inline double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-13) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// L(x) rebuilt from its definition: the log-sine integral is split into a
// closed part and the smooth remainder ln(sin t / t).
inline double lobachevsky_oracle(double x) {
    const double pi = std::numbers::pi;
    const double r = std::remainder(x, pi);
    const double a = std::fabs(r);
    if (a == 0.0) return 0.0;
    auto g = [](double t) {
        if (t < 1e-150) return 0.0;
        return std::log(std::sin(t) / t);
    };
    const double smooth = integrate(g, 0.0, a, 1e-14);
    return std::copysign(a - a * std::log(2.0 * a) - smooth, r);
}

// ---------------------------------------------------------- triangle oracle

// Angle sum reconstructed solely from side lengths via the hyperbolic law
// of cosines.
inline double triangle_area_oracle(const hyphor::LorentzVector& a,
                                   const hyphor::LorentzVector& b,
                                   const hyphor::LorentzVector& c) {
    const double la = hyphor::distance(b, c);
    const double lb = hyphor::distance(a, c);
    const double lc = hyphor::distance(a, b);
    auto ang = [](double opp, double s1, double s2) {
        const double cs = (std::cosh(s1) * std::cosh(s2) - std::cosh(opp)) /
                          (std::sinh(s1) * std::sinh(s2));
        return std::acos(std::clamp(cs, -1.0, 1.0));
    };
    return std::numbers::pi - ang(la, lb, lc) - ang(lb, la, lc) - ang(lc, la, lb);
}

// ------------------------------------------------- upper half-space mapping

// Isometry sending the horoball center (1,0,0,1) to infinity:
// xi_i = x_i / (1 - x_3), w = sqrt(1 - |x|^2) / (1 - x_3) for a point of the
// open ball given in affine coordinates.
struct HalfSpacePoint {
    double xi1 = 0, xi2 = 0, w = 0;
};

inline HalfSpacePoint to_halfspace(const hyphor::LorentzVector& v) {
    const hyphor::LorentzVector p = v.normalized();
    const double r2 = p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
    const double den = 1.0 - p[3];
    return {p[1] / den, p[2] / den, std::sqrt(std::max(1.0 - r2, 0.0)) / den};
}

// A plane avoiding the center maps to a hemisphere centered on the boundary
// plane; returns (c1, c2, R^2).
struct Hemisphere {
    double c1 = 0, c2 = 0, r2 = 0;
};

inline Hemisphere hemisphere_of(const hyphor::HyperplaneForm& u) {
    const double a = u.u[0] + u.u[3];
    if (std::fabs(a) < 1e-14)
        throw std::invalid_argument("plane passes through the mapped center");
    const double c1 = -u.u[1] / a;
    const double c2 = -u.u[2] / a;
    return {c1, c2, c1 * c1 + c2 * c2 - (u.u[0] - u.u[3]) / a};
}

// ------------------------------------------------------------- Monte Carlo

struct McEstimate {
    double value = 0;
    double se = 0;
};

namespace detail {

struct CuspGeometry {
    std::array<double, 2> q0, q1, q2;  // cross-section triangle
    Hemisphere bottom_a, bottom_b;     // truncation plane and far wall
    double lo1, hi1, lo2, hi2;         // bounding box
};

inline CuspGeometry cusp_geometry(const hyphor::FrustumOrthoscheme& f) {
    CuspGeometry g;
    auto xi = [](const hyphor::LorentzVector& v) {
        const HalfSpacePoint h = to_halfspace(v);
        return std::array<double, 2>{h.xi1, h.xi2};
    };
    g.q0 = xi(f.P0);
    g.q1 = xi(f.A1);
    g.q2 = xi(f.A2);
    g.bottom_a = hemisphere_of(f.face_pi);
    g.bottom_b = hemisphere_of(f.face_A1A2P2P1);
    g.lo1 = std::min({g.q0[0], g.q1[0], g.q2[0]});
    g.hi1 = std::max({g.q0[0], g.q1[0], g.q2[0]});
    g.lo2 = std::min({g.q0[1], g.q1[1], g.q2[1]});
    g.hi2 = std::max({g.q0[1], g.q1[1], g.q2[1]});
    return g;
}

inline bool in_triangle(const CuspGeometry& g, double x, double y) {
    const double d1x = g.q1[0] - g.q0[0], d1y = g.q1[1] - g.q0[1];
    const double d2x = g.q2[0] - g.q0[0], d2y = g.q2[1] - g.q0[1];
    const double det = d1x * d2y - d1y * d2x;
    const double px = x - g.q0[0], py = y - g.q0[1];
    const double al = (px * d2y - py * d2x) / det;
    const double be = (d1x * py - d1y * px) / det;
    return al >= 0.0 && be >= 0.0 && al + be <= 1.0;
}

inline double bottom_height(const CuspGeometry& g, double x, double y) {
    auto h = [&](const Hemisphere& s) {
        const double dx = x - s.c1, dy = y - s.c2;
        return std::sqrt(std::max(s.r2 - dx * dx - dy * dy, 0.0));
    };
    return std::max(h(g.bottom_a), h(g.bottom_b));
}

// Integrates dxi / (2 * floor(xi)^2) over the cusp triangle by rejection in
// the bounding box; floor is the larger of the face height and a cutoff w0
// (0 for the full frustum, the horosphere height for the horoball piece).
inline McEstimate cusp_integral(const hyphor::FrustumOrthoscheme& f, double w0,
                                long samples, std::uint64_t seed) {
    const CuspGeometry g = cusp_geometry(f);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u1(g.lo1, g.hi1), u2(g.lo2, g.hi2);
    double sum = 0.0, sum2 = 0.0;
    for (long i = 0; i < samples; ++i) {
        const double x = u1(rng), y = u2(rng);
        double v = 0.0;
        if (in_triangle(g, x, y)) {
            const double b = std::max(bottom_height(g, x, y), w0);
            v = 0.5 / (b * b);
        }
        sum += v;
        sum2 += v * v;
    }
    const double box = (g.hi1 - g.lo1) * (g.hi2 - g.lo2);
    const double mean = sum / double(samples);
    const double var = std::max(sum2 / double(samples) - mean * mean, 0.0);
    return {box * mean, box * std::sqrt(var / double(samples))};
}

}  // namespace detail

// Volume of the frustum itself.
inline McEstimate mc_frustum_volume(const hyphor::FrustumOrthoscheme& f,
                                    long samples, std::uint64_t seed) {
    return detail::cusp_integral(f, 0.0, samples, seed);
}

// Volume of the horoball piece: same integral with the floor raised to the
// horosphere height w0 = sqrt((1+s)/(1-s)).
inline McEstimate mc_horoball_piece(const hyphor::FrustumOrthoscheme& f,
                                    double s, long samples, std::uint64_t seed) {
    const double w0 = std::sqrt((1.0 + s) / (1.0 - s));
    return detail::cusp_integral(f, w0, samples, seed);
}

// Volume of the hyperball piece by direct sampling of the model-ball density
// (1 - |x|^2)^{-2} over a bounding box of the piece (a bounded region, so
// the naive estimator has finite variance here).
inline McEstimate mc_hyperball_piece(const hyphor::FrustumOrthoscheme& f,
                                     double h, long samples, std::uint64_t seed) {
    const double th = std::tanh(h);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> du1(0.0, f.x), du2(0.0, f.y),
        du3(0.0, th);
    double sum = 0.0, sum2 = 0.0;
    for (long i = 0; i < samples; ++i) {
        const double u1 = du1(rng), u2 = du2(rng), u3 = du3(rng);
        double v = 0.0;
        const double rho2 = u1 * u1 + u2 * u2;
        if (rho2 + u3 * u3 < 1.0 && f.y * u1 - f.x * u2 >= 0.0 &&
            u3 <= th * std::sqrt(1.0 - rho2)) {
            const hyphor::LorentzVector pt = hyphor::LorentzVector::d3(1, u1, u2, u3);
            if (f.face_A0A1A2(pt) >= 0.0) {
                const double q = 1.0 - rho2 - u3 * u3;
                v = 1.0 / (q * q);
            }
        }
        sum += v;
        sum2 += v * v;
    }
    const double box = f.x * f.y * th;
    const double mean = sum / double(samples);
    const double var = std::max(sum2 / double(samples) - mean * mean, 0.0);
    return {box * mean, box * std::sqrt(var / double(samples))};
}

// ------------------------------------------------------------- planar oracle

// Planar density rebuilt from geometric primitives: the horocyclic arc is
// measured between actual crossings of the quadrilateral sides, the strip
// term from the axis height.
inline double planar_density_oracle(double a, double y) {
    const hyphor::PlaneTiling t = hyphor::build_tiling(a);
    const double s = hyphor::horo_param_through(hyphor::LorentzVector::d2(1, 0, y));
    const hyphor::LorentzVector x1 =
        hyphor::edge_horosphere_intersection(t.A0, t.A1, s);
    const hyphor::LorentzVector x2 =
        hyphor::edge_horosphere_intersection(t.A0, t.P0, s);
    const double arc = hyphor::horospheric_arc(hyphor::distance(x1, x2));
    const double strip =
        (y > 0.0) ? hyphor::hyperball_piece_volume(a, std::atanh(y), 2) : 0.0;
    return (arc + strip) / hyphor::lambert_area();
}

}  // namespace support
