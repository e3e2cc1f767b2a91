#include "hyphor/packing2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hyphor {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_a(double a, double lo, double hi, const char* who) {
    if (!(a > lo && a < hi))
        throw std::invalid_argument(std::string(who) + ": parameter a out of range");
}

double y_upper(double a) { return std::sqrt(1.0 - a * a); }
double y_lower(double a) { return std::max(1.0 - 2.0 * a * a, 0.0); }

// Shared kernel: density from the cosh argument Q of the horocyclic term
// and the closed hypercycle term. The printed forms of the three densities
// all reduce to delta = (4 sinh(acosh(Q)/2) sqrt(1-y^2) + 2 y a)
//                        / (pi sqrt(1-y^2))
// and sinh(acosh(Q)/2) = sqrt((Q-1)/2).
double density_from(double q_minus_1, double y, double a) {
    if (q_minus_1 < -1e-12)
        throw std::domain_error("density: cosh argument below 1");
    const double horo = 4.0 * std::sqrt(std::max(q_minus_1, 0.0) / 2.0);
    const double s = std::sqrt(1.0 - y * y);
    return (horo * s + 2.0 * y * a) / (std::numbers::pi * s);
}

}  // namespace

PlaneTiling build_tiling(double a) {
    require_a(a, 0.0, 1.0, "build_tiling");
    PlaneTiling t;
    t.a = a;
    t.A0 = LorentzVector::d2(1, 0, 1);
    t.A1 = LorentzVector::d2(1, 0, 0);
    t.P1 = LorentzVector::d2(1, a, 0);
    t.P0 = LorentzVector::d2(1, a, 1.0 - a * a);
    t.A2 = LorentzVector::d2(1, 1.0 / a, 0);
    return t;
}

PlanePacking make_packing(double a, double y) {
    constexpr double tol = 1e-12;
    PlanePacking p;
    p.tiling = build_tiling(a);
    p.y = y;
    const double hi = y_upper(a);
    const double lo = y_lower(a);
    if (std::fabs(y - hi) <= tol) {
        p.kind = PackingKind::Type1;
    } else if (a <= kInvSqrt2 + tol && std::fabs(y - (1.0 - 2.0 * a * a)) <= tol) {
        p.kind = PackingKind::Type2;
    } else if (std::fabs(y) <= tol && a >= kInvSqrt2 - tol) {
        p.kind = PackingKind::HorocycleOnly;
    } else if (y > lo - tol && y < hi + tol && y >= 0.0) {
        p.kind = PackingKind::General;
    } else {
        throw std::invalid_argument("make_packing: (a, y) outside the admissible region");
    }
    return p;
}

double density_type1(double a) {
    require_a(a, 0.0, 1.0, "density_type1");
    // Q = (2 - 2 sqrt(1-a^2) - a^2 + 2 a^4) / (2 a^4), rearranged so the
    // small-a cancellation disappears: Q - 1 = 1 / (2 (1 + sqrt(1-a^2))^2).
    // Here y = sqrt(1-a^2), so the hypercycle term 2ya/sqrt(1-y^2)
    // collapses to 2 sqrt(1-a^2) exactly.
    const double s = std::sqrt(1.0 - a * a);
    const double w = 1.0 + s;
    const double horo = 4.0 * std::sqrt(0.25 / (w * w));
    return (horo + 2.0 * s) / std::numbers::pi;
}

double density_type2(double a) {
    require_a(a, 0.0, kInvSqrt2, "density_type2");
    // Q = -(-3 + 2 a^2) / (2 (1-a^2)), i.e. Q - 1 = 1 / (2 (1-a^2)), and the
    // hypercycle term reduces to (1-2a^2)/sqrt(1-a^2).
    const double one_m = 1.0 - a * a;
    const double horo = 4.0 * std::sqrt(0.25 / one_m);
    return (horo + (1.0 - 2.0 * a * a) / std::sqrt(one_m)) / std::numbers::pi;
}

double density_general(double a, double y) {
    require_a(a, 0.0, 1.0, "density_general");
    constexpr double tol = 1e-12;
    if (y < y_lower(a) - tol || y > y_upper(a) + tol || y < -tol)
        throw std::domain_error("density_general: (a, y) outside the admissible region");
    const double yc = std::clamp(y, 0.0, y_upper(a));
    // Q = -(-1 + 2y - 2a^2 + 2a^2 y^2 - y^2) / (2 a^2 (1-y^2)); the numerator
    // factors as (1-y) ((1-y) + 2a^2 (1+y)), giving the stable form
    // Q - 1 = (1-y) / (2 a^2 (1+y)).
    return density_from((1.0 - yc) / (2.0 * a * a * (1.0 + yc)), yc, a);
}

double density_horocycle_only(double a) {
    if (!(a >= kInvSqrt2 - 1e-12 && a < 1.0))
        throw std::invalid_argument("density_horocycle_only: a out of [1/sqrt(2), 1)");
    return density_general(a, 0.0);
}

ScanReport scan_general(int resolution, double a_lo, double a_hi) {
    if (resolution < 1)
        throw std::invalid_argument("scan_general: resolution must be positive");
    if (!(a_lo > 0.0 && a_hi < 1.0 && a_lo <= a_hi))
        throw std::invalid_argument("scan_general: column range must lie inside (0, 1)");
    const int cols = (a_lo == a_hi) ? 1 : resolution;
    const int rows = resolution;
    ScanReport rep;
    rep.delta_star = -1.0;
    rep.boundary_best = -1.0;
    rep.interior_best = -1.0;
    for (int i = 0; i < cols; ++i) {
        const double a =
            (cols == 1) ? a_lo : a_lo + (a_hi - a_lo) * double(i) / (cols - 1);
        const double lo = y_lower(a);
        const double hi = y_upper(a);
        for (int j = 0; j < rows; ++j) {
            const double y =
                (rows == 1) ? lo : lo + (hi - lo) * double(j) / (rows - 1);
            const double d = density_general(a, y);
            const bool boundary = (j == 0) || (j == rows - 1);
            if (boundary)
                rep.boundary_best = std::max(rep.boundary_best, d);
            else
                rep.interior_best = std::max(rep.interior_best, d);
            if (d > rep.delta_star) {
                rep.delta_star = d;
                rep.a_star = a;
                rep.y_star = y;
                rep.argmax_on_boundary = boundary;
            }
        }
    }
    return rep;
}

ScanReport scan_general(int resolution) {
    if (resolution < 100)
        throw std::invalid_argument("scan_general: region scan needs resolution >= 100");
    const double margin = 1.0 / resolution;
    return scan_general(resolution, margin, 1.0 - margin);
}

}  // namespace hyphor
