#include "hyphor/balls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hyphor {

namespace {

// Quadratic form whose zero set is the horosphere of parameter s, on
// representatives scaled to x0 = 1.
double horosphere_residual(const LorentzVector& x, double s) {
    const int n = x.dim;
    const double d = x[0] - x[n];
    return (s - 1.0) * bilinear_form(x, x) - (1.0 + s) * d * d;
}

bool is_horo_center(const LorentzVector& a0) {
    LorentzVector c;
    c.dim = a0.dim;
    c[0] = 1.0;
    c[a0.dim] = 1.0;
    return projectively_equal(a0, c, 1e-12);
}

// Distance from a Proper point (normalized, inside the ball) to the
// truncation plane x_n = 0, signed by the side the point lies on.
double signed_dist_to_plane(const LorentzVector& x) {
    double r2 = 0.0;
    for (int i = 1; i <= x.dim; ++i) r2 += x[i] * x[i];
    return std::asinh(x[x.dim] / std::sqrt(1.0 - r2));
}

}  // namespace

double horo_param_through(const LorentzVector& point) {
    const int n = point.dim;
    if (point[0] == 0.0)
        throw std::invalid_argument("horo_param_through: point at infinity");
    const LorentzVector p = point.normalized();
    double r2 = 0.0;
    for (int i = 1; i <= n; ++i) r2 += p[i] * p[i];
    if (r2 >= 1.0)
        throw std::invalid_argument("horo_param_through: point outside the open model ball");
    double rho2 = 0.0;
    for (int i = 1; i < n; ++i) rho2 += p[i] * p[i];
    const double hn = p[n];
    const double den = 4.0 - 2.0 * rho2 - 4.0 * hn;
    if (std::fabs(den) < 1e-300)
        throw std::domain_error("horo_param_through: point at the ideal center");
    return (1.0 - 2.0 * rho2 - (2.0 * hn - 1.0) * (2.0 * hn - 1.0)) / den;
}

LorentzVector edge_horosphere_intersection(const LorentzVector& a0,
                                           const LorentzVector& b, double s) {
    if (!(s > -1.0 && s < 1.0))
        throw std::invalid_argument("edge_horosphere_intersection: s outside (-1, 1)");
    if (!is_horo_center(a0))
        throw std::invalid_argument(
            "edge_horosphere_intersection: segment must start at the ideal center");
    const int n = a0.dim;
    LorentzVector a;
    a.dim = n;
    a[0] = 1.0;
    a[n] = 1.0;
    const LorentzVector bb = b.normalized();

    const double ab = bilinear_form(a, bb);
    const double b2 = bilinear_form(bb, bb);
    const double d = bb[0] - bb[n];
    const double denom = (s - 1.0) * (b2 - 2.0 * ab) - (1.0 + s) * d * d;
    if (std::fabs(denom) < 1e-300)
        throw std::domain_error("edge_horosphere_intersection: degenerate segment");
    const double t_raw = -2.0 * (s - 1.0) * ab / denom;
    // Near-degenerate schemes can land a far-endpoint crossing a hair past
    // t = 1 through rounding; accept a small overshoot and clamp.
    if (!(t_raw > 0.0 && t_raw <= 1.0 + 1e-9))
        throw std::domain_error(
            "edge_horosphere_intersection: crossing not inside the segment");
    const double t = std::min(t_raw, 1.0);

    LorentzVector x;
    x.dim = n;
    for (int i = 0; i <= n; ++i) x[i] = (1.0 - t) * a[i] + t * bb[i];
    x = x.normalized();
    if (std::fabs(horosphere_residual(x, s)) > 1e-12)
        throw std::domain_error("edge_horosphere_intersection: residual too large");
    return x;
}

double horospheric_arc(double chord) {
    if (chord < 0.0) throw std::invalid_argument("horospheric_arc: negative chord");
    return 2.0 * std::sinh(chord / 2.0);
}

double horoball_piece_volume(const FrustumOrthoscheme& f, double s) {
    const LorentzVector x0 = edge_horosphere_intersection(f.A0, f.P0, s);
    const LorentzVector x1 = edge_horosphere_intersection(f.A0, f.A1, s);
    const LorentzVector x2 = edge_horosphere_intersection(f.A0, f.A2, s);
    const double l01 = horospheric_arc(distance(x0, x1));
    const double l02 = horospheric_arc(distance(x0, x2));
    const double l12 = horospheric_arc(distance(x1, x2));
    const double slack = std::min({l01 + l02 - l12, l01 + l12 - l02, l02 + l12 - l01});
    if (slack <= 0.0)
        throw std::domain_error("horoball_piece_volume: arc lengths violate the "
                                "triangle inequality");
    const double sp = 0.5 * (l01 + l02 + l12);
    const double area = std::sqrt(sp * (sp - l01) * (sp - l02) * (sp - l12));
    return area / 2.0;
}

double hyperball_piece_volume(double base, double h, int n) {
    if (base < 0.0) throw std::invalid_argument("hyperball_piece_volume: negative base");
    if (h < 0.0) throw std::invalid_argument("hyperball_piece_volume: negative height");
    if (n == 3) return 0.25 * base * (std::sinh(2.0 * h) + 2.0 * h);
    if (n == 2) return base * std::sinh(h);
    throw std::invalid_argument("hyperball_piece_volume: dimension must be 2 or 3");
}

AdmissibilityReport check_admissibility(const FrustumOrthoscheme& f, double s,
                                        double h) {
    if (!(s > -1.0 && s < 1.0))
        throw std::invalid_argument("check_admissibility: s outside (-1, 1)");
    if (h < 0.0) throw std::invalid_argument("check_admissibility: negative height");

    constexpr double kContainTol = 1e-9;
    constexpr double kGapTol = 1e-8;
    constexpr int kGrid = 100;
    constexpr int kPatchGrid = 140;  // ~1e4 sample points per boundary patch

    auto lerp_point = [](const LorentzVector& a, const LorentzVector& b, double t) {
        LorentzVector r;
        r.dim = a.dim;
        for (int i = 0; i <= a.dim; ++i) r[i] = (1.0 - t) * a[i] + t * b[i];
        return r;
    };

    // Horoball containment: s is largest on the two faces not through A0
    // (the truncation face and the far wall); the ball fits iff its s stays
    // above every sampled face value.
    double face_max = -1.0;
    const LorentzVector p0 = f.P0.normalized(), p1 = f.P1.normalized(),
                        p2 = f.P2.normalized(), a1 = f.A1.normalized(),
                        a2 = f.A2.normalized();
    for (int i = 0; i <= kGrid; ++i) {
        for (int j = 0; j <= kGrid - i; ++j) {
            const double u = double(i) / kGrid, v = double(j) / kGrid;
            const double w = 1.0 - u - v;
            LorentzVector pt;
            pt.dim = 3;
            for (int k = 0; k <= 3; ++k)
                pt[k] = w * p0[k] + u * p1[k] + v * p2[k];
            face_max = std::max(face_max, horo_param_through(pt));
        }
    }
    for (int i = 0; i <= kGrid; ++i) {
        for (int j = 0; j <= kGrid; ++j) {
            const double u = double(i) / kGrid, v = double(j) / kGrid;
            const LorentzVector lo = lerp_point(p1, p2, u);
            const LorentzVector hi = lerp_point(a1, a2, u);
            face_max = std::max(face_max, horo_param_through(lerp_point(lo, hi, v)));
        }
    }
    const double horo_clearance = s - face_max;
    const bool horoball_ok = horo_clearance >= -kContainTol;

    // Hyperball containment: height bounded by the distance from the far
    // base corner to its truncation point, and by the distance from the
    // triangle face A0A1A2 to the truncation plane.
    const double h_corner = distance(f.P2, f.A2);
    double tri_min = std::numeric_limits<double>::infinity();
    const LorentzVector a0 = f.A0.normalized();
    for (int i = 0; i <= kGrid; ++i) {
        for (int j = 0; j <= kGrid - i; ++j) {
            const double u = double(i) / kGrid, v = double(j) / kGrid;
            const double w = 1.0 - u - v;
            LorentzVector pt;
            pt.dim = 3;
            for (int k = 0; k <= 3; ++k)
                pt[k] = w * a0[k] + u * a1[k] + v * a2[k];
            double r2 = 0.0;
            for (int k = 1; k <= 3; ++k) r2 += pt[k] * pt[k];
            if (r2 >= 1.0 - 1e-13) continue;  // ideal corner itself
            tri_min = std::min(tri_min, signed_dist_to_plane(pt));
        }
    }
    const double hyper_clearance = std::min(h_corner - h, tri_min - h);
    const bool hyperball_ok = (h <= h_corner + kContainTol) &&
                              (tri_min - h >= -kContainTol);

    // Disjointness. Exact criterion on the common axis: the horosphere meets
    // the axis at height s, the hyperball surface at tanh(h).
    const double axis_gap = s - std::tanh(h);
    double sample_gap = axis_gap;

    // Horosphere patch inside the frustum: rays from A0 through the opposite
    // boundary triangle {P0, A1, A2}; measure each crossing's distance to
    // the truncation plane against h.
    for (int i = 0; i <= kPatchGrid; ++i) {
        for (int j = 0; j <= kPatchGrid - i; ++j) {
            const double u = double(i) / kPatchGrid, v = double(j) / kPatchGrid;
            const double w = 1.0 - u - v;
            LorentzVector tgt;
            tgt.dim = 3;
            for (int k = 0; k <= 3; ++k)
                tgt[k] = w * p0[k] + u * a1[k] + v * a2[k];
            LorentzVector xp;
            try {
                xp = edge_horosphere_intersection(f.A0, tgt, s);
            } catch (const std::domain_error&) {
                continue;  // crossing beyond this chord, outside the frustum
            }
            sample_gap = std::min(sample_gap, signed_dist_to_plane(xp) - h);
        }
    }

    // Hyperball surface patch over the base triangle: compare the horosphere
    // parameter of each surface point against s.
    const double th = std::tanh(h);
    for (int i = 0; i <= kPatchGrid; ++i) {
        for (int j = 0; j <= kPatchGrid - i; ++j) {
            const double u = double(i) / kPatchGrid, v = double(j) / kPatchGrid;
            const double w = 1.0 - u - v;
            const double u1 = w * p0[1] + u * p1[1] + v * p2[1];
            const double u2 = w * p0[2] + u * p1[2] + v * p2[2];
            const double rad = 1.0 - u1 * u1 - u2 * u2;
            if (rad <= 0.0) continue;
            const LorentzVector sp =
                LorentzVector::d3(1.0, u1, u2, th * std::sqrt(rad));
            sample_gap = std::min(sample_gap, s - horo_param_through(sp));
        }
    }
    const bool disjoint = (axis_gap >= -kContainTol) && (sample_gap >= -kGapTol);

    AdmissibilityReport rep;
    rep.horoball_ok = horoball_ok;
    rep.hyperball_ok = hyperball_ok;
    rep.disjoint = disjoint;
    rep.min_clearances = {horo_clearance, hyper_clearance,
                          std::min(axis_gap, sample_gap)};
    return rep;
}

}  // namespace hyphor
