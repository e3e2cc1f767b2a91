#include "hyphor/orthoscheme.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hyphor/special.hpp"

namespace hyphor {

namespace {

constexpr double kAngleTol = 1e-10;

double guarded_sqrt(double v, const char* what) {
    if (v < -1e-12)
        throw std::domain_error(std::string("realize: negative radicand for ") + what);
    return std::sqrt(std::max(v, 0.0));
}

bool near(double a, double b, double tol = 1e-9) { return std::fabs(a - b) <= tol; }

}  // namespace

CoxeterScheme build_scheme(double p, double q, double r) {
    if (!(p >= 2.0 && q >= 2.0 && r >= 2.0))
        throw std::invalid_argument("build_scheme: parameters must be >= 2");
    const double pi = std::numbers::pi;
    const double cp = std::cos(pi / p);
    const double cq = std::cos(pi / q);
    const double cr = std::cos(pi / r);

    CoxeterScheme s;
    s.p = p;
    s.q = q;
    s.r = r;
    for (auto& row : s.gram) row.fill(0.0);
    for (int i = 0; i < 4; ++i) s.gram[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;
    s.gram[0][1] = s.gram[1][0] = -cp;
    s.gram[1][2] = s.gram[2][1] = -cq;
    s.gram[2][3] = s.gram[3][2] = -cr;

    // Leading principal minors via the continuant recursion. The first two
    // are always positive, so the matrix has signature (3,1) exactly when
    // the determinant is negative: the minor sign sequence (+,+,+,?,-) has
    // one sign change wherever the third minor falls. (A negative third
    // minor is the frustum case: it makes the last vertex outer.)
    const double d2 = 1.0 - cp * cp;
    const double d3 = d2 - cq * cq;
    const double d4 = d3 - cr * cr * d2;
    // The tolerance keeps Euclidean schemes (determinant zero up to
    // rounding, e.g. (4,3,4)) out.
    if (!(d2 > 0.0 && d4 < -1e-12))
        throw std::invalid_argument(
            "build_scheme: (p,q,r) does not give a hyperbolic scheme");

    Eigen::Matrix4d C;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            C(i, j) = s.gram[static_cast<size_t>(i)][static_cast<size_t>(j)];
    const Eigen::Matrix4d H = C.inverse();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s.hinv[static_cast<size_t>(i)][static_cast<size_t>(j)] = H(i, j);
    return s;
}

LorentzVector truncation_point(const CoxeterScheme& s, int k,
                               const std::array<LorentzVector, 4>& vertices) {
    if (k < 0 || k > 2)
        throw std::invalid_argument("truncation_point: k must be 0, 1 or 2");
    const double h33 = s.hinv[3][3];
    const double hk3 = s.hinv[static_cast<size_t>(k)][3];
    const LorentzVector& ak = vertices[static_cast<size_t>(k)];
    const LorentzVector& a3 = vertices[3];
    if (ak.dim != a3.dim)
        throw std::invalid_argument("truncation_point: dimension mismatch");
    LorentzVector p;
    p.dim = ak.dim;
    for (int i = 0; i <= ak.dim; ++i) p[i] = ak[i] * h33 - a3[i] * hk3;
    return p;
}

FrustumOrthoscheme realize(const CoxeterScheme& s) {
    const auto& h = s.hinv;
    double hmax = 0.0;
    for (const auto& row : h)
        for (double v : row) hmax = std::max(hmax, std::fabs(v));
    if (std::fabs(h[0][0]) > 1e-9 * hmax)
        throw std::invalid_argument("realize: principal vertex A0 is not ideal");
    if (h[3][3] <= 0.0)
        throw std::invalid_argument("realize: vertex A3 is not outer, nothing to truncate");

    const double sq33 = std::sqrt(h[3][3]);
    const double den1 = h[1][3] * h[0][3] - h[0][1] * h[3][3];
    const double den2 = h[2][3] * h[0][3] - h[0][2] * h[3][3];
    if (std::fabs(den1) < 1e-14 * hmax * hmax || std::fabs(den2) < 1e-14 * hmax * hmax)
        throw std::domain_error("realize: degenerate scheme, scale factors blow up");

    const double l1 = h[0][3] * sq33 / den1;
    const double z1 = l1 * h[1][3] / sq33;
    const double x = guarded_sqrt(l1 * l1 * h[1][1] - z1 * z1 + 1.0, "x");
    const double l2 = h[0][3] * sq33 / den2;
    const double z2 = l2 * h[2][3] / sq33;
    const double y = guarded_sqrt(l2 * l2 * h[2][2] - z2 * z2 + 1.0 - x * x, "y");

    FrustumOrthoscheme f;
    f.scheme = s;
    f.x = x;
    f.y = y;
    f.z1 = z1;
    f.z2 = z2;
    f.P0 = LorentzVector::d3(1, 0, 0, 0);
    f.P1 = LorentzVector::d3(1, x, 0, 0);
    f.P2 = LorentzVector::d3(1, x, y, 0);
    f.A0 = LorentzVector::d3(1, 0, 0, 1);
    f.A1 = LorentzVector::d3(1, x, 0, z1);
    f.A2 = LorentzVector::d3(1, x, y, z2);
    f.A3 = LorentzVector::d3(0, 0, 0, 1);

    for (double v : {x, y, z1, z2})
        if (!(v > 0.0 && v < 1.0))
            throw std::domain_error("realize: coordinates left the open model ball");

    f.face_pi = HyperplaneForm{{0, 0, 0, 1}, 3};
    f.face_A0A1P1P0 = HyperplaneForm{{0, 0, 1, 0}, 3};
    f.face_A0A2P2P0 = HyperplaneForm{{0, y, -x, 0}, 3};
    f.face_A1A2P2P1 = HyperplaneForm{{x, -1, 0, 0}, 3};
    f.face_A0A1A2 = plane_through(f.A0, f.A1, f.A2);
    if (f.face_A0A1A2(f.P0) < 0.0)
        for (auto& e : f.face_A0A1A2.u) e = -e;

    const double pi = std::numbers::pi;
    const double ap = plane_angle(f.face_A1A2P2P1, f.face_A0A2P2P0);
    const double aq = plane_angle(f.face_A0A2P2P0, f.face_A0A1P1P0);
    const double ar = plane_angle(f.face_A0A1P1P0, f.face_A0A1A2);
    if (std::fabs(ap - pi / s.p) > kAngleTol || std::fabs(aq - pi / s.q) > kAngleTol ||
        std::fabs(ar - pi / s.r) > kAngleTol)
        throw std::domain_error("realize: dihedral angles failed to close up");
    for (const auto* wall : {&f.face_A1A2P2P1, &f.face_A0A2P2P0, &f.face_A0A1P1P0})
        if (std::fabs(plane_angle(f.face_pi, *wall) - pi / 2) > kAngleTol)
            throw std::domain_error("realize: truncation plane not orthogonal to walls");
    return f;
}

bool realizable_tiling(double p, double q, double r) {
    const double rp = std::round(p);
    if (std::fabs(p - rp) > 1e-9) return false;
    if (near(q, 4) && near(r, 4)) return rp >= 5;
    if (near(q, 6) && near(r, 3)) return rp >= 4;
    if (near(q, 3) && near(r, 6)) return rp >= 7;
    return false;
}

double volume_3d(const CoxeterScheme& s) {
    const bool fam = (near(s.q, 4) && near(s.r, 4)) || (near(s.q, 6) && near(s.r, 3)) ||
                     (near(s.q, 3) && near(s.r, 6));
    if (!fam)
        throw std::invalid_argument(
            "volume_3d: only the (q,r) families (4,4), (6,3), (3,6) are supported");
    const double pi = std::numbers::pi;
    const double a01 = pi / s.p;
    const double a12 = pi / s.q;
    const double a23 = pi / s.r;
    const double c01 = std::cos(a01), c12 = std::cos(a12), c23 = std::cos(a23);
    const double s01 = std::sin(a01), s23 = std::sin(a23);
    if (c01 <= 0.0 || c23 <= 0.0)
        throw std::domain_error("volume_3d: angle parameters out of range");
    double disc = c12 * c12 - s01 * s01 * s23 * s23;
    if (disc < -1e-14)
        throw std::domain_error("volume_3d: scheme has no outer principal vertex");
    const double theta = std::atan(std::sqrt(std::max(disc, 0.0)) / (c01 * c23));
    const auto& L = lobachevsky;
    const double vol =
        0.25 * (L(a01 + theta) - L(a01 - theta) + L(pi / 2 + a12 - theta) +
                L(pi / 2 - a12 - theta) + L(a23 + theta) - L(a23 - theta) +
                2.0 * L(pi / 2 - theta));
    if (!(vol > 0.0)) throw std::domain_error("volume_3d: non-positive volume");
    return vol;
}

double lambert_area() { return std::numbers::pi / 2.0; }

double triangle_area(const LorentzVector& a, const LorentzVector& b,
                     const LorentzVector& c) {
    if (projectively_equal(a, b, 1e-12) || projectively_equal(b, c, 1e-12) ||
        projectively_equal(a, c, 1e-12))
        throw std::invalid_argument("triangle_area: vertices not pairwise distinct");
    const double sum = angle_at(a, b, c) + angle_at(b, a, c) + angle_at(c, a, b);
    const double area = std::numbers::pi - sum;
    if (area <= 1e-12)
        throw std::domain_error("triangle_area: degenerate (collinear) vertices");
    return area;
}

}  // namespace hyphor
