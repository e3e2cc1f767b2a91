#include "hyphor/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyphor {

namespace {

double max_abs(const std::array<double, 4>& c, int n) {
    double m = 0.0;
    for (int i = 0; i < n; ++i) m = std::max(m, std::fabs(c[static_cast<size_t>(i)]));
    return m;
}

}  // namespace

LorentzVector LorentzVector::normalized() const {
    if (c[0] == 0.0) throw std::invalid_argument("cannot normalize: x0 = 0");
    LorentzVector r = *this;
    for (int i = 0; i <= dim; ++i) r[i] = c[static_cast<size_t>(i)] / c[0];
    return r;
}

double HyperplaneForm::operator()(const LorentzVector& x) const {
    if (x.dim != dim) throw std::invalid_argument("dimension mismatch");
    double s = 0.0;
    for (int i = 0; i <= dim; ++i) s += u[static_cast<size_t>(i)] * x[i];
    return s;
}

double bilinear_form(const LorentzVector& x, const LorentzVector& y) {
    if (x.dim != y.dim) throw std::invalid_argument("dimension mismatch");
    double s = -x[0] * y[0];
    for (int i = 1; i <= x.dim; ++i) s += x[i] * y[i];
    return s;
}

PointClass classify(const LorentzVector& x) {
    const double m = max_abs(x.c, x.size());
    if (m == 0.0) throw std::invalid_argument("zero vector has no class");
    LorentzVector s = x;
    for (int i = 0; i <= x.dim; ++i) s[i] /= m;
    const double q = bilinear_form(s, s);
    constexpr double eps = 1e-10;
    if (q < -eps) return PointClass::Proper;
    if (q > eps) return PointClass::Outer;
    return PointClass::Ideal;
}

double distance(const LorentzVector& p, const LorentzVector& q) {
    if (classify(p) != PointClass::Proper || classify(q) != PointClass::Proper)
        throw std::invalid_argument("distance requires two Proper points");
    const double pp = bilinear_form(p, p);
    const double qq = bilinear_form(q, q);
    const double pq = bilinear_form(p, q);
    const double arg = std::fabs(pq) / std::sqrt(pp * qq);
    if (arg < 1.0 - 1e-9)
        throw std::domain_error("distance: cosh argument below 1");
    return std::acosh(std::max(arg, 1.0));
}

HyperplaneForm polar(const LorentzVector& x) {
    HyperplaneForm f;
    f.dim = x.dim;
    f.u[0] = -x[0];
    for (int i = 1; i <= x.dim; ++i) f.u[static_cast<size_t>(i)] = x[i];
    return f;
}

LorentzVector form_dual(const HyperplaneForm& u) {
    LorentzVector v;
    v.dim = u.dim;
    v[0] = -u.u[0];
    for (int i = 1; i <= u.dim; ++i) v[i] = u.u[static_cast<size_t>(i)];
    return v;
}

double point_plane_distance(const LorentzVector& x, const HyperplaneForm& u) {
    if (classify(x) != PointClass::Proper)
        throw std::invalid_argument("point_plane_distance requires a Proper point");
    const LorentzVector d = form_dual(u);
    const double dd = bilinear_form(d, d);
    if (dd <= 0.0)
        throw std::invalid_argument("plane does not meet the model (dual not spacelike)");
    const double xx = bilinear_form(x, x);
    const double val = u(x);
    return std::asinh(std::fabs(val) / std::sqrt(-xx * dd));
}

double angle_at(const LorentzVector& vertex, const LorentzVector& b,
                const LorentzVector& c) {
    if (classify(vertex) != PointClass::Proper)
        throw std::invalid_argument("angle vertex must be Proper");
    const double vv = bilinear_form(vertex, vertex);
    auto tangent = [&](const LorentzVector& w) {
        const double t = bilinear_form(w, vertex) / vv;
        LorentzVector r = w;
        for (int i = 0; i <= w.dim; ++i) r[i] -= t * vertex[i];
        return r;
    };
    const LorentzVector tb = tangent(b);
    const LorentzVector tc = tangent(c);
    const double nb = bilinear_form(tb, tb);
    const double nc = bilinear_form(tc, tc);
    if (nb <= 0.0 || nc <= 0.0)
        throw std::invalid_argument("angle rays are degenerate");
    const double cs = bilinear_form(tb, tc) / std::sqrt(nb * nc);
    return std::acos(std::clamp(cs, -1.0, 1.0));
}

double plane_angle(const HyperplaneForm& u, const HyperplaneForm& v) {
    const LorentzVector du = form_dual(u);
    const LorentzVector dv = form_dual(v);
    const double uu = bilinear_form(du, du);
    const double vv = bilinear_form(dv, dv);
    if (uu <= 0.0 || vv <= 0.0)
        throw std::invalid_argument("plane_angle requires spacelike duals");
    const double cs = std::fabs(bilinear_form(du, dv)) / std::sqrt(uu * vv);
    if (cs > 1.0 + 1e-9)
        throw std::domain_error("planes do not intersect in the model");
    return std::acos(std::clamp(cs, 0.0, 1.0));
}

HyperplaneForm plane_through(const LorentzVector& a, const LorentzVector& b,
                             const LorentzVector& c) {
    if (a.dim != 3 || b.dim != 3 || c.dim != 3)
        throw std::invalid_argument("plane_through expects 3-dimensional points");
    auto det3 = [](double m00, double m01, double m02, double m10, double m11,
                   double m12, double m20, double m21, double m22) {
        return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
               m02 * (m10 * m21 - m11 * m20);
    };
    HyperplaneForm f;
    f.dim = 3;
    double sign = 1.0;
    for (int i = 0; i < 4; ++i) {
        double cols[3][3];
        for (int r = 0; r < 3; ++r) {
            const LorentzVector& v = (r == 0) ? a : (r == 1) ? b : c;
            int k = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == i) continue;
                cols[r][k++] = v[j];
            }
        }
        f.u[static_cast<size_t>(i)] =
            sign * det3(cols[0][0], cols[0][1], cols[0][2], cols[1][0], cols[1][1],
                        cols[1][2], cols[2][0], cols[2][1], cols[2][2]);
        sign = -sign;
    }
    const double m = std::max({std::fabs(f.u[0]), std::fabs(f.u[1]),
                               std::fabs(f.u[2]), std::fabs(f.u[3])});
    if (m == 0.0) throw std::invalid_argument("plane_through: collinear points");
    for (auto& e : f.u) e /= m;
    return f;
}

bool projectively_equal(const LorentzVector& a, const LorentzVector& b, double tol) {
    if (a.dim != b.dim) return false;
    const double ma = max_abs(a.c, a.size());
    const double mb = max_abs(b.c, b.size());
    if (ma == 0.0 || mb == 0.0) return false;
    // Align signs using the largest-magnitude coordinate of a.
    int k = 0;
    for (int i = 0; i <= a.dim; ++i)
        if (std::fabs(a[i]) > std::fabs(a[k])) k = i;
    const double sa = (a[k] >= 0) ? 1.0 : -1.0;
    const double sb = (b[k] >= 0) ? 1.0 : -1.0;
    for (int i = 0; i <= a.dim; ++i)
        if (std::fabs(sa * a[i] / ma - sb * b[i] / mb) > tol) return false;
    return true;
}

}  // namespace hyphor
