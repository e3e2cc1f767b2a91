#include "hyphor/packing3d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyphor/optimize.hpp"

namespace hyphor {

namespace {

double pieces_volume(const FrustumOrthoscheme& f, double s, double h) {
    const double base = triangle_area(f.P0, f.P1, f.P2);
    return horoball_piece_volume(f, s) + hyperball_piece_volume(base, h, 3);
}

DensityResult assemble(const FrustumOrthoscheme& f, double s, double h) {
    AdmissibilityReport rep = check_admissibility(f, s, h);
    if (!rep.all())
        throw std::invalid_argument("density: ball pair is not admissible");
    DensityResult r;
    r.vol_F = volume_3d(f.scheme);
    r.vol_pieces = pieces_volume(f, s, h);
    r.delta = r.vol_pieces / r.vol_F;
    r.realizable_tiling = realizable_tiling(f.scheme.p, f.scheme.q, f.scheme.r);
    r.p = f.scheme.p;
    r.q = f.scheme.q;
    r.r = f.scheme.r;
    r.s = s;
    r.h = h;
    return r;
}

// Tangency-curve optimum: the maximal bodies overlap, so sweep the common
// height h with s = tanh(h) (balls touching on the axis) between the largest
// h whose horoball still fits and the hyperball containment bound.
DensityResult optimize_tangent(double p, double q, double r) {
    const FrustumOrthoscheme f = realize(build_scheme(p, q, r));
    const double vol = volume_3d(f.scheme);
    const double z_at_a1 = horo_param_through(f.A1);
    const double h_hi = distance(f.P2, f.A2);
    const double h_lo = std::max(std::atanh(z_at_a1), 0.0);
    auto objective = [&](double h) {
        return pieces_volume(f, std::tanh(h), h) / vol;
    };
    const Maximizer1D m{h_lo, h_hi, 2000, 1e-10};
    const auto [h_star, d_star] = maximize(objective, m);
    (void)d_star;
    return assemble(f, std::tanh(h_star), h_star);
}

}  // namespace

DensityResult density(const FrustumOrthoscheme& f, double s, double h) {
    return assemble(f, s, h);
}

DensityResult optimize_family_44(double p) {
    if (!(p >= 5.0 - 1e-9))
        throw std::invalid_argument("optimize_family_44: requires p >= 5");
    return optimize_tangent(p, 4, 4);
}

DensityResult optimize_family_63(double p) {
    if (!(p >= 4.0 - 1e-9))
        throw std::invalid_argument("optimize_family_63: requires p >= 4");
    return optimize_tangent(p, 6, 3);
}

DensityResult optimize_family_36(double p) {
    if (!(p > 6.0))
        throw std::invalid_argument("optimize_family_36: requires p > 6");
    const FrustumOrthoscheme f = realize(build_scheme(p, 3, 6));
    const double s_max = horo_param_through(f.A1);
    const double h_max = distance(f.P2, f.A2);
    try {
        return assemble(f, s_max, h_max);  // maximal bodies stay disjoint
    } catch (const std::invalid_argument&) {
        return optimize_tangent(p, 3, 6);
    }
}

FamilyArgmax family_best(double q, double r) {
    int p0 = 0;
    DensityResult (*opt)(double) = nullptr;
    if (std::fabs(q - 4) < 1e-9 && std::fabs(r - 4) < 1e-9) {
        p0 = 5;
        opt = optimize_family_44;
    } else if (std::fabs(q - 6) < 1e-9 && std::fabs(r - 3) < 1e-9) {
        p0 = 4;
        opt = optimize_family_63;
    } else if (std::fabs(q - 3) < 1e-9 && std::fabs(r - 6) < 1e-9) {
        p0 = 7;
        opt = optimize_family_36;
    } else {
        throw std::invalid_argument("family_best: unknown family");
    }
    FamilyArgmax best;
    best.q = q;
    best.r = r;
    double prev = -1.0;
    int decreases = 0;
    for (int p = p0; decreases < 3; ++p) {
        const DensityResult res = opt(double(p));
        if (best.p == 0 || res.delta > best.result.delta) {
            best.p = p;
            best.result = res;
        }
        if (prev >= 0.0 && res.delta < prev) ++decreases;
        else decreases = 0;
        prev = res.delta;
    }
    return best;
}

FamilyArgmax family_argmax() {
    FamilyArgmax best;
    for (const auto& [q, r] : {std::pair{4.0, 4.0}, {6.0, 3.0}, {3.0, 6.0}}) {
        FamilyArgmax cand = family_best(q, r);
        if (best.p == 0 || cand.result.delta > best.result.delta) best = cand;
    }
    return best;
}

}  // namespace hyphor
