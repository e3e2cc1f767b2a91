#pragma once

#include <array>

#include "hyphor/lorentz.hpp"
#include "hyphor/orthoscheme.hpp"

namespace hyphor {

// Horoball centered at the ideal point (1, 0, ..., 0, 1), parametrized by
// the height s in (-1, 1) at which its boundary meets the last coordinate
// axis: the axis point (1, 0, ..., 0, s) lies on the horosphere.
struct Horoball {
    int dim = 3;
    double s = 0;
};

// Hyperball (equidistant body) of height h >= 0 over a base hyperplane.
struct Hyperball {
    HyperplaneForm base;
    double h = 0;
};

struct AdmissibilityReport {
    bool horoball_ok = false;   // horoball piece stays inside the solid
    bool hyperball_ok = false;  // hyperball piece stays inside the solid
    bool disjoint = false;      // interiors of the two bodies do not overlap
    // Signed clearances, same order as the flags; negative = violated.
    std::array<double, 3> min_clearances{};

    bool all() const { return horoball_ok && hyperball_ok && disjoint; }
};

// Parameter s of the unique horosphere of the family through a Proper point
// of the open model ball (dimension taken from the point).
double horo_param_through(const LorentzVector& point);

// Intersection of the segment from the ideal center a0 = (1,0,...,0,1)
// toward point b with the horosphere of parameter s. Errors if the crossing
// does not land inside the segment.
LorentzVector edge_horosphere_intersection(const LorentzVector& a0,
                                           const LorentzVector& b, double s);

// Length of a horospheric arc subtending a geodesic chord of the given
// length between two points on the same horosphere.
double horospheric_arc(double chord);

// Volume of the part of the horoball cut off by the frustum: the boundary
// horosphere carries the intrinsic Euclidean metric, so the piece is a cone
// over a Euclidean triangle whose sides are the horospheric arcs between
// the crossings on the three edges through A0.
double horoball_piece_volume(const FrustumOrthoscheme& f, double s);

// Volume (n = 3) or area (n = 2) of the hyperball piece over a base of the
// given area (n = 3) or length (n = 2) and height h.
double hyperball_piece_volume(double base, double h, int n);

// Checks that the horoball of parameter s and the hyperball of height h over
// the truncation plane fit inside the frustum without overlapping, by exact
// corner criteria plus dense sampling of the relevant faces and boundary
// patches. Tolerances: 1e-9 on containment, 1e-8 on sampled gaps.
AdmissibilityReport check_admissibility(const FrustumOrthoscheme& f, double s,
                                        double h);

}  // namespace hyphor
