#pragma once

#include "hyphor/lorentz.hpp"

namespace hyphor {

// Fundamental Lambert quadrilateral of the planar tiling, parametrized by
// the half base length a in (0, 1) (Klein coordinate):
//   A0 = (1,0,1) ideal, A1 = (1,0,0), P1 = (1,a,0), P0 = (1,a,1-a^2),
// and A2 = (1, 1/a, 0) the outer pole of the side P1 P0.
struct PlaneTiling {
    double a = 0;
    LorentzVector A0, A1, P1, P0, A2;
};

PlaneTiling build_tiling(double a);

enum class PackingKind { Type1, Type2, General, HorocycleOnly };

// A horoball/hyperball pair in the quadrilateral: the horoball centered at
// A0 and the hypercycle strip of height artanh(y) over the base line, both
// passing through the common axis point (1, 0, y).
struct PlanePacking {
    PlaneTiling tiling;
    double y = 0;
    PackingKind kind = PackingKind::General;
};

// Classifies (a, y) into a packing kind, validating the region constraints:
// Type1 touches the slanted side (y = sqrt(1-a^2)), Type2 touches the far
// corner path (y = 1-2a^2, a <= 1/sqrt(2)), HorocycleOnly has y = 0 with
// a >= 1/sqrt(2), General lies between the bounding curves.
PlanePacking make_packing(double a, double y);

// Packing density in the Type1 configuration, 0 < a < 1.
double density_type1(double a);

// Packing density in the Type2 configuration, 0 < a < 1/sqrt(2).
double density_type2(double a);

// Packing density for a general admissible pair (a, y).
double density_general(double a, double y);

// Degenerate family with no hypercycle component, a >= 1/sqrt(2).
double density_horocycle_only(double a);

struct ScanReport {
    double a_star = 0, y_star = 0, delta_star = 0;
    bool argmax_on_boundary = false;
    double boundary_best = 0;  // best density over boundary grid rows
    double interior_best = 0;  // best density over strictly interior nodes
};

// Grid scan of density_general over the admissible region (a in a column
// range, y between the lower and upper bounding curves per column).
// The default range covers (0, 1) up to a margin of one cell.
ScanReport scan_general(int resolution);
ScanReport scan_general(int resolution, double a_lo, double a_hi);

}  // namespace hyphor
