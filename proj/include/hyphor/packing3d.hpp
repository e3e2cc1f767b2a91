#pragma once

#include "hyphor/balls.hpp"
#include "hyphor/orthoscheme.hpp"

namespace hyphor {

struct DensityResult {
    double vol_F = 0;       // volume of the fundamental frustum
    double vol_pieces = 0;  // horoball piece + hyperball piece
    double delta = 0;       // vol_pieces / vol_F
    bool realizable_tiling = false;
    double p = 0, q = 0, r = 0;  // scheme parameters
    double s = 0;                // horoball parameter
    double h = 0;                // hyperball height
};

// Density of the packing cut out of the frustum by the horoball of
// parameter s and the hyperball of height h over the truncation plane.
// Errors if the pair fails check_admissibility.
DensityResult density(const FrustumOrthoscheme& f, double s, double h);

// Optimal density over admissible (s, h) for one member of a family.
// (4,4) and (6,3): the maximal bodies overlap, so the optimum is found on
// the tangency curve s = tanh(h); (3,6): the maximal bodies are disjoint
// and both parameters sit at their containment bounds.
DensityResult optimize_family_44(double p);  // requires p >= 5
DensityResult optimize_family_63(double p);  // requires p >= 4
DensityResult optimize_family_36(double p);  // requires p > 6

struct FamilyArgmax {
    double q = 0, r = 0;
    int p = 0;
    DensityResult result;
};

// Best integer member of one family; the per-p optimum decreases in p, so
// the walk stops after three consecutive decreases.
FamilyArgmax family_best(double q, double r);

// Best packing over all three families and all integer p.
FamilyArgmax family_argmax();

}  // namespace hyphor
