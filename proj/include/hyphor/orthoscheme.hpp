#pragma once

#include <array>

#include "hyphor/lorentz.hpp"

namespace hyphor {

using Matrix4 = std::array<std::array<double, 4>, 4>;

// Coxeter-Schlaefli data of the linear scheme with dihedral angles
// (pi/p, pi/q, pi/r) between consecutive mirrors: the matrix C, its inverse
// H = C^{-1}, and the parameters. Construction guarantees the scheme is
// hyperbolic (signature (1,3)).
struct CoxeterScheme {
    double p = 0, q = 0, r = 0;
    Matrix4 gram{};   // C
    Matrix4 hinv{};   // H = C^{-1}
};

// Builds the scheme for real p, q, r >= 2 and validates hyperbolicity via
// leading principal minors (first three positive, determinant negative).
CoxeterScheme build_scheme(double p, double q, double r);

// Orthogonal projection of abstract vertex lift a_k onto the polar plane of
// a_3, expressed through entries of H: p_k = a_k*h33 - a_3*h_k3. The input
// lifts must have Gram matrix H.
LorentzVector truncation_point(const CoxeterScheme& s, int k,
                               const std::array<LorentzVector, 4>& vertices);

// Realized simple frustum: the orthoscheme with outer principal vertex
// cut by the polar plane of that vertex. Vertex A0 is ideal, A3 outer.
// Coordinates follow the template
//   P0=(1,0,0,0)  P1=(1,x,0,0)    P2=(1,x,y,0)
//   A0=(1,0,0,1)  A1=(1,x,0,z1)   A2=(1,x,y,z2)   A3=(0,0,0,1)
// with 0 < x, y, z1, z2 < 1. All face forms are oriented inward
// (nonnegative on the solid).
struct FrustumOrthoscheme {
    CoxeterScheme scheme;
    double x = 0, y = 0, z1 = 0, z2 = 0;
    LorentzVector A0, A1, A2, A3;
    LorentzVector P0, P1, P2;
    HyperplaneForm face_pi;        // truncation plane x3 = 0
    HyperplaneForm face_A0A1A2;    // triangle face opposite the truncation
    HyperplaneForm face_A0A1P1P0;  // wall x2 = 0
    HyperplaneForm face_A0A2P2P0;  // wall y*x1 - x*x2 = 0
    HyperplaneForm face_A1A2P2P1;  // wall x1 = x*x0
};

// Computes the frustum coordinates from H and verifies that the realized
// dihedral angles reproduce (pi/p, pi/q, pi/r) and that the truncation
// plane is orthogonal to the three walls, all within 1e-10.
FrustumOrthoscheme realize(const CoxeterScheme& s);

// True when (p, q, r) generates a discrete reflection group: integer p in
// the admissible range of one of the families (q,r) = (4,4) p >= 5,
// (6,3) p >= 4, (3,6) p >= 7.
bool realizable_tiling(double p, double q, double r);

// Volume of the simple frustum for the three families above (real p allowed).
double volume_3d(const CoxeterScheme& s);

// Area of a Lambert quadrilateral with one ideal vertex (three right angles).
double lambert_area();

// Area of the hyperbolic triangle spanned by three Proper points
// (angle defect). Errors on a degenerate (collinear) triple.
double triangle_area(const LorentzVector& a, const LorentzVector& b,
                     const LorentzVector& c);

}  // namespace hyphor
