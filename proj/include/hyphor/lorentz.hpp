#pragma once

#include <array>
#include <cstddef>

namespace hyphor {

// Homogeneous coordinates of a point of the projective (Beltrami-Cayley-Klein)
// model of H^n, n = 2 or 3. Two vectors differing by a nonzero real factor
// represent the same point; operations treat them projectively.
struct LorentzVector {
    std::array<double, 4> c{};
    int dim = 3;  // spatial dimension n; the tuple has dim+1 entries

    static LorentzVector d2(double x0, double x1, double x2) {
        return LorentzVector{{x0, x1, x2, 0.0}, 2};
    }
    static LorentzVector d3(double x0, double x1, double x2, double x3) {
        return LorentzVector{{x0, x1, x2, x3}, 3};
    }

    double operator[](int i) const { return c[static_cast<size_t>(i)]; }
    double& operator[](int i) { return c[static_cast<size_t>(i)]; }
    int size() const { return dim + 1; }

    // Representative scaled to x0 = 1 (requires x0 != 0).
    LorentzVector normalized() const;
};

enum class PointClass { Proper, Ideal, Outer };

// Linear form u acting on homogeneous coordinates; the hyperplane is its
// kernel. Stored unnormalized.
struct HyperplaneForm {
    std::array<double, 4> u{};
    int dim = 3;

    int size() const { return dim + 1; }
    double operator()(const LorentzVector& x) const;
};

// Signature-(1,n) product <x,y> = -x0*y0 + sum_i xi*yi.
double bilinear_form(const LorentzVector& x, const LorentzVector& y);

// Sign of <x,x> after scaling the vector to max-abs coordinate 1,
// with tolerance 1e-10 for the Ideal band.
PointClass classify(const LorentzVector& x);

// Hyperbolic distance between two Proper points (natural units, k = 1).
double distance(const LorentzVector& p, const LorentzVector& q);

// Polar form of a point: u(y) = <x,y>.
HyperplaneForm polar(const LorentzVector& x);

// Metric dual of a form: the point J*u, satisfying <dual(u), y> = u(y).
LorentzVector form_dual(const HyperplaneForm& u);

// Distance from a Proper point to the hyperplane of u; requires the dual
// of u to be spacelike (the plane meets the model).
double point_plane_distance(const LorentzVector& x, const HyperplaneForm& u);

// Interior angle at a Proper vertex between the geodesic rays toward b and c,
// computed from Lorentz-orthogonalized edge tangents.
double angle_at(const LorentzVector& vertex, const LorentzVector& b,
                const LorentzVector& c);

// Acute angle between two intersecting hyperplanes (both duals spacelike).
double plane_angle(const HyperplaneForm& u, const HyperplaneForm& v);

// Plane through three points of the 3-dimensional model (cofactor expansion).
HyperplaneForm plane_through(const LorentzVector& a, const LorentzVector& b,
                             const LorentzVector& c);

bool projectively_equal(const LorentzVector& a, const LorentzVector& b,
                        double tol = 1e-12);

}  // namespace hyphor
