#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace horopack {

// Point or hyperplane form in the projective model over the Lorentz form of
// signature (1,n). Coordinates are homogeneous: v and lambda*v (lambda != 0)
// name the same projective point.
struct LorentzVector {
    int dim = 0;
    std::vector<double> coords;  // dim+1 entries

    LorentzVector() = default;
    explicit LorentzVector(std::vector<double> c);
    LorentzVector(std::initializer_list<double> c);
};

enum class PointClass { Interior, Absolute, Outer };

// Thrown when two operands carry different dimensions.
struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kAbsoluteTol = 1e-10;

// <x,y> = -x0*y0 + x1*y1 + ... + xn*yn
double bilinear_form(const LorentzVector& x, const LorentzVector& y);

PointClass classify_point(const LorentzVector& x, double tol = kAbsoluteTol);

// Hyperbolic distance between two interior points, cosh s = -<x,y>/sqrt(<x,x><y,y>).
double distance(const LorentzVector& x, const LorentzVector& y);

// Polar hyperplane form of a point (and vice versa).
LorentzVector polar_form(const LorentzVector& x);

// Foot of the perpendicular from interior point x onto the proper hyperplane
// with form u: y = x - (<x,u>/<u,u>) u.
LorentzVector foot_of_perpendicular(const LorentzVector& x,
                                    const LorentzVector& u);

// sinh s = |<x,u>| / sqrt(-<x,x><u,u>)
double distance_to_hyperplane(const LorentzVector& x, const LorentzVector& u);

struct IdealSimplexFrame {
    int dim = 0;
    std::vector<LorentzVector> vertices;  // dim+1, all on the absolute
    LorentzVector incenter;               // (1,0,...,0,1/n)
};

// Ideal regular n-simplex with the last vertex at (1,0,...,0,1) and the
// centroid of the opposite facet at the model center. Vertex representatives
// are scaled so the Gram matrix has a constant off-diagonal.
IdealSimplexFrame build_regular_ideal_simplex(int n);

// Pole of the edge line (i,j) within the plane spanned by the edge and the
// model center O: u = <Ej,O> Ei + <Ei,O> Ej - <Ei,Ej> O. Proper (<u,u> > 0).
LorentzVector edge_pole_in_center_plane(const IdealSimplexFrame& frame, int i,
                                        int j);

// Hyperplane form of the facet opposite vertex i (orthogonal to the other
// dim vertices).
LorentzVector facet_form(const IdealSimplexFrame& frame, int i);

}  // namespace horopack
