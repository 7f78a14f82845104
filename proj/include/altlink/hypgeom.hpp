#pragma once

#include <array>
#include <complex>
#include <vector>

#include "altlink/errors.hpp"

namespace altlink {

using Complex = std::complex<double>;

/// Point of the extended complex plane (Riemann sphere), held in homogeneous
/// coordinates: value = num/den, infinity iff den == 0. Keeping points
/// projective means a vertex at infinity flows through cross ratios and
/// Mobius maps with no special-cased float arithmetic.
struct ExtendedComplex {
    Complex num{0.0, 0.0};
    Complex den{1.0, 0.0};

    ExtendedComplex() = default;
    ExtendedComplex(Complex n, Complex d);
    ExtendedComplex(double x) : ExtendedComplex(Complex(x, 0.0), Complex(1.0, 0.0)) {} // NOLINT(google-explicit-constructor)
    ExtendedComplex(Complex z) : ExtendedComplex(z, Complex(1.0, 0.0)) {}              // NOLINT(google-explicit-constructor)

    static ExtendedComplex infinity() { return ExtendedComplex(Complex(1.0, 0.0), Complex(0.0, 0.0)); }

    bool is_infinity() const { return den == Complex(0.0, 0.0); }
    /// Finite value; throws InternalError on the point at infinity.
    Complex value() const;

    /// Scale both coordinates so the larger has unit magnitude.
    ExtendedComplex normalized() const;
};

/// Projective equality: num1*den2 == num2*den1 up to `eps` (relative to the
/// normalized representatives). eps = 0 compares exactly.
bool projectively_equal(const ExtendedComplex& a, const ExtendedComplex& b, double eps = 0.0);

/// Cross ratio (p-r)(q-s) / ((p-s)(q-r)), evaluated projectively so that a
/// single point at infinity (or a repeated point, as in the 3-gon case
/// v3 = v0) cancels formally. Requires at least 3 of the 4 points pairwise
/// distinct.
ExtendedComplex cross_ratio(const ExtendedComplex& p, const ExtendedComplex& q,
                            const ExtendedComplex& r, const ExtendedComplex& s);

/// Mobius transformation as a 2x2 complex matrix up to scale.
struct MobiusMap {
    Complex a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

    ExtendedComplex apply(const ExtendedComplex& z) const;
    MobiusMap compose(const MobiusMap& inner) const; // this ∘ inner
    MobiusMap inverse() const;
    Complex determinant() const { return a * d - b * c; }
};

/// The unique Mobius map sending (a, b, c) to (0, 1, ∞).
MobiusMap mobius_from_triple(const ExtendedComplex& a, const ExtendedComplex& b,
                             const ExtendedComplex& c);

/// Ideal polygon on the sphere at infinity, vertices in cyclic order.
struct IdealPolygon {
    std::vector<ExtendedComplex> vertices;

    explicit IdealPolygon(std::vector<ExtendedComplex> vs);
    int size() const { return static_cast<int>(vertices.size()); }
};

/// Cross-ratio target attained by any four consecutive vertices of a regular
/// ideal n-gon: 1 + 1/(2cos(2π/n)+1). Infinite for n = 3.
ExtendedComplex regular_ngon_target(int n);

/// Largest deviation of the polygon's consecutive-4-tuple cross ratios from
/// the regular n-gon target (reciprocal magnitude against the infinite
/// target). Zero means exactly regular.
double regularity_residual(const IdealPolygon& poly);

bool is_regular_polygon(const IdealPolygon& poly, double tol);

/// Stereographic projection of the unit sphere to the extended plane from the
/// north pole (0,0,1): (x,y,z) -> (x+iy)/(1-z); the pole itself maps to ∞.
/// This is the boundary map identifying the Klein ball's sphere at infinity
/// with the upper-half-space boundary.
ExtendedComplex klein_to_boundary(const std::array<double, 3>& v);

/// Lobachevsky function Λ(θ) = -∫₀^θ ln|2 sin t| dt. Odd, π-periodic.
double lobachevsky(double theta);

/// Shape parameter of an ideal tetrahedron.
struct TetShape {
    Complex z;
};

/// Signed volume Λ(arg z) + Λ(arg 1/(1-z)) + Λ(arg (z-1)/z); positive iff
/// Im z > 0, zero for degenerate (real) shapes.
double ideal_tet_volume(const TetShape& shape);

} // namespace altlink
