#include "altlink/hypgeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace altlink {

namespace {

constexpr double kPi = std::numbers::pi;

// x1*y2 - y1*x2 for homogeneous points; the pairwise "difference" whose
// ambient denominators cancel inside a cross ratio.
Complex det2(const ExtendedComplex& x, const ExtendedComplex& y) {
    return x.num * y.den - y.num * x.den;
}

} // namespace

ExtendedComplex::ExtendedComplex(Complex n, Complex d) : num(n), den(d) {
    if (num == Complex(0.0, 0.0) && den == Complex(0.0, 0.0))
        throw InternalError("extended complex point 0/0 is indeterminate");
}

Complex ExtendedComplex::value() const {
    if (is_infinity())
        throw InternalError("value() called on the point at infinity");
    return num / den;
}

ExtendedComplex ExtendedComplex::normalized() const {
    double m = std::max(std::abs(num), std::abs(den));
    return ExtendedComplex(num / m, den / m);
}

bool projectively_equal(const ExtendedComplex& a, const ExtendedComplex& b, double eps) {
    Complex c1 = a.num * b.den;
    Complex c2 = b.num * a.den;
    double diff = std::abs(c1 - c2);
    return diff <= eps * std::max({std::abs(c1), std::abs(c2), 1.0});
}

ExtendedComplex cross_ratio(const ExtendedComplex& p, const ExtendedComplex& q,
                            const ExtendedComplex& r, const ExtendedComplex& s) {
    Complex num = det2(p, r) * det2(q, s);
    Complex den = det2(p, s) * det2(q, r);
    if (num == Complex(0.0, 0.0) && den == Complex(0.0, 0.0))
        throw InternalError("cross ratio needs at least three distinct points");
    return ExtendedComplex(num, den);
}

ExtendedComplex MobiusMap::apply(const ExtendedComplex& z) const {
    return ExtendedComplex(a * z.num + b * z.den, c * z.num + d * z.den);
}

MobiusMap MobiusMap::compose(const MobiusMap& inner) const {
    MobiusMap m;
    m.a = a * inner.a + b * inner.c;
    m.b = a * inner.b + b * inner.d;
    m.c = c * inner.a + d * inner.c;
    m.d = c * inner.b + d * inner.d;
    return m;
}

MobiusMap MobiusMap::inverse() const {
    if (determinant() == Complex(0.0, 0.0))
        throw InternalError("singular mobius map has no inverse");
    MobiusMap m;
    m.a = d;
    m.b = -b;
    m.c = -c;
    m.d = a;
    return m;
}

MobiusMap mobius_from_triple(const ExtendedComplex& a, const ExtendedComplex& b,
                             const ExtendedComplex& c) {
    // z -> (z-a)(b-c) / ((z-c)(b-a)), written so the homogeneous denominators
    // of a, b, c cancel: M(z) = det2(z,a)*det2(b,c) / (det2(z,c)*det2(b,a)).
    Complex dbc = det2(b, c);
    Complex dba = det2(b, a);
    MobiusMap m;
    m.a = dbc * a.den;
    m.b = -dbc * a.num;
    m.c = dba * c.den;
    m.d = -dba * c.num;
    if (m.determinant() == Complex(0.0, 0.0))
        throw InternalError("mobius_from_triple requires three distinct points");
    return m;
}

IdealPolygon::IdealPolygon(std::vector<ExtendedComplex> vs) : vertices(std::move(vs)) {
    if (vertices.size() < 3)
        throw InputError("ideal polygon needs at least 3 vertices");
}

ExtendedComplex regular_ngon_target(int n) {
    if (n < 3)
        throw InputError("regular polygon target needs n >= 3");
    // 1 + 1/(2cos(2pi/n)+1) as (2c+2)/(2c+1); the cases with exact rational
    // cosine are pinned so that n = 3 is exactly infinite and n = 4 exactly 2.
    double c2;
    switch (n) {
    case 3: c2 = -1.0; break;
    case 4: c2 = 0.0; break;
    case 6: c2 = 1.0; break;
    default: c2 = 2.0 * std::cos(2.0 * kPi / n); break;
    }
    return ExtendedComplex(Complex(c2 + 2.0, 0.0), Complex(c2 + 1.0, 0.0));
}

double regularity_residual(const IdealPolygon& poly) {
    int n = poly.size();
    ExtendedComplex target = regular_ngon_target(n);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        ExtendedComplex ratio = cross_ratio(poly.vertices[i],
                                            poly.vertices[(i + 1) % n],
                                            poly.vertices[(i + 2) % n],
                                            poly.vertices[(i + 3) % n]);
        double dev;
        if (target.is_infinity()) {
            // distance to infinity measured as |1/ratio|
            dev = std::abs(ratio.den) / std::abs(ratio.num);
        } else if (ratio.is_infinity()) {
            dev = std::numeric_limits<double>::infinity();
        } else {
            dev = std::abs(ratio.value() - target.value());
        }
        worst = std::max(worst, dev);
    }
    return worst;
}

bool is_regular_polygon(const IdealPolygon& poly, double tol) {
    return regularity_residual(poly) <= tol;
}

ExtendedComplex klein_to_boundary(const std::array<double, 3>& v) {
    double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if (std::abs(r2 - 1.0) > 1e-6)
        throw InternalError("klein_to_boundary expects a unit vector");
    // (x+iy)/(1-z) from the north pole, in the branch that keeps the
    // denominator away from zero: for z > 0 use the algebraically equal
    // (1+z)/(x-iy).
    if (v[2] <= 0.0)
        return ExtendedComplex(Complex(v[0], v[1]), Complex(1.0 - v[2], 0.0));
    return ExtendedComplex(Complex(1.0 + v[2], 0.0), Complex(v[0], -v[1]));
}

namespace {

// zeta(2), zeta(4), zeta(6) in closed form; higher even values by direct
// summation, which converges to machine precision within a few hundred terms.
const std::vector<double>& even_zeta_table() {
    static const std::vector<double> table = [] {
        std::vector<double> z(41, 0.0);
        z[1] = kPi * kPi / 6.0;
        z[2] = std::pow(kPi, 4) / 90.0;
        z[3] = std::pow(kPi, 6) / 945.0;
        for (int n = 4; n <= 40; ++n) {
            double s = 0.0;
            for (int k = 1; k <= 3000; ++k) {
                double term = std::pow(static_cast<double>(k), -2.0 * n);
                s += term;
                if (term < 1e-20)
                    break;
            }
            z[n] = s;
        }
        return z;
    }();
    return table;
}

} // namespace

double lobachevsky(double theta) {
    if (!std::isfinite(theta))
        throw InputError("lobachevsky needs a finite angle");
    // odd and pi-periodic: reduce to [-pi/2, pi/2]
    double t = std::remainder(theta, kPi);
    double sign = 1.0;
    if (t < 0.0) {
        t = -t;
        sign = -1.0;
    }
    if (t == 0.0)
        return 0.0;
    // -Int_0^t ln(2 sin u) du  =  t(1 - ln 2t) - Int_0^t ln(sin u / u) du,
    // and the product formula for sin turns the remaining integral into
    // sum_n zeta(2n)/(n(2n+1)) * t * (t/pi)^(2n), with ratio (t/pi)^2 <= 1/4.
    const auto& zeta = even_zeta_table();
    double x = (t / kPi) * (t / kPi);
    double pw = 1.0;
    double series = 0.0;
    for (int n = 1; n <= 40; ++n) {
        pw *= x;
        double term = zeta[n] / (n * (2.0 * n + 1.0)) * pw;
        series += term;
        if (term < 1e-18)
            break;
    }
    return sign * (t * (1.0 - std::log(2.0 * t)) + t * series);
}

double ideal_tet_volume(const TetShape& shape) {
    Complex z = shape.z;
    if (z == Complex(0.0, 0.0) || z == Complex(1.0, 0.0))
        throw InternalError("ideal tetrahedron shape cannot be 0 or 1");
    if (z.imag() == 0.0)
        return 0.0;
    double a1 = std::arg(z);
    double a2 = -std::arg(Complex(1.0, 0.0) - z); // arg of 1/(1-z)
    double a3 = std::arg((z - Complex(1.0, 0.0)) / z);
    return lobachevsky(a1) + lobachevsky(a2) + lobachevsky(a3);
}

} // namespace altlink
