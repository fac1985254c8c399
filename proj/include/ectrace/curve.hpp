#ifndef ECTRACE_CURVE_HPP
#define ECTRACE_CURVE_HPP

#include <cassert>
#include <optional>
#include <utility>

#include "ectrace/extension.hpp"
#include "ectrace/field.hpp"

namespace ectrace {

/*
 * Long Weierstrass coefficients lifted into a coordinate field. Elem is
 * FieldScalar for points over the ground field or ExtensionElement for
 * points over a simple extension; the group-law templates below only need
 * ring arithmetic, division and equality from it.
 */
template <class Elem>
struct CurveCoeffs {
    Elem a1, a2, a3, a4, a6;
};

// A point of E: the point at infinity or an affine pair.
template <class Elem>
class Point {
public:
    Point() = default;  // infinity
    static Point infinity() { return Point(); }
    static Point affine(Elem x, Elem y) {
        Point p;
        p.xy_.emplace(std::move(x), std::move(y));
        return p;
    }

    bool is_infinity() const noexcept { return !xy_.has_value(); }
    const Elem& x() const { return xy_->first; }
    const Elem& y() const { return xy_->second; }

    bool operator==(const Point& rhs) const {
        if (is_infinity() || rhs.is_infinity()) return is_infinity() == rhs.is_infinity();
        return x() == rhs.x() && y() == rhs.y();
    }
    bool operator!=(const Point& rhs) const { return !(*this == rhs); }

private:
    std::optional<std::pair<Elem, Elem>> xy_;
};

using GroundPoint = Point<FieldScalar>;
using ExtPoint = Point<ExtensionElement>;

template <class Elem>
Elem curve_rhs(const CurveCoeffs<Elem>& c, const Elem& x) {
    return ((x + c.a2) * x + c.a4) * x + c.a6;
}

template <class Elem>
bool on_curve(const CurveCoeffs<Elem>& c, const Point<Elem>& p) {
    if (p.is_infinity()) return true;
    const Elem lhs = (p.y() + c.a1 * p.x() + c.a3) * p.y();
    return lhs == curve_rhs(c, p.x());
}

template <class Elem>
Point<Elem> negated(const CurveCoeffs<Elem>& c, const Point<Elem>& p) {
    if (p.is_infinity()) return p;
    return Point<Elem>::affine(p.x(), -p.y() - c.a1 * p.x() - c.a3);
}

/*
 * Chord-and-tangent addition in the long Weierstrass form, valid in every
 * characteristic. Doubling a point with 2y + a1 x + a3 = 0 (a zero of the
 * 2-division polynomial) yields the point at infinity.
 */
template <class Elem>
Point<Elem> add(const CurveCoeffs<Elem>& c, const Point<Elem>& p, const Point<Elem>& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Elem &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();

    std::optional<Elem> slope;
    if (x1 == x2) {
        // Same x: the points are equal or negatives of each other.
        const Elem psi2 = y1 + y1 + c.a1 * x1 + c.a3;
        if (psi2.is_zero() || y1 != y2) {
            // q == -p; this covers doubling a 2-torsion point.
            return Point<Elem>::infinity();
        }
        const Elem xx = x1 * x1;
        const Elem a2x = c.a2 * x1;
        slope = (xx + xx + xx + a2x + a2x + c.a4 - c.a1 * y1) / psi2;
    } else {
        slope = (y2 - y1) / (x2 - x1);
    }

    const Elem& s = *slope;
    const Elem nu = y1 - s * x1;
    const Elem x3 = s * s + c.a1 * s - c.a2 - x1 - x2;
    const Elem y3 = -(s + c.a1) * x3 - nu - c.a3;
    Point<Elem> sum = Point<Elem>::affine(x3, y3);
    assert(on_curve(c, sum));
    return sum;
}

template <class Elem>
Point<Elem> multiply(const CurveCoeffs<Elem>& c, long long n, const Point<Elem>& p) {
    Point<Elem> base = p;
    unsigned long long m;
    if (n < 0) {
        base = negated(c, p);
        m = 0ULL - static_cast<unsigned long long>(n);
    } else {
        m = static_cast<unsigned long long>(n);
    }
    Point<Elem> acc;  // infinity
    while (m != 0) {
        if (m & 1) acc = add(c, acc, base);
        if ((m >>= 1) != 0) base = add(c, base, base);
    }
    return acc;
}

/*
 * An elliptic curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a
 * ground field, with a verified nonzero discriminant.
 */
class WeierstrassCurve {
public:
    WeierstrassCurve(const FieldScalar& a1, const FieldScalar& a2, const FieldScalar& a3,
                     const FieldScalar& a4, const FieldScalar& a6);

    const FieldDescriptor& descriptor() const noexcept { return desc_; }
    const FieldScalar& a1() const noexcept { return c_.a1; }
    const FieldScalar& a2() const noexcept { return c_.a2; }
    const FieldScalar& a3() const noexcept { return c_.a3; }
    const FieldScalar& a4() const noexcept { return c_.a4; }
    const FieldScalar& a6() const noexcept { return c_.a6; }
    const FieldScalar& discriminant() const noexcept { return disc_; }

    const CurveCoeffs<FieldScalar>& coeffs() const noexcept { return c_; }
    CurveCoeffs<ExtensionElement> coeffs_in(const Extension& ext) const;

    // Constructs an affine point, verifying the curve equation.
    GroundPoint checked_point(const FieldScalar& x, const FieldScalar& y) const;
    ExtPoint checked_point_in(const Extension& ext, const ExtensionElement& x,
                              const ExtensionElement& y) const;

private:
    FieldDescriptor desc_;
    CurveCoeffs<FieldScalar> c_;
    FieldScalar disc_;
};

}  // namespace ectrace

#endif
