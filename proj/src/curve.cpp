#include "ectrace/curve.hpp"

#include <cassert>

#include "ectrace/io.hpp"

namespace ectrace {

namespace {

FieldScalar discriminant_of(const CurveCoeffs<FieldScalar>& c) {
    const FieldDescriptor& desc = c.a1.descriptor();
    auto k = [&](long long n) { return FieldScalar::from_integer(desc, n); };
    const FieldScalar b2 = c.a1 * c.a1 + k(4) * c.a2;
    const FieldScalar b4 = k(2) * c.a4 + c.a1 * c.a3;
    const FieldScalar b6 = c.a3 * c.a3 + k(4) * c.a6;
    const FieldScalar b8 = c.a1 * c.a1 * c.a6 + k(4) * c.a2 * c.a6 - c.a1 * c.a3 * c.a4 +
                           c.a2 * c.a3 * c.a3 - c.a4 * c.a4;
    assert(k(4) * b8 == b2 * b6 - b4 * b4);
    return -(b2 * b2 * b8) - k(8) * (b4 * b4 * b4) - k(27) * (b6 * b6) + k(9) * b2 * b4 * b6;
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(const FieldScalar& a1, const FieldScalar& a2,
                                   const FieldScalar& a3, const FieldScalar& a4,
                                   const FieldScalar& a6)
    : desc_(a1.descriptor()), c_{a1, a2, a3, a4, a6}, disc_(FieldScalar::zero(desc_)) {
    if (a2.descriptor() != desc_ || a3.descriptor() != desc_ || a4.descriptor() != desc_ ||
        a6.descriptor() != desc_) {
        throw UsageError("curve coefficients have mismatched descriptors");
    }
    disc_ = discriminant_of(c_);
    if (disc_.is_zero()) throw SingularCurveError("curve is singular (zero discriminant)");
}

CurveCoeffs<ExtensionElement> WeierstrassCurve::coeffs_in(const Extension& ext) const {
    if (ext.ground() != desc_)
        throw UsageError("extension does not lie over the curve's ground field");
    return {ext.from_ground(c_.a1), ext.from_ground(c_.a2), ext.from_ground(c_.a3),
            ext.from_ground(c_.a4), ext.from_ground(c_.a6)};
}

GroundPoint WeierstrassCurve::checked_point(const FieldScalar& x, const FieldScalar& y) const {
    if (x.descriptor() != desc_ || y.descriptor() != desc_)
        throw UsageError("point coordinates have mismatched descriptors");
    const FieldScalar residual = (y + c_.a1 * x + c_.a3) * y - curve_rhs(c_, x);
    if (!residual.is_zero()) {
        throw PointNotOnCurveError("point is not on the curve: residual " +
                                   format_scalar(residual));
    }
    return GroundPoint::affine(x, y);
}

ExtPoint WeierstrassCurve::checked_point_in(const Extension& ext, const ExtensionElement& x,
                                            const ExtensionElement& y) const {
    const CurveCoeffs<ExtensionElement> c = coeffs_in(ext);
    const ExtensionElement residual = (y + c.a1 * x + c.a3) * y - curve_rhs(c, x);
    if (!residual.is_zero()) {
        throw PointNotOnCurveError("point is not on the curve: residual " +
                                   format_polynomial(residual.rep(), 't'));
    }
    return ExtPoint::affine(x, y);
}

}  // namespace ectrace
