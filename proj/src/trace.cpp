#include "ectrace/trace.hpp"

#include <cassert>

#include "ectrace/io.hpp"

namespace ectrace {

TraceProblem::TraceProblem(WeierstrassCurve curve, const Polynomial& modulus,
                           const Polynomial& x, const Polynomial& y, bool verify_modulus)
    : curve_(std::move(curve)), ext_(modulus, verify_modulus),
      x_(Polynomial::divrem(x, ext_.modulus()).second),
      y_(Polynomial::divrem(y, ext_.modulus()).second) {
    if (modulus.descriptor() != curve_.descriptor())
        throw UsageError("modulus does not live over the curve's ground field");
    // The algorithms' input contract: (x(theta), y(theta)) lies on E.
    curve_.checked_point_in(ext_, ext_.element(x_), ext_.element(y_));
}

ExtPoint TraceProblem::point() const {
    return ExtPoint::affine(ext_.element(x_), ext_.element(y_));
}

std::pair<unsigned, Polynomial> insep_decompose(const Polynomial& t, std::uint64_t p) {
    if (p == 0) throw UsageError("inseparable decomposition requires positive characteristic");
    if (t.degree() < 1)
        throw UsageError("inseparable decomposition needs a nonconstant polynomial");

    // d is the p-adic valuation of the gcd of all exponents carrying a
    // nonzero coefficient; the leading index deg t > 0 keeps it finite.
    unsigned d = 0;
    std::uint64_t pd = 1;
    const auto& cs = t.coefficients();
    for (;;) {
        bool divisible = true;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (i % (pd * p) != 0 && !cs[i].is_zero()) {
                divisible = false;
                break;
            }
        }
        if (!divisible) break;
        pd *= p;
        ++d;
    }

    std::vector<FieldScalar> decimated;
    decimated.reserve(cs.size() / pd + 1);
    for (std::size_t i = 0; i < cs.size(); i += pd) decimated.push_back(cs[i]);
    return {d, Polynomial(t.descriptor(), std::move(decimated))};
}

namespace {

// U(x) and V(x) from the echelon kernel relation z over the basis
// 1, x, y, x^2, xy, ...: even slots (and the constant) feed U, odd slots
// from the third onward feed V, so that f = U(x) + V(x) y.
std::pair<Polynomial, Polynomial> split_relation(const std::vector<FieldScalar>& z,
                                                 const FieldDescriptor& desc,
                                                 std::size_t d) {
    std::vector<FieldScalar> u((d + 1) / 2 + 1, FieldScalar::zero(desc));
    std::vector<FieldScalar> v(d / 2 + 1, FieldScalar::zero(desc));
    u[0] = z[0];
    for (std::size_t j = 1; 2 * j - 1 <= d; ++j) u[j] = z[2 * j - 1];
    for (std::size_t j = 0; 2 * j + 2 <= d; ++j) v[j] = z[2 * j + 2];
    return {Polynomial(desc, std::move(u)), Polynomial(desc, std::move(v))};
}

}  // namespace

TraceWitness trace_separable(const TraceProblem& problem, bool record) {
    const WeierstrassCurve& curve = problem.curve();
    const FieldDescriptor& desc = curve.descriptor();
    const Extension& ext = problem.extension();
    const std::size_t d = ext.degree();

    TraceWitness w;
    SeparableRecord rec(ext.modulus());
    rec.d = d;

    // Constant x: the point either lives in K (trace [d]P) or is swapped
    // with its negative by every nontrivial embedding (trace O).
    if (problem.x().is_constant()) {
        if (problem.y().is_constant()) {
            rec.branch = TraceBranch::ConstantPoint;
            GroundPoint p = GroundPoint::affine(problem.x().constant_term(),
                                                problem.y().constant_term());
            w.result = multiply(curve.coeffs(), static_cast<long long>(d), p);
            if (record) w.sep = std::move(rec);
            return w;
        }
        rec.branch = TraceBranch::ConstantX;
        w.result = GroundPoint::infinity();
        if (record) w.sep = std::move(rec);
        return w;
    }

    // Values of the Riemann-Roch basis 1, x, y, x^2, xy, ... at P; each
    // entry past the third is x(theta) times the entry two slots back.
    const ExtensionElement xp = ext.element(problem.x());
    const ExtensionElement yp = ext.element(problem.y());
    std::vector<ExtensionElement> basis_values;
    basis_values.reserve(d + 1);
    basis_values.push_back(ext.one());
    basis_values.push_back(xp);
    basis_values.push_back(yp);
    for (std::size_t j = 3; j < d + 1; ++j) {
        basis_values.push_back(xp * basis_values[j - 2]);
    }

    Matrix m(desc, d, d + 1);
    for (std::size_t j = 0; j < d + 1; ++j) {
        const auto& cs = basis_values[j].rep().coefficients();
        for (std::size_t i = 0; i < cs.size(); ++i) m.at(i, j) = cs[i];
    }

    Matrix kernel = kernel_echelon(m);
    assert(kernel.cols() >= 1);  // d+1 vectors in a d-dimensional space
    std::vector<FieldScalar> z = kernel.column(0);

    auto [u, v] = split_relation(z, desc, d);
    if (record) {
        rec.basis_values = basis_values;
        rec.coefficient_matrix = m;
        rec.kernel = kernel;
        rec.relation = z;
        rec.u = u;
        rec.v = v;
    }

    if (v.is_zero()) {
        // f = U(x) is invariant under negation, so the conjugates of P pair
        // into opposites and their sum vanishes.
        rec.branch = TraceBranch::KernelVZero;
        w.result = GroundPoint::infinity();
        if (record) w.sep = std::move(rec);
        return w;
    }

    const Polynomial x_min_poly = minimal_polynomial(xp);

    // R = (x^3 + a2 x^2 + a4 x + a6) V^2 + (a1 x + a3) U V - U^2, the norm
    // form of f; it factors as X * S with S of degree at most one.
    const Polynomial cubic(desc, {curve.a6(), curve.a4(), curve.a2(), FieldScalar::one(desc)});
    const Polynomial a_line(desc, {curve.a3(), curve.a1()});
    const Polynomial r = cubic * v * v + a_line * u * v - u * u;

    auto [s, s_rem] = Polynomial::divrem(r, x_min_poly);
    if (!s_rem.is_zero())
        throw InconsistentInputError(
            "norm form is not divisible by the minimal polynomial; the modulus is "
            "reducible or inseparable, or the point is invalid");
    if (record) {
        rec.x_min_poly = x_min_poly;
        rec.r = r;
        rec.s = s;
    }

    if (s.degree() == 0) {
        rec.branch = TraceBranch::TraceZero;
        w.result = GroundPoint::infinity();
        if (record) w.sep = std::move(rec);
        return w;
    }
    if (s.degree() != 1)
        throw InconsistentInputError("quotient of the norm form has degree > 1");

    const FieldScalar xq = -(s.coeff(0) / s.coeff(1));
    const FieldScalar v_at = v.evaluate(xq);
    if (v_at.is_zero())
        throw InconsistentInputError("V vanishes at the root of S; invalid input");
    const FieldScalar yq = -(u.evaluate(xq) / v_at);
    const GroundPoint q = curve.checked_point(xq, yq);

    // The last index carrying a nonzero relation entry is deg f = d_P + 1.
    std::size_t d_p = 0;
    for (std::size_t j = d; j >= 1; --j) {
        if (!z[j].is_zero()) {
            d_p = j;
            break;
        }
    }
    assert(d_p >= 1);
    if (d % d_p != 0)
        throw InconsistentInputError("field-of-definition degree does not divide deg T");
    const long long multiplier = -static_cast<long long>(d / d_p);

    rec.branch = TraceBranch::General;
    rec.q = q;
    rec.d_p = d_p;
    rec.multiplier = multiplier;
    w.result = multiply(curve.coeffs(), multiplier, q);
    if (record) w.sep = std::move(rec);
    return w;
}

TraceWitness trace(const TraceProblem& problem, bool record) {
    const std::uint64_t p = problem.curve().descriptor().characteristic();
    if (p == 0) return trace_separable(problem, record);

    auto [d, sep_modulus] = insep_decompose(problem.modulus(), p);
    std::uint64_t pd = 1;
    for (unsigned i = 0; i < d; ++i) pd *= p;

    const Extension& ext = problem.extension();
    const ExtPoint q = multiply(problem.curve().coeffs_in(ext), static_cast<long long>(pd),
                                problem.point());

    TraceWitness w;
    InseparableRecord rec(sep_modulus);
    rec.p = p;
    rec.d = d;
    rec.pd = pd;
    rec.q = q;

    if (q.is_infinity()) {
        if (record) w.insep = std::move(rec);
        w.result = GroundPoint::infinity();
        return w;
    }

    // Q lives in the separable closure of K in L, whose K-basis is the
    // powers of theta^(p^d); re-read its coordinates over that basis.
    const std::size_t target_deg = static_cast<std::size_t>(sep_modulus.degree());
    const Polynomial xq = subfield_coeffs(q.x(), pd, target_deg);
    const Polynomial yq = subfield_coeffs(q.y(), pd, target_deg);
    rec.xq = xq;
    rec.yq = yq;

    TraceProblem reduced(problem.curve(), sep_modulus, xq, yq, /*verify_modulus=*/false);
    TraceWitness sep_w = trace_separable(reduced, record);
    if (record) {
        w.insep = std::move(rec);
        w.sep = std::move(sep_w.sep);
    }
    w.result = sep_w.result;
    return w;
}

}  // namespace ectrace
