#ifndef ECTRACE_TEST_HELPERS_HPP
#define ECTRACE_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "ectrace/curve.hpp"
#include "ectrace/io.hpp"
#include "ectrace/linalg.hpp"
#include "ectrace/poly.hpp"

namespace ectrace::testing {

inline FieldDescriptor q_field() { return FieldDescriptor::rationals(); }
inline FieldDescriptor fp(std::uint64_t p) { return FieldDescriptor::prime_field(p); }
inline FieldDescriptor fp_lambda(std::uint64_t p) {
    return FieldDescriptor::rational_functions(fp(p));
}
inline FieldDescriptor q_lambda() {
    return FieldDescriptor::rational_functions(q_field());
}

inline FieldScalar sc(const FieldDescriptor& d, std::string_view s) {
    return parse_scalar(d, s);
}
inline Polynomial pl(const FieldDescriptor& d, std::string_view s) {
    return parse_polynomial(d, s);
}

// A polynomial in lambda over the base field, extracted from the scalar
// grammar of the corresponding function field.
inline Polynomial lambda_poly(std::uint64_t p, std::string_view s) {
    return parse_scalar(fp_lambda(p), s).numerator();
}

// Test-local randomness, independent of the library's generators.
inline FieldScalar random_scalar(std::mt19937_64& rng, const FieldDescriptor& desc) {
    auto pick = [&](std::uint64_t bound) {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
    };
    switch (desc.kind()) {
        case FieldKind::Rationals:
            return FieldScalar::from_rational(
                Rational(static_cast<long long>(pick(41)) - 20,
                         1 + static_cast<long long>(pick(7))));
        case FieldKind::PrimeField:
            return FieldScalar::from_residue(desc.prime(), pick(desc.prime()));
        case FieldKind::RationalFunctions: {
            const FieldDescriptor base = desc.base();
            std::vector<FieldScalar> num, den;
            for (int i = 0; i < 3; ++i) num.push_back(random_scalar(rng, base));
            den.push_back(random_scalar(rng, base));
            den.push_back(FieldScalar::one(base));
            return FieldScalar::from_fraction(desc, Polynomial(base, num),
                                              Polynomial(base, den));
        }
    }
    throw UsageError("unknown kind");
}

inline Polynomial random_poly(std::mt19937_64& rng, const FieldDescriptor& desc,
                              unsigned max_degree) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    const unsigned n = deg(rng);
    std::vector<FieldScalar> cs;
    for (unsigned i = 0; i <= n; ++i) cs.push_back(random_scalar(rng, desc));
    return Polynomial(desc, std::move(cs));
}

inline Matrix random_matrix(std::mt19937_64& rng, const FieldDescriptor& desc,
                            std::size_t rows, std::size_t cols) {
    Matrix m(desc, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, desc);
    return m;
}

// Independent rank computation by plain row reduction (test oracle; kept
// separate from the library's kernel code on purpose).
inline std::size_t rank_by_row_reduction(Matrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            const FieldScalar f = m.at(i, col) / m.at(rank, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
            }
        }
        ++rank;
    }
    return rank;
}

// a == k * b for some nonzero scalar k.
inline bool proportional(const std::vector<FieldScalar>& a,
                         const std::vector<FieldScalar>& b) {
    if (a.size() != b.size()) return false;
    std::optional<FieldScalar> k;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) return false;
        if (a[i].is_zero()) continue;
        FieldScalar ratio = a[i] / b[i];
        if (!k) {
            k = ratio;
        } else if (*k != ratio) {
            return false;
        }
    }
    return true;
}

inline bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return false;
    std::vector<FieldScalar> ca, cb;
    for (int i = 0; i <= a.degree(); ++i) {
        ca.push_back(a.coeff(static_cast<std::size_t>(i)));
        cb.push_back(b.coeff(static_cast<std::size_t>(i)));
    }
    return proportional(ca, cb);
}

// All points of E over a small prime field, found by scanning coordinates.
inline std::vector<GroundPoint> enumerate_points(const WeierstrassCurve& curve) {
    const std::uint64_t p = curve.descriptor().prime();
    std::vector<GroundPoint> points;
    points.push_back(GroundPoint::infinity());
    for (std::uint64_t xi = 0; xi < p; ++xi) {
        for (std::uint64_t yi = 0; yi < p; ++yi) {
            const FieldScalar x = FieldScalar::from_residue(p, xi);
            const FieldScalar y = FieldScalar::from_residue(p, yi);
            const GroundPoint pt = GroundPoint::affine(x, y);
            if (on_curve(curve.coeffs(), pt)) points.push_back(pt);
        }
    }
    return points;
}

}  // namespace ectrace::testing

#endif
