#ifndef ECTRACE_POLY_HPP
#define ECTRACE_POLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ectrace/field.hpp"

namespace ectrace {

/*
 * Dense univariate polynomial over a ground field. Coefficients are stored
 * in ascending degree with a nonzero leading coefficient; the zero
 * polynomial has an empty coefficient list and degree -1.
 *
 * Arithmetic is the naive schoolbook kind throughout; the degrees this
 * library works with never justify anything faster.
 */
class Polynomial {
public:
    explicit Polynomial(const FieldDescriptor& desc) : desc_(desc) {}
    Polynomial(const FieldDescriptor& desc, std::vector<FieldScalar> coeffs);

    static Polynomial zero(const FieldDescriptor& desc) { return Polynomial(desc); }
    static Polynomial constant(const FieldScalar& c);
    static Polynomial monomial(const FieldScalar& c, std::size_t degree);
    // t^degree with coefficient one.
    static Polynomial identity_power(const FieldDescriptor& desc, std::size_t degree);

    const FieldDescriptor& descriptor() const noexcept { return desc_; }
    const std::vector<FieldScalar>& coefficients() const noexcept { return coeffs_; }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_one() const;
    bool is_monic() const;

    // Coefficient of t^k; zero beyond the degree.
    FieldScalar coeff(std::size_t k) const;
    const FieldScalar& leading() const;
    FieldScalar constant_term() const { return coeff(0); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Polynomial scaled(const FieldScalar& c) const;
    Polynomial monic() const;
    Polynomial derivative() const;
    FieldScalar evaluate(const FieldScalar& at) const;

    // Euclidean division: num = quotient * den + remainder, deg rem < deg den.
    static std::pair<Polynomial, Polynomial> divrem(const Polynomial& num,
                                                    const Polynomial& den);

private:
    void require_same_descriptor(const Polynomial& other) const;
    void strip();

    FieldDescriptor desc_;
    std::vector<FieldScalar> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0. Remainders are re-normalized monic at every step
// to keep coefficients small over Q and k(lambda).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct BezoutIdentity {
    Polynomial g;  // monic gcd
    Polynomial u;
    Polynomial v;  // u*a + v*b = g
};

BezoutIdentity extended_gcd(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& base, std::size_t exponent);

}  // namespace ectrace

#endif
