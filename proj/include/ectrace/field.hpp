#ifndef ECTRACE_FIELD_HPP
#define ECTRACE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <variant>

#include <boost/multiprecision/gmp.hpp>

#include "ectrace/error.hpp"

namespace ectrace {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

class Polynomial;
struct RationalFunctionRep;

enum class FieldKind {
    Rationals,          // Q
    PrimeField,         // F_p, p a word-sized prime
    RationalFunctions,  // k(lambda) with k = Q or F_p
};

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime(std::uint64_t n);

/*
 * Identifies a concrete ground field. Supported fields are Q, F_p for a
 * word-sized prime p, and one level of rational functions k(lambda) over
 * either of those (no nested function fields).
 */
class FieldDescriptor {
public:
    static FieldDescriptor rationals();
    static FieldDescriptor prime_field(std::uint64_t p);
    static FieldDescriptor rational_functions(const FieldDescriptor& base);

    FieldKind kind() const noexcept { return kind_; }

    // 0 for Q and Q(lambda), p otherwise.
    std::uint64_t characteristic() const noexcept { return p_; }

    // The modulus of a PrimeField descriptor.
    std::uint64_t prime() const;

    // The coefficient field of a RationalFunctions descriptor.
    FieldDescriptor base() const;

    bool operator==(const FieldDescriptor& other) const noexcept {
        return kind_ == other.kind_ && p_ == other.p_;
    }
    bool operator!=(const FieldDescriptor& other) const noexcept {
        return !(*this == other);
    }

private:
    FieldDescriptor(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;  // characteristic; doubles as the modulus of F_p
};

/*
 * An element of a ground field, always held in canonical form:
 *   - rationals are gcd-reduced with positive denominator,
 *   - prime-field residues lie in [0, p),
 *   - rational functions are gcd-reduced with a monic denominator.
 * Canonical form makes equality structural. Values are immutable; every
 * operation returns a fresh scalar.
 */
class FieldScalar {
public:
    static FieldScalar zero(const FieldDescriptor& desc);
    static FieldScalar one(const FieldDescriptor& desc);
    static FieldScalar from_integer(const FieldDescriptor& desc, const Integer& n);
    static FieldScalar from_integer(const FieldDescriptor& desc, long long n);
    static FieldScalar from_rational(const Rational& q);
    static FieldScalar from_residue(std::uint64_t p, std::uint64_t value);
    // num/den over the base field of a RationalFunctions descriptor; reduced
    // and denominator-normalized here.
    static FieldScalar from_fraction(const FieldDescriptor& desc, const Polynomial& num,
                                     const Polynomial& den);
    // The indeterminate lambda of a RationalFunctions descriptor.
    static FieldScalar indeterminate(const FieldDescriptor& desc);

    const FieldDescriptor& descriptor() const noexcept { return desc_; }

    bool is_zero() const;
    bool is_one() const;

    FieldScalar operator-() const;
    FieldScalar operator+(const FieldScalar& rhs) const;
    FieldScalar operator-(const FieldScalar& rhs) const;
    FieldScalar operator*(const FieldScalar& rhs) const;
    FieldScalar operator/(const FieldScalar& rhs) const;
    FieldScalar inverse() const;

    bool operator==(const FieldScalar& rhs) const;
    bool operator!=(const FieldScalar& rhs) const { return !(*this == rhs); }

    // Payload accessors; each one requires the matching kind.
    const Rational& rational_value() const;
    std::uint64_t residue_value() const;
    const Polynomial& numerator() const;
    const Polynomial& denominator() const;

private:
    using RatFuncPtr = std::shared_ptr<const RationalFunctionRep>;
    using Payload = std::variant<std::uint64_t, Rational, RatFuncPtr>;

    FieldScalar(FieldDescriptor desc, Payload payload)
        : desc_(desc), payload_(std::move(payload)) {}

    void require_same_descriptor(const FieldScalar& other) const;

    FieldDescriptor desc_;
    Payload payload_;
};

}  // namespace ectrace

#endif
