#ifndef ECTRACE_EXTENSION_HPP
#define ECTRACE_EXTENSION_HPP

#include <cstdint>
#include <memory>

#include "ectrace/poly.hpp"

namespace ectrace {

class ExtensionElement;

/*
 * A simple extension L = K[t]/T(t). The modulus is stored monic (scaling T
 * does not change the quotient ring). Irreducibility of T is a trusted
 * precondition; over a prime field it can be verified, and the constructor
 * does so unless the caller opts out. Over Q and k(lambda) no check is
 * performed and a reducible modulus surfaces later as a reducible-modulus
 * error from an inversion or as an exact-division failure.
 */
class Extension {
public:
    explicit Extension(const Polynomial& modulus, bool verify = true);

    // Skips the irreducibility check; for moduli that are irreducible by
    // construction.
    static Extension trusted(const Polynomial& modulus) { return Extension(modulus, false); }

    const FieldDescriptor& ground() const noexcept { return rep_->modulus.descriptor(); }
    const Polynomial& modulus() const noexcept { return rep_->modulus; }
    std::size_t degree() const noexcept {
        return static_cast<std::size_t>(rep_->modulus.degree());
    }

    ExtensionElement element(const Polynomial& rep) const;  // reduces mod T
    ExtensionElement from_ground(const FieldScalar& c) const;
    ExtensionElement generator() const;  // theta, the class of t
    ExtensionElement zero() const;
    ExtensionElement one() const;

    bool operator==(const Extension& other) const;
    bool operator!=(const Extension& other) const { return !(*this == other); }

private:
    struct Rep {
        Polynomial modulus;
    };

    std::shared_ptr<const Rep> rep_;
};

// Element of a simple extension, held as its reduced representative of
// degree < deg T. Immutable value type.
class ExtensionElement {
public:
    const Extension& parent() const noexcept { return parent_; }
    const Polynomial& rep() const noexcept { return rep_; }

    bool is_zero() const noexcept { return rep_.is_zero(); }
    bool is_one() const noexcept { return rep_.is_one(); }
    // The element lies in the ground field (its representative is constant).
    bool is_constant() const noexcept { return rep_.is_constant(); }
    FieldScalar constant_value() const { return rep_.constant_term(); }

    ExtensionElement operator-() const;
    ExtensionElement operator+(const ExtensionElement& rhs) const;
    ExtensionElement operator-(const ExtensionElement& rhs) const;
    ExtensionElement operator*(const ExtensionElement& rhs) const;
    ExtensionElement operator/(const ExtensionElement& rhs) const;
    ExtensionElement inverse() const;
    ExtensionElement pow(std::uint64_t n) const;
    ExtensionElement pow(const Integer& n) const;

    bool operator==(const ExtensionElement& rhs) const;
    bool operator!=(const ExtensionElement& rhs) const { return !(*this == rhs); }

private:
    friend class Extension;
    ExtensionElement(Extension parent, Polynomial rep)
        : parent_(std::move(parent)), rep_(std::move(rep)) {}

    void require_same_parent(const ExtensionElement& other) const;

    Extension parent_;
    Polynomial rep_;
};

// Rabin-style irreducibility test over a prime field: a monic T of degree n
// is irreducible iff it shares no factor with t^(p^i) - t for i <= n/2.
bool is_irreducible_over_prime_field(const Polynomial& t);

/*
 * Re-expresses an element over the subfield generated by theta^pd: returns
 * q of degree < target_deg with a = q(theta^pd), reading coefficient k of q
 * from coefficient k*pd of the representative. Any nonzero coefficient at an
 * index not divisible by pd means the element is not in the subfield.
 */
Polynomial subfield_coeffs(const ExtensionElement& a, std::uint64_t pd,
                           std::size_t target_deg);

}  // namespace ectrace

#endif
