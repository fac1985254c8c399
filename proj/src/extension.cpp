#include "ectrace/extension.hpp"

#include <cassert>

#include <boost/multiprecision/gmp.hpp>

namespace ectrace {

Extension::Extension(const Polynomial& modulus, bool verify) {
    if (modulus.degree() < 1)
        throw UsageError("extension modulus must have degree at least 1");
    Polynomial t = modulus.monic();
    if (verify && t.descriptor().kind() == FieldKind::PrimeField &&
        !is_irreducible_over_prime_field(t)) {
        throw ReducibleModulusError("extension modulus is reducible");
    }
    rep_ = std::make_shared<const Rep>(Rep{std::move(t)});
}

ExtensionElement Extension::element(const Polynomial& rep) const {
    if (rep.descriptor() != ground())
        throw UsageError("element representative has a mismatched descriptor");
    if (rep.degree() < modulus().degree()) return ExtensionElement(*this, rep);
    return ExtensionElement(*this, Polynomial::divrem(rep, modulus()).second);
}

ExtensionElement Extension::from_ground(const FieldScalar& c) const {
    if (c.descriptor() != ground())
        throw UsageError("scalar does not live over the ground field");
    return ExtensionElement(*this, Polynomial::constant(c));
}

ExtensionElement Extension::generator() const {
    return element(Polynomial::identity_power(ground(), 1));
}

ExtensionElement Extension::zero() const {
    return ExtensionElement(*this, Polynomial(ground()));
}

ExtensionElement Extension::one() const {
    return from_ground(FieldScalar::one(ground()));
}

bool Extension::operator==(const Extension& other) const {
    return rep_ == other.rep_ || rep_->modulus == other.rep_->modulus;
}

void ExtensionElement::require_same_parent(const ExtensionElement& other) const {
    if (parent_ != other.parent_)
        throw UsageError("extension elements have mismatched parents");
}

ExtensionElement ExtensionElement::operator-() const {
    return ExtensionElement(parent_, -rep_);
}

ExtensionElement ExtensionElement::operator+(const ExtensionElement& rhs) const {
    require_same_parent(rhs);
    return ExtensionElement(parent_, rep_ + rhs.rep_);
}

ExtensionElement ExtensionElement::operator-(const ExtensionElement& rhs) const {
    require_same_parent(rhs);
    return ExtensionElement(parent_, rep_ - rhs.rep_);
}

ExtensionElement ExtensionElement::operator*(const ExtensionElement& rhs) const {
    require_same_parent(rhs);
    Polynomial prod = rep_ * rhs.rep_;
    if (prod.degree() < parent_.modulus().degree())
        return ExtensionElement(parent_, std::move(prod));
    return ExtensionElement(parent_, Polynomial::divrem(prod, parent_.modulus()).second);
}

ExtensionElement ExtensionElement::operator/(const ExtensionElement& rhs) const {
    return *this * rhs.inverse();
}

ExtensionElement ExtensionElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    BezoutIdentity id = extended_gcd(rep_, parent_.modulus());
    if (id.g.degree() != 0) {
        // gcd(rep, T) != 1 certifies a factor of T.
        throw ReducibleModulusError("modulus is reducible: element is a zero divisor");
    }
    // g is monic, hence exactly 1, and u * rep = 1 mod T.
    return parent_.element(id.u);
}

ExtensionElement ExtensionElement::pow(std::uint64_t n) const {
    ExtensionElement result = parent_.one();
    ExtensionElement sq = *this;
    while (n != 0) {
        if (n & 1) result = result * sq;
        if ((n >>= 1) != 0) sq = sq * sq;
    }
    return result;
}

ExtensionElement ExtensionElement::pow(const Integer& n) const {
    if (n < 0) throw UsageError("negative exponent; invert explicitly");
    ExtensionElement result = parent_.one();
    ExtensionElement sq = *this;
    Integer e = n;
    while (e != 0) {
        if (boost::multiprecision::bit_test(e, 0)) result = result * sq;
        e >>= 1;
        if (e != 0) sq = sq * sq;
    }
    return result;
}

bool ExtensionElement::operator==(const ExtensionElement& rhs) const {
    return parent_ == rhs.parent_ && rep_ == rhs.rep_;
}

bool is_irreducible_over_prime_field(const Polynomial& t) {
    if (t.descriptor().kind() != FieldKind::PrimeField)
        throw UsageError("irreducibility test requires a prime ground field");
    const int n = t.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const std::uint64_t p = t.descriptor().prime();
    const Polynomial tm = t.monic();
    const Polynomial x = Polynomial::identity_power(t.descriptor(), 1);

    // Successively compute t^(p^i) mod T; any common factor with t^(p^i) - t
    // would be a factor of T of degree dividing i.
    Polynomial frob = Polynomial::divrem(x, tm).second;
    for (int i = 1; i <= n / 2; ++i) {
        Polynomial next = Polynomial::constant(FieldScalar::one(t.descriptor()));
        // frob^p mod T by square and multiply.
        Polynomial sq = frob;
        std::uint64_t e = p;
        while (e != 0) {
            if (e & 1) next = Polynomial::divrem(next * sq, tm).second;
            if ((e >>= 1) != 0) sq = Polynomial::divrem(sq * sq, tm).second;
        }
        frob = std::move(next);
        if (gcd(tm, frob - x).degree() != 0) return false;
    }
    return true;
}

Polynomial subfield_coeffs(const ExtensionElement& a, std::uint64_t pd,
                           std::size_t target_deg) {
    const std::size_t d = a.parent().degree();
    if (pd < 1 || d % pd != 0 || target_deg != d / pd)
        throw UsageError("inconsistent subfield decimation parameters");
    const Polynomial& rep = a.rep();
    std::vector<FieldScalar> out(target_deg, FieldScalar::zero(rep.descriptor()));
    const auto& cs = rep.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        if (i % pd != 0)
            throw NotInSubfieldError("element does not lie in the expected subfield");
        out[i / pd] = cs[i];
    }
    return Polynomial(rep.descriptor(), std::move(out));
}

}  // namespace ectrace
