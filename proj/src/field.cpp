#include "ectrace/field.hpp"

#include <cassert>
#include <utility>

#include "ectrace/poly.hpp"

namespace ectrace {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw DivisionByZeroError();
    // Extended Euclid on signed 128-bit intermediates.
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    assert(r == 1);
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                                29ULL, 31ULL, 37ULL}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is known to decide primality for all n < 3.3 * 10^24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/* ----------------------------- FieldDescriptor -------------------------- */

FieldDescriptor FieldDescriptor::rationals() {
    return FieldDescriptor(FieldKind::Rationals, 0);
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 63))
        throw UsageError("prime-field modulus must fit in a machine word");
    if (!is_prime(p))
        throw UsageError("prime-field modulus " + std::to_string(p) + " is not prime");
    return FieldDescriptor(FieldKind::PrimeField, p);
}

FieldDescriptor FieldDescriptor::rational_functions(const FieldDescriptor& base) {
    if (base.kind() == FieldKind::RationalFunctions)
        throw UsageError("nested rational-function fields are not supported");
    return FieldDescriptor(FieldKind::RationalFunctions, base.p_);
}

std::uint64_t FieldDescriptor::prime() const {
    if (kind_ != FieldKind::PrimeField)
        throw UsageError("descriptor is not a prime field");
    return p_;
}

FieldDescriptor FieldDescriptor::base() const {
    if (kind_ != FieldKind::RationalFunctions)
        throw UsageError("descriptor is not a rational-function field");
    return p_ == 0 ? rationals() : prime_field(p_);
}

/* ------------------------------- FieldScalar ---------------------------- */

// Reduced fraction of base-field polynomials; the denominator is monic and
// the pair has trivial gcd. Shared immutably between copies of a scalar.
struct RationalFunctionRep {
    Polynomial num;
    Polynomial den;
};

namespace {

using RatFuncPtr = std::shared_ptr<const RationalFunctionRep>;

const RatFuncPtr& rf(const std::variant<std::uint64_t, Rational, RatFuncPtr>& p) {
    return std::get<RatFuncPtr>(p);
}

}  // namespace

FieldScalar FieldScalar::zero(const FieldDescriptor& desc) {
    return from_integer(desc, 0);
}

FieldScalar FieldScalar::one(const FieldDescriptor& desc) {
    return from_integer(desc, 1);
}

FieldScalar FieldScalar::from_integer(const FieldDescriptor& desc, const Integer& n) {
    switch (desc.kind()) {
        case FieldKind::Rationals:
            return FieldScalar(desc, Rational(n));
        case FieldKind::PrimeField: {
            Integer r = n % desc.prime();
            if (r < 0) r += desc.prime();
            return FieldScalar(desc, r.convert_to<std::uint64_t>());
        }
        case FieldKind::RationalFunctions: {
            const FieldDescriptor base = desc.base();
            return from_fraction(desc, Polynomial::constant(from_integer(base, n)),
                                 Polynomial::constant(one(base)));
        }
    }
    throw UsageError("unknown field kind");
}

FieldScalar FieldScalar::from_integer(const FieldDescriptor& desc, long long n) {
    return from_integer(desc, Integer(n));
}

FieldScalar FieldScalar::from_rational(const Rational& q) {
    // A caller-built rational may not be canonical (GMP requires reduced
    // form with positive denominator); dividing integers restores it.
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 0) throw DivisionByZeroError();
    if (den == 1) return FieldScalar(FieldDescriptor::rationals(), Rational(num));
    return FieldScalar(FieldDescriptor::rationals(), Rational(num) / Rational(den));
}

FieldScalar FieldScalar::from_residue(std::uint64_t p, std::uint64_t value) {
    FieldDescriptor desc = FieldDescriptor::prime_field(p);
    return FieldScalar(desc, value % p);
}

FieldScalar FieldScalar::from_fraction(const FieldDescriptor& desc, const Polynomial& num,
                                       const Polynomial& den) {
    if (desc.kind() != FieldKind::RationalFunctions)
        throw UsageError("from_fraction requires a rational-function descriptor");
    const FieldDescriptor base = desc.base();
    if (num.descriptor() != base || den.descriptor() != base)
        throw UsageError("fraction parts must live over the base field");
    if (den.is_zero()) throw DivisionByZeroError();
    if (num.is_zero()) {
        return FieldScalar(desc, std::make_shared<const RationalFunctionRep>(
                                     RationalFunctionRep{num, Polynomial::constant(one(base))}));
    }
    Polynomial n = num, d = den;
    Polynomial g = gcd(n, d);
    if (g.degree() > 0) {
        n = Polynomial::divrem(n, g).first;
        d = Polynomial::divrem(d, g).first;
    }
    // Normalize the denominator monic so equality is structural.
    const FieldScalar lead = d.leading();
    if (!lead.is_one()) {
        const FieldScalar inv = lead.inverse();
        n = n.scaled(inv);
        d = d.scaled(inv);
    }
    return FieldScalar(desc, std::make_shared<const RationalFunctionRep>(
                                 RationalFunctionRep{std::move(n), std::move(d)}));
}

FieldScalar FieldScalar::indeterminate(const FieldDescriptor& desc) {
    if (desc.kind() != FieldKind::RationalFunctions)
        throw UsageError("only rational-function fields have an indeterminate");
    const FieldDescriptor base = desc.base();
    return from_fraction(desc, Polynomial::monomial(one(base), 1),
                         Polynomial::constant(one(base)));
}

void FieldScalar::require_same_descriptor(const FieldScalar& other) const {
    if (desc_ != other.desc_)
        throw UsageError("field elements have mismatched descriptors");
}

bool FieldScalar::is_zero() const {
    if (const auto* r = std::get_if<std::uint64_t>(&payload_)) return *r == 0;
    if (const auto* q = std::get_if<Rational>(&payload_)) return *q == 0;
    return rf(payload_)->num.is_zero();
}

bool FieldScalar::is_one() const {
    if (const auto* r = std::get_if<std::uint64_t>(&payload_)) return *r == 1;
    if (const auto* q = std::get_if<Rational>(&payload_)) return *q == 1;
    return rf(payload_)->num.is_one() && rf(payload_)->den.is_one();
}

FieldScalar FieldScalar::operator-() const {
    if (const auto* r = std::get_if<std::uint64_t>(&payload_)) {
        const std::uint64_t p = desc_.prime();
        return FieldScalar(desc_, *r == 0 ? 0 : p - *r);
    }
    if (const auto* q = std::get_if<Rational>(&payload_))
        return FieldScalar(desc_, Rational(-*q));
    const auto& r = *rf(payload_);
    return from_fraction(desc_, -r.num, r.den);
}

FieldScalar FieldScalar::operator+(const FieldScalar& rhs) const {
    require_same_descriptor(rhs);
    if (const auto* a = std::get_if<std::uint64_t>(&payload_)) {
        const std::uint64_t p = desc_.prime();
        const std::uint64_t b = std::get<std::uint64_t>(rhs.payload_);
        const std::uint64_t s = *a + b;
        return FieldScalar(desc_, s >= p ? s - p : s);
    }
    if (const auto* a = std::get_if<Rational>(&payload_))
        return FieldScalar(desc_, Rational(*a + std::get<Rational>(rhs.payload_)));
    const auto& a = *rf(payload_);
    const auto& b = *rf(rhs.payload_);
    return from_fraction(desc_, a.num * b.den + b.num * a.den, a.den * b.den);
}

FieldScalar FieldScalar::operator-(const FieldScalar& rhs) const {
    return *this + (-rhs);
}

FieldScalar FieldScalar::operator*(const FieldScalar& rhs) const {
    require_same_descriptor(rhs);
    if (const auto* a = std::get_if<std::uint64_t>(&payload_)) {
        return FieldScalar(desc_,
                           mul_mod(*a, std::get<std::uint64_t>(rhs.payload_), desc_.prime()));
    }
    if (const auto* a = std::get_if<Rational>(&payload_))
        return FieldScalar(desc_, Rational(*a * std::get<Rational>(rhs.payload_)));
    const auto& a = *rf(payload_);
    const auto& b = *rf(rhs.payload_);
    return from_fraction(desc_, a.num * b.num, a.den * b.den);
}

FieldScalar FieldScalar::operator/(const FieldScalar& rhs) const {
    return *this * rhs.inverse();
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    if (const auto* r = std::get_if<std::uint64_t>(&payload_))
        return FieldScalar(desc_, inv_mod(*r, desc_.prime()));
    if (const auto* q = std::get_if<Rational>(&payload_))
        return FieldScalar(desc_, Rational(1 / *q));
    const auto& r = *rf(payload_);
    return from_fraction(desc_, r.den, r.num);
}

bool FieldScalar::operator==(const FieldScalar& rhs) const {
    if (desc_ != rhs.desc_) return false;
    if (const auto* a = std::get_if<std::uint64_t>(&payload_))
        return *a == std::get<std::uint64_t>(rhs.payload_);
    if (const auto* a = std::get_if<Rational>(&payload_))
        return *a == std::get<Rational>(rhs.payload_);
    const auto& a = rf(payload_);
    const auto& b = rf(rhs.payload_);
    if (a == b) return true;
    return a->num == b->num && a->den == b->den;
}

const Rational& FieldScalar::rational_value() const {
    if (desc_.kind() != FieldKind::Rationals)
        throw UsageError("scalar is not a rational number");
    return std::get<Rational>(payload_);
}

std::uint64_t FieldScalar::residue_value() const {
    if (desc_.kind() != FieldKind::PrimeField)
        throw UsageError("scalar is not a prime-field residue");
    return std::get<std::uint64_t>(payload_);
}

const Polynomial& FieldScalar::numerator() const {
    if (desc_.kind() != FieldKind::RationalFunctions)
        throw UsageError("scalar is not a rational function");
    return rf(payload_)->num;
}

const Polynomial& FieldScalar::denominator() const {
    if (desc_.kind() != FieldKind::RationalFunctions)
        throw UsageError("scalar is not a rational function");
    return rf(payload_)->den;
}

}  // namespace ectrace
