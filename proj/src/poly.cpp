#include "ectrace/poly.hpp"

#include <cassert>

namespace ectrace {

Polynomial::Polynomial(const FieldDescriptor& desc, std::vector<FieldScalar> coeffs)
    : desc_(desc), coeffs_(std::move(coeffs)) {
    for (const FieldScalar& c : coeffs_) {
        if (c.descriptor() != desc_)
            throw UsageError("polynomial coefficient has a mismatched descriptor");
    }
    strip();
}

Polynomial Polynomial::constant(const FieldScalar& c) {
    Polynomial p(c.descriptor());
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

Polynomial Polynomial::monomial(const FieldScalar& c, std::size_t degree) {
    Polynomial p(c.descriptor());
    if (c.is_zero()) return p;
    p.coeffs_.assign(degree, FieldScalar::zero(c.descriptor()));
    p.coeffs_.push_back(c);
    return p;
}

Polynomial Polynomial::identity_power(const FieldDescriptor& desc, std::size_t degree) {
    return monomial(FieldScalar::one(desc), degree);
}

bool Polynomial::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0].is_one();
}

bool Polynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
}

FieldScalar Polynomial::coeff(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return FieldScalar::zero(desc_);
}

const FieldScalar& Polynomial::leading() const {
    if (coeffs_.empty()) throw UsageError("the zero polynomial has no leading coefficient");
    return coeffs_.back();
}

void Polynomial::require_same_descriptor(const Polynomial& other) const {
    if (desc_ != other.desc_)
        throw UsageError("polynomials have mismatched descriptors");
}

void Polynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial out(desc_);
    out.coeffs_.reserve(coeffs_.size());
    for (const FieldScalar& c : coeffs_) out.coeffs_.push_back(-c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_descriptor(rhs);
    const std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
    Polynomial out(desc_);
    out.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.coeffs_.push_back(coeff(i) + rhs.coeff(i));
    out.strip();
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_descriptor(rhs);
    if (is_zero() || rhs.is_zero()) return Polynomial(desc_);
    Polynomial out(desc_);
    out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, FieldScalar::zero(desc_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out.coeffs_[i + j] = out.coeffs_[i + j] + coeffs_[i] * rhs.coeffs_[j];
        }
    }
    out.strip();
    assert(out.degree() == degree() + rhs.degree());
    return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (desc_ != rhs.desc_ || coeffs_.size() != rhs.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != rhs.coeffs_[i]) return false;
    }
    return true;
}

Polynomial Polynomial::scaled(const FieldScalar& c) const {
    if (c.descriptor() != desc_)
        throw UsageError("scaling factor has a mismatched descriptor");
    if (c.is_zero()) return Polynomial(desc_);
    Polynomial out(desc_);
    out.coeffs_.reserve(coeffs_.size());
    for (const FieldScalar& a : coeffs_) out.coeffs_.push_back(a * c);
    return out;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    if (is_monic()) return *this;
    return scaled(leading().inverse());
}

Polynomial Polynomial::derivative() const {
    Polynomial out(desc_);
    if (coeffs_.size() <= 1) return out;
    out.coeffs_.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out.coeffs_.push_back(coeffs_[i] * FieldScalar::from_integer(desc_, static_cast<long long>(i)));
    }
    out.strip();
    return out;
}

FieldScalar Polynomial::evaluate(const FieldScalar& at) const {
    if (at.descriptor() != desc_)
        throw UsageError("evaluation point has a mismatched descriptor");
    FieldScalar acc = FieldScalar::zero(desc_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& num,
                                                     const Polynomial& den) {
    num.require_same_descriptor(den);
    if (den.is_zero()) throw DivisionByZeroError();
    const FieldDescriptor& desc = num.desc_;
    if (num.degree() < den.degree()) return {Polynomial(desc), num};

    const std::size_t dn = num.coeffs_.size();
    const std::size_t dd = den.coeffs_.size();
    const FieldScalar lead_inv = den.leading().inverse();

    std::vector<FieldScalar> rem = num.coeffs_;
    std::vector<FieldScalar> quot(dn - dd + 1, FieldScalar::zero(desc));
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        FieldScalar q = rem[k + dd - 1] * lead_inv;
        if (q.is_zero()) continue;
        quot[k] = q;
        for (std::size_t i = 0; i < dd; ++i) {
            rem[k + i] = rem[k + i] - q * den.coeffs_[i];
        }
    }
    Polynomial qp(desc, std::move(quot));
    Polynomial rp(desc, std::move(rem));
    assert(rp.degree() < den.degree());
    return {std::move(qp), std::move(rp)};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Polynomial r = Polynomial::divrem(r0, r1).second;
        r0 = std::move(r1);
        r1 = r.monic();
    }
    return r0.monic();
}

BezoutIdentity extended_gcd(const Polynomial& a, const Polynomial& b) {
    const FieldDescriptor& desc = a.descriptor();
    Polynomial r0 = a, r1 = b;
    Polynomial u0 = Polynomial::constant(FieldScalar::one(desc)), u1 = Polynomial(desc);
    Polynomial v0 = Polynomial(desc), v1 = Polynomial::constant(FieldScalar::one(desc));
    while (!r1.is_zero()) {
        auto [q, r] = Polynomial::divrem(r0, r1);
        Polynomial u = u0 - q * u1;
        Polynomial v = v0 - q * v1;
        if (!r.is_zero() && !r.is_monic()) {
            const FieldScalar s = r.leading().inverse();
            r = r.scaled(s);
            u = u.scaled(s);
            v = v.scaled(s);
        }
        r0 = std::move(r1);
        u0 = std::move(u1);
        v0 = std::move(v1);
        r1 = std::move(r);
        u1 = std::move(u);
        v1 = std::move(v);
    }
    if (!r0.is_zero() && !r0.is_monic()) {
        const FieldScalar s = r0.leading().inverse();
        r0 = r0.scaled(s);
        u0 = u0.scaled(s);
        v0 = v0.scaled(s);
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

Polynomial pow(const Polynomial& base, std::size_t exponent) {
    Polynomial result = Polynomial::constant(FieldScalar::one(base.descriptor()));
    Polynomial sq = base;
    while (exponent != 0) {
        if (exponent & 1) result = result * sq;
        if ((exponent >>= 1) != 0) sq = sq * sq;
    }
    return result;
}

}  // namespace ectrace
