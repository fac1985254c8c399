#include <doctest.h>

#include "helpers.hpp"

using namespace ectrace;
using namespace ectrace::testing;

TEST_CASE("descriptor construction validates its arguments") {
    CHECK(fp(2).characteristic() == 2);
    CHECK(fp(2305843009213693951ULL).prime() == 2305843009213693951ULL);  // 2^61 - 1
    CHECK_THROWS_AS(FieldDescriptor::prime_field(4), UsageError);
    CHECK_THROWS_AS(FieldDescriptor::prime_field(1), UsageError);
    CHECK_THROWS_AS(FieldDescriptor::rational_functions(fp_lambda(3)), UsageError);
    CHECK(q_field().characteristic() == 0);
    CHECK(q_lambda().characteristic() == 0);
    CHECK(fp_lambda(3).characteristic() == 3);
    CHECK(fp_lambda(3).base() == fp(3));
}

TEST_CASE("arithmetic matches the worked examples") {
    const auto q = q_field();
    CHECK(sc(q, "57/64") + sc(q, "7/64") == FieldScalar::one(q));
    CHECK(sc(q, "-4").inverse() == sc(q, "-1/4"));

    const auto f3 = fp(3);
    CHECK(sc(f3, "2") + sc(f3, "2") == sc(f3, "1"));
    CHECK(sc(f3, "2").inverse() == sc(f3, "2"));

    const auto f2l = fp_lambda(2);
    const FieldScalar a = sc(f2l, "(l^4+l^3+l)/(l^4+1)");
    CHECK((a + a).is_zero());
    const FieldScalar inv = sc(f2l, "l^4+1").inverse();
    CHECK(inv.numerator().is_one());
    CHECK(inv.denominator() == lambda_poly(2, "l^4+1"));
    CHECK(inv.denominator().is_monic());
}

TEST_CASE("parsing matches the worked examples") {
    CHECK(sc(q_field(), "-61/32") == FieldScalar::from_rational(Rational(-61, 32)));
    CHECK(sc(fp(3), "5") == sc(fp(3), "2"));

    const auto f2l = fp_lambda(2);
    const FieldScalar a = sc(f2l, "l^2/(l^6+l^4+l^2+1)");
    CHECK(a.numerator() == lambda_poly(2, "l^2"));
    CHECK(a.denominator() == lambda_poly(2, "l^6+l^4+l^2+1"));
}

TEST_CASE("canonical form is structural") {
    const auto f2l = fp_lambda(2);
    const auto f2 = fp(2);
    // Building from an unreduced, non-monic fraction lands on the same value.
    const Polynomial g = lambda_poly(2, "l^2+1");
    const FieldScalar direct =
        FieldScalar::from_fraction(f2l, lambda_poly(2, "l"), lambda_poly(2, "l+1"));
    const FieldScalar scaled = FieldScalar::from_fraction(f2l, lambda_poly(2, "l") * g,
                                                          lambda_poly(2, "l+1") * g);
    CHECK(direct == scaled);
    CHECK(scaled.denominator().is_monic());
    CHECK(gcd(scaled.numerator(), scaled.denominator()).is_one());

    // Rational payloads reduce and keep the denominator positive.
    const FieldScalar r = FieldScalar::from_rational(Rational(10) / Rational(-4));
    CHECK(r == sc(q_field(), "-5/2"));
    CHECK(sc(q_field(), "10") / sc(q_field(), "-4") == sc(q_field(), "-5/2"));
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 rng(20260810);
    for (const FieldDescriptor& desc :
         {q_field(), fp(3), fp(101), fp_lambda(2), q_lambda()}) {
        for (int i = 0; i < 1000; ++i) {
            const FieldScalar a = random_scalar(rng, desc);
            const FieldScalar b = random_scalar(rng, desc);
            const FieldScalar c = random_scalar(rng, desc);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE((a + (-a)).is_zero());
            if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("characteristic consistency") {
    for (const FieldDescriptor& desc : {fp(2), fp(3), fp(101), fp_lambda(2), fp_lambda(3)}) {
        FieldScalar sum = FieldScalar::zero(desc);
        for (std::uint64_t i = 0; i < desc.characteristic(); ++i) {
            sum = sum + FieldScalar::one(desc);
        }
        CHECK(sum.is_zero());
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(sc(q_field(), "1") + sc(fp(3), "1"), UsageError);
    CHECK_THROWS_AS(FieldScalar::zero(q_field()).inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(sc(fp(5), "3") / FieldScalar::zero(fp(5)), DivisionByZeroError);
    CHECK_THROWS_AS(FieldScalar::from_fraction(fp_lambda(2), lambda_poly(2, "l"),
                                                Polynomial::zero(fp(2))),
                    DivisionByZeroError);
}
