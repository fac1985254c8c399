#include "ectrace/oracle.hpp"

#include <cassert>

#include "ectrace/document.hpp"

namespace ectrace {

namespace {

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

FieldScalar random_scalar(std::mt19937_64& rng, const FieldDescriptor& desc) {
    switch (desc.kind()) {
        case FieldKind::Rationals: {
            // Small integers: rational coefficient growth in downstream
            // arithmetic is steep enough without large seeds.
            const long long num = static_cast<long long>(uniform(rng, 7)) - 3;
            return FieldScalar::from_integer(desc, num);
        }
        case FieldKind::PrimeField:
            return FieldScalar::from_residue(desc.prime(), uniform(rng, desc.prime()));
        case FieldKind::RationalFunctions: {
            const FieldDescriptor base = desc.base();
            const unsigned deg = base.kind() == FieldKind::Rationals ? 2 : 3;
            std::vector<FieldScalar> cs;
            for (unsigned i = 0; i < deg; ++i) cs.push_back(random_scalar(rng, base));
            return FieldScalar::from_fraction(
                desc, Polynomial(base, std::move(cs)),
                Polynomial::constant(FieldScalar::one(base)));
        }
    }
    throw UsageError("unknown field kind");
}

Polynomial random_rep(std::mt19937_64& rng, const FieldDescriptor& desc, unsigned degree_bound) {
    std::vector<FieldScalar> cs;
    cs.reserve(degree_bound);
    for (unsigned i = 0; i < degree_bound; ++i) cs.push_back(random_scalar(rng, desc));
    return Polynomial(desc, std::move(cs));
}

ExtensionElement random_element(std::mt19937_64& rng, const Extension& ext) {
    return ext.element(random_rep(rng, ext.ground(), static_cast<unsigned>(ext.degree())));
}

Integer field_order(std::uint64_t p, std::size_t n) {
    Integer q = 1;
    for (std::size_t i = 0; i < n; ++i) q *= p;
    return q;
}

// Absolute trace to F_2 of an element of F_{2^n}.
ExtensionElement absolute_trace_char2(const ExtensionElement& a) {
    const std::size_t n = a.parent().degree();
    ExtensionElement acc = a;
    ExtensionElement power = a;
    for (std::size_t i = 1; i < n; ++i) {
        power = power * power;
        acc = acc + power;
    }
    return acc;
}

// Solves z^2 + z = d in F_{2^n}, assuming the absolute trace of d vanishes.
ExtensionElement artin_schreier_root(const ExtensionElement& d) {
    const Extension& ext = d.parent();
    const std::size_t n = ext.degree();
    if (n == 1) return ext.zero();  // trace 0 over F_2 means d = 0

    // Any element of trace 1 works as the auxiliary delta; the powers of the
    // generator span, so one of them has nonzero trace.
    ExtensionElement delta = ext.one();
    for (std::size_t j = 0; j < n; ++j) {
        delta = ext.generator().pow(static_cast<std::uint64_t>(j));
        if (absolute_trace_char2(delta).is_one()) break;
    }
    assert(absolute_trace_char2(delta).is_one());

    // z = sum_{i=1}^{n-1} S_i delta^(2^i) with S_i the partial trace sums.
    ExtensionElement z = ext.zero();
    ExtensionElement d_power = d;            // d^(2^(i-1))
    ExtensionElement partial = d;            // S_i
    ExtensionElement delta_power = delta * delta;  // delta^(2^i)
    for (std::size_t i = 1; i < n; ++i) {
        z = z + partial * delta_power;
        if (i + 1 < n) {
            d_power = d_power * d_power;
            partial = partial + d_power;
            delta_power = delta_power * delta_power;
        }
    }
    assert(z * z + z == d);
    return z;
}

// Square root in F_{p^n}, p odd, via Tonelli-Shanks; empty for non-residues.
std::optional<ExtensionElement> sqrt_odd_char(const ExtensionElement& a,
                                              std::mt19937_64& rng) {
    const Extension& ext = a.parent();
    if (a.is_zero()) return ext.zero();
    const Integer q = field_order(ext.ground().prime(), ext.degree());
    const Integer euler_exp = (q - 1) / 2;

    const ExtensionElement euler = a.pow(euler_exp);
    if (!euler.is_one()) return std::nullopt;

    Integer m = q - 1;
    unsigned s = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++s;
    }

    ExtensionElement nonresidue = ext.one();
    for (unsigned tries = 0;; ++tries) {
        if (tries > 256) throw ResourceLimitError("failed to find a quadratic non-residue");
        nonresidue = random_element(rng, ext);
        if (nonresidue.is_zero()) continue;
        if (!nonresidue.pow(euler_exp).is_one()) break;
    }

    ExtensionElement x = a.pow((m + 1) / 2);
    ExtensionElement t = a.pow(m);
    ExtensionElement c = nonresidue.pow(m);
    unsigned rounds = s;
    while (!t.is_one()) {
        unsigned i = 0;
        ExtensionElement probe = t;
        while (!probe.is_one()) {
            probe = probe * probe;
            ++i;
            assert(i < rounds);
        }
        ExtensionElement b = c;
        for (unsigned j = 0; j + i + 1 < rounds; ++j) b = b * b;
        x = x * b;
        c = b * b;
        t = t * c;
        rounds = i;
    }
    assert(x * x == a);
    return x;
}

}  // namespace

std::optional<ExtensionElement> solve_quadratic(const ExtensionElement& b,
                                                const ExtensionElement& c,
                                                std::mt19937_64& rng) {
    const Extension& ext = b.parent();
    if (ext.ground().kind() != FieldKind::PrimeField)
        throw UsageError("quadratic solving is supported over prime-field extensions only");
    const std::uint64_t p = ext.ground().prime();

    if (p == 2) {
        if (b.is_zero()) {
            // y^2 = c: squaring is bijective, the root is c^(2^(n-1)).
            ExtensionElement y = c;
            for (std::size_t i = 1; i < ext.degree(); ++i) y = y * y;
            assert(y * y == c);
            return y;
        }
        const ExtensionElement d = c / (b * b);
        if (!absolute_trace_char2(d).is_zero()) return std::nullopt;
        return b * artin_schreier_root(d);
    }

    // Complete the square: (y + b/2)^2 = c + b^2/4.
    const ExtensionElement half = ext.from_ground(
        FieldScalar::from_integer(ext.ground(), 2).inverse());
    const ExtensionElement shift = b * half;
    const ExtensionElement disc = c + shift * shift;
    std::optional<ExtensionElement> root = sqrt_odd_char(disc, rng);
    if (!root) return std::nullopt;
    return *root - shift;
}

GroundPoint frobenius_trace(const TraceProblem& problem) {
    const FieldDescriptor& desc = problem.curve().descriptor();
    if (desc.kind() != FieldKind::PrimeField)
        throw UsageError("the Frobenius oracle requires a prime ground field");
    const std::uint64_t p = desc.prime();
    const Extension& ext = problem.extension();
    const CurveCoeffs<ExtensionElement> c = problem.curve().coeffs_in(ext);

    ExtensionElement cx = ext.element(problem.x());
    ExtensionElement cy = ext.element(problem.y());
    ExtPoint acc = ExtPoint::infinity();
    for (std::size_t i = 0; i < ext.degree(); ++i) {
        acc = add(c, acc, ExtPoint::affine(cx, cy));
        cx = cx.pow(p);
        cy = cy.pow(p);
    }

    if (acc.is_infinity()) return GroundPoint::infinity();
    if (!acc.x().is_constant() || !acc.y().is_constant())
        throw InconsistentInputError(
            "conjugate sum has non-constant coordinates; the modulus is reducible");
    return GroundPoint::affine(acc.x().constant_value(), acc.y().constant_value());
}

Polynomial random_monic_irreducible(std::mt19937_64& rng, const FieldDescriptor& fp,
                                    unsigned degree) {
    if (fp.kind() != FieldKind::PrimeField)
        throw UsageError("irreducible sampling requires a prime field");
    if (degree == 0) throw UsageError("irreducible polynomials have degree at least 1");
    const std::uint64_t p = fp.prime();
    for (unsigned tries = 0; tries < 200 * degree; ++tries) {
        std::vector<FieldScalar> cs;
        cs.reserve(degree + 1);
        for (unsigned i = 0; i < degree; ++i)
            cs.push_back(FieldScalar::from_residue(p, uniform(rng, p)));
        cs.push_back(FieldScalar::one(fp));
        Polynomial t(fp, std::move(cs));
        if (is_irreducible_over_prime_field(t)) return t;
    }
    throw ResourceLimitError("failed to sample an irreducible polynomial");
}

WeierstrassCurve random_curve(std::mt19937_64& rng, const FieldDescriptor& desc) {
    for (unsigned tries = 0; tries < 1000; ++tries) {
        try {
            return WeierstrassCurve(random_scalar(rng, desc), random_scalar(rng, desc),
                                    random_scalar(rng, desc), random_scalar(rng, desc),
                                    random_scalar(rng, desc));
        } catch (const SingularCurveError&) {
        }
    }
    throw ResourceLimitError("failed to sample a nonsingular curve");
}

std::optional<ExtPoint> random_point(const WeierstrassCurve& curve, const Extension& ext,
                                     std::mt19937_64& rng, unsigned attempts) {
    const CurveCoeffs<ExtensionElement> c = curve.coeffs_in(ext);
    for (unsigned i = 0; i < attempts; ++i) {
        const ExtensionElement x = random_element(rng, ext);
        const ExtensionElement b = c.a1 * x + c.a3;
        const ExtensionElement rhs = curve_rhs(c, x);
        std::optional<ExtensionElement> y = solve_quadratic(b, rhs, rng);
        if (!y) continue;
        ExtPoint point = ExtPoint::affine(x, *y);
        assert(on_curve(c, point));
        return point;
    }
    return std::nullopt;
}

std::optional<ExtensionElement> find_root_by_search(const Polynomial& f,
                                                    const Extension& ext) {
    if (ext.ground().kind() != FieldKind::PrimeField)
        throw UsageError("exhaustive root search requires a prime field");
    const std::uint64_t p = ext.ground().prime();
    const std::size_t n = ext.degree();
    const Integer size = field_order(p, n);
    if (size > (1 << 22))
        throw ResourceLimitError("extension too large for exhaustive search");

    std::vector<std::uint64_t> digits(n, 0);
    const std::uint64_t total = size.convert_to<std::uint64_t>();
    for (std::uint64_t counter = 0; counter < total; ++counter) {
        std::vector<FieldScalar> cs;
        cs.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            cs.push_back(FieldScalar::from_residue(p, digits[i]));
        ExtensionElement candidate = ext.element(Polynomial(ext.ground(), std::move(cs)));

        ExtensionElement value = ext.zero();
        for (int k = f.degree(); k >= 0; --k) {
            value = value * candidate +
                    ext.from_ground(f.coeff(static_cast<std::size_t>(k)));
        }
        if (value.is_zero()) return candidate;

        for (std::size_t i = 0; i < n; ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
    }
    return std::nullopt;
}

TraceProblem make_general_instance(std::mt19937_64& rng, std::uint64_t p, unsigned degree) {
    const FieldDescriptor fp = FieldDescriptor::prime_field(p);
    for (unsigned tries = 0; tries < 64; ++tries) {
        Polynomial t = random_monic_irreducible(rng, fp, degree);
        Extension ext = Extension::trusted(t);
        WeierstrassCurve curve = random_curve(rng, fp);
        std::optional<ExtPoint> point = random_point(curve, ext, rng, 4 * (degree + 1));
        if (!point) continue;
        return TraceProblem(std::move(curve), t, point->x().rep(), point->y().rep(),
                            /*verify_modulus=*/false);
    }
    throw ResourceLimitError("failed to build a random trace instance");
}

std::optional<TraceProblem> make_rational_point_instance(std::mt19937_64& rng,
                                                         std::uint64_t p, unsigned degree) {
    const FieldDescriptor fp = FieldDescriptor::prime_field(p);
    const Extension line = Extension::trusted(Polynomial::identity_power(fp, 1));
    for (unsigned tries = 0; tries < 32; ++tries) {
        WeierstrassCurve curve = random_curve(rng, fp);
        std::optional<ExtPoint> point = random_point(curve, line, rng, 4 * (1 + 1));
        if (!point) continue;
        Polynomial t = random_monic_irreducible(rng, fp, degree);
        return TraceProblem(std::move(curve), t,
                            Polynomial::constant(point->x().constant_value()),
                            Polynomial::constant(point->y().constant_value()),
                            /*verify_modulus=*/false);
    }
    return std::nullopt;
}

std::optional<TraceProblem> make_constant_x_instance(std::mt19937_64& rng, std::uint64_t p) {
    const FieldDescriptor fp = FieldDescriptor::prime_field(p);
    const Extension line = Extension::trusted(Polynomial::identity_power(fp, 1));
    for (unsigned tries = 0; tries < 200; ++tries) {
        WeierstrassCurve curve = random_curve(rng, fp);
        const FieldScalar x0 = random_scalar(rng, fp);
        const FieldScalar b = curve.a1() * x0 + curve.a3();
        const FieldScalar c = curve_rhs(curve.coeffs(), x0);
        // Want y^2 + b y = c with no root in K, so that y generates a
        // quadratic extension; its conjugate is then the negated y.
        std::optional<ExtensionElement> root =
            solve_quadratic(line.from_ground(b), line.from_ground(c), rng);
        if (root) continue;
        const Polynomial modulus(fp, {-c, b, FieldScalar::one(fp)});
        return TraceProblem(std::move(curve), modulus, Polynomial::constant(x0),
                            Polynomial::identity_power(fp, 1), /*verify_modulus=*/false);
    }
    return std::nullopt;
}

std::optional<TraceProblem> make_collinear_instance(std::mt19937_64& rng, std::uint64_t p) {
    const FieldDescriptor fp = FieldDescriptor::prime_field(p);
    const FieldScalar one = FieldScalar::one(fp);
    const FieldScalar two = FieldScalar::from_integer(fp, 2);
    for (unsigned tries = 0; tries < 200; ++tries) {
        WeierstrassCurve curve = random_curve(rng, fp);
        const FieldScalar m = random_scalar(rng, fp);
        const FieldScalar c = random_scalar(rng, fp);
        // Monic cubic whose roots are the x-coordinates of E intersected
        // with the line y = m x + c; its three points are conjugate, sum to
        // the point at infinity, and give a trace-zero instance.
        const Polynomial modulus(
            fp, {curve.a6() - c * c - curve.a3() * c,
                 curve.a4() - two * m * c - curve.a1() * c - curve.a3() * m,
                 curve.a2() - m * m - curve.a1() * m, one});
        if (!is_irreducible_over_prime_field(modulus)) continue;
        const Polynomial x_poly = Polynomial::identity_power(fp, 1);
        const Polynomial y_poly(fp, {c, m});
        return TraceProblem(std::move(curve), modulus, x_poly, y_poly,
                            /*verify_modulus=*/false);
    }
    return std::nullopt;
}

std::optional<TraceProblem> make_paired_orbit_instance(std::mt19937_64& rng,
                                                       std::uint64_t p) {
    const FieldDescriptor fp = FieldDescriptor::prime_field(p);
    for (unsigned tries = 0; tries < 200; ++tries) {
        Polynomial t = random_monic_irreducible(rng, fp, 4);
        Extension ext = Extension::trusted(t);
        WeierstrassCurve curve = random_curve(rng, fp);
        const CurveCoeffs<ExtensionElement> c = curve.coeffs_in(ext);

        // x in the quadratic subfield (a relative trace lands there), y of
        // full degree: the four conjugates of (x, y) then pair into
        // opposites, which drives the algorithm through its V = 0 exit.
        const ExtensionElement w = random_element(rng, ext);
        const ExtensionElement x = w + w.pow(p).pow(p);
        if (x.pow(p) == x) continue;  // degenerated into the prime field
        std::optional<ExtensionElement> y =
            solve_quadratic(c.a1 * x + c.a3, curve_rhs(c, x), rng);
        if (!y) continue;
        if (y->pow(p).pow(p) == *y) continue;  // point defined over the subfield

        const Polynomial min_poly = minimal_polynomial(*y);
        if (min_poly.degree() != 4) continue;

        // Rewrite x over the power basis of y: the unique kernel relation of
        // [1, y, y^2, y^3, x] expresses x through lower powers.
        const FieldDescriptor& k = fp;
        Matrix powers(k, 4, 5);
        ExtensionElement acc = ext.one();
        for (std::size_t j = 0; j < 5; ++j) {
            const ExtensionElement& entry = (j < 4) ? acc : x;
            const auto& cs = entry.rep().coefficients();
            for (std::size_t i = 0; i < cs.size(); ++i) powers.at(i, j) = cs[i];
            if (j < 3) acc = acc * *y;
        }
        Matrix kernel = kernel_echelon(powers);
        if (kernel.cols() != 1 || kernel.at(4, 0).is_zero()) continue;
        std::vector<FieldScalar> rel = kernel.column(0);
        assert(rel[4].is_one());
        Polynomial x_poly(k, {-rel[0], -rel[1], -rel[2], -rel[3]});

        return TraceProblem(std::move(curve), min_poly, x_poly,
                            Polynomial::identity_power(k, 1), /*verify_modulus=*/false);
    }
    return std::nullopt;
}

Polynomial eisenstein_modulus(std::mt19937_64& rng, const FieldDescriptor& func_field,
                              unsigned sep_degree, unsigned insep_power) {
    if (func_field.kind() != FieldKind::RationalFunctions)
        throw UsageError("Eisenstein moduli live over rational-function fields");
    if (sep_degree < 1) throw UsageError("separable degree must be at least 1");
    const std::uint64_t p = func_field.characteristic();
    if (insep_power > 0 && p == 0)
        throw UsageError("inseparable moduli require positive characteristic");

    const FieldDescriptor base = func_field.base();
    auto lambda_multiple = [&](bool force_nonzero) {
        FieldScalar r = random_scalar(rng, base);
        if (force_nonzero && r.is_zero()) r = FieldScalar::one(base);
        return FieldScalar::from_fraction(
            func_field, Polynomial(base, {FieldScalar::zero(base), r}),
            Polynomial::constant(FieldScalar::one(base)));
    };

    // Eisenstein at the prime lambda of k[lambda]: every coefficient below
    // the leading one is divisible by lambda and the constant term exactly
    // once. Gauss's lemma then gives irreducibility over k(lambda).
    std::vector<FieldScalar> cs(sep_degree + 1, FieldScalar::zero(func_field));
    cs[sep_degree] = FieldScalar::one(func_field);
    cs[0] = lambda_multiple(/*force_nonzero=*/true);
    for (unsigned i = 1; i < sep_degree; ++i) {
        if (uniform(rng, 2) == 0) cs[i] = lambda_multiple(false);
    }
    // Keep S itself separable: some exponent must avoid the characteristic.
    if (p != 0 && sep_degree % p == 0 && sep_degree >= 2) {
        cs[1] = lambda_multiple(/*force_nonzero=*/true);
    }
    Polynomial s(func_field, std::move(cs));

    if (insep_power == 0) return s;
    std::uint64_t pd = 1;
    for (unsigned i = 0; i < insep_power; ++i) pd *= p;
    std::vector<FieldScalar> stretched(
        static_cast<std::size_t>(s.degree()) * pd + 1, FieldScalar::zero(func_field));
    for (std::size_t i = 0; i <= static_cast<std::size_t>(s.degree()); ++i) {
        stretched[i * pd] = s.coeff(i);
    }
    return Polynomial(func_field, std::move(stretched));
}

std::optional<TraceProblem> curve_through_generator(std::mt19937_64& rng,
                                                    const Polynomial& modulus) {
    const FieldDescriptor desc = modulus.descriptor();
    const int n = modulus.degree();
    if (n < 2 || n > 5)
        throw UsageError("curve fitting through the generator needs degree 2..5");
    const Extension ext = Extension::trusted(modulus);
    const ExtensionElement theta = ext.generator();

    for (unsigned tries = 0; tries < 64; ++tries) {
        const Polynomial y_poly = random_rep(rng, desc, static_cast<unsigned>(n));
        const ExtensionElement y = ext.element(y_poly);

        // The curve equation at (theta, y) is linear in (a1, a2, a3, a4, a6);
        // a kernel relation of the value columns with a unit last entry
        // yields curve coefficients through that point.
        const ExtensionElement columns[6] = {theta * y,        -(theta * theta),
                                             y,                -theta,
                                             -ext.one(),       y * y - theta.pow(3)};
        Matrix m(desc, static_cast<std::size_t>(n), 6);
        for (std::size_t j = 0; j < 6; ++j) {
            const auto& cs = columns[j].rep().coefficients();
            for (std::size_t i = 0; i < cs.size(); ++i) m.at(i, j) = cs[i];
        }
        Matrix kernel = kernel_echelon(m);
        if (kernel.cols() == 0) continue;
        const std::size_t last = kernel.cols() - 1;
        if (kernel.at(5, last).is_zero()) continue;
        std::vector<FieldScalar> z = kernel.column(last);
        assert(z[5].is_one());
        try {
            WeierstrassCurve curve(z[0], z[1], z[2], z[3], z[4]);
            return TraceProblem(std::move(curve), modulus,
                                Polynomial::identity_power(desc, 1), y_poly,
                                /*verify_modulus=*/false);
        } catch (const SingularCurveError&) {
        }
    }
    return std::nullopt;
}

InstanceGenerator::InstanceGenerator(std::uint64_t seed, const Plan& plan)
    : rng_(seed), plan_(plan) {
    if (plan_.min_degree < 1 || plan_.min_degree > plan_.max_degree)
        throw UsageError("invalid degree range");
}

TraceProblem InstanceGenerator::next() {
    const std::uint64_t p = plan_.characteristic;
    const unsigned span = plan_.max_degree - plan_.min_degree + 1;
    const unsigned degree = plan_.min_degree + static_cast<unsigned>(uniform(rng_, span));
    const std::uint64_t slot = index_++ % 25;

    auto in_range = [&](unsigned d) {
        return plan_.min_degree <= d && d <= plan_.max_degree;
    };

    std::optional<TraceProblem> special;
    if (slot == 5) {
        special = make_rational_point_instance(rng_, p, degree);
    } else if (slot == 10 && in_range(2)) {
        special = make_constant_x_instance(rng_, p);
    } else if (slot == 15 && in_range(3)) {
        special = make_collinear_instance(rng_, p);
    } else if (slot == 20 && in_range(4)) {
        special = make_paired_orbit_instance(rng_, p);
    }
    if (special) return std::move(*special);
    return make_general_instance(rng_, p, degree);
}

unsigned SelftestReport::total_instances() const {
    unsigned total = 0;
    for (const auto& pc : per_char) total += pc.instances;
    return total;
}

bool SelftestReport::covered_all_branches() const {
    unsigned trivial = 0, v_zero = 0, trace_zero = 0, general = 0;
    for (const auto& pc : per_char) {
        trivial += pc.branch_trivial;
        v_zero += pc.branch_v_zero;
        trace_zero += pc.branch_trace_zero;
        general += pc.branch_general;
    }
    return trivial > 0 && v_zero > 0 && trace_zero > 0 && general > 0;
}

SelftestReport run_selftest(const SelftestOptions& options, const TraceFunction& impl) {
    SelftestReport report;
    report.pass = true;

    for (const std::uint64_t p : options.characteristics) {
        SelftestReport::PerCharacteristic pc;
        pc.characteristic = p;
        const std::uint64_t seed = options.seed ^ (p * 0x9E3779B97F4A7C15ULL);
        InstanceGenerator gen(seed, {p, options.min_degree, options.max_degree});

        for (unsigned i = 0; i < options.count; ++i) {
            TraceProblem problem = gen.next();
            TraceWitness witness = trace(problem, /*record=*/true);
            const GroundPoint got = impl ? impl(problem) : witness.result;
            const GroundPoint expected = frobenius_trace(problem);
            ++pc.instances;

            if (witness.sep) {
                switch (witness.sep->branch) {
                    case TraceBranch::ConstantPoint:
                    case TraceBranch::ConstantX: ++pc.branch_trivial; break;
                    case TraceBranch::KernelVZero: ++pc.branch_v_zero; break;
                    case TraceBranch::TraceZero: ++pc.branch_trace_zero; break;
                    case TraceBranch::General: ++pc.branch_general; break;
                }
            }

            if (got != expected) {
                ++pc.mismatches;
                report.pass = false;
                if (report.counterexample.empty()) {
                    report.counterexample = problem_to_json(problem);
                    report.counterexample_seed = seed;
                }
            }
        }
        report.per_char.push_back(pc);
    }
    return report;
}

}  // namespace ectrace
