#ifndef ECTRACE_ORACLE_HPP
#define ECTRACE_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ectrace/trace.hpp"

namespace ectrace {

/*
 * Independent ground truth over a prime field: sums the full Frobenius orbit
 * (x^(p^i), y^(p^i)) of the point under the group law of E over L and checks
 * that both coordinates of the sum are constants. Finite fields are perfect,
 * so no inseparable weighting is involved.
 */
GroundPoint frobenius_trace(const TraceProblem& problem);

// Uniformly random monic irreducible polynomial of the given degree,
// by rejection against the gcd-with-Frobenius-powers test.
Polynomial random_monic_irreducible(std::mt19937_64& rng, const FieldDescriptor& fp,
                                    unsigned degree);

// Random nonsingular curve with small coefficients.
WeierstrassCurve random_curve(std::mt19937_64& rng, const FieldDescriptor& desc);

// Solves y^2 + B y = C in a finite extension field (Tonelli-Shanks in odd
// characteristic, Artin-Schreier theory in characteristic 2). Empty when no
// solution exists.
std::optional<ExtensionElement> solve_quadratic(const ExtensionElement& b,
                                                const ExtensionElement& c,
                                                std::mt19937_64& rng);

// Random affine point of E over the extension, by sampling x-coordinates and
// solving for y. Empty if every attempt failed.
std::optional<ExtPoint> random_point(const WeierstrassCurve& curve, const Extension& ext,
                                     std::mt19937_64& rng, unsigned attempts);

// Exhaustive search for a root of f in a (small) prime-field extension.
std::optional<ExtensionElement> find_root_by_search(const Polynomial& f,
                                                    const Extension& ext);

/*
 * Targeted instance shapes over F_p. Each returns a valid problem or empty
 * when the rejection budget ran out (which only signals an unlucky plan).
 */
TraceProblem make_general_instance(std::mt19937_64& rng, std::uint64_t p, unsigned degree);
std::optional<TraceProblem> make_rational_point_instance(std::mt19937_64& rng,
                                                         std::uint64_t p, unsigned degree);
std::optional<TraceProblem> make_constant_x_instance(std::mt19937_64& rng, std::uint64_t p);
std::optional<TraceProblem> make_collinear_instance(std::mt19937_64& rng, std::uint64_t p);
std::optional<TraceProblem> make_paired_orbit_instance(std::mt19937_64& rng, std::uint64_t p);

/*
 * Instances over k(lambda): a modulus that is Eisenstein at lambda (hence
 * irreducible without any factorization machinery), optionally made
 * inseparable by substituting t^(p^d), and a curve fitted through the point
 * (theta, y(theta)) by solving for the curve coefficients. Degree at most 5.
 */
Polynomial eisenstein_modulus(std::mt19937_64& rng, const FieldDescriptor& func_field,
                              unsigned sep_degree, unsigned insep_power);
std::optional<TraceProblem> curve_through_generator(std::mt19937_64& rng,
                                                    const Polynomial& modulus);

// Deterministic stream of trace problems over one prime field; mixes random
// instances with targeted shapes so that every algorithm branch fires.
class InstanceGenerator {
public:
    struct Plan {
        std::uint64_t characteristic = 5;
        unsigned min_degree = 2;
        unsigned max_degree = 12;
    };

    InstanceGenerator(std::uint64_t seed, const Plan& plan);

    TraceProblem next();

private:
    std::mt19937_64 rng_;
    Plan plan_;
    std::uint64_t index_ = 0;
};

struct SelftestOptions {
    std::vector<std::uint64_t> characteristics = {2, 3, 5, 7, 101};
    unsigned min_degree = 2;
    unsigned max_degree = 12;
    unsigned count = 500;  // instances per characteristic
    std::uint64_t seed = 1;
};

struct SelftestReport {
    struct PerCharacteristic {
        std::uint64_t characteristic = 0;
        unsigned instances = 0;
        unsigned mismatches = 0;
        unsigned branch_trivial = 0;
        unsigned branch_v_zero = 0;
        unsigned branch_trace_zero = 0;
        unsigned branch_general = 0;
    };

    std::vector<PerCharacteristic> per_char;
    bool pass = false;
    // First mismatching instance, serialized as a problem document.
    std::string counterexample;
    std::uint64_t counterexample_seed = 0;

    unsigned total_instances() const;
    bool covered_all_branches() const;
};

using TraceFunction = std::function<GroundPoint(const TraceProblem&)>;

// Differential run of the trace implementation against the Frobenius oracle.
// The implementation under test can be substituted (used to validate that the
// harness itself catches a faulty trace).
SelftestReport run_selftest(const SelftestOptions& options, const TraceFunction& impl = {});

}  // namespace ectrace

#endif
