#ifndef ECTRACE_TRACE_HPP
#define ECTRACE_TRACE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ectrace/curve.hpp"
#include "ectrace/extension.hpp"
#include "ectrace/linalg.hpp"

namespace ectrace {

/*
 * One trace computation: a curve over K, an irreducible modulus T, and the
 * coordinates of a point of E over K[t]/T given as polynomials of degree
 * < deg T. The point is verified to satisfy the curve equation at
 * construction; irreducibility of T is a trusted precondition (verified over
 * prime fields unless verify_modulus is false).
 */
class TraceProblem {
public:
    TraceProblem(WeierstrassCurve curve, const Polynomial& modulus, const Polynomial& x,
                 const Polynomial& y, bool verify_modulus = true);

    const WeierstrassCurve& curve() const noexcept { return curve_; }
    const Extension& extension() const noexcept { return ext_; }
    const Polynomial& modulus() const noexcept { return ext_.modulus(); }
    const Polynomial& x() const noexcept { return x_; }
    const Polynomial& y() const noexcept { return y_; }

    ExtPoint point() const;

private:
    WeierstrassCurve curve_;
    Extension ext_;
    Polynomial x_, y_;
};

// Which exit the separable algorithm took.
enum class TraceBranch {
    ConstantPoint,  // both coordinates constant: result [d]P
    ConstantX,      // constant x, non-constant y: result O
    KernelVZero,    // the minimal vanishing function has no y part: result O
    TraceZero,      // conjugates sum to O (deg S = 0)
    General,
};

// Intermediates of one run of the separable algorithm.
struct SeparableRecord {
    std::size_t d = 0;
    Polynomial modulus;
    TraceBranch branch = TraceBranch::General;
    std::vector<ExtensionElement> basis_values;   // 1, x, y, x^2, xy, ... at P
    std::optional<Matrix> coefficient_matrix;     // their coordinates over 1..theta^(d-1)
    std::optional<Matrix> kernel;                 // echelon kernel of the above
    std::vector<FieldScalar> relation;            // its leftmost column
    std::optional<Polynomial> u, v;               // f = U(x) + V(x) y
    std::optional<Polynomial> x_min_poly;         // X, minimal polynomial of x(theta)
    std::optional<Polynomial> r, s;               // R and S = R / X
    std::optional<GroundPoint> q;                 // root of S with its y value
    std::size_t d_p = 0;                          // degree of the field of definition
    long long multiplier = 0;                     // final scalar -d / d_p

    explicit SeparableRecord(Polynomial mod) : modulus(std::move(mod)) {}
};

// Intermediates of the inseparable-degree reduction (positive characteristic).
struct InseparableRecord {
    std::uint64_t p = 0;
    unsigned d = 0;             // inseparability exponent of T
    std::uint64_t pd = 1;       // p^d
    Polynomial sep_modulus;     // S with T(t) = S(t^(p^d))
    ExtPoint q;                 // [p^d] P over L
    std::optional<Polynomial> xq, yq;  // Q re-expressed over the separable subfield

    explicit InseparableRecord(Polynomial s) : sep_modulus(std::move(s)) {}
};

struct TraceWitness {
    GroundPoint result;
    std::optional<InseparableRecord> insep;
    std::optional<SeparableRecord> sep;
};

/*
 * Splits T into its inseparable part: returns the largest d >= 0 such that
 * every nonzero coefficient of T sits at an index divisible by p^d, together
 * with the separable S obtained by index decimation, so that T(t) = S(t^(p^d)).
 */
std::pair<unsigned, Polynomial> insep_decompose(const Polynomial& t, std::uint64_t p);

// Trace of a point over a separable modulus. Records intermediates on request.
TraceWitness trace_separable(const TraceProblem& problem, bool record = false);

// Trace of a point over any irreducible modulus: reduces to the separable
// case through the inseparable degree, then delegates.
TraceWitness trace(const TraceProblem& problem, bool record = false);

}  // namespace ectrace

#endif
