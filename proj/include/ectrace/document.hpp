#ifndef ECTRACE_DOCUMENT_HPP
#define ECTRACE_DOCUMENT_HPP

#include <array>
#include <string>

#include "ectrace/trace.hpp"

namespace ectrace {

/*
 * On-disk problem description. JSON with string-encoded field elements:
 *
 *   {
 *     "field":   {"kind": "Q"} | {"kind": "Fp", "p": 3}
 *              | {"kind": "RatFunc", "base": {"kind": "Fp", "p": 2}},
 *     "curve":   ["a1", "a2", "a3", "a4", "a6"],
 *     "modulus": "t^3-135*t-408",
 *     "x":       "t/8-1",
 *     "y":       "t^2/32-11*t/32-19/4"
 *   }
 *
 * The modulus and coordinates are polynomials in t; rational-function
 * coefficients use the indeterminate l.
 */
struct ProblemDocument {
    FieldDescriptor field;
    std::array<std::string, 5> curve;
    std::string modulus;
    std::string x;
    std::string y;
};

// Parses the JSON text; diagnostics carry byte offsets and key names.
ProblemDocument parse_problem_document(const std::string& json_text);

// Parses every element string and assembles a validated problem.
TraceProblem build_problem(const ProblemDocument& doc);

// Round-trip serialization of a problem back to the document format.
std::string problem_to_json(const TraceProblem& problem);

}  // namespace ectrace

#endif
