#ifndef ECTRACE_IO_HPP
#define ECTRACE_IO_HPP

#include <ostream>
#include <string>
#include <string_view>

#include "ectrace/curve.hpp"
#include "ectrace/extension.hpp"
#include "ectrace/field.hpp"
#include "ectrace/linalg.hpp"
#include "ectrace/poly.hpp"

namespace ectrace {

/*
 * Element grammar shared by the CLI and the fixtures: integer literals with
 * optional sign, fractions with `/`, powers with `^`, parentheses, explicit
 * `*` or juxtaposition for products. The indeterminate of a rational-function
 * field is written `l`; polynomial inputs additionally accept the variable
 * `t`. Syntax errors carry the byte offset of the offending token.
 */
FieldScalar parse_scalar(const FieldDescriptor& desc, std::string_view text);
Polynomial parse_polynomial(const FieldDescriptor& desc, std::string_view text);

// Canonical printed forms: descending degree, explicit signs; these parse
// back to equal values under the same descriptor.
std::string format_scalar(const FieldScalar& s);
std::string format_polynomial(const Polynomial& p, char var);
std::string format_point(const GroundPoint& p);
std::string format_point(const ExtPoint& p);
std::string format_matrix(const Matrix& m);

inline std::ostream& operator<<(std::ostream& os, const FieldScalar& s) {
    return os << format_scalar(s);
}
inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << format_polynomial(p, 't');
}
inline std::ostream& operator<<(std::ostream& os, const ExtensionElement& e) {
    return os << format_polynomial(e.rep(), 't');
}
inline std::ostream& operator<<(std::ostream& os, const GroundPoint& p) {
    return os << format_point(p);
}
inline std::ostream& operator<<(std::ostream& os, const ExtPoint& p) {
    return os << format_point(p);
}
inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    return os << format_matrix(m);
}

}  // namespace ectrace

#endif
