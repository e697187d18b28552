#pragma once

#include <string>
#include <string_view>

#include "gaspin/multivector.hpp"

namespace gaspin {

/// Parses the textual multivector grammar:
///
///   expr := sign? term (('+' | '-') term)*
///   term := number? blade?          (at least one of the two)
///   blade := 'e' digit+             (indices strictly ascending, 1..n)
///
/// A missing number means coefficient 1, a missing blade means the scalar e.
/// Whitespace between tokens is ignored. Inside a number an exponent must be
/// written with an explicit sign ("1e+20", "2.5e-3") or an upper-case 'E', so
/// that "2e12" reads as 2 e^{12}. Repeated blades are summed.
///
/// Throws ParseError (with a 0-based offset) on syntax errors, out-of-range
/// indices, and unordered or repeated indices.
Multivector parse_multivector(std::string_view text, const Signature& sig);

/// Canonical text: nonzero terms in blade-mask order, "0" for the zero
/// element, shortest round-trip decimals. parse(serialize(u)) == u.
std::string serialize(const Multivector& u);

/// Shortest decimal that reads back to the same double.
std::string format_number(double x);

/// "e" followed by the blade's indices, e.g. "e124"; empty for the scalar.
std::string blade_name(BladeMask mask);

}  // namespace gaspin
