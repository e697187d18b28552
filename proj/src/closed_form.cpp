// Closed-form lambda(B) and eps(1 + beta) polynomials for the four-dimensional
// signatures. These are written out term by term, independently of the
// Clifford product, so they can cross-check lambda_of and rho_of.

#include <string>

#include "gaspin/error.hpp"
#include "gaspin/spinor.hpp"

namespace gaspin {
namespace {

struct Coeffs4 {
  double b12, b13, b14, b23, b24, b34;
};

Coeffs4 unpack(const Bivector& b) {
  if (b.signature().n() != 4) {
    throw Error(ErrorCode::DimensionUnsupported,
                "closed forms need n = 4, got " + b.signature().to_string());
  }
  return {b(1, 2), b(1, 3), b(1, 4), b(2, 3), b(2, 4), b(3, 4)};
}

double sq(double x) { return x * x; }

}  // namespace

double lambda_closed_form(const Bivector& b) {
  const auto [b12, b13, b14, b23, b24, b34] = unpack(b);
  const int p = b.signature().p();

  switch (p) {
    case 0:
    case 4:
      return 1 + sq(b12) + sq(b13) + sq(b14) + sq(b23) +
             sq(b14) * sq(b23) - 2 * b13 * b14 * b23 * b24 + sq(b24) +
             sq(b13) * sq(b24) + 2 * b12 * b14 * b23 * b34 -
             2 * b12 * b13 * b24 * b34 + sq(b34) + sq(b12) * sq(b34);
    case 1:
      return 1 - sq(b12) - sq(b13) - sq(b14) + sq(b23) -
             sq(b14) * sq(b23) + 2 * b13 * b14 * b23 * b24 + sq(b24) -
             sq(b13) * sq(b24) - 2 * b12 * b14 * b23 * b34 +
             2 * b12 * b13 * b24 * b34 + sq(b34) - sq(b12) * sq(b34);
    case 2:
      return 1 + sq(b12) - sq(b13) - sq(b14) - sq(b23) +
             sq(b14) * sq(b23) - 2 * b13 * b14 * b23 * b24 - sq(b24) +
             sq(b13) * sq(b24) + 2 * b12 * b14 * b23 * b34 -
             2 * b12 * b13 * b24 * b34 + sq(b34) + sq(b12) * sq(b34);
    case 3:
      return 1 + sq(b12) + sq(b13) - sq(b14) + sq(b23) -
             sq(b14) * sq(b23) + 2 * b13 * b14 * b23 * b24 - sq(b24) -
             sq(b13) * sq(b24) - 2 * b12 * b14 * b23 * b34 +
             2 * b12 * b13 * b24 * b34 - sq(b34) - sq(b12) * sq(b34);
  }
  throw Error(ErrorCode::DimensionUnsupported, "unreachable signature");
}

double rho_closed_form(const Bivector& b) {
  const auto [b12, b13, b14, b23, b24, b34] = unpack(b);
  const int p = b.signature().p();

  switch (p) {
    case 0:
    case 4:
      return 1 - sq(b12) - sq(b13) - sq(b14) - sq(b23) - sq(b24) - sq(b34);
    case 1:
      return -1 - sq(b12) - sq(b13) - sq(b14) + sq(b23) + sq(b24) + sq(b34);
    case 2:
      return 1 - sq(b12) + sq(b13) + sq(b14) + sq(b23) + sq(b24) - sq(b34);
    case 3:
      return -1 + sq(b12) + sq(b13) - sq(b14) + sq(b23) - sq(b24) - sq(b34);
  }
  throw Error(ErrorCode::DimensionUnsupported, "unreachable signature");
}

}  // namespace gaspin
