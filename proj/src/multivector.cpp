#include "gaspin/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "gaspin/error.hpp"

namespace gaspin {
namespace {

void require_same_signature(const Multivector& u, const Multivector& v) {
  if (!(u.signature() == v.signature())) {
    throw Error(ErrorCode::SignatureMismatch,
                "operands live in " + u.signature().to_string() + " and " +
                    v.signature().to_string());
  }
}

// Transpositions needed to merge the generators of b into a: one for every
// pair (i in a, j in b) with i > j.
int reorder_sign(BladeMask a, BladeMask b) noexcept {
  int swaps = 0;
  for (BladeMask shifted = a >> 1; shifted != 0; shifted >>= 1) {
    swaps += std::popcount(shifted & b);
  }
  return (swaps & 1) ? -1 : 1;
}

int metric_sign(const Signature& sig, BladeMask shared) noexcept {
  // Generators p+1..n square to -1.
  const BladeMask negative = ((BladeMask{1} << sig.n()) - 1) &
                             ~((BladeMask{1} << sig.p()) - 1);
  return (std::popcount(shared & negative) & 1) ? -1 : 1;
}

void require_blade(const Signature& sig, BladeMask mask) {
  if (mask >= sig.blade_count()) {
    throw Error(ErrorCode::InvalidArgument,
                "blade mask " + std::to_string(mask) + " out of range for " +
                    sig.to_string());
  }
}

}  // namespace

int blade_grade(BladeMask mask) noexcept { return std::popcount(mask); }

BladeProduct clifford_blade_product(const Signature& sig, BladeMask a,
                                    BladeMask b) {
  require_blade(sig, a);
  require_blade(sig, b);
  return {a ^ b, reorder_sign(a, b) * metric_sign(sig, a & b)};
}

BladeProduct exterior_blade_product(const Signature& sig, BladeMask a,
                                    BladeMask b) {
  require_blade(sig, a);
  require_blade(sig, b);
  if ((a & b) != 0) return {a ^ b, 0};
  return {a | b, reorder_sign(a, b)};
}

Multivector::Multivector(const Signature& sig) : sig_(sig) {}

Multivector Multivector::scalar(const Signature& sig, double value) {
  Multivector m(sig);
  m.data_[0] = value;
  return m;
}

Multivector Multivector::blade(const Signature& sig, BladeMask mask,
                               double coeff) {
  require_blade(sig, mask);
  Multivector m(sig);
  m.data_[mask] = coeff;
  return m;
}

Multivector Multivector::basis_vector(const Signature& sig, int a,
                                      double coeff) {
  if (a < 1 || a > sig.n()) {
    throw Error(ErrorCode::InvalidArgument,
                "generator index " + std::to_string(a) + " out of range for " +
                    sig.to_string());
  }
  return blade(sig, BladeMask{1} << (a - 1), coeff);
}

Multivector Multivector::from_coeffs(const Signature& sig,
                                     std::span<const double> coeffs) {
  if (coeffs.size() != sig.blade_count()) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(sig.blade_count()) +
                    " coefficients, got " + std::to_string(coeffs.size()));
  }
  Multivector m(sig);
  std::copy(coeffs.begin(), coeffs.end(), m.data_.begin());
  return m;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require_same_signature(*this, rhs);
  for (std::size_t i = 0; i < size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  require_same_signature(*this, rhs);
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) noexcept {
  for (std::size_t i = 0; i < size(); ++i) data_[i] *= s;
  return *this;
}

Multivector& Multivector::operator/=(double s) noexcept {
  for (std::size_t i = 0; i < size(); ++i) data_[i] /= s;
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector m(sig_);
  for (std::size_t i = 0; i < size(); ++i) m.data_[i] = -data_[i];
  return m;
}

bool operator==(const Multivector& a, const Multivector& b) {
  if (!(a.sig_ == b.sig_)) return false;
  return std::equal(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin());
}

Multivector clifford_mul(const Multivector& u, const Multivector& v) {
  require_same_signature(u, v);
  const Signature& sig = u.signature();
  const auto count = static_cast<BladeMask>(u.size());
  Multivector out(sig);
  for (BladeMask a = 0; a < count; ++a) {
    const double ua = u[a];
    if (ua == 0.0) continue;
    for (BladeMask b = 0; b < count; ++b) {
      const double vb = v[b];
      if (vb == 0.0) continue;
      const int sign = reorder_sign(a, b) * metric_sign(sig, a & b);
      out[a ^ b] += sign * (ua * vb);
    }
  }
  return out;
}

Multivector exterior_mul(const Multivector& u, const Multivector& v) {
  require_same_signature(u, v);
  const auto count = static_cast<BladeMask>(u.size());
  Multivector out(u.signature());
  for (BladeMask a = 0; a < count; ++a) {
    const double ua = u[a];
    if (ua == 0.0) continue;
    for (BladeMask b = 0; b < count; ++b) {
      if ((a & b) != 0) continue;
      const double vb = v[b];
      if (vb == 0.0) continue;
      out[a | b] += reorder_sign(a, b) * (ua * vb);
    }
  }
  return out;
}

Multivector reverse(const Multivector& u) {
  Multivector out = u;
  for (BladeMask m = 0; m < u.size(); ++m) {
    const int k = blade_grade(m);
    if ((k * (k - 1) / 2) & 1) out[m] = -out[m];
  }
  return out;
}

Multivector grade_project(const Multivector& u, int k) {
  if (k < 0 || k > u.signature().n()) {
    throw Error(ErrorCode::GradeOutOfRange,
                "grade " + std::to_string(k) + " outside 0.." +
                    std::to_string(u.signature().n()));
  }
  Multivector out(u.signature());
  for (BladeMask m = 0; m < u.size(); ++m) {
    if (blade_grade(m) == k) out[m] = u[m];
  }
  return out;
}

double trace(const Multivector& u) noexcept { return u.coeffs()[0]; }

Multivector pseudoscalar(const Signature& sig) {
  if (sig.n() != 4) {
    throw Error(ErrorCode::DimensionUnsupported,
                "pseudoscalar l = e1 e2 e3 e4 needs n = 4, got " +
                    sig.to_string());
  }
  return Multivector::blade(sig, 0b1111);
}

double epsilon(const Signature& sig) {
  const Multivector l = pseudoscalar(sig);
  return trace(l * l);
}

Multivector clifford_exp(const Multivector& a, int terms) {
  if (terms < 1) {
    throw Error(ErrorCode::InvalidArgument, "clifford_exp needs terms >= 1");
  }
  const double scale = max_abs(a);
  int squarings = 0;
  if (scale > 1.0) squarings = static_cast<int>(std::ceil(std::log2(scale)));
  const Multivector x = std::ldexp(1.0, -squarings) * a;

  Multivector sum = Multivector::scalar(a.signature(), 1.0);
  Multivector term = sum;
  for (int k = 1; k < terms; ++k) {
    term = (term * x) / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

Multivector commutator(const Multivector& a, const Multivector& b) {
  return a * b - b * a;
}

double max_abs(const Multivector& u) noexcept {
  double m = 0.0;
  for (double c : u.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

double max_abs_diff(const Multivector& u, const Multivector& v) {
  return max_abs(u - v);
}

double off_grade_residual(const Multivector& u, int k) noexcept {
  double m = 0.0;
  for (BladeMask b = 0; b < u.size(); ++b) {
    if (blade_grade(b) != k) m = std::max(m, std::abs(u[b]));
  }
  return m;
}

bool approx_equal(const Multivector& u, const Multivector& v, double tol) {
  return max_abs_diff(u, v) <= tol;
}

bool is_even(const Multivector& u, double tol) noexcept {
  for (BladeMask b = 0; b < u.size(); ++b) {
    if ((blade_grade(b) & 1) && std::abs(u[b]) > tol) return false;
  }
  return true;
}

}  // namespace gaspin
