#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "gaspin/signature.hpp"

namespace gaspin {

/// Bit i-1 set means generator e^i is a factor of the blade. Generators are
/// always taken in ascending index order.
using BladeMask = std::uint32_t;

inline constexpr double kDefaultTolerance = 1e-10;

/// Result of multiplying two basis blades: sign * e^{mask}. A zero sign means
/// the product vanishes (only possible for the exterior product).
struct BladeProduct {
  BladeMask mask;
  int sign;
};

/// Grade of a blade, i.e. the number of generator factors.
int blade_grade(BladeMask mask) noexcept;

/// Clifford product of two basis blades in the given signature.
BladeProduct clifford_blade_product(const Signature& sig, BladeMask a,
                                    BladeMask b);

/// Exterior product of two basis blades; zero whenever they share a factor.
BladeProduct exterior_blade_product(const Signature& sig, BladeMask a,
                                    BladeMask b);

/// Dense element of Cl(p,q): one real coefficient per basis blade, indexed by
/// blade mask. Storage is inline; only the first 2^n entries are live.
class Multivector {
 public:
  /// The zero element.
  explicit Multivector(const Signature& sig);

  static Multivector scalar(const Signature& sig, double value);
  static Multivector blade(const Signature& sig, BladeMask mask,
                           double coeff = 1.0);
  /// Basis vector e^a for a 1-based index a.
  static Multivector basis_vector(const Signature& sig, int a,
                                  double coeff = 1.0);
  /// Builds from exactly 2^n coefficients in mask order.
  static Multivector from_coeffs(const Signature& sig,
                                 std::span<const double> coeffs);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return sig_.blade_count(); }

  std::span<const double> coeffs() const noexcept {
    return {data_.data(), size()};
  }
  std::span<double> coeffs() noexcept { return {data_.data(), size()}; }

  double operator[](BladeMask mask) const { return data_.at(mask); }
  double& operator[](BladeMask mask) { return data_.at(mask); }

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s) noexcept;
  Multivector& operator/=(double s) noexcept;

  friend Multivector operator+(Multivector lhs, const Multivector& rhs) {
    return lhs += rhs;
  }
  friend Multivector operator-(Multivector lhs, const Multivector& rhs) {
    return lhs -= rhs;
  }
  friend Multivector operator*(Multivector lhs, double s) { return lhs *= s; }
  friend Multivector operator*(double s, Multivector rhs) { return rhs *= s; }
  friend Multivector operator/(Multivector lhs, double s) { return lhs /= s; }
  Multivector operator-() const;

  /// Exact coefficientwise equality (signatures must match too).
  friend bool operator==(const Multivector& a, const Multivector& b);

 private:
  Signature sig_;
  std::array<double, kMaxBlades> data_{};
};

Multivector clifford_mul(const Multivector& u, const Multivector& v);
Multivector exterior_mul(const Multivector& u, const Multivector& v);

inline Multivector operator*(const Multivector& u, const Multivector& v) {
  return clifford_mul(u, v);
}

/// Reversion: a grade-k blade picks up (-1)^(k(k-1)/2).
Multivector reverse(const Multivector& u);

/// Keeps only the grade-k part. Throws GradeOutOfRange unless 0 <= k <= n.
Multivector grade_project(const Multivector& u, int k);

/// Coefficient of the identity element e.
double trace(const Multivector& u) noexcept;

/// l = e^1 e^2 e^3 e^4. Four-dimensional algebras only.
Multivector pseudoscalar(const Signature& sig);
/// eps = Tr(l^2), which is +1 or -1. Four-dimensional algebras only.
double epsilon(const Signature& sig);

/// Truncated power series e + A + A^2/2! + ... with `terms` terms (the
/// identity counts as the first). Inputs with max-abs coefficient above 1
/// are scaled by 2^-k first and the result squared k times.
Multivector clifford_exp(const Multivector& a, int terms = 32);

/// AB - BA.
Multivector commutator(const Multivector& a, const Multivector& b);

double max_abs(const Multivector& u) noexcept;
double max_abs_diff(const Multivector& u, const Multivector& v);

/// Largest coefficient magnitude outside grade k.
double off_grade_residual(const Multivector& u, int k) noexcept;

bool approx_equal(const Multivector& u, const Multivector& v,
                  double tol = kDefaultTolerance);

/// True when every odd-grade coefficient is within tol of zero.
bool is_even(const Multivector& u, double tol = kDefaultTolerance) noexcept;

}  // namespace gaspin
