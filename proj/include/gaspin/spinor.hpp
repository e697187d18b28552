#pragma once

#include <array>
#include <span>
#include <utility>
#include <variant>

#include "gaspin/multivector.hpp"

namespace gaspin {

enum class Sign : int { Minus = -1, Plus = 1 };

inline double to_double(Sign s) noexcept { return static_cast<int>(s); }
inline Sign sign_of(double x) noexcept { return x < 0.0 ? Sign::Minus : Sign::Plus; }

/// Grade-2 element with coefficients b_ij (i < j) in lexicographic order:
/// b12, b13, ..., b1n, b23, ..., b(n-1)n.
class Bivector {
 public:
  static constexpr std::size_t kMaxCoeffs = 10;

  /// The zero bivector.
  explicit Bivector(const Signature& sig);
  /// Throws InvalidArgument unless coeffs.size() == n(n-1)/2.
  Bivector(const Signature& sig, std::span<const double> coeffs);

  /// Reads the grade-2 part of u; other grades are dropped.
  static Bivector from_multivector(const Multivector& u);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept;
  std::span<const double> coeffs() const noexcept { return {data_.data(), size()}; }

  /// b_ij for 1-based indices i < j.
  double operator()(int i, int j) const;
  double& operator()(int i, int j);

  Multivector to_multivector() const;

  Bivector operator-() const;
  friend bool operator==(const Bivector&, const Bivector&) = default;

 private:
  std::size_t offset(int i, int j) const;

  Signature sig_;
  std::array<double, kMaxCoeffs> data_{};
};

/// Even element S with reverse(S) * S = e. Construction validates both.
class SpinElement {
 public:
  /// Throws NotSpinElement when u has odd-grade content above tol or
  /// max-abs(reverse(u) u - e) exceeds tol.
  static SpinElement make(const Multivector& u, double tol = kDefaultTolerance);

  static SpinElement identity(const Signature& sig);

  const Signature& signature() const noexcept { return value_.signature(); }
  const Multivector& value() const noexcept { return value_; }

  SpinElement operator-() const { return SpinElement(-value_); }

 private:
  explicit SpinElement(Multivector value) : value_(std::move(value)) {}

  Multivector value_;
};

/// max-abs(reverse(u) u - e), the distance from the Spin+ defining identity.
double spin_residual(const Multivector& u);
bool is_spin_element(const Multivector& u, double tol = kDefaultTolerance);

/// S = sign * exp^(B) / sqrt(lambda).
struct RegularForm {
  Bivector b;
  Sign sign;
  double lambda;
};

/// S = B + sign * l * sqrt(rho), with B ^ B = 0.
struct AdjointForm {
  Bivector b;
  Sign sign;
  double rho;
};

using Parametrisation = std::variant<RegularForm, AdjointForm>;

/// S = sign * e * sqrt(1 + beta) + B, for n = 2, 3.
struct LowDimForm {
  Bivector b;
  Sign sign;
};

struct DecomposeOptions {
  /// |Tr S| above this selects the regular branch.
  double branch_threshold = 1e-8;
  double tolerance = kDefaultTolerance;
};

/// Exterior exponent e + B + B^B/2! + ...; the series stops once the wedge
/// power exceeds the top grade.
Multivector ext_exp(const Bivector& b);

/// lambda with reverse(exp^(B)) exp^(B) = lambda e, from the Clifford product.
/// n = 4 only. Throws ParametrisationInconsistent if the product is not a
/// scalar to within tol (relative to max(1, |lambda|)).
double lambda_of(const Bivector& b, double tol = 1e-9);

/// The per-signature degree-4 polynomial for lambda. n = 4 only.
double lambda_closed_form(const Bivector& b);

/// beta = Tr(B^2).
double beta_of(const Bivector& b);

/// rho = eps * (1 + beta). n = 4 only.
double rho_of(const Bivector& b);

/// The per-signature quadratic polynomial for eps * (1 + beta). n = 4 only.
double rho_closed_form(const Bivector& b);

SpinElement parametrize_regular(const Bivector& b, Sign sign,
                                double tol = kDefaultTolerance);

SpinElement parametrize_adjoint(const Bivector& b, Sign sign,
                                double tol = kDefaultTolerance);

Multivector reconstruct(const Parametrisation& form);

Parametrisation decompose(const SpinElement& s, const DecomposeOptions& opts = {});

SpinElement parametrize_low_dim(const Bivector& b, Sign sign,
                                double tol = kDefaultTolerance);

LowDimForm decompose_low_dim(const SpinElement& s,
                             double tol = kDefaultTolerance);

}  // namespace gaspin
