#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "gaspin/spinor.hpp"

namespace gaspin {

/// Small dense square matrix, n <= 5, row-major.
class Matrix {
 public:
  explicit Matrix(int n);
  static Matrix identity(int n);
  static Matrix diagonal(std::span<const double> diag);

  int n() const noexcept { return n_; }

  double operator()(int row, int col) const { return data_.at(index(row, col)); }
  double& operator()(int row, int col) { return data_.at(index(row, col)); }

  Matrix transposed() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(double s, Matrix m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int row, int col) const;

  int n_;
  std::array<double, 25> data_{};
};

/// Cofactor expansion along the first row.
double determinant(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

/// diag(+1 x p, -1 x q).
Matrix metric_matrix(const Signature& sig);

/// Candidate element of SO+(p,q). Row a holds the coefficients of the image
/// of e^a: reverse(S) e^a S = sum_b P(a, b) e^b. This is the transpose of the
/// usual column-vector action, and makes S -> P a homomorphism under
/// left-to-right multiplication.
struct OrthoMatrix {
  Signature sig;
  Matrix entries;
};

struct OrthoReport {
  double metric_residual;  ///< max-abs(P^T eta P - eta)
  double det;
  double det_residual;     ///< |det P - 1|
  bool identity_component; ///< top-left p x p block has positive determinant
  bool special_orthogonal; ///< both residuals within tol
  bool passed;             ///< special_orthogonal && identity_component
};

OrthoReport verify_orthogonal(const OrthoMatrix& p, double tol = kDefaultTolerance);

/// The double-cover map. Throws NotSpinElement when some reverse(S) e^a S
/// has non-vector content above tol.
OrthoMatrix spin_to_so(const SpinElement& s, double tol = kDefaultTolerance);

/// Max non-vector residual of reverse(S) e^a S over all a.
double vector_residual(const SpinElement& s);

/// T = lambda P for the regular (1,3) parametrisation, entry by entry.
Matrix closed_form_T13(const Bivector& b);

/// P for the adjoint (1,3) parametrisation with sign +1, entry by entry.
/// Rejects B with B^B != 0 or rho < 0 like parametrize_adjoint.
OrthoMatrix closed_form_P13_adjoint(const Bivector& b,
                                    double tol = kDefaultTolerance);

/// Clifford product, revalidated as a spin element.
SpinElement compose(const SpinElement& a, const SpinElement& b,
                    double tol = kDefaultTolerance);

struct SamplingOptions {
  /// Bivector coefficients are drawn uniformly from [-coeff_range, coeff_range].
  /// Round-off in P grows like |S|^2 and in det P like |S|^8, so the default
  /// keeps products of a few factors at |S| = O(1).
  double coeff_range = 0.5;
  /// Rejection threshold on lambda (n = 4) or 1 + beta (n = 2, 3).
  double min_scale = 0.1;
};

/// Product of `count` random parametrised elements with random signs.
/// Uses the regular form for n = 4 and the low-dimensional form for n = 2, 3.
SpinElement random_spin_element(const Signature& sig, std::mt19937_64& rng,
                                int count, const SamplingOptions& opts = {});

SpinElement random_spin_element(const Signature& sig, std::uint64_t seed,
                                int count, const SamplingOptions& opts = {});

}  // namespace gaspin
