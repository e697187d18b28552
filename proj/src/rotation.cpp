#include "gaspin/rotation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "gaspin/error.hpp"
#include "gaspin/mv_text.hpp"

namespace gaspin {

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension) {
    throw Error(ErrorCode::InvalidArgument,
                "matrix dimension " + std::to_string(n) + " outside 1..5");
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.n(); ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return m;
}

std::size_t Matrix::index(int row, int col) const {
  if (row < 0 || row >= n_ || col < 0 || col >= n_) {
    throw Error(ErrorCode::InvalidArgument, "matrix index out of range");
  }
  return static_cast<std::size_t>(row * n_ + col);
}

Matrix Matrix::transposed() const {
  Matrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorCode::InvalidArgument, "matrix dimension mismatch");
  }
  Matrix c(a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) {
      double sum = 0.0;
      for (int k = 0; k < a.n(); ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  return c;
}

Matrix operator*(double s, Matrix m) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) m(i, j) *= s;
  return m;
}

namespace {

// Determinant of the submatrix on `rows` x `cols` (bitmasks of equal size),
// expanding along the first remaining row.
double minor_det(const Matrix& m, unsigned rows, unsigned cols) {
  if (rows == 0) return 1.0;
  const int row = std::countr_zero(rows);
  const unsigned rest = rows & (rows - 1);
  double det = 0.0;
  int sign = 1;
  for (int col = 0; col < m.n(); ++col) {
    if (!(cols & (1u << col))) continue;
    const double entry = m(row, col);
    if (entry != 0.0) det += sign * entry * minor_det(m, rest, cols & ~(1u << col));
    sign = -sign;
  }
  return det;
}

}  // namespace

double determinant(const Matrix& m) {
  const unsigned all = (1u << m.n()) - 1;
  return minor_det(m, all, all);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorCode::InvalidArgument, "matrix dimension mismatch");
  }
  double d = 0.0;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

Matrix metric_matrix(const Signature& sig) {
  Matrix eta(sig.n());
  for (int a = 1; a <= sig.n(); ++a) eta(a - 1, a - 1) = sig.metric(a);
  return eta;
}

// ---------------------------------------------------------------------------
// SO(p,q) membership

OrthoReport verify_orthogonal(const OrthoMatrix& p, double tol) {
  const Matrix& m = p.entries;
  if (m.n() != p.sig.n()) {
    throw Error(ErrorCode::InvalidArgument,
                "matrix dimension does not match " + p.sig.to_string());
  }
  const Matrix eta = metric_matrix(p.sig);
  OrthoReport report{};
  report.metric_residual = max_abs_diff(m.transposed() * eta * m, eta);
  report.det = determinant(m);
  report.det_residual = std::abs(report.det - 1.0);

  const int time_like = p.sig.p();
  if (time_like == 0 || p.sig.q() == 0) {
    report.identity_component = true;
  } else {
    const unsigned block = (1u << time_like) - 1;
    report.identity_component = minor_det(m, block, block) > 0.0;
  }
  report.special_orthogonal =
      report.metric_residual <= tol && report.det_residual <= tol;
  report.passed = report.special_orthogonal && report.identity_component;
  return report;
}

// ---------------------------------------------------------------------------
// Spin+ -> SO+

namespace {

template <typename RowFn>
void for_each_image(const SpinElement& s, RowFn&& fn) {
  const Signature& sig = s.signature();
  const Multivector rev = reverse(s.value());
  for (int a = 1; a <= sig.n(); ++a) {
    fn(a, rev * Multivector::basis_vector(sig, a) * s.value());
  }
}

}  // namespace

double vector_residual(const SpinElement& s) {
  double residual = 0.0;
  for_each_image(s, [&](int, const Multivector& image) {
    residual = std::max(residual, off_grade_residual(image, 1));
  });
  return residual;
}

OrthoMatrix spin_to_so(const SpinElement& s, double tol) {
  const Signature& sig = s.signature();
  const double m = max_abs(s.value());
  const double scaled_tol = tol * std::max(1.0, m * m);
  OrthoMatrix out{sig, Matrix(sig.n())};
  for_each_image(s, [&](int a, const Multivector& image) {
    const double residual = off_grade_residual(image, 1);
    if (residual > scaled_tol) {
      throw Error(ErrorCode::NotSpinElement,
                  "reverse(S) e^" + std::to_string(a) +
                      " S is not a vector (residual " +
                      format_number(residual) + ")");
    }
    for (int b = 1; b <= sig.n(); ++b) {
      out.entries(a - 1, b - 1) = image[BladeMask{1} << (b - 1)];
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form (1,3) matrices

namespace {

void require_13(const Signature& sig) {
  if (sig.p() != 1 || sig.q() != 3) {
    throw Error(ErrorCode::DimensionUnsupported,
                "closed-form tables are for Cl(1,3), got " + sig.to_string());
  }
}

double sq(double x) { return x * x; }

}  // namespace

Matrix closed_form_T13(const Bivector& bv) {
  require_13(bv.signature());
  const double b12 = bv(1, 2), b13 = bv(1, 3), b14 = bv(1, 4);
  const double b23 = bv(2, 3), b24 = bv(2, 4), b34 = bv(3, 4);

  Matrix t(4);
  t(0, 0) = 1 + sq(b12) + sq(b13) + sq(b14) + sq(b23) + sq(b14) * sq(b23) -
            2 * b13 * b14 * b23 * b24 + sq(b24) + sq(b13) * sq(b24) +
            2 * b12 * b14 * b23 * b34 - 2 * b12 * b13 * b24 * b34 + sq(b34) +
            sq(b12) * sq(b34);
  t(0, 1) = 2 * b12 + 2 * b13 * b23 + 2 * b14 * b24 + 2 * b14 * b23 * b34 -
            2 * b13 * b24 * b34 + 2 * b12 * sq(b34);
  t(0, 2) = 2 * b13 - 2 * b12 * b23 - 2 * b14 * b23 * b24 + 2 * b13 * sq(b24) +
            2 * b14 * b34 - 2 * b12 * b24 * b34;
  t(0, 3) = 2 * b14 + 2 * b14 * sq(b23) - 2 * b12 * b24 - 2 * b13 * b23 * b24 -
            2 * b13 * b34 + 2 * b12 * b23 * b34;

  t(1, 0) = 2 * b12 - 2 * b13 * b23 - 2 * b14 * b24 + 2 * b14 * b23 * b34 -
            2 * b13 * b24 * b34 + 2 * b12 * sq(b34);
  t(1, 1) = 1 + sq(b12) - sq(b13) - sq(b14) - sq(b23) + sq(b14) * sq(b23) -
            2 * b13 * b14 * b23 * b24 - sq(b24) + sq(b13) * sq(b24) +
            2 * b12 * b14 * b23 * b34 - 2 * b12 * b13 * b24 * b34 + sq(b34) +
            sq(b12) * sq(b34);
  t(1, 2) = 2 * b12 * b13 - 2 * b23 + 2 * sq(b14) * b23 - 2 * b13 * b14 * b24 +
            2 * b12 * b14 * b34 - 2 * b24 * b34;
  t(1, 3) = 2 * b12 * b14 - 2 * b13 * b14 * b23 - 2 * b24 + 2 * sq(b13) * b24 -
            2 * b12 * b13 * b34 + 2 * b23 * b34;

  t(2, 0) = 2 * b13 + 2 * b12 * b23 - 2 * b14 * b23 * b24 + 2 * b13 * sq(b24) -
            2 * b14 * b34 - 2 * b12 * b24 * b34;
  t(2, 1) = 2 * b12 * b13 + 2 * b23 - 2 * sq(b14) * b23 + 2 * b13 * b14 * b24 -
            2 * b12 * b14 * b34 - 2 * b24 * b34;
  t(2, 2) = 1 - sq(b12) + sq(b13) - sq(b14) - sq(b23) + sq(b14) * sq(b23) -
            2 * b13 * b14 * b23 * b24 + sq(b24) + sq(b13) * sq(b24) +
            2 * b12 * b14 * b23 * b34 - 2 * b12 * b13 * b24 * b34 - sq(b34) +
            sq(b12) * sq(b34);
  t(2, 3) = 2 * b13 * b14 + 2 * b12 * b14 * b23 - 2 * b12 * b13 * b24 -
            2 * b23 * b24 - 2 * b34 + 2 * sq(b12) * b34;

  t(3, 0) = 2 * b14 + 2 * b14 * sq(b23) + 2 * b12 * b24 - 2 * b13 * b23 * b24 +
            2 * b13 * b34 + 2 * b12 * b23 * b34;
  t(3, 1) = 2 * b12 * b14 + 2 * b13 * b14 * b23 + 2 * b24 - 2 * sq(b13) * b24 +
            2 * b12 * b13 * b34 + 2 * b23 * b34;
  t(3, 2) = 2 * b13 * b14 - 2 * b12 * b14 * b23 + 2 * b12 * b13 * b24 -
            2 * b23 * b24 + 2 * b34 - 2 * sq(b12) * b34;
  t(3, 3) = 1 - sq(b12) - sq(b13) + sq(b14) + sq(b23) + sq(b14) * sq(b23) -
            2 * b13 * b14 * b23 * b24 - sq(b24) + sq(b13) * sq(b24) +
            2 * b12 * b14 * b23 * b34 - 2 * b12 * b13 * b24 * b34 - sq(b34) +
            sq(b12) * sq(b34);
  return t;
}

OrthoMatrix closed_form_P13_adjoint(const Bivector& bv, double tol) {
  const Signature& sig = bv.signature();
  require_13(sig);
  const Multivector m = bv.to_multivector();
  const double wedge = max_abs(exterior_mul(m, m));
  if (wedge > tol) {
    throw Error(ErrorCode::NotSimpleBivector,
                "B ^ B has magnitude " + format_number(wedge));
  }
  const double b12 = bv(1, 2), b13 = bv(1, 3), b14 = bv(1, 4);
  const double b23 = bv(2, 3), b24 = bv(2, 4), b34 = bv(3, 4);
  const double rho =
      -1 - sq(b12) - sq(b13) - sq(b14) + sq(b23) + sq(b24) + sq(b34);
  if (rho < -tol) {
    throw Error(ErrorCode::RhoNegative,
                "rho = " + format_number(rho) + " is negative");
  }
  const double r = std::sqrt(std::max(rho, 0.0));

  Matrix p(4);
  p(0, 0) = -1 + 2 * sq(b23) + 2 * sq(b24) + 2 * sq(b34);
  p(0, 1) = 2 * b13 * b23 + 2 * b14 * b24 + 2 * b34 * r;
  p(0, 2) = -2 * b12 * b23 + 2 * b14 * b34 - 2 * b24 * r;
  p(0, 3) = -2 * b12 * b24 - 2 * b13 * b34 + 2 * b23 * r;

  p(1, 0) = -2 * b13 * b23 - 2 * b14 * b24 + 2 * b34 * r;
  p(1, 1) = -1 - 2 * sq(b13) - 2 * sq(b14) + 2 * sq(b34);
  p(1, 2) = 2 * b12 * b13 - 2 * b24 * b34 + 2 * b14 * r;
  p(1, 3) = 2 * b12 * b14 + 2 * b23 * b34 - 2 * b13 * r;

  p(2, 0) = 2 * b12 * b23 - 2 * b14 * b34 - 2 * b24 * r;
  p(2, 1) = 2 * b12 * b13 - 2 * b24 * b34 - 2 * b14 * r;
  p(2, 2) = -1 - 2 * sq(b12) - 2 * sq(b14) + 2 * sq(b24);
  p(2, 3) = 2 * b13 * b14 - 2 * b23 * b24 + 2 * b12 * r;

  p(3, 0) = 2 * b12 * b24 + 2 * b13 * b34 + 2 * b23 * r;
  p(3, 1) = 2 * b12 * b14 + 2 * b23 * b34 + 2 * b13 * r;
  p(3, 2) = 2 * b13 * b14 - 2 * b23 * b24 - 2 * b12 * r;
  p(3, 3) = -1 - 2 * sq(b12) - 2 * sq(b13) + 2 * sq(b23);
  return {sig, p};
}

// ---------------------------------------------------------------------------
// Group operations

SpinElement compose(const SpinElement& a, const SpinElement& b, double tol) {
  return SpinElement::make(a.value() * b.value(), tol);
}

namespace {

// Uniform in [-range, range) from the raw 64-bit stream, so samples do not
// depend on the standard library's distribution implementation.
double uniform(std::mt19937_64& rng, double range) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return range * (2.0 * unit - 1.0);
}

Sign random_sign(std::mt19937_64& rng) {
  return (rng() & 1u) ? Sign::Minus : Sign::Plus;
}

SpinElement random_factor(const Signature& sig, std::mt19937_64& rng,
                          const SamplingOptions& opts) {
  Bivector b(sig);
  std::array<double, Bivector::kMaxCoeffs> coeffs{};
  for (;;) {
    for (std::size_t k = 0; k < b.size(); ++k) coeffs[k] = uniform(rng, opts.coeff_range);
    b = Bivector(sig, std::span<const double>(coeffs.data(), b.size()));
    const Sign sign = random_sign(rng);
    if (sig.n() == 4) {
      if (lambda_of(b) > opts.min_scale) return parametrize_regular(b, sign);
    } else {
      if (1.0 + beta_of(b) > opts.min_scale) return parametrize_low_dim(b, sign);
    }
  }
}

}  // namespace

SpinElement random_spin_element(const Signature& sig, std::mt19937_64& rng,
                                int count, const SamplingOptions& opts) {
  if (count < 1) {
    throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
  }
  if (sig.n() < 2 || sig.n() > 4) {
    throw Error(ErrorCode::DimensionUnsupported,
                "random spin elements need n in 2..4, got " + sig.to_string());
  }
  if (opts.min_scale >= 1.0) {
    // B = 0 gives lambda = 1 + beta = 1; anything stricter may never accept.
    throw Error(ErrorCode::InvalidArgument, "min_scale must be below 1");
  }
  SpinElement s = random_factor(sig, rng, opts);
  for (int i = 1; i < count; ++i) {
    s = SpinElement::make(s.value() * random_factor(sig, rng, opts).value(),
                          1e-9);
  }
  return s;
}

SpinElement random_spin_element(const Signature& sig, std::uint64_t seed,
                                int count, const SamplingOptions& opts) {
  std::mt19937_64 rng(seed);
  return random_spin_element(sig, rng, count, opts);
}

}  // namespace gaspin
