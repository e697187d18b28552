#include "gaspin/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaspin/error.hpp"
#include "gaspin/mv_text.hpp"

namespace gaspin {
namespace {

void require_n4(const Signature& sig, const char* what) {
  if (sig.n() != 4) {
    throw Error(ErrorCode::DimensionUnsupported,
                std::string(what) + " needs n = 4, got " + sig.to_string());
  }
}

void require_low_dim(const Signature& sig, const char* what) {
  if (sig.n() != 2 && sig.n() != 3) {
    throw Error(ErrorCode::DimensionUnsupported,
                std::string(what) + " needs n = 2 or 3, got " + sig.to_string());
  }
}

// Rounding in reverse(S) S grows with |S|^2, so identities that are quadratic
// in S are checked against tol scaled by that magnitude.
double quadratic_tolerance(const Multivector& s, double tol) {
  const double m = max_abs(s);
  return tol * std::max(1.0, m * m);
}

// Square root of a polynomial that is nonnegative in exact arithmetic.
double clamped_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

std::string fmt(double x) { return format_number(x); }

}  // namespace

// ---------------------------------------------------------------------------
// Bivector

Bivector::Bivector(const Signature& sig) : sig_(sig) {}

Bivector::Bivector(const Signature& sig, std::span<const double> coeffs)
    : sig_(sig) {
  if (coeffs.size() != size()) {
    throw Error(ErrorCode::InvalidArgument,
                "a bivector in " + sig.to_string() + " has " +
                    std::to_string(size()) + " coefficients, got " +
                    std::to_string(coeffs.size()));
  }
  std::copy(coeffs.begin(), coeffs.end(), data_.begin());
}

std::size_t Bivector::size() const noexcept {
  const auto n = static_cast<std::size_t>(sig_.n());
  return n * (n - 1) / 2;
}

std::size_t Bivector::offset(int i, int j) const {
  const int n = sig_.n();
  if (i < 1 || j <= i || j > n) {
    throw Error(ErrorCode::InvalidArgument,
                "bivector index pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ") invalid for " + sig_.to_string());
  }
  // Pairs before row i: (n-1) + (n-2) + ... + (n-i+1).
  const int before = (i - 1) * n - (i - 1) * i / 2;
  return static_cast<std::size_t>(before + (j - i - 1));
}

double Bivector::operator()(int i, int j) const { return data_[offset(i, j)]; }
double& Bivector::operator()(int i, int j) { return data_[offset(i, j)]; }

Bivector Bivector::from_multivector(const Multivector& u) {
  Bivector b(u.signature());
  const int n = u.signature().n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // + 0.0 turns a signed zero into +0.
      b(i, j) = u[(BladeMask{1} << (i - 1)) | (BladeMask{1} << (j - 1))] + 0.0;
    }
  }
  return b;
}

Multivector Bivector::to_multivector() const {
  Multivector u(sig_);
  const int n = sig_.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      u[(BladeMask{1} << (i - 1)) | (BladeMask{1} << (j - 1))] = (*this)(i, j);
    }
  }
  return u;
}

Bivector Bivector::operator-() const {
  Bivector b = *this;
  for (std::size_t k = 0; k < size(); ++k) b.data_[k] = -b.data_[k];
  return b;
}

// ---------------------------------------------------------------------------
// SpinElement

double spin_residual(const Multivector& u) {
  Multivector r = reverse(u) * u;
  r[0] -= 1.0;
  return max_abs(r);
}

bool is_spin_element(const Multivector& u, double tol) {
  return is_even(u, tol) && spin_residual(u) <= quadratic_tolerance(u, tol);
}

SpinElement SpinElement::make(const Multivector& u, double tol) {
  if (!is_even(u, tol)) {
    throw Error(ErrorCode::NotSpinElement,
                "element has odd-grade components");
  }
  const double residual = spin_residual(u);
  if (residual > quadratic_tolerance(u, tol)) {
    throw Error(ErrorCode::NotSpinElement,
                "reverse(S) S differs from e by " + fmt(residual));
  }
  return SpinElement(u);
}

SpinElement SpinElement::identity(const Signature& sig) {
  return SpinElement(Multivector::scalar(sig, 1.0));
}

// ---------------------------------------------------------------------------
// Exterior exponent and its scalars

Multivector ext_exp(const Bivector& b) {
  const Signature& sig = b.signature();
  const Multivector bv = b.to_multivector();
  Multivector sum = Multivector::scalar(sig, 1.0);
  Multivector power = sum;
  // The k-th wedge power has grade 2k and vanishes beyond the top grade.
  for (int k = 1; 2 * k <= sig.n(); ++k) {
    power = exterior_mul(power, bv) / static_cast<double>(k);
    sum += power;
  }
  return sum;
}

double lambda_of(const Bivector& b, double tol) {
  require_n4(b.signature(), "lambda");
  const Multivector e = ext_exp(b);
  const Multivector product = reverse(e) * e;
  const double lambda = trace(product);
  const double residual = off_grade_residual(product, 0);
  if (residual > tol * std::max(1.0, std::abs(lambda))) {
    throw Error(ErrorCode::ParametrisationInconsistent,
                "reverse(exp^B) exp^B has non-scalar residual " + fmt(residual));
  }
  return lambda;
}

double beta_of(const Bivector& b) {
  const Multivector bv = b.to_multivector();
  return trace(bv * bv);
}

double rho_of(const Bivector& b) {
  require_n4(b.signature(), "rho");
  // + 0.0 turns a signed zero into +0.
  return epsilon(b.signature()) * (1.0 + beta_of(b)) + 0.0;
}

// ---------------------------------------------------------------------------
// Four-dimensional parametrisations

SpinElement parametrize_regular(const Bivector& b, Sign sign, double tol) {
  require_n4(b.signature(), "regular parametrisation");
  const double lambda = lambda_of(b);
  if (!(lambda > tol)) {
    throw Error(ErrorCode::LambdaNotPositive,
                "lambda(B) = " + fmt(lambda) + " is not positive");
  }
  return SpinElement::make(to_double(sign) / std::sqrt(lambda) * ext_exp(b),
                           tol);
}

SpinElement parametrize_adjoint(const Bivector& b, Sign sign, double tol) {
  const Signature& sig = b.signature();
  require_n4(sig, "adjoint parametrisation");
  const Multivector bv = b.to_multivector();
  const double wedge = max_abs(exterior_mul(bv, bv));
  if (wedge > tol) {
    throw Error(ErrorCode::NotSimpleBivector,
                "B ^ B has magnitude " + fmt(wedge));
  }
  const double rho = rho_of(b);
  if (rho < -tol) {
    throw Error(ErrorCode::RhoNegative,
                "rho = eps (1 + beta) = " + fmt(rho) + " is negative");
  }
  return SpinElement::make(
      bv + to_double(sign) * clamped_sqrt(rho) * pseudoscalar(sig), tol);
}

Multivector reconstruct(const Parametrisation& form) {
  return std::visit(
      [](const auto& f) -> Multivector {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, RegularForm>) {
          return to_double(f.sign) / std::sqrt(f.lambda) * ext_exp(f.b);
        } else {
          return f.b.to_multivector() +
                 to_double(f.sign) * clamped_sqrt(f.rho) *
                     pseudoscalar(f.b.signature());
        }
      },
      form);
}

Parametrisation decompose(const SpinElement& s, const DecomposeOptions& opts) {
  const Signature& sig = s.signature();
  require_n4(sig, "decompose");
  const Multivector& value = s.value();
  const double check_tol = quadratic_tolerance(value, opts.tolerance);

  const double alpha = trace(value);
  const Multivector u = grade_project(value, 2);
  const Multivector f = grade_project(value, 4);
  const Multivector u_wedge_u = exterior_mul(u, u);

  if (std::abs(alpha) > opts.branch_threshold) {
    // The grade-4 part of reverse(S) S is 2 alpha F - U ^ U.
    const double mismatch = max_abs(2.0 * alpha * f - u_wedge_u);
    if (mismatch > check_tol) {
      throw Error(ErrorCode::ParametrisationInconsistent,
                  "grade-4 part is not U^U / (2 Tr S); mismatch " +
                      fmt(mismatch));
    }
    return RegularForm{Bivector::from_multivector(u / alpha), sign_of(alpha),
                       1.0 / (alpha * alpha)};
  }

  const Multivector l = pseudoscalar(sig);
  const double eps = epsilon(sig);
  const double t = trace(eps * l * value);  // Tr(l^-1 S), since l^-1 = eps l
  const Bivector b = Bivector::from_multivector(u);

  const double wedge = max_abs(u_wedge_u);
  if (wedge > check_tol) {
    throw Error(ErrorCode::ParametrisationInconsistent,
                "Tr S = 0 but B ^ B has magnitude " + fmt(wedge));
  }
  const double rho = t * t;
  const double rho_poly = rho_of(b);
  if (std::abs(rho - rho_poly) > check_tol) {
    throw Error(ErrorCode::ParametrisationInconsistent,
                "Tr(l^-1 S)^2 = " + fmt(rho) + " but eps (1 + beta) = " +
                    fmt(rho_poly));
  }
  const Sign sign = std::abs(t) <= opts.tolerance ? Sign::Plus : sign_of(t);
  return AdjointForm{b, sign, rho};
}

// ---------------------------------------------------------------------------
// Two and three dimensions

SpinElement parametrize_low_dim(const Bivector& b, Sign sign, double tol) {
  const Signature& sig = b.signature();
  require_low_dim(sig, "low-dimensional parametrisation");
  const double beta = beta_of(b);
  if (1.0 + beta < -tol) {
    throw Error(ErrorCode::BetaOutOfRange,
                "beta = Tr(B^2) = " + fmt(beta) + " is below -1");
  }
  return SpinElement::make(
      Multivector::scalar(sig, to_double(sign) * clamped_sqrt(1.0 + beta)) +
          b.to_multivector(),
      tol);
}

LowDimForm decompose_low_dim(const SpinElement& s, double tol) {
  require_low_dim(s.signature(), "low-dimensional decompose");
  const double alpha = trace(s.value());
  const Sign sign = std::abs(alpha) <= tol ? Sign::Plus : sign_of(alpha);
  return LowDimForm{Bivector::from_multivector(s.value()), sign};
}

}  // namespace gaspin
