#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gaspin/error.hpp"
#include "gaspin/rotation.hpp"
#include "test_support.hpp"

using namespace gaspin;
using testing_support::bivector4;
using testing_support::random_bivector;
using testing_support::random_simple_bivector;

namespace {

constexpr BladeMask e12 = 0b0011, e34 = 0b1100;

Matrix diag4(double a, double b, double c, double d) {
  const std::array<double, 4> v{a, b, c, d};
  return Matrix::diagonal(v);
}

}  // namespace

TEST(Determinant, CofactorExpansion) {
  EXPECT_EQ(determinant(Matrix::identity(5)), 1.0);
  EXPECT_EQ(determinant(diag4(1, 2, 3, 4)), 24.0);
  Matrix m(3);
  const double v[3][3] = {{2, -1, 0}, {1, 3, 4}, {0, 5, -2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  // 2(3*-2 - 20) + 1(1*-2 - 0) = -52 - 2
  EXPECT_EQ(determinant(m), -54.0);
  Matrix swap = Matrix::identity(4);
  swap(0, 0) = swap(1, 1) = 0.0;
  swap(0, 1) = swap(1, 0) = 1.0;
  EXPECT_EQ(determinant(swap), -1.0);
}

TEST(VerifyOrthogonal, Examples) {
  const Signature mink(1, 3);
  const auto id = verify_orthogonal({mink, Matrix::identity(4)});
  EXPECT_EQ(id.metric_residual, 0.0);
  EXPECT_EQ(id.det_residual, 0.0);
  EXPECT_TRUE(id.identity_component);
  EXPECT_TRUE(id.passed);

  const auto flip = verify_orthogonal({mink, diag4(1, 1, -1, -1)});
  EXPECT_TRUE(flip.passed);
  EXPECT_TRUE(flip.identity_component);

  const auto other = verify_orthogonal({mink, diag4(-1, -1, 1, 1)});
  EXPECT_TRUE(other.special_orthogonal);
  EXPECT_FALSE(other.identity_component);
  EXPECT_FALSE(other.passed);

  Matrix boost = Matrix::identity(4);
  boost(0, 1) = 0.5;
  const auto bad = verify_orthogonal({mink, boost});
  EXPECT_FALSE(bad.special_orthogonal);
}

TEST(VerifyOrthogonal, DefiniteSignaturesHaveOneComponent) {
  const auto r = verify_orthogonal({Signature(4, 0), diag4(-1, -1, 1, 1)});
  EXPECT_TRUE(r.identity_component);
  EXPECT_TRUE(r.passed);
}

TEST(SpinToSo, Examples) {
  const Signature sig(0, 4);
  EXPECT_EQ(spin_to_so(SpinElement::identity(sig)).entries, Matrix::identity(4));
  EXPECT_EQ(spin_to_so(-SpinElement::identity(sig)).entries, Matrix::identity(4));

  const auto s = parametrize_regular(bivector4(sig, {1, 0, 0, 0, 0, 0}), Sign::Plus);
  // Row a is the image of e^a: e1 -> -e2, e2 -> e1, e3 -> e3, e4 -> e4.
  Matrix expected(4);
  expected(0, 1) = -1.0;
  expected(1, 0) = 1.0;
  expected(2, 2) = 1.0;
  expected(3, 3) = 1.0;
  EXPECT_LE(max_abs_diff(spin_to_so(s).entries, expected), 1e-15);

  const Signature mink(1, 3);
  EXPECT_EQ(spin_to_so(SpinElement::make(Multivector::blade(mink, e34))).entries,
            diag4(1, 1, -1, -1));
}

TEST(SpinToSo, GeneratedElementsLandInIdentityComponent) {
  for (const auto& sig : testing_support::signatures_n4()) {
    std::mt19937_64 rng(20);
    for (int trial = 0; trial < 200; ++trial) {
      const SpinElement s = random_spin_element(sig, rng, 3);
      EXPECT_LE(vector_residual(s), 1e-12);
      const OrthoMatrix p = spin_to_so(s);
      const OrthoReport r = verify_orthogonal(p);
      EXPECT_TRUE(r.passed) << sig.to_string() << " metric " << r.metric_residual
                            << " det " << r.det_residual;
      EXPECT_EQ(spin_to_so(-s).entries, p.entries);
    }
  }
}

TEST(SpinToSo, WorksInLowDimensions) {
  for (const auto& sig : testing_support::signatures_low_dim()) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
      const SpinElement s = random_spin_element(sig, rng, 2);
      EXPECT_TRUE(verify_orthogonal(spin_to_so(s)).passed) << sig.to_string();
    }
  }
}

TEST(SpinToSo, EvenElementsPreserveVectorsUpToDimensionFour) {
  // reverse(S) v S is reverse-invariant, which rules out grade 3.
  const Signature sig(0, 4);
  const Multivector u = Multivector::scalar(sig, 1.0) + Multivector::blade(sig, e12) +
                        Multivector::blade(sig, e34);
  EXPECT_EQ(vector_residual(SpinElement::make(u, 10.0)), 0.0);
}

TEST(SpinToSo, RejectsElementsThatDoNotMapVectorsToVectors) {
  // In Cl(5,0), (e + e1234) e5 (e + e1234) = 2 e5 + 2 e12345.
  const Signature sig(5, 0);
  const Multivector u = Multivector::scalar(sig, 1.0) + Multivector::blade(sig, 0b01111);
  const SpinElement loose = SpinElement::make(u, 10.0);
  EXPECT_EQ(vector_residual(loose), 2.0);
  try {
    (void)spin_to_so(loose);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSpinElement);
  }
}

TEST(Compose, GroupLaws) {
  const Signature sig(2, 2);
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const SpinElement a = random_spin_element(sig, rng, 2);
    const SpinElement b = random_spin_element(sig, rng, 2);
    const SpinElement inv = SpinElement::make(reverse(a.value()));
    EXPECT_LE(max_abs_diff(compose(a, inv).value(), Multivector::scalar(sig, 1.0)), 1e-12);
    EXPECT_EQ(compose(SpinElement::identity(sig), a).value(), a.value());
    const Matrix lhs = spin_to_so(compose(a, b)).entries;
    const Matrix rhs = spin_to_so(a).entries * spin_to_so(b).entries;
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-9);
  }
  EXPECT_THROW((void)compose(SpinElement::identity(Signature(2, 2)),
                             SpinElement::identity(Signature(1, 3))),
               Error);
}

TEST(ClosedFormT13, Examples) {
  const Signature mink(1, 3);
  EXPECT_EQ(closed_form_T13(Bivector(mink)), Matrix::identity(4));
  const double b = 0.3;
  const Matrix t = closed_form_T13(bivector4(mink, {b, 0, 0, 0, 0, 0}));
  EXPECT_EQ(t(0, 1), 2 * b);
  EXPECT_EQ(t(1, 0), 2 * b);
  EXPECT_EQ(t(0, 0), 1 + b * b);
  EXPECT_THROW((void)closed_form_T13(Bivector(Signature(3, 1))), Error);
}

TEST(ClosedFormT13, MatchesGeneralMap) {
  const Signature mink(1, 3);
  std::mt19937_64 rng(23);
  int accepted = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Bivector b = random_bivector(mink, rng, 1.5);
    const double lam = lambda_of(b);
    if (lam <= 1e-6) continue;
    ++accepted;
    const Matrix p = spin_to_so(parametrize_regular(b, Sign::Plus)).entries;
    EXPECT_LE(max_abs_diff(closed_form_T13(b), lam * p), 1e-10);
  }
  EXPECT_GT(accepted, 200);
}

TEST(ClosedFormP13, Examples) {
  const Signature mink(1, 3);
  EXPECT_EQ(closed_form_P13_adjoint(bivector4(mink, {0, 0, 0, 0, 0, 1})).entries,
            diag4(1, 1, -1, -1));
  EXPECT_EQ(closed_form_P13_adjoint(bivector4(mink, {0, 0, 0, 1, 0, 0})).entries,
            diag4(1, -1, -1, 1));
  try {
    (void)closed_form_P13_adjoint(Bivector(mink));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RhoNegative);
  }
  try {
    (void)closed_form_P13_adjoint(bivector4(mink, {0, 0, 0, 1, 0, 1}));
  } catch (const Error& e) {
    // e23 + e34 is simple with rho = 1.
    FAIL() << e.what();
  }
  try {
    (void)closed_form_P13_adjoint(bivector4(mink, {1, 0, 0, 0, 0, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSimpleBivector);
  }
}

TEST(ClosedFormP13, MatchesGeneralMap) {
  const Signature mink(1, 3);
  std::mt19937_64 rng(24);
  int accepted = 0;
  for (int trial = 0; trial < 5000 && accepted < 300; ++trial) {
    const Bivector b = random_simple_bivector(mink, rng, 1.5);
    if (rho_of(b) < 0.0) continue;
    ++accepted;
    const Matrix p = spin_to_so(parametrize_adjoint(b, Sign::Plus)).entries;
    EXPECT_LE(max_abs_diff(closed_form_P13_adjoint(b).entries, p), 1e-10);
  }
  EXPECT_GE(accepted, 300);
}

TEST(RandomSpinElement, DeterministicPerSeed) {
  const Signature sig(1, 3);
  EXPECT_EQ(random_spin_element(sig, std::uint64_t{42}, 3).value(),
            random_spin_element(sig, std::uint64_t{42}, 3).value());
  EXPECT_FALSE(random_spin_element(sig, std::uint64_t{42}, 3).value() ==
               random_spin_element(sig, std::uint64_t{43}, 3).value());
}

TEST(RandomSpinElement, ZeroRangeGivesPlusOrMinusIdentity) {
  const Signature sig(2, 2);
  const SamplingOptions zero{.coeff_range = 0.0, .min_scale = 0.1};
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto s = random_spin_element(sig, seed, 1, zero).value();
    EXPECT_EQ(std::abs(trace(s)), 1.0);
    EXPECT_EQ(max_abs(grade_project(s, 2)), 0.0);
  }
}

TEST(RandomSpinElement, SplitSignatureSamplesDecompose) {
  const Signature sig(2, 2);
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 1000; ++trial) {
    const SpinElement s = random_spin_element(sig, rng, 3);
    EXPECT_TRUE(is_spin_element(s.value(), 1e-9));
    EXPECT_LE(spin_residual(s.value()), 1e-9);
    EXPECT_NO_THROW((void)decompose(s));
  }
}

TEST(RandomSpinElement, RejectsBadArguments) {
  EXPECT_THROW((void)random_spin_element(Signature(1, 3), std::uint64_t{1}, 0), Error);
  EXPECT_THROW((void)random_spin_element(Signature(2, 3), std::uint64_t{1}, 1), Error);
}
