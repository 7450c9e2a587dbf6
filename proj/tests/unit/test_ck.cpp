#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperu/ck.hpp"
#include "oracles.hpp"

namespace hyperu {
namespace {

using testing::cj;
using testing::max_abs_diff;
using testing::random_ck;
using testing::random_pair;
using testing::su2_closed_form;
using testing::su3_closed_form;
using testing::su4_closed_form;

const Complex I{0.0, 1.0};

TEST(GammaN, MatchesSignSequence) {
  const int expected[] = {1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1};
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(gamma_n(n).value(), expected[n - 1]) << n;
}

TEST(GammaN, ExponentFormula) {
  // n = 8: (16 - 1 + 1) / 4 = 4, even.
  EXPECT_EQ(gamma_n(8).value(), 1);
  for (std::size_t n = 1; n <= 40; ++n) {
    const int parity = n % 2 == 0 ? 1 : -1;
    const int exponent = (2 * static_cast<int>(n) - 1 + parity);
    ASSERT_EQ(exponent % 4, 0);
    EXPECT_EQ(gamma_n(n).value(), (exponent / 4) % 2 == 0 ? 1 : -1);
  }
}

TEST(GammaN, RejectsZero) { EXPECT_THROW(gamma_n(0), DomainError); }

TEST(Sign, OnlyUnitValues) {
  EXPECT_EQ(Sign(-1).value(), -1);
  EXPECT_THROW(Sign(0), DomainError);
  EXPECT_THROW(Sign(2), DomainError);
}

TEST(Elementary, SingleUnitEntry) {
  EXPECT_EQ(elementary(2, 1, 1), (ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}));
  EXPECT_EQ(elementary(2, 1, 2), (ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}));
  EXPECT_THROW(elementary(2, 3, 1), DomainError);
  EXPECT_THROW(elementary(2, 0, 1), DomainError);
}

TEST(Elementary, DiagonalSumIsIdentity) {
  for (std::size_t n = 1; n <= 5; ++n) {
    ComplexMatrix sum(n, n);
    for (std::size_t m = 1; m <= n; ++m) sum += elementary(n, m, m);
    EXPECT_EQ(sum, ComplexMatrix::identity(n));
  }
}

TEST(SubspaceIdentity, Examples) {
  EXPECT_EQ(subspace_identity(2, 2, 1), ComplexMatrix(2, 2));
  EXPECT_EQ(subspace_identity(3, 3, 1),
            (ComplexMatrix{{0.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 0.0}}));
  ComplexMatrix d4(4, 4);
  d4(0, 0) = 1.0;
  d4(3, 3) = 1.0;
  EXPECT_EQ(subspace_identity(4, 3, 2), d4);
}

TEST(SubspaceIdentity, RejectsBadOrdering) {
  EXPECT_THROW(subspace_identity(3, 1, 2), DomainError);
  EXPECT_THROW(subspace_identity(3, 2, 2), DomainError);
  EXPECT_THROW(subspace_identity(3, 4, 1), DomainError);
}

TEST(QubitQ, Examples) {
  EXPECT_EQ(qubit_q(0.0, 1.0), ComplexMatrix::identity(2));
  EXPECT_EQ(qubit_q(1.0, 0.0), (ComplexMatrix{{0.0, 1.0}, {-1.0, 0.0}}));
  // -(i)* = i
  EXPECT_EQ(qubit_q(I, 0.0), (ComplexMatrix{{0.0, I}, {I, 0.0}}));
}

TEST(EmbedM, FullSpaceIsQubitQ) {
  const Complex s{0.3, -0.2}, t{0.1, 0.9};
  EXPECT_EQ(embed_m(2, 2, 1, s, t), qubit_q(s, t));
}

TEST(EmbedM, CornerPlacement) {
  const Complex s{0.3, -0.2}, t{0.1, 0.9};
  const ComplexMatrix m = embed_m(3, 3, 1, s, t);
  const ComplexMatrix expected{{t, 0.0, s}, {0.0, 0.0, 0.0}, {-cj(s), 0.0, cj(t)}};
  EXPECT_EQ(m, expected);
}

TEST(EmbedM, IdentityBlock) {
  EXPECT_EQ(embed_m(3, 2, 1, 0.0, 1.0),
            (ComplexMatrix{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 0.0}}));
  EXPECT_THROW(embed_m(3, 1, 3, 0.0, 1.0), DomainError);
}

TEST(Omega, SpecialBranchForQutritFirstPair) {
  const Complex x{0.6, 0.0}, y{0.0, 0.8};
  // alpha + beta == 3 and gamma_3 == -1
  const ComplexMatrix expected = subspace_identity(3, 2, 1) + embed_m(3, 2, 1, x, -cj(y));
  EXPECT_EQ(omega(3, 2, 1, x, y), expected);
}

TEST(Omega, NoSpecialBranchForQubit) {
  const Complex x{0.6, 0.0}, y{0.0, 0.8};
  EXPECT_EQ(omega(2, 2, 1, x, y), embed_m(2, 2, 1, x, y));
}

TEST(Omega, PlainBranchAwayFromFirstPair) {
  const ComplexMatrix m = omega(3, 3, 1, 0.0, 1.0);
  EXPECT_EQ(m, subspace_identity(3, 3, 1) + embed_m(3, 3, 1, 0.0, 1.0));
  EXPECT_EQ(m, ComplexMatrix::identity(3));
}

TEST(Omega, FactorsAreUnitary) {
  std::mt19937_64 rng(21);
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t alpha = 2; alpha <= n; ++alpha) {
      for (std::size_t beta = 1; beta < alpha; ++beta) {
        const CKPair p = random_pair(rng);
        EXPECT_LT(unitarity_residual(omega(n, alpha, beta, p.a(), p.b())), 1e-13);
      }
    }
  }
}

TEST(Flip, SmallCases) {
  EXPECT_EQ(flip(1), ComplexMatrix{{1.0}});
  EXPECT_EQ(flip(2), (ComplexMatrix{{0.0, 1.0}, {-1.0, 0.0}}));
  EXPECT_EQ(flip(3), (ComplexMatrix{{0.0, 0.0, 1.0}, {0.0, 1.0, 0.0}, {-1.0, 0.0, 0.0}}));
  EXPECT_THROW(flip(0), DomainError);
}

// flip(n) is a signed permutation matrix, so its determinant is computed
// exactly from the permutation parity and the entry signs.
TEST(Flip, DeterminantIsExactlyOne) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const ComplexMatrix phi = flip(n);
    std::vector<std::size_t> perm(n);
    int sign = 1;
    for (std::size_t r = 0; r < n; ++r) {
      int nonzero = 0;
      for (std::size_t c = 0; c < n; ++c) {
        const Complex v = phi(r, c);
        if (v == Complex{}) continue;
        ASSERT_EQ(v.imag(), 0.0);
        ASSERT_EQ(std::abs(v.real()), 1.0);
        perm[r] = c;
        sign *= v.real() > 0 ? 1 : -1;
        ++nonzero;
      }
      ASSERT_EQ(nonzero, 1);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    EXPECT_EQ(sign, 1) << "n = " << n;
    EXPECT_EQ(determinant(phi), 1.0) << "n = " << n;
  }
}

TEST(BuildSU, TrivialDimension) {
  EXPECT_EQ(build_su(CKParameterSet(1)), ComplexMatrix{{1.0}});
  EXPECT_EQ(CKParameterSet(1).size(), 0u);
}

TEST(BuildSU, QubitClosedForm) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const CKPair p = random_pair(rng);
    const CKParameterSet ps(2, {p});
    EXPECT_EQ(max_abs_diff(build_su(ps), su2_closed_form(p)), 0.0);
  }
}

TEST(BuildSU, QutritClosedForm) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ps = random_ck(3, rng);
    EXPECT_LT(max_abs_diff(build_su(ps), su3_closed_form(ps)), 1e-13);
  }
}

TEST(BuildSU, QutritEntryTwoThree) {
  const CKParameterSet ps(3, {CKPair({0.6, 0.0}, {0.0, 0.8}), CKPair({0.0, 1.0}, 0.0),
                              CKPair(std::polar(0.28, 0.4), std::polar(0.96, -1.1))});
  const Complex e = ps.at(2, 1).a(), f = ps.at(2, 1).b();
  const Complex a = ps.at(3, 1).a();
  const Complex c = ps.at(3, 2).a(), d = ps.at(3, 2).b();
  EXPECT_LT(std::abs(build_su(ps)(1, 2) - (-cj(a) * d * e + cj(c) * cj(f))), 1e-15);
}

TEST(BuildSU, QuartClosedForm) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ps = random_ck(4, rng);
    const auto u = build_su(ps);
    EXPECT_LT(max_abs_diff(u, su4_closed_form(ps)), 1e-13);
    const Complex b = ps.at(4, 1).b(), d = ps.at(4, 2).b(), f = ps.at(4, 3).b();
    EXPECT_LT(std::abs(u(0, 3) - b * d * f), 1e-15);
  }
}

TEST(BuildSU, SpecialUnitaryUpToSeven) {
  std::mt19937_64 rng(25);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto u = build_su(random_ck(n, rng));
      EXPECT_LT(unitarity_residual(u), 1e-12 * static_cast<double>(n));
      EXPECT_LT(std::abs(determinant(u) - 1.0), 1e-11);
    }
  }
}

TEST(BuildSU, EqualsDenseFactorProduct) {
  std::mt19937_64 rng(29);
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto ps = random_ck(n, rng);
    ComplexMatrix dense = flip(n);
    for (std::size_t alpha = 2; alpha <= n; ++alpha) {
      for (std::size_t beta = 1; beta < alpha; ++beta) {
        const auto& p = ps.at(alpha, beta);
        dense = dense * omega(n, alpha, beta, -std::conj(p.a()), std::conj(p.b()));
      }
    }
    EXPECT_LT(max_abs_diff(build_su(ps), dense), 1e-15) << "n = " << n;
  }
}

TEST(CKPair, RejectsUnnormalized) {
  EXPECT_THROW(CKPair(1.0, 0.1), DomainError);
  EXPECT_THROW(CKPair(Complex(std::nan(""), 0.0), 0.0), DomainError);
  EXPECT_NO_THROW(CKPair(std::sqrt(0.5), Complex(0.0, std::sqrt(0.5))));
}

TEST(CKParameterSet, IndexingAndCount) {
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(CKParameterSet(n).size(), (n * n - n) / 2);
  EXPECT_EQ(CKParameterSet::flat_index(4, 2, 1), 0u);
  EXPECT_EQ(CKParameterSet::flat_index(4, 3, 1), 1u);
  EXPECT_EQ(CKParameterSet::flat_index(4, 3, 2), 2u);
  EXPECT_EQ(CKParameterSet::flat_index(4, 4, 1), 3u);
  EXPECT_EQ(CKParameterSet::flat_index(4, 4, 3), 5u);
  EXPECT_THROW(CKParameterSet::flat_index(4, 2, 2), DomainError);
  EXPECT_THROW(CKParameterSet(3, std::vector<CKPair>(2)), DomainError);

  CKParameterSet ps(3);
  const CKPair p({0.0, 1.0}, 0.0);
  ps.set(3, 2, p);
  EXPECT_EQ(ps.at(3, 2).a(), p.a());
  EXPECT_EQ(ps.at(3, 1).a(), Complex(1.0));
}

TEST(SwapMatrix, Examples) {
  EXPECT_EQ(swap_matrix(3, 1, 1), ComplexMatrix::identity(3));
  EXPECT_EQ(swap_matrix(2, 1, 2), (ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}));
  EXPECT_EQ(swap_matrix(3, 1, 3),
            (ComplexMatrix{{0.0, 0.0, 1.0}, {0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}}));
  EXPECT_EQ(swap_matrix(4, 2, 4), swap_matrix(4, 4, 2));
  EXPECT_THROW(swap_matrix(3, 0, 1), DomainError);
  EXPECT_THROW(swap_matrix(3, 1, 4), DomainError);
}

TEST(Reposition, IdentityMoveIsNoOp) {
  std::mt19937_64 rng(26);
  const auto u = build_su(random_ck(4, rng));
  EXPECT_EQ(reposition(u, 1, 1, 1, 1), u);
}

TEST(Reposition, StaysSpecial) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = build_su(random_ck(4, rng));
    for (std::size_t r = 1; r <= 4; ++r) {
      for (std::size_t c = 1; c <= 4; ++c) {
        const auto moved = reposition(u, r, c, 1, 1);
        EXPECT_LT(std::abs(determinant(moved) - 1.0), 1e-12);
        EXPECT_LT(unitarity_residual(moved), 1e-12);
      }
    }
  }
}

TEST(Reposition, MovesSingleTermRowAndColumnForQutrit) {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ps = random_ck(3, rng);
    const Complex e = ps.at(2, 1).a(), f = ps.at(2, 1).b();
    const Complex a = ps.at(3, 1).a(), b = ps.at(3, 1).b();
    const Complex c = ps.at(3, 2).a(), d = ps.at(3, 2).b();
    const auto u = build_su(ps);

    // Row to 2, column to 3: two swaps, scalar 1.
    const auto m = reposition(u, 2, 3, 1, 1);
    const ComplexVector row{b * d, b * c, a};
    const ComplexVector col{cj(b) * e, a, cj(b) * f};
    EXPECT_LT(max_abs_diff(m.row(1), row), 1e-15);
    EXPECT_LT(max_abs_diff(m.column(2), col), 1e-15);

    // Row to 2 only: one swap, scalar exp(i pi / 3).
    const auto m2 = reposition(u, 2, 1, 1, 1);
    const Complex s = std::polar(1.0, std::numbers::pi / 3.0);
    const ComplexVector row2{s * a, s * b * c, s * b * d};
    EXPECT_LT(max_abs_diff(m2.row(1), row2), 1e-15);
    EXPECT_LT(std::abs(determinant(m2) - 1.0), 1e-12);
  }
}

TEST(Reposition, RejectsBadInput) {
  EXPECT_THROW(reposition(ComplexMatrix(2, 3), 1, 1, 1, 1), ShapeError);
  EXPECT_THROW(reposition(ComplexMatrix::identity(3), 4, 1, 1, 1), DomainError);
}

}  // namespace
}  // namespace hyperu
