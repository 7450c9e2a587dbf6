#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyperu/applications.hpp"
#include "oracles.hpp"

namespace hyperu {
namespace {

using testing::kTwoPi;
using testing::max_abs_diff;
using testing::mpi3_closed_form;
using testing::random_interior_state;
using testing::random_vector;
using testing::uniform;

PureState random_state(std::size_t n, std::mt19937_64& rng) {
  return PureState(random_interior_state(n, rng));
}

TEST(FreeParams, CountIsNTimesNMinusTwo) {
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_EQ(FreeParams(n).scalar_count(), n * (n - 2));
  EXPECT_THROW(FreeParams(1), DomainError);
  const std::vector<double> wrong(7, 0.0);
  EXPECT_THROW(FreeParams::from_flat(4, wrong), DomainError);
  const std::vector<double> right(8, 0.0);
  EXPECT_NO_THROW(FreeParams::from_flat(4, right));
}

TEST(CompleteBasis, BasisKetOneGivesIdentity) {
  const auto result = complete_basis(PureState::basis(2, 1), FreeParams(2));
  EXPECT_LT(max_abs_diff(result.matrix, ComplexMatrix::identity(2)), 1e-16);
  ASSERT_EQ(result.basis.size(), 2u);
  EXPECT_LT(max_abs_diff(result.basis[1].amplitudes(), PureState::basis(2, 2).amplitudes()),
            1e-16);
}

TEST(CompleteBasis, EqualSuperpositionQubit) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto result = complete_basis(PureState(ComplexVector{r, r}), FreeParams(2));
  EXPECT_NEAR(result.matrix(1, 0).real(), -r, 1e-15);
  EXPECT_NEAR(result.matrix(1, 1).real(), r, 1e-15);
  EXPECT_NEAR(std::abs(result.matrix(1, 0).imag()), 0.0, 1e-16);
  EXPECT_LT(gram_residual(result.basis), 1e-15);
}

TEST(CompleteBasis, FourLevelDeterminedPairs) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto psi = random_state(4, rng);
    const auto h = angles_from_state(psi);
    const auto result = complete_basis(psi, FreeParams::sample(4, rng));
    // Determined pairs: the first row is (a, bc, bde, bdf) with
    // (a,b) = (cos t1 e^{i p1}, sin t1), (c,d) = (cos t2 e^{i p2}, sin t2),
    // (e,f) = (cos t3 e^{i p3}, sin t3 e^{i p4}).
    const auto t = h.thetas();
    const auto p = h.phis();
    const ComplexVector row{
        std::polar(std::cos(t[0]), p[0]), std::sin(t[0]) * std::polar(std::cos(t[1]), p[1]),
        std::sin(t[0]) * std::sin(t[1]) * std::polar(std::cos(t[2]), p[2]),
        std::sin(t[0]) * std::sin(t[1]) * std::polar(std::sin(t[2]), p[3])};
    EXPECT_LT(max_abs_diff(result.matrix.row(0), row), 1e-13);
    EXPECT_LT(gram_residual(result.basis), 1e-12);
  }
}

TEST(CompleteBasis, OrthonormalAndReproducesInput) {
  std::mt19937_64 rng(52);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto psi = random_state(n, rng);
      const auto result = complete_basis(psi, FreeParams::sample(n, rng));
      EXPECT_LT(gram_residual(result.basis), 1e-11);
      EXPECT_LT(max_abs_diff(result.basis.front().amplitudes(), psi.amplitudes()), 1e-12);
      EXPECT_LT(max_abs_diff(result.matrix.row(0), psi.amplitudes()), 1e-12);
    }
  }
}

TEST(CompleteBasis, FirstRowIndependentOfFreeParams) {
  std::mt19937_64 rng(53);
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto psi = random_state(n, rng);
    const auto a = complete_basis(psi, FreeParams::sample(n, rng));
    const auto b = complete_basis(psi, FreeParams::sample(n, rng));
    EXPECT_LT(max_abs_diff(a.matrix.row(0), b.matrix.row(0)), 1e-12);
    EXPECT_GT(max_abs_diff(a.matrix.row(1), b.matrix.row(1)), 1e-6);
  }
}

TEST(CompleteBasis, SparseStates) {
  // Zero amplitudes exercise the theta = 0 and arg(0) = 0 conventions.
  const ComplexVector c{0.0, Complex(0.0, 1.0) / std::sqrt(2.0), 0.0, -1.0 / std::sqrt(2.0)};
  const PureState psi(c);
  std::mt19937_64 rng(54);
  const auto result = complete_basis(psi, FreeParams::sample(4, rng));
  EXPECT_LT(max_abs_diff(result.matrix.row(0), psi.amplitudes()), 1e-15);
  EXPECT_LT(gram_residual(result.basis), 1e-13);

  const auto last = complete_basis(PureState::basis(5, 5), FreeParams(5));
  EXPECT_LT(max_abs_diff(last.matrix.row(0), PureState::basis(5, 5).amplitudes()), 1e-15);
}

TEST(CompleteBasis, Errors) {
  EXPECT_THROW(complete_basis(PureState::basis(1, 1), FreeParams(2)), DomainError);
  EXPECT_THROW(complete_basis(PureState::basis(3, 1), FreeParams(4)), DomainError);
}

TEST(MpiPropagate, IdentityEchoesInput) {
  const CoherentAmplitudes in(ComplexVector{Complex(1.0, 2.0), Complex(-0.5, 0.0), 3.0});
  const auto out = mpi_propagate(GeneralUnitaryParams(EssentialParams(3)), in);
  // All-zero angles give a signed permutation, not I; build U = I directly.
  const auto echo = mpi_propagate(ComplexMatrix::identity(3), in);
  EXPECT_EQ(ComplexVector(echo.alphas().begin(), echo.alphas().end()),
            ComplexVector(in.alphas().begin(), in.alphas().end()));
  EXPECT_NEAR(out.total_intensity(), in.total_intensity(), 1e-12);
}

TEST(MpiPropagate, VacuumIsolationPicksFirstColumn) {
  std::mt19937_64 rng(55);
  const auto base = sample_essential(3, rng);
  const double phase = 0.9;
  const Complex alpha{0.7, -1.3};
  const auto out =
      mpi_propagate(GeneralUnitaryParams(base, phase), CoherentAmplitudes({alpha, 0.0, 0.0}));
  const auto u = build_general(GeneralUnitaryParams(base, phase));
  const auto ck = essential_to_ck(base);
  EXPECT_LT(std::abs(out[0] - std::polar(1.0, phase) * ck.at(3, 1).a() * alpha), 1e-15);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_LT(std::abs(out[k] - u(k, 0) * alpha), 1e-15);
}

TEST(MpiPropagate, MatchesThreePortExpansion) {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 100; ++trial) {
    const auto base = sample_essential(3, rng);
    const double phase = wrap_phase(uniform(rng, 0.0, kTwoPi));
    const auto in = random_vector(3, rng, 2.0);
    const auto out = mpi_propagate(GeneralUnitaryParams(base, phase), CoherentAmplitudes(in));
    const auto expected = mpi3_closed_form(essential_to_ck(base), phase, in[0], in[1], in[2]);
    EXPECT_LT(max_abs_diff(out.alphas(), expected), 1e-13);
  }
}

TEST(MpiPropagate, ConservesIntensityAndIsLinear) {
  std::mt19937_64 rng(57);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const GeneralUnitaryParams params(sample_essential(n, rng),
                                        wrap_phase(uniform(rng, 0.0, kTwoPi)));
      const auto x = random_vector(n, rng);
      const auto y = random_vector(n, rng);
      ComplexVector sum(n);
      for (std::size_t k = 0; k < n; ++k) sum[k] = x[k] + y[k];

      const auto ox = mpi_propagate(params, CoherentAmplitudes(x));
      const auto oy = mpi_propagate(params, CoherentAmplitudes(y));
      const auto os = mpi_propagate(params, CoherentAmplitudes(sum));
      EXPECT_LT(std::abs(ox.total_intensity() - norm_squared(x)), 1e-12);
      for (std::size_t k = 0; k < n; ++k) EXPECT_LT(std::abs(os[k] - ox[k] - oy[k]), 1e-12);
    }
  }
}

TEST(MpiPropagate, DimensionMismatch) {
  EXPECT_THROW(mpi_propagate(GeneralUnitaryParams(EssentialParams(3)),
                             CoherentAmplitudes(ComplexVector(2))),
               ShapeError);
  EXPECT_THROW(CoherentAmplitudes(ComplexVector{Complex(INFINITY, 0.0)}), DomainError);
}

TEST(EpBuild, SingleParty) {
  std::mt19937_64 rng(58);
  const auto p = sample_essential(3, rng);
  EXPECT_EQ(ep_build(EPSpec({p})), build_special(p));
}

TEST(EpBuild, QubitQutritBlockStructure) {
  std::mt19937_64 rng(59);
  const auto p1 = sample_essential(2, rng);
  const auto p2 = sample_essential(3, rng);
  const auto u = ep_build(EPSpec({p1, p2}));
  const auto u1 = build_special(p1);
  const auto u2 = build_special(p2);
  ASSERT_EQ(u.rows(), 6u);
  const Complex a1 = essential_to_ck(p1).at(2, 1).a();
  const Complex b1 = essential_to_ck(p1).at(2, 1).b();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_LT(std::abs(u(i, j) - a1 * u2(i, j)), 1e-15);
      EXPECT_LT(std::abs(u(i, j + 3) - b1 * u2(i, j)), 1e-15);
      EXPECT_LT(std::abs(u(i + 3, j) + std::conj(b1) * u2(i, j)), 1e-15);
      EXPECT_LT(std::abs(u(i + 3, j + 3) - std::conj(a1) * u2(i, j)), 1e-15);
    }
  }
  EXPECT_EQ(u, kron(u1, u2));
}

TEST(EpBuild, UnitaryForRandomMultiPartySpecs) {
  std::mt19937_64 rng(60);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (std::size_t parties : {2u, 3u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<EssentialParams> ps;
      for (std::size_t m = 0; m < parties; ++m) ps.push_back(sample_essential(dim(rng), rng));
      const EPSpec spec(ps, wrap_phase(uniform(rng, 0.0, kTwoPi)));
      EXPECT_LT(unitarity_residual(ep_build(spec)), 1e-11);
      EXPECT_EQ(spec.scalar_count(), ep_dof(spec.dims()));
    }
  }
}

TEST(EpDof, Values) {
  const std::vector<std::size_t> qubit{2}, qq{2, 3}, three{2, 2, 2}, empty{};
  EXPECT_EQ(ep_dof(qubit), 4u);
  EXPECT_EQ(ep_dof(qq), 12u);
  EXPECT_EQ(ep_dof(three), 10u);
  EXPECT_THROW(ep_dof(empty), DomainError);
  const std::vector<std::size_t> zero{2, 0};
  EXPECT_THROW(ep_dof(zero), DomainError);
  EXPECT_THROW(EPSpec({}), DomainError);
}

}  // namespace
}  // namespace hyperu
