#ifndef HYPERU_APPLICATIONS_HPP
#define HYPERU_APPLICATIONS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hyperu/complex_matrix.hpp"
#include "hyperu/essential.hpp"
#include "hyperu/hypersphere.hpp"

namespace hyperu {

// ---------------------------------------------------------------------------
// Complete basis generation
// ---------------------------------------------------------------------------

/// The freely chosen angles of a basis completion in dimension n: the
/// essential angles for indices 2 <= j <= n - 1, 1 <= k < j. There are
/// n (n - 2) of them, which is exactly an SU(n - 1) angle set.
class FreeParams {
 public:
  /// All zero. Requires n >= 2.
  explicit FreeParams(std::size_t n);
  /// Same flat layout as EssentialParams for dimension n - 1.
  static FreeParams from_flat(std::size_t n, std::span<const double> values);
  static FreeParams sample(std::size_t n, std::mt19937_64& rng);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t scalar_count() const noexcept { return angles_.scalar_count(); }
  const EssentialParams& angles() const noexcept { return angles_; }
  EssentialParams& angles() noexcept { return angles_; }

 private:
  FreeParams(std::size_t n, EssentialParams angles);

  std::size_t n_;
  EssentialParams angles_;
};

struct BasisGenResult {
  ComplexMatrix matrix;
  /// Rows of `matrix`, unconjugated; basis.front() reproduces the input.
  std::vector<PureState> basis;
};

/// Builds an SU(n) matrix whose first row is psi: the hyperspherical angles
/// of psi fill the pairs (n, k) and `free` fills the rest. Its rows form an
/// orthonormal basis containing psi.
///
/// Throws DomainError for n == 1 or when free.dimension() != n.
BasisGenResult complete_basis(const PureState& psi, const FreeParams& free);

/// Gram residual ||G - I||_F with G(i, j) = <basis_i | basis_j>.
double gram_residual(std::span<const PureState> basis);

// ---------------------------------------------------------------------------
// Multiport interferometer coherent-state propagation
// ---------------------------------------------------------------------------

/// Coherent-state parameters alpha_k, one per port.
class CoherentAmplitudes {
 public:
  explicit CoherentAmplitudes(ComplexVector alphas);

  std::size_t dimension() const noexcept { return alphas_.size(); }
  std::span<const Complex> alphas() const noexcept { return alphas_; }
  Complex operator[](std::size_t i) const { return alphas_[i]; }
  double total_intensity() const noexcept { return norm_squared(alphas_); }

 private:
  ComplexVector alphas_;
};

/// alpha'_k = sum_m U(k, m) alpha_m with U = build_general(u_params).
/// Throws ShapeError on dimension mismatch.
CoherentAmplitudes mpi_propagate(const GeneralUnitaryParams& u_params,
                                 const CoherentAmplitudes& input);

/// Same map for an already built U.
CoherentAmplitudes mpi_propagate(const ComplexMatrix& u, const CoherentAmplitudes& input);

// ---------------------------------------------------------------------------
// Entanglement-preserving transforms
// ---------------------------------------------------------------------------

/// One SU(n_m) angle set per party and a single global phase.
class EPSpec {
 public:
  EPSpec(std::vector<EssentialParams> parties, double gamma = 0.0);

  std::span<const EssentialParams> parties() const noexcept { return parties_; }
  double gamma() const noexcept { return gamma_; }
  std::vector<std::size_t> dims() const;
  /// 1 + sum (n_m^2 - 1); equals ep_dof(dims()).
  std::size_t scalar_count() const noexcept;

 private:
  std::vector<EssentialParams> parties_;
  double gamma_;
};

/// e^{i gamma} U_1 (x) U_2 (x) ... (x) U_N.
ComplexMatrix ep_build(const EPSpec& spec);

/// 1 - N + sum n_m^2. Throws DomainError for an empty list or a zero entry.
std::size_t ep_dof(std::span<const std::size_t> dims);

}  // namespace hyperu

#endif  // HYPERU_APPLICATIONS_HPP
