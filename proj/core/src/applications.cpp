#include "hyperu/applications.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "hyperu/ck.hpp"

namespace hyperu {

namespace {

std::size_t require_completion_dimension(std::size_t n) {
  if (n < 2) throw DomainError("basis completion needs dimension n >= 2");
  return n;
}

}  // namespace

FreeParams::FreeParams(std::size_t n)
    : n_(require_completion_dimension(n)), angles_(n - 1) {}

FreeParams::FreeParams(std::size_t n, EssentialParams angles)
    : n_(require_completion_dimension(n)), angles_(std::move(angles)) {}

FreeParams FreeParams::from_flat(std::size_t n, std::span<const double> values) {
  require_completion_dimension(n);
  if (values.size() != n * (n - 2)) {
    throw DomainError("FreeParams: expected n(n-2) = " + std::to_string(n * (n - 2)) +
                      " values for n = " + std::to_string(n) + ", got " +
                      std::to_string(values.size()));
  }
  return FreeParams(n, EssentialParams::from_flat(n - 1, values));
}

FreeParams FreeParams::sample(std::size_t n, std::mt19937_64& rng) {
  require_completion_dimension(n);
  return FreeParams(n, sample_essential(n - 1, rng));
}

BasisGenResult complete_basis(const PureState& psi, const FreeParams& free) {
  const std::size_t n = psi.dimension();
  require_completion_dimension(n);
  if (free.dimension() != n) {
    throw DomainError("complete_basis: free parameters are for n = " +
                      std::to_string(free.dimension()) + ", state has n = " + std::to_string(n));
  }

  const HypersphericalState h = angles_from_state(psi);
  const auto thetas = h.thetas();
  const auto phis = h.phis();

  EssentialParams p(n);
  // Determined pairs (n, k) carry the state's angles.
  for (std::size_t k = 1; k <= n - 1; ++k) {
    p.set_theta(n, k, thetas[k - 1]);
    p.set_phi(n, k, phis[k - 1]);
  }
  p.set_chi(n, phis[n - 1]);

  const EssentialParams& chosen = free.angles();
  for (std::size_t j = 2; j <= n - 1; ++j) {
    for (std::size_t k = 1; k < j; ++k) {
      p.set_theta(j, k, chosen.theta(j, k));
      p.set_phi(j, k, chosen.phi(j, k));
    }
    p.set_chi(j, chosen.chi(j));
  }

  BasisGenResult result{build_special(p), {}};
  result.basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = result.matrix.row(i);
    result.basis.emplace_back(ComplexVector(row.begin(), row.end()));
  }
  return result;
}

double gram_residual(std::span<const PureState> basis) {
  double acc = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (basis[i].dimension() != basis[j].dimension()) {
        throw ShapeError("gram_residual: basis vectors differ in dimension");
      }
      Complex inner{};
      for (std::size_t k = 0; k < basis[i].dimension(); ++k) {
        inner += std::conj(basis[i][k]) * basis[j][k];
      }
      acc += std::norm(inner - (i == j ? 1.0 : 0.0));
    }
  }
  return std::sqrt(acc);
}

CoherentAmplitudes::CoherentAmplitudes(ComplexVector alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw DomainError("CoherentAmplitudes: need at least one port");
  if (!all_finite(alphas_)) throw DomainError("CoherentAmplitudes: non-finite amplitude");
}

CoherentAmplitudes mpi_propagate(const ComplexMatrix& u, const CoherentAmplitudes& input) {
  if (!u.is_square() || u.rows() != input.dimension()) {
    throw ShapeError("mpi_propagate: " + std::to_string(u.rows()) + "-port transform, " +
                     std::to_string(input.dimension()) + " input amplitudes");
  }
  return CoherentAmplitudes(matvec(u, input.alphas()));
}

CoherentAmplitudes mpi_propagate(const GeneralUnitaryParams& u_params,
                                 const CoherentAmplitudes& input) {
  if (u_params.dimension() != input.dimension()) {
    throw ShapeError("mpi_propagate: " + std::to_string(u_params.dimension()) +
                     "-port parameters, " + std::to_string(input.dimension()) +
                     " input amplitudes");
  }
  return mpi_propagate(build_general(u_params), input);
}

EPSpec::EPSpec(std::vector<EssentialParams> parties, double gamma)
    : parties_(std::move(parties)), gamma_(gamma) {
  if (parties_.empty()) throw DomainError("EPSpec: need at least one party");
  if (!is_canonical_phase(gamma)) throw DomainError("EPSpec: gamma outside [0, 2 pi)");
}

std::vector<std::size_t> EPSpec::dims() const {
  std::vector<std::size_t> out;
  out.reserve(parties_.size());
  for (const auto& p : parties_) out.push_back(p.dimension());
  return out;
}

std::size_t EPSpec::scalar_count() const noexcept {
  std::size_t count = 1;
  for (const auto& p : parties_) count += p.scalar_count();
  return count;
}

ComplexMatrix ep_build(const EPSpec& spec) {
  const auto parties = spec.parties();
  ComplexMatrix out = build_special(parties.front());
  for (std::size_t m = 1; m < parties.size(); ++m) out = kron(out, build_special(parties[m]));
  return std::polar(1.0, spec.gamma()) * std::move(out);
}

std::size_t ep_dof(std::span<const std::size_t> dims) {
  if (dims.empty()) throw DomainError("ep_dof: need at least one party");
  std::size_t squares = 0;
  for (std::size_t n : dims) {
    if (n < 1) throw DomainError("ep_dof: party dimension must be at least 1");
    squares += n * n;
  }
  return 1 + squares - dims.size();
}

}  // namespace hyperu
