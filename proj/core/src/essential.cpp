#include "hyperu/essential.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "hyperu/hypersphere.hpp"

namespace hyperu {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_dimension(std::size_t n, const char* op) {
  if (n < 1) throw DomainError(std::string(op) + ": dimension must be at least 1");
}

void check_superposition(double v, const char* what) {
  if (!(v >= 0.0 && v <= kHalfPi)) {
    throw DomainError(std::string(what) + " = " + std::to_string(v) + " outside [0, pi/2]");
  }
}

void check_phase(double v, const char* what) {
  if (!(v >= 0.0 && v < kTwoPi)) {
    throw DomainError(std::string(what) + " = " + std::to_string(v) + " outside [0, 2 pi)");
  }
}

}  // namespace

std::size_t dof_count(std::size_t n, UnitaryGroup group) {
  require_dimension(n, "dof_count");
  return group == UnitaryGroup::Special ? n * n - 1 : n * n;
}

std::size_t waste_count(std::size_t n) {
  require_dimension(n, "waste_count");
  return (n - 1) * (n < 2 ? 0 : n - 2) / 2;
}

std::size_t naive_param_count(std::size_t n) {
  require_dimension(n, "naive_param_count");
  return 3 * CKParameterSet::pair_count(n);
}

double fold_superposition(double angle) {
  double t = std::fmod(angle, std::numbers::pi);
  if (t < 0.0) t += std::numbers::pi;
  return t > kHalfPi ? std::numbers::pi - t : t;
}

EssentialParams::EssentialParams(std::size_t n)
    : n_(n),
      thetas_(CKParameterSet::pair_count(n), 0.0),
      phis_(CKParameterSet::pair_count(n), 0.0),
      chis_(n == 0 ? 0 : n - 1, 0.0) {
  require_dimension(n, "EssentialParams");
}

EssentialParams EssentialParams::from_flat(std::size_t n, std::span<const double> values) {
  EssentialParams p(n);
  if (values.size() != p.scalar_count()) {
    throw DomainError("EssentialParams: expected " + std::to_string(p.scalar_count()) +
                      " scalars for n = " + std::to_string(n) + ", got " +
                      std::to_string(values.size()));
  }
  const std::size_t pairs = p.thetas_.size();
  for (std::size_t i = 0; i < pairs; ++i) {
    check_superposition(values[i], "theta");
    check_phase(values[pairs + i], "phi");
    p.thetas_[i] = values[i];
    p.phis_[i] = values[pairs + i];
  }
  for (std::size_t i = 0; i < p.chis_.size(); ++i) {
    check_phase(values[2 * pairs + i], "chi");
    p.chis_[i] = values[2 * pairs + i];
  }
  return p;
}

EssentialParams EssentialParams::canonical_from_flat(std::size_t n,
                                                     std::span<const double> values) {
  std::vector<double> canonical(values.begin(), values.end());
  const std::size_t pairs = CKParameterSet::pair_count(n);
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    canonical[i] = i < pairs ? fold_superposition(canonical[i]) : wrap_phase(canonical[i]);
  }
  return from_flat(n, canonical);
}

std::vector<double> EssentialParams::to_flat() const {
  std::vector<double> out;
  out.reserve(scalar_count());
  out.insert(out.end(), thetas_.begin(), thetas_.end());
  out.insert(out.end(), phis_.begin(), phis_.end());
  out.insert(out.end(), chis_.begin(), chis_.end());
  return out;
}

std::size_t EssentialParams::chi_index(std::size_t j) const {
  if (j < 2 || j > n_) {
    throw DomainError("EssentialParams: chi index " + std::to_string(j) + " outside 2.." +
                      std::to_string(n_));
  }
  return j - 2;
}

double EssentialParams::theta(std::size_t j, std::size_t k) const {
  return thetas_[CKParameterSet::flat_index(n_, j, k)];
}

double EssentialParams::phi(std::size_t j, std::size_t k) const {
  return phis_[CKParameterSet::flat_index(n_, j, k)];
}

double EssentialParams::chi(std::size_t j) const { return chis_[chi_index(j)]; }

void EssentialParams::set_theta(std::size_t j, std::size_t k, double value) {
  check_superposition(value, "theta");
  thetas_[CKParameterSet::flat_index(n_, j, k)] = value;
}

void EssentialParams::set_phi(std::size_t j, std::size_t k, double value) {
  check_phase(value, "phi");
  phis_[CKParameterSet::flat_index(n_, j, k)] = value;
}

void EssentialParams::set_chi(std::size_t j, double value) {
  check_phase(value, "chi");
  chis_[chi_index(j)] = value;
}

GeneralUnitaryParams::GeneralUnitaryParams(EssentialParams base, double gamma)
    : base_(std::move(base)), gamma_(gamma) {
  check_phase(gamma, "gamma");
}

NaiveParams::NaiveParams(std::size_t n) : n_(n), values_(naive_param_count(n), 0.0) {}

void NaiveParams::set(std::size_t j, std::size_t k, double theta, double phi, double epsilon) {
  check_phase(theta, "theta");
  check_phase(phi, "phi");
  check_phase(epsilon, "epsilon");
  const std::size_t at = 3 * CKParameterSet::flat_index(n_, j, k);
  values_[at] = theta;
  values_[at + 1] = phi;
  values_[at + 2] = epsilon;
}

CKParameterSet essential_to_ck(const EssentialParams& p) {
  const std::size_t n = p.dimension();
  std::vector<CKPair> pairs;
  pairs.reserve(CKParameterSet::pair_count(n));
  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t k = 1; k < j; ++k) {
      const double theta = p.theta(j, k);
      const double epsilon = k == j - 1 ? p.chi(j) : 0.0;
      pairs.emplace_back(std::polar(std::cos(theta), p.phi(j, k)),
                         std::polar(std::sin(theta), epsilon));
    }
  }
  return CKParameterSet(n, std::move(pairs));
}

CKParameterSet naive_to_ck(const NaiveParams& p) {
  const auto v = p.values();
  std::vector<CKPair> pairs;
  pairs.reserve(v.size() / 3);
  for (std::size_t i = 0; i < v.size(); i += 3) {
    pairs.emplace_back(std::cos(v[i]) * std::polar(1.0, v[i + 1]),
                       std::sin(v[i]) * std::polar(1.0, v[i + 2]));
  }
  return CKParameterSet(p.dimension(), std::move(pairs));
}

ComplexMatrix build_special(const EssentialParams& p) { return build_su(essential_to_ck(p)); }

ComplexMatrix build_general(const GeneralUnitaryParams& p) {
  return std::polar(1.0, p.gamma()) * build_special(p.base());
}

Complex f_element(double v, double w, double x, double y, double z) {
  return -std::cos(v) * std::cos(w) * std::cos(x) * std::polar(1.0, y) -
         std::sin(w) * std::sin(x) * std::polar(1.0, -z);
}

EssentialParams sample_essential(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> superposition(0.0, kHalfPi);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  EssentialParams p(n);
  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t k = 1; k < j; ++k) {
      p.set_theta(j, k, superposition(rng));
      p.set_phi(j, k, wrap_phase(phase(rng)));
    }
    p.set_chi(j, wrap_phase(phase(rng)));
  }
  return p;
}

NaiveParams sample_naive(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  NaiveParams p(n);
  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t k = 1; k < j; ++k) {
      // Separate statements fix the draw order.
      const double theta = wrap_phase(angle(rng));
      const double phi = wrap_phase(angle(rng));
      const double epsilon = wrap_phase(angle(rng));
      p.set(j, k, theta, phi, epsilon);
    }
  }
  return p;
}

}  // namespace hyperu
