#include "hyperu/hypersphere.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace hyperu {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool in_closed(double x, double lo, double hi) { return x >= lo && x <= hi; }
bool in_half_open(double x, double lo, double hi) { return x >= lo && x < hi; }

// sqrt(sum_{m > k} v_m^2) for every k, accumulated from the back.
std::vector<double> tail_norms(std::span<const double> values) {
  std::vector<double> tails(values.size(), 0.0);
  double acc = 0.0;
  for (std::size_t k = values.size(); k-- > 0;) {
    tails[k] = std::sqrt(acc);
    acc += values[k] * values[k];
  }
  return tails;
}

}  // namespace

double wrap_phase(double angle) {
  double wrapped = std::fmod(angle, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2 pi.
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

bool is_canonical_phase(double angle) { return in_half_open(angle, 0.0, kTwoPi); }

double arccot_ratio(double p, double q) { return std::atan2(q, p); }

HypersphericalPoint::HypersphericalPoint(std::size_t dim, double radius, std::vector<double> angles)
    : dim_(dim), radius_(radius), angles_(std::move(angles)) {
  if (dim == 0) throw DomainError("HypersphericalPoint: dimension must be at least 1");
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw DomainError("HypersphericalPoint: radius must be finite and non-negative");
  }
  if (dim == 1) {
    if (angles_.size() != 1 || (angles_[0] != 0.0 && angles_[0] != kPi)) {
      throw DomainError("HypersphericalPoint: n = 1 takes a single angle in {0, pi}");
    }
    return;
  }
  if (angles_.size() != dim - 1) {
    throw DomainError("HypersphericalPoint: expected " + std::to_string(dim - 1) + " angles, got " +
                      std::to_string(angles_.size()));
  }
  for (std::size_t i = 0; i + 1 < angles_.size(); ++i) {
    if (!in_closed(angles_[i], 0.0, kPi)) {
      throw DomainError("HypersphericalPoint: polar angle " + std::to_string(i + 1) +
                        " outside [0, pi]");
    }
  }
  if (!in_half_open(angles_.back(), 0.0, kTwoPi)) {
    throw DomainError("HypersphericalPoint: azimuthal angle outside [0, 2 pi)");
  }
}

std::vector<double> to_cartesian(const HypersphericalPoint& p) {
  const std::size_t n = p.dimension();
  const auto angles = p.angles();
  if (n == 1) return {p.radius() * std::cos(angles[0])};

  std::vector<double> xs(n);
  double sines = p.radius();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    xs[k] = sines * std::cos(angles[k]);
    sines *= std::sin(angles[k]);
  }
  xs[n - 1] = sines;
  return xs;
}

HypersphericalPoint from_cartesian(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n == 0) throw DomainError("from_cartesian: empty coordinate list");

  double r2 = 0.0;
  for (double x : xs) r2 += x * x;
  if (r2 == 0.0) throw DegenerateInputError("from_cartesian: zero vector has no angles");
  const double r = std::sqrt(r2);

  if (n == 1) return {1, r, {xs[0] >= 0.0 ? 0.0 : kPi}};

  const std::vector<double> tails = tail_norms(xs);

  std::vector<double> angles(n - 1);
  for (std::size_t k = 0; k + 2 < n; ++k) angles[k] = std::atan2(tails[k], xs[k]);
  angles[n - 2] = wrap_phase(std::atan2(xs[n - 1], xs[n - 2]));
  return {n, r, std::move(angles)};
}

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw DomainError("PureState: dimension must be at least 1");
  if (!all_finite(amplitudes_)) throw DomainError("PureState: non-finite amplitude");
  const double norm = norm_squared(amplitudes_);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw DomainError("PureState: squared norm " + std::to_string(norm) + " differs from 1");
  }
}

PureState PureState::normalized(ComplexVector amplitudes) {
  if (!all_finite(amplitudes)) throw DomainError("PureState: non-finite amplitude");
  const double norm = std::sqrt(norm_squared(amplitudes));
  if (norm == 0.0) throw DegenerateInputError("PureState: cannot normalize the zero vector");
  for (auto& c : amplitudes) c /= norm;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t k) {
  if (k < 1 || k > dim) throw DomainError("PureState::basis: index outside 1..n");
  ComplexVector v(dim);
  v[k - 1] = 1.0;
  return PureState(std::move(v));
}

HypersphericalState::HypersphericalState(std::vector<double> thetas, std::vector<double> phis)
    : thetas_(std::move(thetas)), phis_(std::move(phis)) {
  if (phis_.empty()) throw DomainError("HypersphericalState: dimension must be at least 1");
  if (thetas_.size() + 1 != phis_.size()) {
    throw DomainError("HypersphericalState: need n - 1 thetas for n phis");
  }
  for (double t : thetas_) {
    if (!in_closed(t, 0.0, kPi / 2.0)) {
      throw DomainError("HypersphericalState: superposition angle outside [0, pi/2]");
    }
  }
  for (double p : phis_) {
    if (!in_half_open(p, 0.0, kTwoPi)) {
      throw DomainError("HypersphericalState: phase angle outside [0, 2 pi)");
    }
  }
}

std::vector<double> HypersphericalState::relative_phases() const {
  std::vector<double> rel(phis_.size());
  for (std::size_t k = 0; k < phis_.size(); ++k) rel[k] = wrap_phase(phis_[k] - phis_[0]);
  return rel;
}

PureState state_from_angles(const HypersphericalState& h) {
  const std::size_t n = h.dimension();
  const auto thetas = h.thetas();
  const auto phis = h.phis();

  ComplexVector c(n);
  double sines = 1.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    c[k] = std::polar(sines * std::cos(thetas[k]), phis[k]);
    sines *= std::sin(thetas[k]);
  }
  c[n - 1] = std::polar(sines, phis[n - 1]);
  return PureState(std::move(c));
}

HypersphericalState angles_from_state(const PureState& psi) {
  const std::size_t n = psi.dimension();
  std::vector<double> moduli(n);
  std::vector<double> phis(n);
  for (std::size_t k = 0; k < n; ++k) {
    moduli[k] = std::abs(psi[k]);
    phis[k] = moduli[k] == 0.0 ? 0.0 : wrap_phase(std::arg(psi[k]));
  }
  const std::vector<double> tails = tail_norms(moduli);

  std::vector<double> thetas(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) thetas[k] = arccot_ratio(moduli[k], tails[k]);
  return {std::move(thetas), std::move(phis)};
}

}  // namespace hyperu
