#ifndef HYPERU_HYPERSPHERE_HPP
#define HYPERU_HYPERSPHERE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperu/complex_matrix.hpp"

namespace hyperu {

/// Raised when an inverse map is asked to recover angles from a zero vector.
class DegenerateInputError : public std::invalid_argument {
 public:
  explicit DegenerateInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Maps any real angle into [0, 2 pi).
double wrap_phase(double angle);

/// True for angles in [0, 2 pi).
bool is_canonical_phase(double angle);

/// arccot(p / q) for p, q >= 0, computed as atan2(q, p); zero when both are zero.
double arccot_ratio(double p, double q);

/// A point of n-space in hyperspherical coordinates.
///
/// For dim >= 2 there are dim - 1 angles: polar angles in [0, pi] followed by
/// one azimuthal angle in [0, 2 pi). For dim == 1 the single angle is 0 or pi
/// and encodes the sign of the coordinate.
class HypersphericalPoint {
 public:
  HypersphericalPoint(std::size_t dim, double radius, std::vector<double> angles);

  std::size_t dimension() const noexcept { return dim_; }
  double radius() const noexcept { return radius_; }
  std::span<const double> angles() const noexcept { return angles_; }

 private:
  std::size_t dim_;
  double radius_;
  std::vector<double> angles_;
};

/// x_k = r sin(t_1)...sin(t_{k-1}) cos(t_k) for k < n, and
/// x_n = r sin(t_1)...sin(t_{n-1}).
std::vector<double> to_cartesian(const HypersphericalPoint& p);

/// Inverse of to_cartesian with the azimuth recovered by atan2 and wrapped
/// into [0, 2 pi). Throws DegenerateInputError for the zero vector.
HypersphericalPoint from_cartesian(std::span<const double> xs);

/// Unit-norm amplitude vector. Norm tolerance 1e-12.
class PureState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  explicit PureState(ComplexVector amplitudes);
  /// Divides by the norm; throws DegenerateInputError for the zero vector.
  static PureState normalized(ComplexVector amplitudes);
  /// The basis ket |k>, 1-based.
  static PureState basis(std::size_t dim, std::size_t k);

  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  ComplexVector amplitudes_;
};

/// Superposition angles on the first sector of the unit hypersphere, plus
/// one phase circle per amplitude.
///
/// thetas: n - 1 values in [0, pi/2]; phis: n values in [0, 2 pi).
class HypersphericalState {
 public:
  HypersphericalState(std::vector<double> thetas, std::vector<double> phis);

  std::size_t dimension() const noexcept { return phis_.size(); }
  std::span<const double> thetas() const noexcept { return thetas_; }
  std::span<const double> phis() const noexcept { return phis_; }

  /// phi_k - phi_1 wrapped into [0, 2 pi); the first entry is always 0.
  std::vector<double> relative_phases() const;

 private:
  std::vector<double> thetas_;
  std::vector<double> phis_;
};

/// c_k = r_k exp(i phi_k) with r_k = x_k(1, thetas).
PureState state_from_angles(const HypersphericalState& h);

/// theta_k = arccot(|c_k| / sqrt(sum_{m>k} |c_m|^2)), phi_k = arg(c_k).
/// Zero tails give theta = 0 and arg(0) is taken as 0.
HypersphericalState angles_from_state(const PureState& psi);

}  // namespace hyperu

#endif  // HYPERU_HYPERSPHERE_HPP
