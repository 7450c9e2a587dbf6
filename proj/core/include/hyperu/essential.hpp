#ifndef HYPERU_ESSENTIAL_HPP
#define HYPERU_ESSENTIAL_HPP

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "hyperu/ck.hpp"
#include "hyperu/complex_matrix.hpp"

namespace hyperu {

enum class UnitaryGroup { Special, General };

/// Scalar degrees of freedom: n^2 - 1 for SU(n), n^2 for U(n).
std::size_t dof_count(std::size_t n, UnitaryGroup group);

/// Extra scalars a naive per-pair (theta, phi, epsilon) parameterization
/// carries beyond dof_count(n, Special): (n - 1)(n - 2) / 2.
std::size_t waste_count(std::size_t n);

/// 3 (n^2 - n) / 2.
std::size_t naive_param_count(std::size_t n);

/// Reflects any real into [0, pi/2] with period pi (a triangle wave).
double fold_superposition(double angle);

/// Minimal angle set for SU(n).
///
/// theta(j, k) in [0, pi/2] and phi(j, k) in [0, 2 pi) for 2 <= j <= n,
/// 1 <= k < j; chi(j) in [0, 2 pi) for 2 <= j <= n is the second phase of the
/// pair (j, j - 1). Pair-indexed values are stored in product order.
///
/// Setters and from_flat reject out-of-range angles; canonical_from_flat
/// maps arbitrary reals into range instead.
class EssentialParams {
 public:
  /// All angles zero.
  explicit EssentialParams(std::size_t n);

  /// Flat layout: thetas (product order), then phis (product order), then
  /// chis for j = 2..n. values.size() must equal dof_count(n, Special).
  static EssentialParams from_flat(std::size_t n, std::span<const double> values);
  static EssentialParams canonical_from_flat(std::size_t n, std::span<const double> values);
  std::vector<double> to_flat() const;

  std::size_t dimension() const noexcept { return n_; }
  std::size_t scalar_count() const noexcept {
    return thetas_.size() + phis_.size() + chis_.size();
  }

  double theta(std::size_t j, std::size_t k) const;
  double phi(std::size_t j, std::size_t k) const;
  double chi(std::size_t j) const;

  void set_theta(std::size_t j, std::size_t k, double value);
  void set_phi(std::size_t j, std::size_t k, double value);
  void set_chi(std::size_t j, double value);

 private:
  std::size_t chi_index(std::size_t j) const;

  std::size_t n_;
  std::vector<double> thetas_;
  std::vector<double> phis_;
  std::vector<double> chis_;
};

/// Essential parameters plus a global phase gamma in [0, 2 pi).
class GeneralUnitaryParams {
 public:
  explicit GeneralUnitaryParams(EssentialParams base, double gamma = 0.0);

  const EssentialParams& base() const noexcept { return base_; }
  double gamma() const noexcept { return gamma_; }
  std::size_t dimension() const noexcept { return base_.dimension(); }
  std::size_t scalar_count() const noexcept { return base_.scalar_count() + 1; }

 private:
  EssentialParams base_;
  double gamma_;
};

/// Every pair carries its own (theta, phi, epsilon), with theta, phi and
/// epsilon all in [0, 2 pi). Not minimal; kept for comparison against the
/// essential form.
class NaiveParams {
 public:
  explicit NaiveParams(std::size_t n);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t scalar_count() const noexcept { return values_.size(); }

  /// Order: for each pair in product order, (theta, phi, epsilon).
  std::span<const double> values() const noexcept { return values_; }
  void set(std::size_t j, std::size_t k, double theta, double phi, double epsilon);

 private:
  std::size_t n_;
  std::vector<double> values_;
};

/// (a, b) = (cos(theta) e^{i phi}, sin(theta) e^{i epsilon}) with
/// epsilon = chi(j) when k == j - 1 and zero otherwise.
CKParameterSet essential_to_ck(const EssentialParams& p);

CKParameterSet naive_to_ck(const NaiveParams& p);

/// build_su(essential_to_ck(p)).
ComplexMatrix build_special(const EssentialParams& p);

/// e^{i gamma} * build_special(base); det == e^{i n gamma}.
ComplexMatrix build_general(const GeneralUnitaryParams& p);

/// -cos(v) cos(w) cos(x) e^{iy} - sin(w) sin(x) e^{-iz}. Every entry of the
/// essential SU(3) matrix has this form for suitable shifted arguments.
Complex f_element(double v, double w, double x, double y, double z);

/// Uniform draw over the canonical ranges.
EssentialParams sample_essential(std::size_t n, std::mt19937_64& rng);
NaiveParams sample_naive(std::size_t n, std::mt19937_64& rng);

}  // namespace hyperu

#endif  // HYPERU_ESSENTIAL_HPP
