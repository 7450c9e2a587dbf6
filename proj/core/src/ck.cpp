#include "hyperu/ck.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace hyperu {

namespace {

void require_dimension(std::size_t n, const char* op) {
  if (n < 1) throw DomainError(std::string(op) + ": dimension must be at least 1");
}

void require_index(std::size_t n, std::size_t i, const char* op) {
  if (i < 1 || i > n) {
    throw DomainError(std::string(op) + ": index " + std::to_string(i) + " outside 1.." +
                      std::to_string(n));
  }
}

void require_lower_pair(std::size_t n, std::size_t alpha, std::size_t beta, const char* op) {
  require_dimension(n, op);
  if (beta < 1 || beta >= alpha || alpha > n) {
    throw DomainError(std::string(op) + ": need 1 <= beta < alpha <= n, got (alpha, beta) = (" +
                      std::to_string(alpha) + ", " + std::to_string(beta) + ") with n = " +
                      std::to_string(n));
  }
}

// Identity with zeros at positions z1 and z2 (any order, may coincide).
ComplexMatrix identity_except(std::size_t n, std::size_t z1, std::size_t z2) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    if (i != z1 && i != z2) m(i - 1, i - 1) = 1.0;
  return m;
}

}  // namespace

CKPair::CKPair(Complex a, Complex b) : a_(a), b_(b) {
  const Complex both[] = {a, b};
  if (!all_finite(both)) throw DomainError("CKPair: non-finite component");
  const double norm = std::norm(a) + std::norm(b);
  if (std::abs(norm - 1.0) > kTolerance) {
    throw DomainError("CKPair: |a|^2 + |b|^2 = " + std::to_string(norm) + ", expected 1");
  }
}

CKParameterSet::CKParameterSet(std::size_t n) : n_(n), pairs_(pair_count(n)) {
  require_dimension(n, "CKParameterSet");
}

CKParameterSet::CKParameterSet(std::size_t n, std::vector<CKPair> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  require_dimension(n, "CKParameterSet");
  if (pairs_.size() != pair_count(n)) {
    throw DomainError("CKParameterSet: expected " + std::to_string(pair_count(n)) +
                      " pairs for n = " + std::to_string(n) + ", got " +
                      std::to_string(pairs_.size()));
  }
}

std::size_t CKParameterSet::flat_index(std::size_t n, std::size_t alpha, std::size_t beta) {
  require_lower_pair(n, alpha, beta, "CKParameterSet");
  return (alpha - 1) * (alpha - 2) / 2 + (beta - 1);
}

const CKPair& CKParameterSet::at(std::size_t alpha, std::size_t beta) const {
  return pairs_[flat_index(n_, alpha, beta)];
}

void CKParameterSet::set(std::size_t alpha, std::size_t beta, CKPair pair) {
  pairs_[flat_index(n_, alpha, beta)] = pair;
}

Sign gamma_n(std::size_t n) {
  require_dimension(n, "gamma_n");
  // (2n - 1 + (-1)^n) / 4 equals n/2 for even n and (n-1)/2 for odd n.
  const std::size_t exponent = n / 2;
  return Sign(exponent % 2 == 0 ? 1 : -1);
}

ComplexMatrix elementary(std::size_t n, std::size_t a, std::size_t b) {
  require_dimension(n, "elementary");
  require_index(n, a, "elementary");
  require_index(n, b, "elementary");
  ComplexMatrix m(n, n);
  m(a - 1, b - 1) = 1.0;
  return m;
}

ComplexMatrix subspace_identity(std::size_t n, std::size_t alpha, std::size_t beta) {
  require_lower_pair(n, alpha, beta, "subspace_identity");
  return identity_except(n, alpha, beta);
}

ComplexMatrix qubit_q(Complex u1, Complex u2) {
  return ComplexMatrix{{u2, u1}, {-std::conj(u1), std::conj(u2)}};
}

ComplexMatrix embed_m(std::size_t n, std::size_t alpha, std::size_t beta, Complex s, Complex t) {
  require_lower_pair(n, alpha, beta, "embed_m");
  const ComplexMatrix q = qubit_q(s, t);
  ComplexMatrix m(n, n);
  const std::size_t lo = beta - 1;
  const std::size_t hi = alpha - 1;
  m(lo, lo) = q(0, 0);
  m(lo, hi) = q(0, 1);
  m(hi, lo) = q(1, 0);
  m(hi, hi) = q(1, 1);
  return m;
}

namespace {

Complex omega_second(std::size_t n, std::size_t alpha, std::size_t beta, Complex y) {
  const std::size_t special_sum = 3 + (n == 2 ? 1 : 0);
  return alpha + beta == special_sum ? static_cast<double>(gamma_n(n).value()) * std::conj(y) : y;
}

// u <- u * omega(n, alpha, beta, x, y). Only columns beta and alpha change.
void multiply_omega(ComplexMatrix& u, std::size_t alpha, std::size_t beta, Complex x, Complex y) {
  const ComplexMatrix q = qubit_q(x, omega_second(u.rows(), alpha, beta, y));
  const std::size_t lo = beta - 1;
  const std::size_t hi = alpha - 1;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    const Complex ul = u(i, lo);
    const Complex uh = u(i, hi);
    u(i, lo) = ul * q(0, 0) + uh * q(1, 0);
    u(i, hi) = ul * q(0, 1) + uh * q(1, 1);
  }
}

}  // namespace

ComplexMatrix omega(std::size_t n, std::size_t alpha, std::size_t beta, Complex x, Complex y) {
  require_lower_pair(n, alpha, beta, "omega");
  return subspace_identity(n, alpha, beta) +
         embed_m(n, alpha, beta, x, omega_second(n, alpha, beta, y));
}

ComplexMatrix flip(std::size_t n) {
  require_dimension(n, "flip");
  ComplexMatrix m(n, n);
  m(n - 1, 0) = static_cast<double>(gamma_n(n).value());
  for (std::size_t row = 1; row <= n - 1; ++row) m(row - 1, n - row) = 1.0;
  return m;
}

ComplexMatrix build_su(const CKParameterSet& params) {
  const std::size_t n = params.dimension();
  if (n == 1) return ComplexMatrix{{1.0}};

  ComplexMatrix u = flip(n);
  auto pair = params.pairs().begin();
  for (std::size_t alpha = 2; alpha <= n; ++alpha) {
    for (std::size_t beta = 1; beta < alpha; ++beta, ++pair) {
      multiply_omega(u, alpha, beta, -std::conj(pair->a()), std::conj(pair->b()));
    }
  }
  return u;
}

ComplexMatrix swap_matrix(std::size_t n, std::size_t z1, std::size_t z2) {
  require_dimension(n, "swap_matrix");
  require_index(n, z1, "swap_matrix");
  require_index(n, z2, "swap_matrix");
  ComplexMatrix m = identity_except(n, z1, z2);
  if (z1 != z2) m(z1 - 1, z2 - 1) = 1.0;
  m(z2 - 1, z1 - 1) = 1.0;
  return m;
}

ComplexMatrix reposition(const ComplexMatrix& u, std::size_t r, std::size_t c, std::size_t r0,
                         std::size_t c0) {
  if (!u.is_square() || u.rows() == 0) throw ShapeError("reposition: matrix must be square");
  const std::size_t n = u.rows();
  for (std::size_t idx : {r, c, r0, c0}) require_index(n, idx, "reposition");

  // Each non-trivial swap has determinant -1, so det(S_r S_c) is exactly +1
  // or -1. Its principal n-th root is 1 or exp(i pi / n).
  const int swaps = (r != r0 ? 1 : 0) + (c != c0 ? 1 : 0);
  const Complex scalar =
      swaps % 2 == 0 ? Complex{1.0, 0.0} : std::polar(1.0, std::numbers::pi / static_cast<double>(n));
  return scalar * (swap_matrix(n, r0, r) * u * swap_matrix(n, c0, c));
}

}  // namespace hyperu
