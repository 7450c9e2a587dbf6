#ifndef HYPERU_CK_HPP
#define HYPERU_CK_HPP

// Cayley-Klein product construction of special unitary matrices.
//
// All dimension and index arguments in this header are 1-based, matching
// the usual mathematical notation: for an n x n matrix, rows and columns
// run over 1..n, and the lower-triangular pair labels (alpha, beta) satisfy
// 2 <= alpha <= n, 1 <= beta < alpha.

#include <cstddef>
#include <span>
#include <vector>

#include "hyperu/complex_matrix.hpp"

namespace hyperu {

/// +1 or -1.
class Sign {
 public:
  constexpr explicit Sign(int value) : value_(value == -1 ? -1 : 1) {
    if (value != 1 && value != -1) throw DomainError("Sign: value must be +1 or -1");
  }
  constexpr int value() const noexcept { return value_; }
  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  int value_;
};

/// Normalized Cayley-Klein pair; |a|^2 + |b|^2 == 1 within 1e-12.
class CKPair {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Identity rotation (a, b) = (1, 0).
  CKPair() = default;
  /// Throws DomainError when the pair is not normalized or not finite.
  CKPair(Complex a, Complex b);

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }

 private:
  Complex a_{1.0, 0.0};
  Complex b_{0.0, 0.0};
};

/// The (n^2 - n)/2 pairs indexed by the lower triangle (alpha, beta).
///
/// Storage order is the product order: (2,1), (3,1), (3,2), (4,1), ...
class CKParameterSet {
 public:
  /// Every pair set to the identity rotation.
  explicit CKParameterSet(std::size_t n);
  /// `pairs` given in product order; its size must be (n^2 - n)/2.
  CKParameterSet(std::size_t n, std::vector<CKPair> pairs);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  const CKPair& at(std::size_t alpha, std::size_t beta) const;
  void set(std::size_t alpha, std::size_t beta, CKPair pair);

  std::span<const CKPair> pairs() const noexcept { return pairs_; }

  /// Number of lower-triangular labels for dimension n.
  static constexpr std::size_t pair_count(std::size_t n) noexcept { return n == 0 ? 0 : n * (n - 1) / 2; }
  /// Position of (alpha, beta) in product order.
  static std::size_t flat_index(std::size_t n, std::size_t alpha, std::size_t beta);

 private:
  std::size_t n_;
  std::vector<CKPair> pairs_;
};

/// (-1)^((2n - 1 + (-1)^n) / 4): the sequence +1, -1, -1, +1, +1, -1, ...
Sign gamma_n(std::size_t n);

/// E_(a,b): single unit entry at row a, column b.
ComplexMatrix elementary(std::size_t n, std::size_t a, std::size_t b);

/// Identity with zeros at diagonal positions alpha and beta (beta < alpha).
ComplexMatrix subspace_identity(std::size_t n, std::size_t alpha, std::size_t beta);

/// Single-qubit matrix [[u2, u1], [-conj(u1), conj(u2)]].
ComplexMatrix qubit_q(Complex u1, Complex u2);

/// qubit_q(s, t) embedded on the rows/columns {beta, alpha}; zero elsewhere.
ComplexMatrix embed_m(std::size_t n, std::size_t alpha, std::size_t beta, Complex s, Complex t);

/// Qubit factor matrix: subspace identity plus the embedded qubit rotation.
/// When alpha + beta == 3 + [n == 2] the second argument is replaced by
/// gamma_n * conj(y).
ComplexMatrix omega(std::size_t n, std::size_t alpha, std::size_t beta, Complex x, Complex y);

/// Anti-diagonal ones with gamma_n at the bottom-left; determinant 1.
ComplexMatrix flip(std::size_t n);

/// U = flip(n) * prod_{alpha=2..n} prod_{beta=1..alpha-1}
///     omega(alpha, beta, -conj(a), conj(b)), multiplied left to right.
/// The result is special unitary with single-term first row and column.
ComplexMatrix build_su(const CKParameterSet& params);

/// Permutation matrix exchanging z1 and z2 (identity when equal).
ComplexMatrix swap_matrix(std::size_t n, std::size_t z1, std::size_t z2);

/// Moves the single-term row from r0 to r and the single-term column from
/// c0 to c:  det^(1/n)(S_r S_c) * S_(r0,r) * u * S_(c0,c).
/// The scalar is the principal n-th root, so the output stays special; the
/// extra phase it introduces on the moved vectors is left in place.
ComplexMatrix reposition(const ComplexMatrix& u, std::size_t r, std::size_t c, std::size_t r0,
                         std::size_t c0);

}  // namespace hyperu

#endif  // HYPERU_CK_HPP
