#ifndef HYPERU_COMPLEX_MATRIX_HPP
#define HYPERU_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperu {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Raised when operand dimensions are incompatible.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an index or parameter lies outside its admissible domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Dense row-major complex matrix. Element access is 0-based; the
/// constructions in ck.hpp take the 1-based indices used in the math.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<const Complex> row(std::size_t r) const {
    return std::span<const Complex>(entries_).subspan(r * cols_, cols_);
  }
  ComplexVector column(std::size_t c) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix product; throws ShapeError when a.cols() != b.rows().
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

ComplexMatrix transpose(const ComplexMatrix& a);

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Determinant. Closed form for 1x1 and 2x2, LU with partial pivoting
/// otherwise. A pivot of magnitude below 1e-14 yields exactly zero.
Complex determinant(const ComplexMatrix& a);

/// Matrix-vector product a * v.
ComplexVector matvec(const ComplexMatrix& a, std::span<const Complex> v);

double frobenius_norm(const ComplexMatrix& a);

/// ||a - b||_F; throws ShapeError on mismatched shapes.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||U^dagger U - I||_F.
double unitarity_residual(const ComplexMatrix& u);

/// Sum of squared moduli.
double norm_squared(std::span<const Complex> v);

/// True when every real and imaginary component is finite.
bool all_finite(std::span<const Complex> v);

}  // namespace hyperu

#endif  // HYPERU_COMPLEX_MATRIX_HPP
