#include "hyperu/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hyperu {

namespace {

constexpr double kSingularPivot = 1e-14;

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch (" + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("ComplexMatrix: entry count " + std::to_string(entries_.size()) +
                     " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ComplexMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return out;
}

Complex determinant(const ComplexMatrix& a) {
  if (!a.is_square()) {
    throw ShapeError("determinant: matrix is " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()));
  }
  const std::size_t n = a.rows();
  if (n == 0) return 1.0;
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);

  ComplexMatrix lu = a;
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const double mag = std::abs(lu(r, k));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best < kSingularPivot) return 0.0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(pivot, c));
      det = -det;
    }
    const Complex diag = lu(k, k);
    det *= diag;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Complex factor = lu(r, k) / diag;
      if (factor == Complex{}) continue;
      for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= factor * lu(k, c);
    }
  }
  return det;
}

ComplexVector matvec(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) {
    throw ShapeError("matvec: matrix has " + std::to_string(a.cols()) + " columns, vector has " +
                     std::to_string(v.size()) + " entries");
  }
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& a) { return std::sqrt(norm_squared(a.entries())); }

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) acc += std::norm(a.entries()[i] - b.entries()[i]);
  return std::sqrt(acc);
}

double unitarity_residual(const ComplexMatrix& u) {
  if (!u.is_square()) throw ShapeError("unitarity_residual: matrix is not square");
  return frobenius_distance(matmul(adjoint(u), u), ComplexMatrix::identity(u.rows()));
}

double norm_squared(std::span<const Complex> v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return acc;
}

bool all_finite(std::span<const Complex> v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

}  // namespace hyperu
