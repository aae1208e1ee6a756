#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace seqeffect {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix.
///
/// Operators on H are square; rectangular shapes exist only for the
/// off-diagonal blocks of a 2x2 operator partition.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  /// x * y^dagger
  static ComplexMatrix outer(std::span<const Complex> x, std::span<const Complex> y);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Side length of a square matrix; throws ShapeMismatch otherwise.
  std::size_t dim() const;

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  double frobenius_norm() const;
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  ComplexVector apply(std::span<const Complex> x) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s); }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

/// ||a - b||_F
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||a - b||_F / max(1, ||b||_F)
double relative_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// (M + M^dagger) / 2
ComplexMatrix hermitize(const ComplexMatrix& m);

/// ||M - M^dagger||_F
double hermitian_defect(const ComplexMatrix& m);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Assembles [[a11, a12], [a21, a22]].
ComplexMatrix assemble_blocks(const ComplexMatrix& a11, const ComplexMatrix& a12,
                              const ComplexMatrix& a21, const ComplexMatrix& a22);

double vector_norm(std::span<const Complex> x);

/// <x, y> with the conjugate on the second argument, matching <Ax, x>.
Complex inner(std::span<const Complex> x, std::span<const Complex> y);

}  // namespace seqeffect
