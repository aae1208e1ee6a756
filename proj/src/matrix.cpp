#include "seqeffect/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seqeffect/error.hpp"
#include "seqeffect/tolerance.hpp"

namespace seqeffect {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SpectrumOutOfRange: return "SpectrumOutOfRange";
    case ErrorCode::NotProjection: return "NotProjection";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::FamilyDomainError: return "FamilyDomainError";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotDim2: return "NotDim2";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void Tolerance::validate() const {
  if (!(eq_tol > 0.0) || !(psd_tol > 0.0) || !(cluster_gap > 0.0)) {
    throw Error(ErrorCode::InvalidSpec, "tolerances must be strictly positive");
  }
  if (!(cluster_gap > eq_tol)) {
    throw Error(ErrorCode::InvalidSpec, "cluster_gap must exceed eq_tol");
  }
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : ComplexMatrix(dim, dim) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::ShapeMismatch, "matrix dimensions must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::ShapeMismatch, "matrix dimensions must be >= 1");
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::ShapeMismatch, "entry count " + std::to_string(data_.size()) +
                                              " does not match " + std::to_string(rows) + "x" +
                                              std::to_string(cols));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> data;
  data.reserve(nr * nc);
  for (const auto& row : rows) {
    if (row.size() != nc) throw Error(ErrorCode::ShapeMismatch, "ragged row literal");
    data.insert(data.end(), row.begin(), row.end());
  }
  return ComplexMatrix(nr, nc, std::move(data));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> x, std::span<const Complex> y) {
  ComplexMatrix m(x.size(), y.size());
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < y.size(); ++c) m(r, c) = x[r] * std::conj(y[c]);
  return m;
}

std::size_t ComplexMatrix::dim() const {
  if (!is_square()) {
    throw Error(ErrorCode::ShapeMismatch,
                "expected a square matrix, got " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return rows_;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(*this);
  for (auto& z : m.data_) z = std::conj(z);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
  ComplexMatrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> x) const {
  if (x.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "vector length does not match columns");
  ComplexVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "multiply: inner dimensions " + std::to_string(a.cols()) +
                                              " and " + std::to_string(b.rows()));
  }
  ComplexMatrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex lhs = a(r, k);
      if (lhs == Complex(0.0)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, c) += lhs * b(k, c);
    }
  }
  return m;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).frobenius_norm(); }

double relative_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return distance(a, b) / std::max(1.0, b.frobenius_norm());
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
  ComplexMatrix h = m + m.adjoint();
  h *= 0.5;
  return h;
}

double hermitian_defect(const ComplexMatrix& m) { return distance(m, m.adjoint()); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix assemble_blocks(const ComplexMatrix& a11, const ComplexMatrix& a12,
                              const ComplexMatrix& a21, const ComplexMatrix& a22) {
  const std::size_t n1 = a11.rows();
  const std::size_t n2 = a22.rows();
  if (!a11.is_square() || !a22.is_square() || a12.rows() != n1 || a12.cols() != n2 ||
      a21.rows() != n2 || a21.cols() != n1) {
    throw Error(ErrorCode::ShapeMismatch, "incompatible block shapes");
  }
  ComplexMatrix m(n1 + n2);
  for (std::size_t r = 0; r < n1; ++r) {
    for (std::size_t c = 0; c < n1; ++c) m(r, c) = a11(r, c);
    for (std::size_t c = 0; c < n2; ++c) m(r, n1 + c) = a12(r, c);
  }
  for (std::size_t r = 0; r < n2; ++r) {
    for (std::size_t c = 0; c < n1; ++c) m(n1 + r, c) = a21(r, c);
    for (std::size_t c = 0; c < n2; ++c) m(n1 + r, n1 + c) = a22(r, c);
  }
  return m;
}

double vector_norm(std::span<const Complex> x) {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return std::sqrt(s);
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::ShapeMismatch, "inner product length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

}  // namespace seqeffect
