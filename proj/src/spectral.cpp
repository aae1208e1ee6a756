#include "seqeffect/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "seqeffect/error.hpp"

namespace seqeffect {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Zeroes a(p,q) with G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] acting as
// a <- G^dagger a G, where a(p,q) = |a(p,q)| e^{i phi}.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase_conj = std::conj(apq / r);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
  const double c = 1.0 / std::hypot(t, 1.0);
  const double s = t * c;

  const Complex g00 = c;
  const Complex g01 = s;
  const Complex g10 = -s * phase_conj;
  const Complex g11 = c * phase_conj;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * g00 + akq * g10;
    a(k, q) = akp * g01 + akq * g11;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
    a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * g00 + vkq * g10;
    v(k, q) = vkp * g01 + vkq * g11;
  }
}

void require_hermitian(const ComplexMatrix& m, const Tolerance& tol) {
  m.dim();
  const double defect = hermitian_defect(m);
  if (defect > tol.eq_tol * std::max(1.0, m.frobenius_norm())) {
    throw Error(ErrorCode::NotHermitian, "||M - M^dagger||_F = " + std::to_string(defect));
  }
}

double psd_slack(const ComplexMatrix& m, const Tolerance& tol) {
  return tol.psd_tol * std::max(1.0, m.frobenius_norm());
}

ComplexMatrix pseudo_inverse_sqrt(const ComplexMatrix& block, const Tolerance& tol) {
  const auto pairs = jacobi_eigenpairs(block);
  const double cutoff = tol.psd_tol * std::max(1.0, block.frobenius_norm());
  const std::size_t n = block.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (pairs.values[k] <= cutoff) continue;
    const double w = 1.0 / std::sqrt(pairs.values[k]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        out(r, c) += w * pairs.vectors(r, k) * std::conj(pairs.vectors(c, k));
  }
  return out;
}

}  // namespace

EigenPairs jacobi_eigenpairs(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix a = hermitize(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();

  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= kJacobiRelativeStop * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) > kJacobiRelativeStop * scale) {
    throw Error(ErrorCode::NoConvergence,
                "Jacobi exceeded " + std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenPairs out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

SpectralDecomposition::SpectralDecomposition(std::size_t dim, std::vector<SpectralCluster> clusters,
                                             std::vector<double> eigenvalues)
    : dim_(dim), clusters_(std::move(clusters)), eigenvalues_(std::move(eigenvalues)) {
  if (clusters_.empty() || eigenvalues_.size() != dim_) {
    throw Error(ErrorCode::ShapeMismatch, "spectral decomposition does not cover the space");
  }
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  ComplexMatrix m(dim_);
  for (const auto& c : clusters_) m += c.eigenvalue * c.projection;
  return m;
}

SpectralDecomposition cluster_eigenpairs(const EigenPairs& pairs, const Tolerance& tol) {
  const std::size_t n = pairs.values.size();
  std::vector<SpectralCluster> clusters;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && pairs.values[end] - pairs.values[end - 1] < tol.cluster_gap) ++end;

    ComplexMatrix projection(n);
    double sum = 0.0;
    for (std::size_t k = start; k < end; ++k) {
      sum += pairs.values[k];
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          projection(r, c) += pairs.vectors(r, k) * std::conj(pairs.vectors(c, k));
    }
    clusters.push_back({sum / static_cast<double>(end - start), end - start, std::move(projection)});
    start = end;
  }
  return SpectralDecomposition(n, std::move(clusters), pairs.values);
}

SpectralDecomposition eigh(const ComplexMatrix& m, const Tolerance& tol) {
  require_hermitian(m, tol);
  return cluster_eigenpairs(jacobi_eigenpairs(m), tol);
}

ComplexMatrix apply_function(const SpectralDecomposition& s, const ScalarFunction& f) {
  ComplexMatrix out(s.dim());
  for (const auto& cluster : s.clusters()) {
    const Complex value = f(cluster.eigenvalue);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw Error(ErrorCode::DomainError,
                  "function undefined at eigenvalue " + std::to_string(cluster.eigenvalue));
    }
    out += value * cluster.projection;
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& m, const Tolerance& tol) {
  require_hermitian(m, tol);
  return jacobi_eigenpairs(m).values.front();
}

bool is_psd(const ComplexMatrix& m, const Tolerance& tol) {
  return min_eigenvalue(m, tol) >= -psd_slack(m, tol);
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m, const Tolerance& tol) {
  const auto s = eigh(m, tol);
  if (s.min_eigenvalue() < -psd_slack(m, tol)) {
    throw Error(ErrorCode::NotPSD, "min eigenvalue " + std::to_string(s.min_eigenvalue()));
  }
  return hermitize(apply_function(s, [](double t) { return Complex(std::sqrt(std::max(t, 0.0))); }));
}

double operator_norm(const ComplexMatrix& d) {
  const auto pairs = jacobi_eigenpairs(hermitize(d.adjoint() * d));
  return std::sqrt(std::max(0.0, pairs.values.back()));
}

bool block_psd_check(const ComplexMatrix& a11, const ComplexMatrix& a12, const ComplexMatrix& a21,
                     const ComplexMatrix& a22, const Tolerance& tol) {
  if (!a11.is_square() || !a22.is_square() || a12.rows() != a11.rows() || a12.cols() != a22.rows() ||
      a21.rows() != a22.rows() || a21.cols() != a11.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "incompatible block shapes");
  }

  // (2) A21 = A12^dagger
  if (distance(a21, a12.adjoint()) > tol.eq_tol * std::max(1.0, a12.frobenius_norm())) return false;

  // (1) diagonal blocks positive
  for (const auto* diag : {&a11, &a22}) {
    if (hermitian_defect(*diag) > tol.eq_tol * std::max(1.0, diag->frobenius_norm())) return false;
    if (!is_psd(*diag, tol)) return false;
  }

  // (3) A12 = A11^{1/2} D A22^{1/2} with ||D|| <= 1
  const auto root11 = sqrt_psd(a11, tol);
  const auto root22 = sqrt_psd(a22, tol);
  const auto d = pseudo_inverse_sqrt(a11, tol) * a12 * pseudo_inverse_sqrt(a22, tol);
  if (operator_norm(d) > 1.0 + tol.psd_tol) return false;
  return distance(root11 * d * root22, a12) <= tol.eq_tol * std::max(1.0, a12.frobenius_norm());
}

std::optional<Complex> phase_equal(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "phase_equal operands differ in shape");
  }
  const double nb = b.frobenius_norm();
  if (nb <= tol.eq_tol) {
    if (a.frobenius_norm() <= tol.eq_tol) return Complex(1.0);
    return std::nullopt;
  }
  Complex num = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) num += std::conj(eb[i]) * ea[i];
  const Complex xi = num / (nb * nb);
  if (std::abs(std::abs(xi) - 1.0) > tol.eq_tol) return std::nullopt;
  if (distance(a, xi * b) > tol.eq_tol * std::max(1.0, nb)) return std::nullopt;
  return xi;
}

}  // namespace seqeffect
