#include "seqeffect/effect.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seqeffect/error.hpp"

namespace seqeffect {

namespace {

void require_same_dim(const Effect& a, const Effect& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::ShapeMismatch,
                "effects of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

bool near_endpoint(double t, double width) { return std::abs(t) <= width || std::abs(t - 1.0) <= width; }

}  // namespace

Effect make_effect(const ComplexMatrix& m, const Tolerance& tol) {
  m.dim();
  const double defect = hermitian_defect(m);
  if (defect > tol.eq_tol * std::max(1.0, m.frobenius_norm())) {
    throw Error(ErrorCode::NotHermitian, "||M - M^dagger||_F = " + std::to_string(defect));
  }
  ComplexMatrix h = hermitize(m);
  EigenPairs pairs = jacobi_eigenpairs(h);

  const double slack = tol.psd_tol * std::max(1.0, h.frobenius_norm());
  bool clamped = false;
  for (auto& t : pairs.values) {
    if (t < -slack || t > 1.0 + slack) {
      throw Error(ErrorCode::SpectrumOutOfRange, "eigenvalue " + std::to_string(t) + " outside [0, 1]");
    }
    if (t < 0.0 || t > 1.0) clamped = true;
    if (std::abs(t) <= slack) t = 0.0;
    if (std::abs(t - 1.0) <= slack) t = 1.0;
  }

  auto spectrum = std::make_shared<const SpectralDecomposition>(cluster_eigenpairs(pairs, tol));
  if (clamped) h = hermitize(spectrum->reconstruct());
  return Effect(std::move(h), std::move(spectrum));
}

Effect zero_effect(std::size_t dim, const Tolerance& tol) { return make_effect(ComplexMatrix(dim), tol); }

Effect identity_effect(std::size_t dim, const Tolerance& tol) {
  return make_effect(ComplexMatrix::identity(dim), tol);
}

Effect scalar_effect(std::size_t dim, double t, const Tolerance& tol) {
  return make_effect(t * ComplexMatrix::identity(dim), tol);
}

Projection make_projection(const Effect& e, const Tolerance& tol) {
  if (!is_sharp(e, tol)) throw Error(ErrorCode::NotProjection, "spectrum is not contained in {0, 1}");
  const auto& p = e.matrix();
  const double idempotency = distance(p * p, p);
  if (idempotency > tol.eq_tol * std::max(1.0, p.frobenius_norm())) {
    throw Error(ErrorCode::NotProjection, "||P^2 - P||_F = " + std::to_string(idempotency));
  }
  const auto rank = static_cast<std::size_t>(std::llround(p.trace().real()));
  return Projection(e, rank);
}

Projection make_projection(const ComplexMatrix& m, const Tolerance& tol) {
  return make_projection(make_effect(m, tol), tol);
}

std::optional<Effect> oplus(const Effect& a, const Effect& b, const Tolerance& tol) {
  require_same_dim(a, b);
  try {
    return make_effect(a.matrix() + b.matrix(), tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SpectrumOutOfRange) return std::nullopt;
    throw;
  }
}

bool orthogonal(const Effect& a, const Effect& b, const Tolerance& tol) { return oplus(a, b, tol).has_value(); }

Effect complement(const Effect& a) {
  const auto& s = a.spectrum();
  std::vector<SpectralCluster> clusters;
  clusters.reserve(s.clusters().size());
  for (auto it = s.clusters().rbegin(); it != s.clusters().rend(); ++it) {
    clusters.push_back({1.0 - it->eigenvalue, it->multiplicity, it->projection});
  }
  std::vector<double> eigenvalues(s.eigenvalues().rbegin(), s.eigenvalues().rend());
  for (auto& t : eigenvalues) t = 1.0 - t;
  auto spectrum = std::make_shared<const SpectralDecomposition>(s.dim(), std::move(clusters), std::move(eigenvalues));
  return Effect(ComplexMatrix::identity(a.dim()) - a.matrix(), std::move(spectrum));
}

bool leq(const Effect& a, const Effect& b, const Tolerance& tol) {
  require_same_dim(a, b);
  return is_psd(b.matrix() - a.matrix(), tol);
}

bool is_sharp(const Effect& a, const Tolerance& tol) {
  const auto& values = a.spectrum().eigenvalues();
  return std::all_of(values.begin(), values.end(), [&](double t) { return near_endpoint(t, tol.cluster_gap); });
}

Projection ker_projection_complement(const Effect& a, const Tolerance& tol) {
  ComplexMatrix p(a.dim());
  for (const auto& c : a.spectrum().clusters()) {
    if (std::abs(c.eigenvalue - 1.0) <= tol.cluster_gap) p += c.projection;
  }
  return make_projection(p, tol);
}

Projection rank_one_projection(std::span<const Complex> x, const Tolerance& tol) {
  const double norm = vector_norm(x);
  if (x.empty() || std::abs(norm - 1.0) > tol.eq_tol) {
    throw Error(ErrorCode::NotUnitVector, "||x|| = " + std::to_string(norm));
  }
  return make_projection(ComplexMatrix::outer(x, x), tol);
}

}  // namespace seqeffect
