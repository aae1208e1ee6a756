#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>

#include "seqeffect/matrix.hpp"
#include "seqeffect/spectral.hpp"
#include "seqeffect/tolerance.hpp"

namespace seqeffect {

/// A quantum effect: Hermitian A with 0 <= A <= I.
///
/// Only make_effect (and the algebra operations below) create effects, so
/// every instance carries a validated spectrum. Copies share the spectral
/// data.
class Effect {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const SpectralDecomposition& spectrum() const noexcept { return *spectrum_; }
  std::size_t dim() const noexcept { return spectrum_->dim(); }

 private:
  Effect(ComplexMatrix matrix, std::shared_ptr<const SpectralDecomposition> spectrum)
      : matrix_(std::move(matrix)), spectrum_(std::move(spectrum)) {}

  friend Effect make_effect(const ComplexMatrix& m, const Tolerance& tol);
  friend Effect complement(const Effect& a);

  ComplexMatrix matrix_;
  std::shared_ptr<const SpectralDecomposition> spectrum_;
};

/// Validates 0 <= M <= I. Eigenvalues within psd_tol of 0 or 1 (on either
/// side) are snapped onto the endpoint; anything further outside is a
/// SpectrumOutOfRange error naming the eigenvalue.
Effect make_effect(const ComplexMatrix& m, const Tolerance& tol);

Effect zero_effect(std::size_t dim, const Tolerance& tol);
Effect identity_effect(std::size_t dim, const Tolerance& tol);
/// t * I for t in [0, 1].
Effect scalar_effect(std::size_t dim, double t, const Tolerance& tol);

/// A sharp effect. In E(H) these are exactly the orthogonal projections.
class Projection {
 public:
  const Effect& effect() const noexcept { return effect_; }
  const ComplexMatrix& matrix() const noexcept { return effect_.matrix(); }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t dim() const noexcept { return effect_.dim(); }

  operator const Effect&() const noexcept { return effect_; }

 private:
  Projection(Effect effect, std::size_t rank) : effect_(std::move(effect)), rank_(rank) {}
  friend Projection make_projection(const Effect& e, const Tolerance& tol);

  Effect effect_;
  std::size_t rank_;
};

/// NotProjection unless e is sharp and ||P^2 - P||_F <= eq_tol.
Projection make_projection(const Effect& e, const Tolerance& tol);
Projection make_projection(const ComplexMatrix& m, const Tolerance& tol);

/// A + B when it stays below I; std::nullopt when the sum is undefined.
std::optional<Effect> oplus(const Effect& a, const Effect& b, const Tolerance& tol);

/// a ⊥ b, i.e. a ⊕ b is defined.
bool orthogonal(const Effect& a, const Effect& b, const Tolerance& tol);

/// I - A
Effect complement(const Effect& a);

/// A <= B in the Löwner order.
bool leq(const Effect& a, const Effect& b, const Tolerance& tol);

bool is_sharp(const Effect& a, const Tolerance& tol);

/// P_{Ker(I - A)}: spectral projection of A at eigenvalue 1.
Projection ker_projection_complement(const Effect& a, const Tolerance& tol);

/// P_x = x x^dagger for a unit vector x.
Projection rank_one_projection(std::span<const Complex> x, const Tolerance& tol);

}  // namespace seqeffect
