#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

#include "seqeffect/effect.hpp"
#include "seqeffect/matrix.hpp"
#include "seqeffect/tolerance.hpp"

namespace seqeffect {

struct SampleConfig {
  std::size_t dim = 2;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  Tolerance tol{};

  void validate() const;
};

/// Random source for one sample. Streams are derived from
/// (seed, stream name, sample index), never from shared state, so a sample
/// draws the same values regardless of evaluation order.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0);
  double normal();
  /// Uniform integer in [lo, hi].
  std::size_t integer(std::size_t lo, std::size_t hi);

 private:
  std::mt19937_64 engine_;
};

SampleRng sample_rng(std::uint64_t seed, std::string_view stream, std::uint64_t index);

/// Haar-ish unitary: Gram-Schmidt on a complex Ginibre matrix.
ComplexMatrix random_unitary(std::size_t dim, SampleRng& rng);
ComplexVector random_unit_vector(std::size_t dim, SampleRng& rng);
/// (G + G^dagger) / 2 for a complex Ginibre G.
ComplexMatrix random_hermitian(std::size_t dim, SampleRng& rng);

/// U diag(spectrum) U^dagger.
Effect effect_in_basis(const ComplexMatrix& unitary, std::span<const double> spectrum, const Tolerance& tol);

/// Ginibre Hermitian rescaled affinely onto [lo, hi] with lo ~ U(0, 0.25),
/// hi ~ U(0.75, 1).
Effect gen_effect(const SampleConfig& cfg, SampleRng& rng);

/// Projection onto the span of `rank` columns of a random unitary.
Projection gen_projection(const SampleConfig& cfg, std::size_t rank, SampleRng& rng);

/// A, B diagonal in one random eigenbasis, i.e. functions of one Hermitian.
std::pair<Effect, Effect> gen_commuting_pair(const SampleConfig& cfg, SampleRng& rng);

/// (B, C) with C = (I - B)^{1/2} Z (I - B)^{1/2}, so B + C <= I.
std::pair<Effect, Effect> gen_summable_pair(const SampleConfig& cfg, SampleRng& rng);

/// A = P X P, B = (I - P) Y (I - P) for a random projection P.
std::pair<Effect, Effect> gen_orthogonal_supports(const SampleConfig& cfg, SampleRng& rng);

struct BlockTriple {
  Effect a;
  Effect b;
  Effect c;
};

/// A and B block-diagonal w.r.t. a random projection P, C = alpha P +
/// beta (I - P). When `summable` is set A and B are halved so A + B <= I.
BlockTriple gen_block_triple(const SampleConfig& cfg, SampleRng& rng, bool summable);

/// Two generic effects with ||AB - BA||_F above 1e-3.
std::pair<Effect, Effect> gen_noncommuting_pair(const SampleConfig& cfg, SampleRng& rng);

/// P X P + (I - P) Y (I - P) for random effects X, Y.
Effect block_diagonal_effect(const Projection& p, const SampleConfig& cfg, SampleRng& rng);

}  // namespace seqeffect
