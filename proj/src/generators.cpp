#include "seqeffect/generators.hpp"

#include <cmath>
#include <string>

#include "seqeffect/error.hpp"
#include "seqeffect/spectral.hpp"

namespace seqeffect {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

Complex complex_normal(SampleRng& rng) { return {rng.normal(), rng.normal()}; }

}  // namespace

void SampleConfig::validate() const {
  if (dim < 2) throw Error(ErrorCode::InvalidSpec, "dim must be >= 2");
  if (samples < 1) throw Error(ErrorCode::InvalidSpec, "samples must be >= 1");
  tol.validate();
}

double SampleRng::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

double SampleRng::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

std::size_t SampleRng::integer(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

SampleRng sample_rng(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  return SampleRng(mix(mix(seed ^ fnv1a(stream)) + index));
}

ComplexMatrix random_unitary(std::size_t dim, SampleRng& rng) {
  ComplexMatrix q(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) q(r, c) = complex_normal(rng);
    // two passes of modified Gram-Schmidt
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < c; ++k) {
        Complex proj = 0.0;
        for (std::size_t r = 0; r < dim; ++r) proj += std::conj(q(r, k)) * q(r, c);
        for (std::size_t r = 0; r < dim; ++r) q(r, c) -= proj * q(r, k);
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(q(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) q(r, c) /= norm;
  }
  return q;
}

ComplexVector random_unit_vector(std::size_t dim, SampleRng& rng) {
  ComplexVector x(dim);
  for (auto& z : x) z = complex_normal(rng);
  const double norm = vector_norm(x);
  for (auto& z : x) z /= norm;
  return x;
}

ComplexMatrix random_hermitian(std::size_t dim, SampleRng& rng) {
  ComplexMatrix g(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = complex_normal(rng);
  return hermitize(g);
}

Effect effect_in_basis(const ComplexMatrix& unitary, std::span<const double> spectrum, const Tolerance& tol) {
  return make_effect(hermitize(unitary * ComplexMatrix::diagonal(spectrum) * unitary.adjoint()), tol);
}

Effect gen_effect(const SampleConfig& cfg, SampleRng& rng) {
  const auto h = random_hermitian(cfg.dim, rng);
  const auto pairs = jacobi_eigenpairs(h);
  const double lo = rng.uniform(0.0, 0.25);
  const double hi = rng.uniform(0.75, 1.0);
  const double low = pairs.values.front();
  const double width = pairs.values.back() - low;
  ComplexMatrix m = h - low * ComplexMatrix::identity(cfg.dim);
  m *= (hi - lo) / width;
  m += lo * ComplexMatrix::identity(cfg.dim);
  return make_effect(hermitize(m), cfg.tol);
}

Projection gen_projection(const SampleConfig& cfg, std::size_t rank, SampleRng& rng) {
  const auto u = random_unitary(cfg.dim, rng);
  std::vector<double> diag(cfg.dim, 0.0);
  for (std::size_t k = 0; k < rank && k < cfg.dim; ++k) diag[k] = 1.0;
  return make_projection(effect_in_basis(u, diag, cfg.tol), cfg.tol);
}

std::pair<Effect, Effect> gen_commuting_pair(const SampleConfig& cfg, SampleRng& rng) {
  const auto u = random_unitary(cfg.dim, rng);
  std::vector<double> a(cfg.dim);
  std::vector<double> b(cfg.dim);
  for (auto& t : a) t = rng.uniform();
  for (auto& t : b) t = rng.uniform();
  return {effect_in_basis(u, a, cfg.tol), effect_in_basis(u, b, cfg.tol)};
}

std::pair<Effect, Effect> gen_summable_pair(const SampleConfig& cfg, SampleRng& rng) {
  auto b = gen_effect(cfg, rng);
  const auto z = gen_effect(cfg, rng);
  const auto root = sqrt_psd(complement(b).matrix(), cfg.tol);
  auto c = make_effect(hermitize(root * z.matrix() * root), cfg.tol);
  return {std::move(b), std::move(c)};
}

std::pair<Effect, Effect> gen_orthogonal_supports(const SampleConfig& cfg, SampleRng& rng) {
  const auto p = gen_projection(cfg, rng.integer(1, cfg.dim - 1), rng);
  const auto q = complement(p.effect()).matrix();
  const auto x = gen_effect(cfg, rng);
  const auto y = gen_effect(cfg, rng);
  return {make_effect(hermitize(p.matrix() * x.matrix() * p.matrix()), cfg.tol),
          make_effect(hermitize(q * y.matrix() * q), cfg.tol)};
}

Effect block_diagonal_effect(const Projection& p, const SampleConfig& cfg, SampleRng& rng) {
  const auto q = complement(p.effect()).matrix();
  const auto x = gen_effect(cfg, rng);
  const auto y = gen_effect(cfg, rng);
  return make_effect(hermitize(p.matrix() * x.matrix() * p.matrix() + q * y.matrix() * q), cfg.tol);
}

BlockTriple gen_block_triple(const SampleConfig& cfg, SampleRng& rng, bool summable) {
  const auto p = gen_projection(cfg, rng.integer(1, cfg.dim - 1), rng);
  auto a = block_diagonal_effect(p, cfg, rng);
  auto b = block_diagonal_effect(p, cfg, rng);
  if (summable) {
    a = make_effect(0.5 * a.matrix(), cfg.tol);
    b = make_effect(0.5 * b.matrix(), cfg.tol);
  }
  const double alpha = rng.uniform();
  const double beta = rng.uniform();
  const auto q = ComplexMatrix::identity(cfg.dim) - p.matrix();
  auto c = make_effect(hermitize(alpha * p.matrix() + beta * q), cfg.tol);
  return {std::move(a), std::move(b), std::move(c)};
}

std::pair<Effect, Effect> gen_noncommuting_pair(const SampleConfig& cfg, SampleRng& rng) {
  for (;;) {
    auto a = gen_effect(cfg, rng);
    auto b = gen_effect(cfg, rng);
    if (commutator(a.matrix(), b.matrix()).frobenius_norm() > 1e-3) return {std::move(a), std::move(b)};
  }
}

}  // namespace seqeffect
