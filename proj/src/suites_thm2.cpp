#include <vector>

#include "suite_support.hpp"

namespace seqeffect {

using detail::Sample;
using detail::SuiteRun;

namespace {

// U diag(1, ..., 1, t_r, ..., t_n) U^dagger with t_k ~ U(0, 0.9): unit
// eigenspace of dimension `rank`, returned with its projection.
std::pair<Effect, Effect> with_unit_eigenspace(const SampleConfig& cfg, std::size_t rank, SampleRng& rng) {
  const auto u = random_unitary(cfg.dim, rng);
  std::vector<double> spectrum(cfg.dim);
  std::vector<double> indicator(cfg.dim, 0.0);
  for (std::size_t k = 0; k < cfg.dim; ++k) {
    spectrum[k] = k < rank ? 1.0 : rng.uniform(0.0, 0.9);
    if (k < rank) indicator[k] = 1.0;
  }
  return {effect_in_basis(u, spectrum, cfg.tol), effect_in_basis(u, indicator, cfg.tol)};
}

Effect without_unit_eigenvalue(const SampleConfig& cfg, SampleRng& rng) {
  return with_unit_eigenspace(cfg, 0, rng).first;
}

}  // namespace

VerificationReport check_thm_2_1(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("thm_2_1", p, cfg);
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    const std::size_t i = s.index();
    const std::size_t rank = i % 8 == 0 ? cfg.dim : i % 8 == 1 ? 0 : rng.integer(1, cfg.dim - 1);
    const auto e = gen_projection(cfg, rank, rng);
    s.check("thm_2_1", {e.effect(), gen_effect(cfg, rng)});
    s.mark_positive();
  });
  return std::move(run).finish(detail::quarter(cfg));
}

VerificationReport check_thm_2_2(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("thm_2_2", p, cfg);
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    auto [a, b] = gen_commuting_pair(cfg, rng);
    if (s.index() % 5 == 0) b = identity_effect(cfg.dim, cfg.tol);
    if (s.check("thm_2_2", {a, b}).positive) s.mark_positive();
  });
  return std::move(run).finish(detail::quarter(cfg));
}

VerificationReport check_thm_2_3(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("thm_2_3", p, cfg);
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    const std::size_t i = s.index();
    std::optional<Effect> a;
    std::optional<Effect> b;
    switch (i % 4) {
      case 0: {
        // B = s K Z K with K = P_{Ker(I - A)}
        auto [aa, k] = with_unit_eigenspace(cfg, rng.integer(1, cfg.dim), rng);
        const auto z = gen_effect(cfg, rng);
        const double t = rng.uniform();
        a = aa;
        b = make_effect(hermitize(t * (k.matrix() * z.matrix() * k.matrix())), cfg.tol);
        break;
      }
      case 1:
        if (i % 8 == 1) {
          a = identity_effect(cfg.dim, cfg.tol);
          b = gen_effect(cfg, rng);
        } else {
          a = without_unit_eigenvalue(cfg, rng);
          b = zero_effect(cfg.dim, cfg.tol);
        }
        break;
      case 2:
        a = with_unit_eigenspace(cfg, rng.integer(1, cfg.dim - 1), rng).first;
        b = gen_effect(cfg, rng);
        break;
      default:
        a = without_unit_eigenvalue(cfg, rng);
        b = gen_effect(cfg, rng);
        break;
    }
    if (s.check("thm_2_3", {*a, *b}).positive) s.mark_positive();
  });
  return std::move(run).finish(detail::quarter(cfg));
}

VerificationReport check_thm_2_4(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("thm_2_4", p, cfg);
  const auto& tol = cfg.tol;
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    const std::size_t i = s.index();
    if (i % 2 == 0) {
      const double t = i % 16 == 0 ? 1.0 : rng.uniform();
      const auto scalar = scalar_effect(cfg.dim, t, tol);
      const auto other = i % 16 == 0 ? identity_effect(cfg.dim, tol) : gen_effect(cfg, rng);
      const auto& a = i % 4 == 0 ? scalar : other;
      const auto& b = i % 4 == 0 ? other : scalar;
      s.check("thm_2_4.associative", {a, b, gen_effect(cfg, rng)});
      s.check("thm_2_4.quadratic", {a, b, rank_one_projection(random_unit_vector(cfg.dim, rng), tol).effect()});
      s.mark_positive();
      return;
    }
    const auto [a, b] = gen_noncommuting_pair(cfg, rng);
    const auto ab = p(a, b);
    std::optional<Record> witness;
    for (std::size_t k = 0; k < kSearchCandidates && !witness; ++k) {
      const auto px = rank_one_projection(random_unit_vector(cfg.dim, rng), tol);
      const double lhs = (ab.matrix() * px.matrix()).trace().real();
      const double rhs = (a.matrix() * px.matrix()).trace().real() * (b.matrix() * px.matrix()).trace().real();
      if (detail::scalar_equal_truth(lhs, rhs, tol) == detail::Truth::False) {
        witness = Record{0, "", std::abs(lhs - rhs), detail::named({{"A", &a}, {"B", &b}, {"X", &px.effect()}}),
                         Json{{"candidates", k + 1}}};
      }
    }
    s.search("thm_2_4.search", std::move(witness));
  });
  return std::move(run).finish(detail::quarter(cfg));
}

VerificationReport check_thm_2_5(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("thm_2_5", p, cfg);
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    const std::size_t i = s.index();
    const std::size_t rank = i % 8 == 0 ? cfg.dim : rng.integer(1, cfg.dim - 1);
    const auto e = gen_projection(cfg, rank, rng);
    const auto b = i % 2 == 0 ? block_diagonal_effect(e, cfg, rng) : gen_effect(cfg, rng);
    if (s.check("thm_2_5", {e.effect(), b}).positive) s.mark_positive();
  });
  return std::move(run).finish(detail::quarter(cfg));
}

VerificationReport check_thm_2_6(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("thm_2_6", p, cfg);
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    const double eps = rng.uniform(0.05, 0.5);
    const auto r = gen_effect(cfg, rng);
    const auto a = make_effect(hermitize(eps * ComplexMatrix::identity(cfg.dim) + (1.0 - eps) * r.matrix()), cfg.tol);
    std::optional<Effect> b;
    std::optional<Effect> c;
    switch (s.index() % 4) {
      case 0: {
        const auto [bb, d] = gen_summable_pair(cfg, rng);
        b = bb;
        c = make_effect(bb.matrix() + d.matrix(), cfg.tol);
        break;
      }
      case 1:
        b = gen_effect(cfg, rng);
        c = b;
        break;
      case 2:
        b = gen_effect(cfg, rng);
        c = gen_effect(cfg, rng);
        break;
      default: {
        const auto [cc, d] = gen_summable_pair(cfg, rng);
        c = cc;
        b = make_effect(cc.matrix() + d.matrix(), cfg.tol);
        break;
      }
    }
    if (s.check("thm_2_6.order", {a, *b, *c}).positive) s.mark_positive();
    s.check("cor_2_1", {a, *b, *c});
  });
  return std::move(run).finish(detail::quarter(cfg));
}

}  // namespace seqeffect
