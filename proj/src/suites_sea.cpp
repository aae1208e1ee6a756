#include "suite_support.hpp"

namespace seqeffect {

using detail::Sample;
using detail::SuiteRun;

VerificationReport check_sea_axioms(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("sea", p, cfg);
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();

    const auto a = gen_effect(cfg, rng);
    const auto [b, c] = gen_summable_pair(cfg, rng);
    s.check("SEA1.orthogonal", {a, b, c});
    s.check("SEA1.additive", {a, b, c});

    const auto u = gen_effect(cfg, rng);
    s.check("SEA2", {u});
    s.check("SEA2.right_unit", {u});

    const auto [x, y] = gen_orthogonal_supports(cfg, rng);
    s.check("SEA3", {x, y});

    const auto [ca, cb] = gen_commuting_pair(cfg, rng);
    const auto cc = gen_effect(cfg, rng);
    if (s.check("SEA4.complement", {ca, cb}).positive) s.mark_positive();
    s.check("SEA4.associative", {ca, cb, cc});

    const auto t = gen_block_triple(cfg, rng, s.index() % 2 == 0);
    s.check("SEA5.product", {t.a, t.b, t.c});
    s.check("SEA5.sum", {t.a, t.b, t.c});
  });
  return std::move(run).finish(detail::quarter(cfg));
}

VerificationReport check_scalar_homogeneity(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("homogeneity", p, cfg);
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    const double t = s.index() == 0 ? 0.0 : s.index() == 1 ? 1.0 : rng.uniform();
    const auto scalar = scalar_effect(cfg.dim, t, cfg.tol);
    const auto a = gen_effect(cfg, rng);
    const auto b = gen_effect(cfg, rng);
    s.check("homogeneity.left", {a, b, scalar});
    s.check("homogeneity.right", {a, b, scalar});
    s.mark_positive();
  });
  return std::move(run).finish(detail::quarter(cfg));
}

VerificationReport check_lemma_suite(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("lemmas", p, cfg);
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    const std::size_t i = s.index();

    // sharp on even samples, a multiple of I every eighth
    const auto a = i % 2 == 0   ? gen_projection(cfg, rng.integer(1, cfg.dim - 1), rng).effect()
                   : i % 8 == 1 ? scalar_effect(cfg.dim, rng.uniform(0.05, 0.95), cfg.tol)
                                : gen_effect(cfg, rng);
    if (s.check("lemma_2_1", {a}).positive) s.mark_positive();

    const auto b = gen_projection(cfg, rng.integer(1, cfg.dim - 1), rng);
    const auto below = i % 2 == 0 ? make_effect(hermitize(b.matrix() * gen_effect(cfg, rng).matrix() * b.matrix()), cfg.tol)
                                  : gen_effect(cfg, rng);
    s.check("lemma_2_2", {below, b.effect()});

    s.check("lemma_2_3.2", {a, gen_effect(cfg, rng)});

    const auto [x, d] = gen_summable_pair(cfg, rng);
    const auto y = make_effect(x.matrix() + d.matrix(), cfg.tol);
    s.check("lemma_2_3.3", {x, y, gen_effect(cfg, rng)});
  });
  return std::move(run).finish(detail::quarter(cfg));
}

}  // namespace seqeffect
