#include <string>
#include <vector>

#include "suite_support.hpp"

namespace seqeffect {

using detail::Sample;
using detail::SuiteRun;
using detail::Truth;

namespace {

std::vector<double> uniform_spectrum(std::size_t n, double lo, double hi, SampleRng& rng) {
  std::vector<double> v(n);
  for (auto& t : v) t = rng.uniform(lo, hi);
  return v;
}

Record witness_record(double residual, Json inputs, std::size_t candidates) {
  return Record{0, "", residual, std::move(inputs), Json{{"candidates", candidates}}};
}

}  // namespace

VerificationReport check_condition(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("condition", p, cfg);
  const auto& tol = cfg.tol;
  static constexpr const char* kCases[] = {"1b", "1a", "2a", "2b", "3"};
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    const std::size_t i = s.index();
    const std::size_t n = cfg.dim;

    const auto a0 = i % 3 == 0   ? gen_effect(cfg, rng)
                    : i % 3 == 1 ? gen_projection(cfg, rng.integer(1, n - 1), rng).effect()
                                 : scalar_effect(n, rng.uniform(), tol);
    s.check("condition_i", {a0});

    // every other round of cases stays in the computational basis
    const auto u = (i / 5) % 2 == 0 ? ComplexMatrix::identity(n) : random_unitary(n, rng);
    std::vector<double> lambda;
    std::vector<double> mu;
    switch (i % 5) {
      case 0:  // distinct spectra, generic
        lambda = uniform_spectrum(n, 0.0, 1.0, rng);
        mu = uniform_spectrum(n, 0.0, 1.0, rng);
        break;
      case 1: {  // AB = cI with A, B non-scalar
        lambda = uniform_spectrum(n, 0.3, 1.0, rng);
        const double c = rng.uniform(0.05, 0.3);
        for (double l : lambda) mu.push_back(c / l);
        break;
      }
      case 2:  // A = 0
        lambda.assign(n, 0.0);
        mu = uniform_spectrum(n, 0.0, 1.0, rng);
        break;
      case 3:  // A = lambda I
        lambda.assign(n, rng.uniform(0.05, 1.0));
        mu = uniform_spectrum(n, 0.0, 1.0, rng);
        break;
      default:  // both scalar
        lambda.assign(n, rng.uniform(0.05, 1.0));
        mu.assign(n, rng.uniform(0.05, 1.0));
        break;
    }
    const auto a = effect_in_basis(u, lambda, tol);
    const auto b = effect_in_basis(u, mu, tol);
    s.check(std::string("condition_ii.") + kCases[i % 5], {a, b});
    s.mark_positive();
  });
  return std::move(run).finish(detail::quarter(cfg));
}

VerificationReport check_thm_4_1(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("thm_4_1", p, cfg);
  const auto& tol = cfg.tol;
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    const auto [a, b] = gen_commuting_pair(cfg, rng);
    s.check("thm_4_1.commutes", {a, b});
    if (s.check("thm_4_1.associates", {a, b, gen_effect(cfg, rng)}).positive) s.mark_positive();

    const auto [x, y] = gen_noncommuting_pair(cfg, rng);
    s.check("thm_4_1.noncommuting", {x, y});

    // (3) => (1): some C breaks associativity for a non-commuting pair
    const auto xy = p(x, y);
    std::optional<Record> witness;
    for (std::size_t k = 0; k < kSearchCandidates && !witness; ++k) {
      const auto c = k % 2 == 0 ? rank_one_projection(random_unit_vector(cfg.dim, rng), tol).effect()
                                : gen_effect(cfg, rng);
      const auto lhs = p(x, p(y, c)).matrix();
      const auto rhs = p(xy, c).matrix();
      if (detail::equal_truth(lhs, rhs, tol) == Truth::False)
        witness = witness_record(relative_distance(lhs, rhs), detail::named({{"A", &x}, {"B", &y}, {"C", &c}}), k + 1);
    }
    s.search("thm_4_1.associativity_search", std::move(witness));
  });
  return std::move(run).finish(detail::quarter(cfg));
}

VerificationReport check_thm_4_2(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("thm_4_2", p, cfg);
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    const std::size_t i = s.index();
    const auto [a, b] = gen_noncommuting_pair(cfg, rng);
    if (s.check("thm_4_2.contrapositive", {a, b}).positive) s.mark_positive();
    if (i % 4 != 0) return;
    const auto proj = gen_projection(cfg, rng.integer(1, cfg.dim - 1), rng);
    const auto first = i % 8 == 0 ? identity_effect(cfg.dim, cfg.tol) : proj.effect();
    s.check("thm_4_2.direct", {first, proj.effect()});
  });
  return std::move(run).finish(detail::quarter(cfg));
}

VerificationReport check_thm_4_3(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("thm_4_3", p, cfg);
  const auto& tol = cfg.tol;
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    const std::size_t i = s.index();
    if (i % 2 == 0) {
      const auto scalar = scalar_effect(cfg.dim, rng.uniform(), tol);
      const auto other = gen_effect(cfg, rng);
      const auto& a = i % 4 == 0 ? scalar : other;
      const auto& b = i % 4 == 0 ? other : scalar;
      const auto c = gen_effect(cfg, rng);
      s.check("thm_4_3.left", {a, b, c});
      s.check("thm_4_3.right", {a, b, c});
      s.check("thm_4_3.quadratic", {a, b, rank_one_projection(random_unit_vector(cfg.dim, rng), tol).effect()});
      s.mark_positive();
      return;
    }
    const auto [a, b] = gen_noncommuting_pair(cfg, rng);

    std::optional<Record> left;
    for (std::size_t k = 0; k < kSearchCandidates && !left; ++k) {
      const auto c = rank_one_projection(random_unit_vector(cfg.dim, rng), tol).effect();
      const auto lhs = p(a, p(c, b)).matrix();
      const auto rhs = p(p(a, c), b).matrix();
      if (detail::equal_truth(lhs, rhs, tol) == Truth::False)
        left = witness_record(relative_distance(lhs, rhs), detail::named({{"A", &a}, {"B", &b}, {"C", &c}}), k + 1);
    }
    s.search("thm_4_3.left_search", std::move(left));

    const auto ab = p(a, b);
    std::optional<Record> quad;
    for (std::size_t k = 0; k < kSearchCandidates && !quad; ++k) {
      const auto px = rank_one_projection(random_unit_vector(cfg.dim, rng), tol).effect();
      const double lhs = (ab.matrix() * px.matrix()).trace().real();
      const double rhs = (a.matrix() * px.matrix()).trace().real() * (b.matrix() * px.matrix()).trace().real();
      if (detail::scalar_equal_truth(lhs, rhs, tol) == Truth::False)
        quad = witness_record(std::abs(lhs - rhs), detail::named({{"A", &a}, {"B", &b}, {"X", &px}}), k + 1);
    }
    s.search("thm_4_3.quadratic_search", std::move(quad));
  });
  return std::move(run).finish(detail::quarter(cfg));
}

VerificationReport check_thm_4_4(const SeqProduct& p, const SampleConfig& cfg) {
  SuiteRun run("thm_4_4", p, cfg);
  run.each_sample([&](Sample& s) {
    auto& rng = s.rng();
    const std::size_t i = s.index();
    const std::size_t n = cfg.dim;
    const std::size_t rank = i % 10 == 9 ? n : 1 + (i / 2) % (n - 1);
    const auto e = gen_projection(cfg, rank, rng);
    const auto a = i % 2 == 0 ? block_diagonal_effect(e, cfg, rng) : gen_effect(cfg, rng);
    if (s.check("thm_4_4", {a, e.effect()}).positive) s.mark_positive();
    s.check("cor_4_1", {a, e.effect()});
    if (rank == 1 || rank == n - 1) s.check("cor_4_2", {a, e.effect()});
  });
  return std::move(run).finish(detail::quarter(cfg));
}

}  // namespace seqeffect
