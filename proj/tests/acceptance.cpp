// One line per acceptance criterion; exits nonzero if any fails.
#include <cstdio>
#include <string>
#include <vector>

#include "seqeffect/generators.hpp"
#include "seqeffect/io.hpp"
#include "seqeffect/suites.hpp"

using namespace seqeffect;

namespace {

const Tolerance kTol{};
constexpr std::size_t kSamples = 200;
constexpr std::uint64_t kSeed = 42;

SampleConfig config(std::size_t dim, std::size_t samples = kSamples) {
  SampleConfig cfg;
  cfg.dim = dim;
  cfg.samples = samples;
  cfg.seed = kSeed;
  return cfg;
}

struct Criterion {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) note = what;
    ok = false;
  }
};

std::string where(const VerificationReport& r) { return r.suite + " dim " + r.config.at("dim").dump(); }

void expect_pass(Criterion& c, const VerificationReport& r) {
  c.require(r.status() == Status::Pass,
            where(r) + " " + to_string(r.status()) +
                (r.failures.empty() ? "" : " at " + r.failures.front().clause));
}

SeqProduct borel(double lambda) { return family_seq_product(borel_family(lambda), kTol); }

Dim2PhaseTable phase_table() {
  Dim2PhaseTable t(7, kTol);
  t.set({0, 0, 1}, 2.0);
  t.set({1, 0, 0}, -1.5);
  t.set({1, 1, 1}, 0.75);
  return t;
}

bool all_replay(const VerificationReport& r) {
  const auto p = product_from_json(r.config.at("product"), kTol);
  std::size_t n = 0;
  for (const auto& f : r.failures) {
    const auto again = replay_failure(p, f, kTol);
    if (!again) continue;
    if (!*again) return false;
    ++n;
  }
  return n > 0;
}

Criterion criterion1() {
  Criterion c;
  const auto p = standard_seq_product(kTol);
  for (std::size_t d : {2, 3, 4, 6}) expect_pass(c, run_suite("sea", p, config(d)));
  return c;
}

Criterion criterion2() {
  Criterion c;
  for (double lambda : {0.0, 1.0, -2.5}) {
    const auto p = borel(lambda);
    for (std::size_t d : {2, 3, 4, 6}) {
      expect_pass(c, run_suite("sea", p, config(d)));
      expect_pass(c, run_suite("condition", p, config(d)));
    }
  }
  return c;
}

Criterion criterion3() {
  Criterion c;
  const auto table = phase_table();
  c.require(table.entries().size() >= 3, "fewer than 3 explicit entries");
  const auto p = family_seq_product(dim2_family(table, kTol), kTol);
  const auto cond = run_suite("condition", p, config(2));
  expect_pass(c, cond);
  std::size_t pairs = 0;
  for (const char* k : {"condition_ii.1a", "condition_ii.1b", "condition_ii.2a", "condition_ii.2b", "condition_ii.3"}) {
    const auto it = cond.clauses.find(k);
    const std::size_t n = it == cond.clauses.end() ? 0 : it->second.checked;
    c.require(n > 0, std::string("no checks for ") + k);
    pairs += n;
  }
  c.require(pairs >= 200, "only " + std::to_string(pairs) + " commuting pairs");
  c.require(cond.clauses.at("condition_i").checked > 0, "condition (i) unchecked");
  expect_pass(c, run_suite("sea", p, config(2)));
  c.note = c.ok ? std::to_string(pairs) + " commuting pairs" : c.note;
  return c;
}

Criterion criterion4() {
  Criterion c;
  const auto lin = family_seq_product(linear_family(), kTol);
  const auto cond = run_suite("condition", lin, config(2));
  c.require(cond.clauses.at("condition_i").failed > 0, "linear family passed condition (i)");
  c.require(all_replay(cond), "linear condition failures do not replay");
  const auto sea = run_suite("sea", lin, config(2));
  c.require(sea.clauses.at("SEA2.right_unit").failed > 0, "linear family passed A◇I = A");
  c.require(all_replay(sea), "linear SEA failures do not replay");

  const auto tp = family_seq_product(trace_phase_family(1.0), kTol);
  const auto tcond = run_suite("condition", tp, config(3));
  c.require(tcond.clauses.at("condition_i").failed == 0, "phase-broken family failed condition (i)");
  std::size_t broken = 0;
  for (const auto& [name, stats] : tcond.clauses)
    if (name.rfind("condition_ii", 0) == 0) broken += stats.failed;
  c.require(broken >= 1, "phase-broken family passed condition (ii)");
  c.require(all_replay(tcond), "phase-broken failures do not replay");
  if (c.ok) c.note = std::to_string(broken) + " condition (ii) failures";
  return c;
}

Criterion criterion5() {
  Criterion c;
  const auto p = standard_seq_product(kTol);
  for (const char* suite : {"thm_2_1", "thm_2_2", "thm_2_3", "thm_2_5", "thm_2_6", "lemmas"}) {
    for (std::size_t d : {2, 3, 5}) {
      const auto r = run_suite(suite, p, config(d));
      expect_pass(c, r);
      c.require(r.positives >= 50, where(r) + " has " + std::to_string(r.positives) + " positives");
      const double frac = static_cast<double>(r.indeterminate) / static_cast<double>(kSamples);
      c.require(frac < 0.05, where(r) + " indeterminate fraction " + std::to_string(frac));
    }
  }
  return c;
}

Criterion criterion6() {
  Criterion c;
  const auto p = family_seq_product(sqrt_family(), kTol);
  const auto full = run_suite("thm_4_1", p, config(2));
  expect_pass(c, full);
  const auto r = run_suite("thm_4_1", p, config(2, 50));
  const auto& s = r.clauses.at("thm_4_1.associativity_search");
  c.require(s.searched == 50, "searched " + std::to_string(s.searched) + " pairs");
  c.require(s.witnessed * 10 >= s.searched * 9, "witnesses for " + std::to_string(s.witnessed) + " of 50 pairs");
  if (c.ok) c.note = std::to_string(s.witnessed) + "/50 witnesses";
  return c;
}

Criterion criterion7() {
  Criterion c;
  std::vector<SeqProduct> products{standard_seq_product(kTol), borel(0.0), borel(1.0), borel(-2.5)};
  const auto dim2 = family_seq_product(dim2_family(phase_table(), kTol), kTol);
  for (std::size_t d : {2, 3}) {
    auto all = products;
    if (d == 2) all.push_back(dim2);
    for (const auto& p : all) {
      const auto r = run_suite("thm_4_2", p, config(d));
      expect_pass(c, r);
      const auto& s = r.clauses.at("thm_4_2.contrapositive");
      c.require(s.positives == kSamples && s.failed == 0 && s.indeterminate == 0,
                where(r) + " " + p.label() + ": " + std::to_string(s.positives) + " of 200 residuals above eq_tol");
    }
  }
  return c;
}

Criterion criterion8() {
  Criterion c;
  for (const auto& p : {standard_seq_product(kTol), borel(1.0)}) {
    for (std::size_t d : {2, 3, 5}) {
      const auto r = run_suite("thm_4_4", p, config(d));
      expect_pass(c, r);
      c.require(r.clauses.at("cor_4_2").checked > 0, where(r) + " no rank-one or corank-one samples");
    }
  }
  return c;
}

Criterion criterion9() {
  Criterion c;
  double worst_poly = 0.0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    auto rng = sample_rng(kSeed, "acceptance.poly", k);
    const auto cfg = config(2 + k % 5);
    const auto a = gen_effect(cfg, rng);
    const Complex c0(rng.normal(), rng.normal()), c1(rng.normal(), rng.normal()), c2(rng.normal(), rng.normal());
    const auto& m = a.matrix();
    const auto id = ComplexMatrix::identity(cfg.dim);
    const auto direct = (c2 * m + c1 * id) * m + c0 * id;
    const auto f = apply_function(a.spectrum(), [&](double t) { return (c2 * t + c1) * t + c0; });
    worst_poly = std::max(worst_poly, relative_distance(f, direct));
  }
  c.require(worst_poly <= 1e-10, "polynomial residual " + std::to_string(worst_poly));

  std::size_t disagreements = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    auto rng = sample_rng(kSeed, "acceptance.blocks", k);
    const std::size_t n = 2 + 2 * (k % 3);
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = {rng.normal(), rng.normal()};
    auto m = hermitize(g * g.adjoint());
    if (k % 2 == 1) m -= (min_eigenvalue(m, kTol) + rng.uniform(-0.5, 0.5)) * ComplexMatrix::identity(n);
    m = hermitize(m);
    const std::size_t h = n / 2;
    const bool blocks = block_psd_check(m.block(0, 0, h, h), m.block(0, h, h, n - h), m.block(h, 0, n - h, h),
                                        m.block(h, h, n - h, n - h), kTol);
    disagreements += blocks != is_psd(m, kTol);
  }
  c.require(disagreements == 0, std::to_string(disagreements) + " block/full disagreements");

  double worst_sqrt = 0.0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    auto rng = sample_rng(kSeed, "acceptance.sqrt", k);
    const auto a = gen_effect(config(2 + k % 5), rng);
    const auto r = sqrt_psd(a.matrix(), kTol);
    worst_sqrt = std::max(worst_sqrt, relative_distance(r * r, a.matrix()));
  }
  c.require(worst_sqrt <= 1e-10, "sqrt residual " + std::to_string(worst_sqrt));
  if (c.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "poly %.1e, sqrt %.1e", worst_poly, worst_sqrt);
    c.note = buf;
  }
  return c;
}

Criterion criterion10() {
  Criterion c;
  const auto p = standard_seq_product(kTol);
  for (std::size_t d : {2, 3, 4, 6}) {
    const auto first = run_suite("sea", p, config(d)).to_json().dump(2);
    const auto second = run_suite("sea", p, config(d)).to_json().dump(2);
    c.require(first == second, "sea dim " + std::to_string(d) + " reports differ");
  }
  return c;
}

}  // namespace

int main() {
  using Fn = Criterion (*)();
  const Fn criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                         criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (int i = 0; i < 10; ++i) {
    Criterion c;
    try {
      c = criteria[i]();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note = std::string("error: ") + e.what();
    }
    std::printf("criterion %d: %s%s%s\n", i + 1, c.ok ? "PASS" : "FAIL", c.note.empty() ? "" : "  ", c.note.c_str());
    std::fflush(stdout);
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
