#include <cmath>
#include <string>

#include "doctest.h"
#include "seqeffect/error.hpp"
#include "seqeffect/generators.hpp"
#include "seqeffect/io.hpp"
#include "seqeffect/suites.hpp"
#include "suite_support.hpp"

using namespace seqeffect;
using detail::Truth;

namespace {

const Tolerance kTol{};

Effect eff(std::initializer_list<std::initializer_list<Complex>> rows) {
  return make_effect(ComplexMatrix::from_rows(rows), kTol);
}
Effect diag(std::initializer_list<double> v) { return make_effect(ComplexMatrix::diagonal(v), kTol); }

SampleConfig config(std::size_t dim, std::size_t samples = 40, std::uint64_t seed = 42) {
  SampleConfig cfg;
  cfg.dim = dim;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

detail::Outcome eval(const SeqProduct& p, std::string_view clause, std::initializer_list<Effect> args) {
  const auto* c = detail::find_clause_check(clause);
  REQUIRE(c != nullptr);
  REQUIRE(c->arity == args.size());
  return c->eval(p, std::span<const Effect>(args.begin(), args.size()), kTol);
}

// every clause value recorded by an agreement outcome
bool all_values(const detail::Outcome& o, const char* value) {
  for (const auto& [k, v] : o.detail.items())
    if (v != value) return false;
  return !o.detail.empty();
}

SeqProduct standard() { return standard_seq_product(kTol); }

}  // namespace

TEST_CASE("generators") {
  auto rng = sample_rng(1, "gen", 0);
  auto again = sample_rng(1, "gen", 0);
  const auto cfg3 = config(3);
  CHECK(distance(gen_effect(cfg3, rng).matrix(), gen_effect(cfg3, again).matrix()) == 0.0);
  CHECK(gen_effect(cfg3, rng).dim() == 3);
  for (std::uint64_t k = 0; k < 1000; ++k) {
    auto r = sample_rng(2, "many", k);
    CHECK_NOTHROW(gen_effect(config(2 + k % 5), r));
  }
  for (std::uint64_t k = 0; k < 50; ++k) {
    auto r = sample_rng(3, "shapes", k);
    const auto cfg = config(2 + k % 5);
    const auto [a, b] = gen_commuting_pair(cfg, r);
    CHECK(commutator(a.matrix(), b.matrix()).frobenius_norm() <= 1e-12);
    const auto [s, t] = gen_summable_pair(cfg, r);
    CHECK(oplus(s, t, kTol).has_value());
    const auto [x, y] = gen_orthogonal_supports(cfg, r);
    CHECK((x.matrix() * y.matrix()).frobenius_norm() <= 1e-12);
    const auto [u, v] = gen_noncommuting_pair(cfg, r);
    CHECK(commutator(u.matrix(), v.matrix()).frobenius_norm() > 1e-3);
    const auto q = random_unitary(cfg.dim, r);
    CHECK(distance(q * q.adjoint(), ComplexMatrix::identity(cfg.dim)) <= 1e-12);
  }
}

TEST_CASE("truth bands") {
  const auto m = ComplexMatrix::diagonal({-5e-10, 1.0});
  CHECK(detail::psd_truth(ComplexMatrix::diagonal({-5e-11, 1.0}), kTol) == Truth::True);
  CHECK(detail::psd_truth(m, kTol) == Truth::Indeterminate);
  CHECK(detail::psd_truth(ComplexMatrix::diagonal({-5e-9, 1.0}), kTol) == Truth::False);
  CHECK(detail::zero_truth(ComplexMatrix::diagonal({1e-10, 0.0}), kTol) == Truth::True);
  CHECK(detail::zero_truth(ComplexMatrix::diagonal({5e-9, 0.0}), kTol) == Truth::Indeterminate);
  CHECK(detail::zero_truth(ComplexMatrix::diagonal({1e-7, 0.0}), kTol) == Truth::False);
  CHECK(detail::both(Truth::True, Truth::Indeterminate) == Truth::Indeterminate);
  CHECK(detail::both(Truth::False, Truth::Indeterminate) == Truth::False);
  CHECK(detail::negate(Truth::Indeterminate) == Truth::Indeterminate);
}

TEST_CASE("SEA checks on the standard product") {
  const auto p = standard();
  const auto a = eff({{0.6, 0.2}, {0.2, 0.3}});
  CHECK(eval(p, "SEA2", {a}).truth == Truth::True);
  CHECK(eval(p, "SEA2.right_unit", {a}).truth == Truth::True);
  CHECK(eval(p, "SEA3", {diag({0.4, 0.0}), diag({0.0, 0.7})}).truth == Truth::True);
  const auto lin = family_seq_product(linear_family(), kTol);
  CHECK(eval(lin, "SEA2.right_unit", {a}).truth == Truth::False);
}

TEST_CASE("scalar homogeneity examples") {
  const auto p = standard();
  const auto a = eff({{0.6, 0.2}, {0.2, 0.3}});
  const auto b = diag({0.3, 0.9});
  for (double t : {0.0, 1.0, 0.37}) {
    const auto tt = scalar_effect(2, t, kTol);
    CHECK(eval(p, "homogeneity.left", {a, b, tt}).truth == Truth::True);
    CHECK(eval(p, "homogeneity.right", {a, b, tt}).truth == Truth::True);
  }
}

TEST_CASE("lemma clauses") {
  const auto p = standard();
  const auto proj = eff({{0.5, 0.5}, {0.5, 0.5}});
  CHECK(eval(p, "lemma_2_1", {proj}).truth == Truth::True);
  CHECK(eval(p, "lemma_2_1", {proj}).positive);
  const auto half = eval(p, "lemma_2_1", {scalar_effect(2, 0.5, kTol)});
  CHECK(half.truth == Truth::True);
  CHECK(eval(p, "lemma_2_3.2", {eff({{0.6, 0.2}, {0.2, 0.3}}), diag({0.3, 0.9})}).truth == Truth::True);
}

TEST_CASE("thm_2_1 clause") {
  const auto p = standard();
  const auto b = eff({{0.6, 0.2}, {0.2, 0.3}});
  CHECK(eval(p, "thm_2_1", {identity_effect(2, kTol), b}).truth == Truth::True);
  CHECK(eval(p, "thm_2_1", {zero_effect(2, kTol), b}).truth == Truth::True);
  CHECK(eval(p, "thm_2_1", {eff({{0.5, 0.5}, {0.5, 0.5}}), b}).truth == Truth::True);
}

TEST_CASE("thm_2_2 clause") {
  const auto p = standard();
  const auto a = eff({{0.6, 0.2}, {0.2, 0.3}});
  const auto o = eval(p, "thm_2_2", {a, identity_effect(2, kTol)});
  CHECK(o.truth == Truth::True);
  CHECK(o.positive);
  CHECK(eval(p, "thm_2_2", {diag({0.2, 0.5}), diag({0.4, 0.9})}).truth == Truth::True);
  CHECK(distance(p(diag({0.2, 0.5}), diag({0.4, 0.9})).matrix(), ComplexMatrix::diagonal({0.08, 0.45})) <= 1e-12);
}

TEST_CASE("thm_2_3 clause") {
  const auto p = standard();
  const auto b = eff({{0.6, 0.2}, {0.2, 0.3}});
  const auto one = eval(p, "thm_2_3", {identity_effect(2, kTol), b});
  CHECK(one.truth == Truth::True);
  CHECK(all_values(one, "true"));
  const auto zero = eval(p, "thm_2_3", {scalar_effect(2, 0.7, kTol), zero_effect(2, kTol)});
  CHECK(all_values(zero, "true"));
  const auto none = eval(p, "thm_2_3", {diag({0.7, 0.9}), b});
  CHECK(none.truth == Truth::True);
  CHECK(all_values(none, "false"));
  // B under the unit eigenspace of A
  const auto a = diag({1.0, 0.4});
  const auto sub = eval(p, "thm_2_3", {a, diag({0.3, 0.0})});
  CHECK(all_values(sub, "true"));
  // an eigenvalue just below 1 still separates after many squarings
  const auto slow = eval(p, "thm_2_3", {diag({0.999, 0.2}), diag({0.3, 0.0})});
  CHECK(all_values(slow, "false"));
}

TEST_CASE("thm_2_4 clauses") {
  const auto p = standard();
  const auto b = eff({{0.6, 0.2}, {0.2, 0.3}});
  const auto c = eff({{0.5, 0.5}, {0.5, 0.5}});
  const std::vector<Complex> x{Complex(0.6, 0), Complex(0, 0.8)};
  const auto px = rank_one_projection(x, kTol);
  CHECK(eval(p, "thm_2_4.associative", {scalar_effect(2, 0.5, kTol), b, c}).truth == Truth::True);
  CHECK(eval(p, "thm_2_4.quadratic", {scalar_effect(2, 0.5, kTol), b, px.effect()}).truth == Truth::True);
  CHECK(eval(p, "thm_2_4.quadratic", {identity_effect(2, kTol), identity_effect(2, kTol), px.effect()}).positive);

  // A = diag(1,0), B = P_(e1+e2)/sqrt2: at e1 the sides agree for A∘B (0.5, 0.5)
  // and separate for B∘A (0.25 against 0.5)
  const auto a = diag({1.0, 0.0});
  const std::vector<Complex> e1{1.0, 0.0};
  const auto p1 = rank_one_projection(e1, kTol);
  const auto at = [&](const Effect& m) { return (m.matrix() * p1.matrix()).trace().real(); };
  CHECK(at(p(a, c)) == doctest::Approx(0.5));
  CHECK(at(a) * at(c) == doctest::Approx(0.5));
  CHECK(at(p(c, a)) == doctest::Approx(0.25));
  CHECK(eval(p, "thm_2_4.quadratic", {c, a, p1.effect()}).positive == false);
  CHECK(std::abs(at(p(c, a)) - at(c) * at(a)) > kTol.eq_tol);
}

TEST_CASE("thm_2_5 clause") {
  const auto p = standard();
  const auto b = eff({{0.5, 0.3}, {0.3, 0.5}});
  CHECK(all_values(eval(p, "thm_2_5", {identity_effect(2, kTol), b}), "true"));
  CHECK(all_values(eval(p, "thm_2_5", {diag({1.0, 0.0}), diag({0.3, 0.6})}), "true"));
  const auto o = eval(p, "thm_2_5", {diag({1.0, 0.0}), b});
  CHECK(o.truth == Truth::True);
  CHECK(all_values(o, "false"));
  // B - EBE has eigenvalues -0.1405..., 0.6405...
  const auto e = diag({1.0, 0.0});
  const auto s = eigh(b.matrix() - e.matrix() * b.matrix() * e.matrix(), kTol);
  CHECK(s.min_eigenvalue() == doctest::Approx(-0.1405124837953327).epsilon(1e-12));
  CHECK(s.max_eigenvalue() == doctest::Approx(0.6405124837953328).epsilon(1e-12));
}

TEST_CASE("thm_2_6 clauses") {
  const auto p = standard();
  const auto a = diag({0.5, 1.0});
  const auto b = eff({{0.5, 0.3}, {0.3, 0.5}});
  const auto c = scalar_effect(2, 0.6, kTol);
  CHECK(all_values(eval(p, "thm_2_6.order", {a, b, b}), "true"));
  CHECK(all_values(eval(p, "cor_2_1", {a, b, b}), "true"));
  CHECK(all_values(eval(p, "thm_2_6.order", {a, diag({0.2, 0.1}), diag({0.3, 0.4})}), "true"));
  const auto o = eval(p, "thm_2_6.order", {a, b, c});
  CHECK(o.truth == Truth::True);
  CHECK(all_values(o, "false"));
  CHECK(min_eigenvalue(p(a, c).matrix() - p(a, b).matrix(), kTol) ==
        doctest::Approx(-0.1386000936329383).epsilon(1e-12));
}

TEST_CASE("thm_4_1 to thm_4_3 clauses") {
  const auto p = family_seq_product(borel_family(1.0), kTol);
  const auto [a, b] = [] {
    auto r = sample_rng(5, "pair", 0);
    return gen_noncommuting_pair(config(2), r);
  }();
  CHECK(eval(p, "thm_4_1.commutes", {diag({0.2, 0.5}), diag({0.4, 0.9})}).truth == Truth::True);
  CHECK(eval(p, "thm_4_1.noncommuting", {a, b}).truth == Truth::True);

  const auto proj = eff({{0.5, 0.5}, {0.5, 0.5}});
  CHECK(eval(p, "thm_4_2.direct", {identity_effect(2, kTol), proj}).truth == Truth::True);
  CHECK(eval(p, "thm_4_2.direct", {proj, proj}).positive);
  const auto contra = eval(p, "thm_4_2.contrapositive", {a, b});
  CHECK(contra.truth == Truth::True);
  CHECK(contra.positive);
  CHECK(contra.residual > kTol.eq_tol);

  const auto c = eff({{0.6, 0.2}, {0.2, 0.3}});
  CHECK(eval(p, "thm_4_3.left", {scalar_effect(2, 0.3, kTol), b, c}).truth == Truth::True);
  CHECK(eval(p, "thm_4_3.right", {a, scalar_effect(2, 0.3, kTol), c}).truth == Truth::True);
}

TEST_CASE("thm_4_4 clauses") {
  const auto p = standard();
  const auto e = diag({1.0, 0.0});
  CHECK(all_values(eval(p, "thm_4_4", {diag({0.3, 0.8}), e}), "true"));
  CHECK(all_values(eval(p, "thm_4_4", {eff({{0.6, 0.2}, {0.2, 0.3}}), identity_effect(2, kTol)}), "true"));
  const auto a = eff({{0.5, 0.3}, {0.3, 0.5}});
  const auto o = eval(p, "thm_4_4", {a, e});
  CHECK(o.truth == Truth::True);
  CHECK(all_values(o, "false"));
  CHECK(all_values(eval(p, "cor_4_1", {a, e}), "false"));
  CHECK(all_values(eval(p, "cor_4_2", {a, e}), "false"));
  const auto root = sqrt_psd(a.matrix(), kTol);
  const auto id = ComplexMatrix::identity(2);
  CHECK((e.matrix() * root * (id - e.matrix()))(0, 1).real() == doctest::Approx(0.22360679774997902).epsilon(1e-12));
  CHECK(min_eigenvalue(e.matrix() - root * e.matrix() * root, kTol) ==
        doctest::Approx(-0.08541019662496849).epsilon(1e-12));
}

TEST_CASE("unknown clause and arity") {
  CHECK(detail::find_clause_check("no_such_clause") == nullptr);
  CHECK(detail::find_clause_check("thm_2_3")->arity == 2);
}

TEST_CASE("suite registry") {
  const auto suites = suite_registry();
  CHECK(suites.size() >= 12);
  CHECK(find_suite("thm_2_3") != nullptr);
  CHECK(find_suite("sea") != nullptr);
  CHECK(find_suite("nope") == nullptr);
  for (const auto& s : suites) CHECK_FALSE(s.reference.empty());
  CHECK_THROWS_AS(run_suite("nope", standard(), config(2)), Error);
  Dim2PhaseTable t(7, kTol);
  CHECK_THROWS_AS(run_suite("sea", family_seq_product(dim2_family(t, kTol), kTol), config(3)), Error);
}

TEST_CASE("every suite passes for correct products") {
  Dim2PhaseTable table(7, kTol);
  table.set({0, 0, 1}, 2.0);
  table.set({1, 0, 0}, -1.5);
  table.set({1, 1, 1}, 0.75);
  struct Case {
    SeqProduct product;
    std::size_t dim;
  };
  const std::vector<Case> cases{{standard(), 2},
                                {standard(), 4},
                                {family_seq_product(borel_family(-2.5), kTol), 3},
                                {family_seq_product(dim2_family(table, kTol), kTol), 2}};
  for (const auto& c : cases) {
    for (const auto& s : suite_registry()) {
      const auto r = run_suite(s.id, c.product, config(c.dim));
      INFO(s.id, " ", c.product.label(), " dim ", c.dim);
      CHECK(r.status() == Status::Pass);
      CHECK(r.checked > 0);
      CHECK(r.indeterminate == 0);
      CHECK(r.positives >= 10);
    }
  }
}

TEST_CASE("broken families fail and their failures replay") {
  const auto lin = family_seq_product(linear_family(), kTol);
  const auto sea = run_suite("sea", lin, config(2));
  CHECK(sea.status() == Status::Fail);
  CHECK(sea.clauses.at("SEA2.right_unit").failed > 0);

  const auto tp = family_seq_product(trace_phase_family(1.0), kTol);
  const auto cond = run_suite("condition", tp, config(3, 100));
  CHECK(cond.status() == Status::Fail);
  CHECK(cond.clauses.at("condition_i").failed == 0);

  for (const auto* r : {&sea, &cond}) {
    const auto product = product_from_json(r->config.at("product"), kTol);
    std::size_t replayed = 0;
    for (const auto& f : r->failures) {
      const auto again = replay_failure(product, f, kTol);
      if (!again) continue;
      ++replayed;
      CHECK(*again);
    }
    CHECK(replayed > 0);
  }
}

TEST_CASE("reports are deterministic and round-trip") {
  const auto cfg = config(3, 30, 9);
  const auto p = family_seq_product(borel_family(1.0), kTol);
  const auto first = run_suite("thm_4_1", p, cfg);
  const auto second = run_suite("thm_4_1", p, cfg);
  CHECK(first.to_json().dump(2) == second.to_json().dump(2));
  CHECK(run_suite("thm_4_1", p, config(3, 30, 10)).to_json().dump() != first.to_json().dump());

  const auto j = first.to_json();
  CHECK(j.at("status") == "pass");
  CHECK(j.at("suite") == "thm_4_1");
  CHECK(j.contains("checked"));
  CHECK(j.contains("indeterminate"));
  CHECK(j.contains("failures"));
  CHECK(j.contains("witnesses"));
  const auto back = VerificationReport::from_json(Json::parse(j.dump()));
  CHECK(back.to_json() == j);
  CHECK(run_from_config(j.at("config")).to_json().dump(2) == j.dump(2));
  CHECK_THROWS_AS(VerificationReport::from_json(Json::parse("{\"suite\":1}")), Error);

  // text carries the same verdict
  const auto text = first.to_text();
  CHECK(text.find("pass") != std::string::npos);
  const auto failed = run_suite("sea", family_seq_product(linear_family(), kTol), config(2, 10));
  CHECK(failed.to_text().find("fail") != std::string::npos);
  CHECK(failed.to_json().at("status") == "fail");
}

TEST_CASE("status rules") {
  VerificationReport r;
  CHECK(r.status() == Status::Vacuous);
  r.checked = 3;
  CHECK(r.status() == Status::Pass);
  r.failures.push_back(Record{});
  CHECK(r.status() == Status::Fail);
}
