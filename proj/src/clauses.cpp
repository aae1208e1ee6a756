#include <algorithm>
#include <cmath>

#include "suite_support.hpp"

namespace seqeffect::detail {

namespace {

using Args = std::span<const Effect>;

ComplexMatrix mul(const Effect& a, const Effect& b) { return a.matrix() * b.matrix(); }

Outcome expect(Truth t, double residual) { return Outcome{t, residual, true, Json::object()}; }

Outcome expect_equal(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  return expect(equal_truth(a, b, tol), relative_distance(a, b));
}

Outcome expect_leq(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  return expect(leq_truth(a, b, tol), std::max(0.0, -min_eigenvalue(hermitize(b - a), tol)));
}

// All determinate values must coincide; an indeterminate value excludes
// the sample.
Outcome agreement(std::initializer_list<std::pair<const char*, Truth>> truths) {
  Outcome o;
  for (const auto& [name, t] : truths) o.detail[name] = to_string(t);
  const Truth first = truths.begin()->second;
  for (const auto& [name, t] : truths) {
    if (t == Truth::Indeterminate) {
      o.truth = Truth::Indeterminate;
      return o;
    }
  }
  for (const auto& [name, t] : truths) {
    if (t != first) {
      o.truth = Truth::False;
      return o;
    }
  }
  o.positive = first == Truth::True;
  return o;
}

// The consequent only counts when the antecedent holds.
Outcome given(Truth antecedent, Outcome consequent) {
  if (antecedent == Truth::True) {
    consequent.positive = true;
    return consequent;
  }
  Outcome o;
  o.truth = antecedent == Truth::False ? Truth::True : Truth::Indeterminate;
  return o;
}

Truth commute_truth(const Effect& a, const Effect& b, const Tolerance& tol) {
  return equal_truth(mul(a, b), mul(b, a), tol);
}

Truth scalar_truth(const Effect& a, const Tolerance& tol) {
  const std::size_t n = a.dim();
  const double t = a.matrix().trace().real() / static_cast<double>(n);
  return equal_truth(a.matrix(), t * ComplexMatrix::identity(n), tol);
}

Truth either(Truth a, Truth b) { return negate(both(negate(a), negate(b))); }

double expectation(const Effect& a, const Effect& px) { return mul(a, px).trace().real(); }

double idempotency_residual(const Effect& m) {
  return (m.matrix() * m.matrix() - m.matrix()).frobenius_norm();
}

// sea

Outcome sea1_orthogonal(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto sum = p(x[0], x[1]).matrix() + p(x[0], x[2]).matrix();
  return expect_leq(sum, ComplexMatrix::identity(x[0].dim()), tol);
}

Outcome sea1_additive(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto bc = make_effect(x[1].matrix() + x[2].matrix(), tol);
  return expect_equal(p(x[0], bc).matrix(), p(x[0], x[1]).matrix() + p(x[0], x[2]).matrix(), tol);
}

Outcome sea2(const SeqProduct& p, Args x, const Tolerance& tol) {
  return expect_equal(p(identity_effect(x[0].dim(), tol), x[0]).matrix(), x[0].matrix(), tol);
}

Outcome sea2_right_unit(const SeqProduct& p, Args x, const Tolerance& tol) {
  return expect_equal(p(x[0], identity_effect(x[0].dim(), tol)).matrix(), x[0].matrix(), tol);
}

Outcome sea3(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto ab = p(x[0], x[1]).matrix();
  const auto ba = p(x[1], x[0]).matrix();
  return given(zero_truth(ab, tol), expect(zero_truth(ba, tol), ba.frobenius_norm()));
}

Outcome sea4_complement(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& a = x[0];
  const auto b = complement(x[1]);
  return given(equal_truth(p(a, x[1]), p(x[1], a), tol), expect_equal(p(a, b).matrix(), p(b, a).matrix(), tol));
}

Outcome sea4_associative(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b, c] = std::tie(x[0], x[1], x[2]);
  return given(equal_truth(p(a, b), p(b, a), tol),
               expect_equal(p(a, p(b, c)).matrix(), p(p(a, b), c).matrix(), tol));
}

Truth independent(const SeqProduct& p, const Effect& a, const Effect& b, const Tolerance& tol) {
  return equal_truth(p(a, b), p(b, a), tol);
}

Outcome sea5_product(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b, c] = std::tie(x[0], x[1], x[2]);
  const auto ab = p(a, b);
  return given(both(independent(p, c, a, tol), independent(p, c, b, tol)),
               expect_equal(p(c, ab).matrix(), p(ab, c).matrix(), tol));
}

Outcome sea5_sum(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b, c] = std::tie(x[0], x[1], x[2]);
  const auto id = ComplexMatrix::identity(a.dim());
  const Truth summable = psd_truth(id - a.matrix() - b.matrix(), tol);
  const Truth antecedent = both(summable, both(independent(p, c, a, tol), independent(p, c, b, tol)));
  if (antecedent != Truth::True) return given(antecedent, Outcome{});
  const auto s = make_effect(a.matrix() + b.matrix(), tol);
  return given(antecedent, expect_equal(p(c, s).matrix(), p(s, c).matrix(), tol));
}

// homogeneity; T = tI carries the scalar

Outcome homogeneity_left(const SeqProduct& p, Args x, const Tolerance& tol) {
  const double t = x[2].matrix()(0, 0).real();
  const auto ta = make_effect(t * x[0].matrix(), tol);
  return expect_equal(p(ta, x[1]).matrix(), t * p(x[0], x[1]).matrix(), tol);
}

Outcome homogeneity_right(const SeqProduct& p, Args x, const Tolerance& tol) {
  const double t = x[2].matrix()(0, 0).real();
  const auto tb = make_effect(t * x[1].matrix(), tol);
  return expect_equal(p(x[0], tb).matrix(), t * p(x[0], x[1]).matrix(), tol);
}

// lemmas

Outcome lemma_2_1(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& a = x[0];
  return agreement({{"sharp", from_bool(is_sharp(a, tol))},
                    {"idempotent", equal_truth(p(a, a), a, tol)},
                    {"complement_zero", zero_truth(p(a, complement(a)).matrix(), tol)}});
}

Outcome lemma_2_2(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b] = std::tie(x[0], x[1]);
  if (!is_sharp(b, tol)) return Outcome{Truth::Indeterminate, 0.0, false, Json{{"reason", "b not sharp"}}};
  return agreement({{"a_leq_b", leq_truth(a, b, tol)},
                    {"absorbs", both(equal_truth(p(a, b), a, tol), equal_truth(p(b, a), a, tol))}});
}

Outcome lemma_2_3_2(const SeqProduct& p, Args x, const Tolerance& tol) {
  return expect_leq(p(x[0], x[1]).matrix(), x[0].matrix(), tol);
}

Outcome lemma_2_3_3(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b, c] = std::tie(x[0], x[1], x[2]);
  return given(leq_truth(a, b, tol), expect_leq(p(c, a).matrix(), p(c, b).matrix(), tol));
}

// thm 2.x

Outcome thm_2_1(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [e, b] = std::tie(x[0], x[1]);
  return expect_equal(p(e, b).matrix(), e.matrix() * b.matrix() * e.matrix(), tol);
}

Outcome thm_2_2(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b] = std::tie(x[0], x[1]);
  const auto ab = hermitize(mul(a, b));
  const auto lhs = p(a, b).matrix();
  const auto rhs = p(b, a).matrix();
  return given(commute_truth(a, b, tol),
               expect(both(equal_truth(lhs, ab, tol), equal_truth(rhs, ab, tol)),
                      std::max(relative_distance(lhs, ab), relative_distance(rhs, ab))));
}

// B <= A^(2^k) for k = 0..kPowerSquarings. Spectral points within
// cluster_gap of 1 are taken as 1 so the limit is P_{Ker(I-A)}.
Truth below_powers(const Effect& a, const Effect& b, const Tolerance& tol) {
  const auto& clusters = a.spectrum().clusters();
  std::vector<double> v;
  v.reserve(clusters.size());
  for (const auto& c : clusters) v.push_back(std::abs(c.eigenvalue - 1.0) <= tol.cluster_gap ? 1.0 : c.eigenvalue);
  Truth acc = Truth::True;
  for (std::size_t k = 0; k <= kPowerSquarings; ++k) {
    ComplexMatrix power(a.dim());
    for (std::size_t i = 0; i < clusters.size(); ++i) power += v[i] * clusters[i].projection;
    acc = both(acc, leq_truth(b.matrix(), power, tol));
    if (acc == Truth::False) break;
    bool settled = true;
    for (auto& t : v) {
      const double sq = t * t;
      if (sq != t) settled = false;
      t = sq;
    }
    if (settled) break;
  }
  return acc;
}

Outcome thm_2_3(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b] = std::tie(x[0], x[1]);
  const auto ab = p(a, b);
  const auto ba = p(b, a);
  const auto k = ker_projection_complement(a, tol);
  return agreement({{"(1)", both(equal_truth(mul(a, b), b.matrix(), tol), equal_truth(mul(b, a), b.matrix(), tol))},
                    {"(2)", leq_truth(b, ab, tol)},
                    {"(3)", equal_truth(ab, b, tol)},
                    {"(4)", equal_truth(ba, b, tol)},
                    {"(5)", leq_truth(b, k.effect(), tol)},
                    {"(6)", below_powers(a, b, tol)}});
}

Outcome thm_2_4_associative(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b, c] = std::tie(x[0], x[1], x[2]);
  return given(either(scalar_truth(a, tol), scalar_truth(b, tol)),
               expect_equal(p(c, p(a, b)).matrix(), p(p(c, a), b).matrix(), tol));
}

// X = P_x, so <Mx, x> = tr(M X).
Outcome quadratic(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b, px] = std::tie(x[0], x[1], x[2]);
  const double lhs = expectation(p(a, b), px);
  const double rhs = expectation(a, px) * expectation(b, px);
  return given(either(scalar_truth(a, tol), scalar_truth(b, tol)),
               expect(scalar_equal_truth(lhs, rhs, tol), std::abs(lhs - rhs)));
}

Outcome thm_2_5(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [e, b] = std::tie(x[0], x[1]);
  const auto eb = p(e, b);
  return agreement({{"(1)", leq_truth(eb, b, tol)},
                    {"(2)", commute_truth(e, b, tol)},
                    {"(3)", equal_truth(eb, p(b, e), tol)}});
}

Outcome thm_2_6_order(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b, c] = std::tie(x[0], x[1], x[2]);
  return agreement({{"(1)", leq_truth(b, c, tol)}, {"(2)", leq_truth(p(a, b), p(a, c), tol)}});
}

Outcome thm_2_6_cancellation(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b, c] = std::tie(x[0], x[1], x[2]);
  return agreement({{"(1)", equal_truth(b, c, tol)}, {"(2)", equal_truth(p(a, b), p(a, c), tol)}});
}

// family conditions

Outcome condition_i(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto r = check_condition_i(p.family(), x[0], tol);
  Outcome o = expect(from_bool(r.pass), r.residual);
  if (r.offending_eigenvalue) o.detail["offending_eigenvalue"] = *r.offending_eigenvalue;
  return o;
}

Outcome condition_ii(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto r = check_condition_ii(p.family(), x[0], x[1], tol);
  Outcome o = expect(from_bool(r.pass), r.residual);
  if (r.phase) o.detail["phase"] = {r.phase->real(), r.phase->imag()};
  return o;
}

// thm 4.x

Outcome thm_4_1_commutes(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b] = std::tie(x[0], x[1]);
  return given(commute_truth(a, b, tol), expect_equal(p(a, b).matrix(), p(b, a).matrix(), tol));
}

Outcome thm_4_1_associates(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b, c] = std::tie(x[0], x[1], x[2]);
  return given(commute_truth(a, b, tol), expect_equal(p(a, p(b, c)).matrix(), p(p(a, b), c).matrix(), tol));
}

Outcome thm_4_1_noncommuting(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b] = std::tie(x[0], x[1]);
  const auto ab = p(a, b).matrix();
  const auto ba = p(b, a).matrix();
  return given(negate(commute_truth(a, b, tol)), expect(negate(equal_truth(ab, ba, tol)), relative_distance(ab, ba)));
}

Outcome thm_4_2_contrapositive(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b] = std::tie(x[0], x[1]);
  const double r = idempotency_residual(p(a, b));
  return given(negate(commute_truth(a, b, tol)), expect(from_bool(r > tol.eq_tol), r));
}

Outcome thm_4_2_direct(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b] = std::tie(x[0], x[1]);
  const auto m = p(a, b);
  const bool projection = is_sharp(m, tol) && idempotency_residual(m) <= tol.eq_tol;
  return given(from_bool(projection), expect(commute_truth(a, b, tol), commutator(a.matrix(), b.matrix()).frobenius_norm()));
}

Outcome thm_4_3_left(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, b, c] = std::tie(x[0], x[1], x[2]);
  return given(either(scalar_truth(a, tol), scalar_truth(b, tol)),
               expect_equal(p(a, p(c, b)).matrix(), p(p(a, c), b).matrix(), tol));
}

Outcome thm_4_4(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, e] = std::tie(x[0], x[1]);
  const auto id = ComplexMatrix::identity(a.dim());
  const auto off = e.matrix() * p.family().conjugate_operator_for(a) * (id - e.matrix());
  return agreement({{"(1)", leq_truth(p(a, e), e, tol)}, {"(2)", zero_truth(off, tol)}});
}

Outcome cor_4_1(const SeqProduct&, Args x, const Tolerance& tol) {
  const auto& [a, e] = std::tie(x[0], x[1]);
  return agreement({{"(1)", leq_truth(standard_product(a, e, tol), e, tol)}, {"(2)", commute_truth(a, e, tol)}});
}

Outcome cor_4_2(const SeqProduct& p, Args x, const Tolerance& tol) {
  const auto& [a, e] = std::tie(x[0], x[1]);
  return agreement({{"(1)", leq_truth(p(a, e), e, tol)}, {"(2)", commute_truth(a, e, tol)}});
}

constexpr std::array<std::string_view, 3> kA{"A"};
constexpr std::array<std::string_view, 3> kAB{"A", "B"};
constexpr std::array<std::string_view, 3> kABC{"A", "B", "C"};
constexpr std::array<std::string_view, 3> kABT{"A", "B", "T"};
constexpr std::array<std::string_view, 3> kABX{"A", "B", "X"};
constexpr std::array<std::string_view, 3> kEB{"E", "B"};
constexpr std::array<std::string_view, 3> kAE{"A", "E"};

constexpr ClauseCheck kChecks[] = {
    {"SEA1.orthogonal", kABC, 3, sea1_orthogonal},
    {"SEA1.additive", kABC, 3, sea1_additive},
    {"SEA2", kA, 1, sea2},
    {"SEA2.right_unit", kA, 1, sea2_right_unit},
    {"SEA3", kAB, 2, sea3},
    {"SEA4.complement", kAB, 2, sea4_complement},
    {"SEA4.associative", kABC, 3, sea4_associative},
    {"SEA5.product", kABC, 3, sea5_product},
    {"SEA5.sum", kABC, 3, sea5_sum},
    {"homogeneity.left", kABT, 3, homogeneity_left},
    {"homogeneity.right", kABT, 3, homogeneity_right},
    {"lemma_2_1", kA, 1, lemma_2_1},
    {"lemma_2_2", kAB, 2, lemma_2_2},
    {"lemma_2_3.2", kAB, 2, lemma_2_3_2},
    {"lemma_2_3.3", kABC, 3, lemma_2_3_3},
    {"thm_2_1", kEB, 2, thm_2_1},
    {"thm_2_2", kAB, 2, thm_2_2},
    {"thm_2_3", kAB, 2, thm_2_3},
    {"thm_2_4.associative", kABC, 3, thm_2_4_associative},
    {"thm_2_4.quadratic", kABX, 3, quadratic},
    {"thm_2_5", kEB, 2, thm_2_5},
    {"thm_2_6.order", kABC, 3, thm_2_6_order},
    {"cor_2_1", kABC, 3, thm_2_6_cancellation},
    {"condition_i", kA, 1, condition_i},
    {"condition_ii.1a", kAB, 2, condition_ii},
    {"condition_ii.1b", kAB, 2, condition_ii},
    {"condition_ii.2a", kAB, 2, condition_ii},
    {"condition_ii.2b", kAB, 2, condition_ii},
    {"condition_ii.3", kAB, 2, condition_ii},
    {"thm_4_1.commutes", kAB, 2, thm_4_1_commutes},
    {"thm_4_1.associates", kABC, 3, thm_4_1_associates},
    {"thm_4_1.noncommuting", kAB, 2, thm_4_1_noncommuting},
    {"thm_4_2.contrapositive", kAB, 2, thm_4_2_contrapositive},
    {"thm_4_2.direct", kAB, 2, thm_4_2_direct},
    {"thm_4_3.left", kABC, 3, thm_4_3_left},
    {"thm_4_3.right", kABC, 3, thm_2_4_associative},
    {"thm_4_3.quadratic", kABX, 3, quadratic},
    {"thm_4_4", kAE, 2, thm_4_4},
    {"cor_4_1", kAE, 2, cor_4_1},
    {"cor_4_2", kAE, 2, cor_4_2},
};

}  // namespace

const ClauseCheck* find_clause_check(std::string_view clause) {
  for (const auto& c : kChecks)
    if (c.clause == clause) return &c;
  return nullptr;
}

}  // namespace seqeffect::detail
