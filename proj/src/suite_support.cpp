#include "suite_support.hpp"

#include <algorithm>
#include <cmath>

#include "seqeffect/error.hpp"

namespace seqeffect::detail {

const char* to_string(Truth t) {
  switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    case Truth::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

Truth from_bool(bool b) { return b ? Truth::True : Truth::False; }

Truth both(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::Indeterminate || b == Truth::Indeterminate) return Truth::Indeterminate;
  return Truth::True;
}

Truth negate(Truth t) {
  if (t == Truth::True) return Truth::False;
  if (t == Truth::False) return Truth::True;
  return t;
}

namespace {

Truth banded(double value, double threshold) {
  if (value <= threshold) return Truth::True;
  if (value > kBand * threshold) return Truth::False;
  return Truth::Indeterminate;
}

}  // namespace

Truth equal_truth(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  return banded(relative_distance(a, b), tol.eq_tol);
}

Truth equal_truth(const Effect& a, const Effect& b, const Tolerance& tol) {
  return equal_truth(a.matrix(), b.matrix(), tol);
}

Truth zero_truth(const ComplexMatrix& m, const Tolerance& tol) { return banded(m.frobenius_norm(), tol.eq_tol); }

Truth scalar_equal_truth(double a, double b, const Tolerance& tol) {
  return banded(std::abs(a - b), tol.eq_tol * std::max(1.0, std::abs(b)));
}

Truth psd_truth(const ComplexMatrix& m, const Tolerance& tol) {
  const double slack = tol.psd_tol * std::max(1.0, m.frobenius_norm());
  return banded(-min_eigenvalue(hermitize(m), tol), slack);
}

Truth leq_truth(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) { return psd_truth(b - a, tol); }

Truth leq_truth(const Effect& a, const Effect& b, const Tolerance& tol) {
  return leq_truth(a.matrix(), b.matrix(), tol);
}

Json vector_to_json(std::span<const Complex> x) {
  Json re = Json::array();
  Json im = Json::array();
  for (const auto& z : x) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexVector vector_from_json(const Json& j) {
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size()) throw Error(ErrorCode::ParseError, "vector re/im length mismatch");
  ComplexVector x(re.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = Complex(re[i], im[i]);
  return x;
}

Json named(NamedEffects effects) {
  Json j = Json::object();
  for (const auto& [name, effect] : effects) j[name] = effect_to_json(*effect);
  return j;
}

Sample::Sample(SuiteRun& run, std::size_t index, SampleRng rng) : run_(run), index_(index), rng_(std::move(rng)) {}

const SampleConfig& Sample::cfg() const noexcept { return run_.cfg_; }
const Tolerance& Sample::tol() const noexcept { return run_.cfg_.tol; }
const SeqProduct& Sample::product() const noexcept { return run_.product_; }

void Sample::fail(std::string_view clause, double residual, Json inputs, Json detail) {
  auto& s = run_.stats(clause);
  ++s.checked;
  ++s.failed;
  determinate_ = true;
  run_.report_.failures.push_back(Record{index_, std::string(clause), residual, std::move(inputs), std::move(detail)});
}

void Sample::expect(std::string_view clause, Truth t, double residual, const InputsFn& inputs, Json detail) {
  auto& s = run_.stats(clause);
  if (t == Truth::Indeterminate) {
    ++s.indeterminate;
    indeterminate_ = true;
    return;
  }
  if (t == Truth::False) {
    fail(clause, residual, inputs(), std::move(detail));
    return;
  }
  ++s.checked;
  determinate_ = true;
}

std::optional<bool> Sample::agree(std::string_view clause, std::initializer_list<std::pair<const char*, Truth>> truths,
                                  const InputsFn& inputs) {
  auto& s = run_.stats(clause);
  const bool any_indeterminate =
      std::any_of(truths.begin(), truths.end(), [](const auto& t) { return t.second == Truth::Indeterminate; });
  if (any_indeterminate) {
    ++s.indeterminate;
    indeterminate_ = true;
    return std::nullopt;
  }
  const Truth first = truths.begin()->second;
  const bool agreeing =
      std::all_of(truths.begin(), truths.end(), [first](const auto& t) { return t.second == first; });
  if (!agreeing) {
    Json detail = Json::object();
    for (const auto& [name, t] : truths) detail[name] = to_string(t);
    fail(clause, 0.0, inputs(), std::move(detail));
    return std::nullopt;
  }
  ++s.checked;
  if (first == Truth::True) ++s.positives;
  determinate_ = true;
  return first == Truth::True;
}

Outcome Sample::check(std::string_view clause, std::initializer_list<Effect> inputs) {
  const ClauseCheck* c = find_clause_check(clause);
  if (c == nullptr || c->arity != inputs.size())
    throw Error(ErrorCode::InvalidSpec, "unknown clause " + std::string(clause));
  const std::vector<Effect> args(inputs);
  Outcome o = c->eval(product(), args, tol());
  auto& s = run_.stats(clause);
  switch (o.truth) {
    case Truth::Indeterminate:
      ++s.indeterminate;
      indeterminate_ = true;
      break;
    case Truth::False: {
      Json j = Json::object();
      for (std::size_t k = 0; k < args.size(); ++k) j[std::string(c->inputs[k])] = effect_to_json(args[k]);
      fail(clause, o.residual, std::move(j), o.detail);
      break;
    }
    case Truth::True:
      ++s.checked;
      if (o.positive) ++s.positives;
      determinate_ = true;
      break;
  }
  return o;
}

void Sample::search(std::string_view clause, std::optional<Record> witness) {
  auto& s = run_.stats(clause);
  ++s.searched;
  determinate_ = true;
  if (witness) {
    ++s.witnessed;
    witness->sample = index_;
    witness->clause = std::string(clause);
    run_.report_.witnesses.push_back(std::move(*witness));
  }
}

SuiteRun::SuiteRun(std::string_view suite, const SeqProduct& product, const SampleConfig& cfg)
    : product_(product), cfg_(cfg) {
  cfg_.validate();
  report_.suite = std::string(suite);
  report_.config = config_to_json(suite, product, cfg_);
}

void SuiteRun::each_sample(const std::function<void(Sample&)>& body) {
  for (std::size_t i = 0; i < cfg_.samples; ++i) {
    Sample sample(*this, i, sample_rng(cfg_.seed, report_.suite, i));
    try {
      body(sample);
    } catch (const Error& e) {
      sample.fail("evaluation_error", 0.0, Json::object(), Json{{"message", e.what()}});
    }
    if (sample.determinate_) ++report_.checked;
    if (sample.indeterminate_) ++report_.indeterminate;
    if (sample.positive_) ++report_.positives;
  }
}

VerificationReport SuiteRun::finish(std::size_t min_positives) && {
  if (report_.positives < min_positives) {
    report_.failures.push_back(Record{cfg_.samples, "non_vacuity", 0.0, Json::object(),
                                      Json{{"positives", report_.positives}, {"required", min_positives}}});
  }
  return std::move(report_);
}

}  // namespace seqeffect::detail
