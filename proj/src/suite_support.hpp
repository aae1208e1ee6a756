#pragma once

#include <array>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "seqeffect/suites.hpp"

namespace seqeffect::detail {

/// Outcome of a tolerance-based predicate. Values that land between the
/// acceptance threshold and kBand times it are Indeterminate and are
/// excluded from clause-agreement checks.
enum class Truth { False, True, Indeterminate };

inline constexpr double kBand = 10.0;

const char* to_string(Truth t);
Truth from_bool(bool b);
Truth both(Truth a, Truth b);
Truth negate(Truth t);

/// ||a - b||_F / max(1, ||b||_F) against eq_tol.
Truth equal_truth(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol);
Truth equal_truth(const Effect& a, const Effect& b, const Tolerance& tol);
/// ||m||_F against eq_tol.
Truth zero_truth(const ComplexMatrix& m, const Tolerance& tol);
Truth scalar_equal_truth(double a, double b, const Tolerance& tol);
/// min eigenvalue >= -psd_tol * s is True, < -kBand * psd_tol * s is False,
/// with s = max(1, ||m||_F).
Truth psd_truth(const ComplexMatrix& m, const Tolerance& tol);
/// a <= b
Truth leq_truth(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol);
Truth leq_truth(const Effect& a, const Effect& b, const Tolerance& tol);

Json vector_to_json(std::span<const Complex> x);
ComplexVector vector_from_json(const Json& j);

using NamedEffects = std::initializer_list<std::pair<const char*, const Effect*>>;
Json named(NamedEffects effects);

using InputsFn = std::function<Json()>;

/// Result of evaluating one clause on concrete inputs.
struct Outcome {
  Truth truth = Truth::True;
  double residual = 0.0;
  /// The sample exercised the clause's antecedent (or the shared truth
  /// value of an equivalence was True).
  bool positive = false;
  Json detail = Json::object();
};

using ClauseEval = Outcome (*)(const SeqProduct&, std::span<const Effect>, const Tolerance&);

/// A named clause with its input names, evaluable from serialized inputs.
struct ClauseCheck {
  std::string_view clause;
  std::array<std::string_view, 3> inputs;
  std::size_t arity;
  ClauseEval eval;
};

const ClauseCheck* find_clause_check(std::string_view clause);

class SuiteRun;

/// Bookkeeping for one sample of a suite.
class Sample {
 public:
  Sample(SuiteRun& run, std::size_t index, SampleRng rng);

  std::size_t index() const noexcept { return index_; }
  SampleRng& rng() noexcept { return rng_; }
  const SampleConfig& cfg() const noexcept;
  const Tolerance& tol() const noexcept;
  const SeqProduct& product() const noexcept;

  void mark_positive() noexcept { positive_ = true; }

  /// A clause expected to be True.
  void expect(std::string_view clause, Truth t, double residual, const InputsFn& inputs, Json detail = Json::object());

  /// Equivalent conditions: all determinate truth values must coincide.
  /// Returns the common value, or std::nullopt if indeterminate or split.
  std::optional<bool> agree(std::string_view clause, std::initializer_list<std::pair<const char*, Truth>> truths,
                            const InputsFn& inputs);

  /// Bounded search outcome. `witness` is recorded when present.
  void search(std::string_view clause, std::optional<Record> witness);

  void fail(std::string_view clause, double residual, Json inputs, Json detail);

  /// Evaluates a registered clause and records it; inputs are serialized
  /// under the clause's input names on failure.
  Outcome check(std::string_view clause, std::initializer_list<Effect> inputs);

 private:
  friend class SuiteRun;

  SuiteRun& run_;
  std::size_t index_;
  SampleRng rng_;
  bool determinate_ = false;
  bool indeterminate_ = false;
  bool positive_ = false;
};

class SuiteRun {
 public:
  SuiteRun(std::string_view suite, const SeqProduct& product, const SampleConfig& cfg);

  const SampleConfig& cfg() const noexcept { return cfg_; }
  const SeqProduct& product() const noexcept { return product_; }

  /// Runs body(sample) for every sample index. Library errors raised by a
  /// sample are recorded as an "evaluation_error" failure.
  void each_sample(const std::function<void(Sample&)>& body);

  /// Adds a "non_vacuity" failure when fewer than min_positives samples
  /// were marked positive.
  VerificationReport finish(std::size_t min_positives) &&;

 private:
  friend class Sample;

  ClauseStats& stats(std::string_view clause) { return report_.clauses[std::string(clause)]; }

  const SeqProduct& product_;
  SampleConfig cfg_;
  VerificationReport report_;
};

/// Default positive-sample floor: a quarter of the samples.
inline std::size_t quarter(const SampleConfig& cfg) { return cfg.samples / 4; }

}  // namespace seqeffect::detail
