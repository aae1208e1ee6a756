#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "seqeffect/generators.hpp"
#include "seqeffect/products.hpp"
#include "seqeffect/report.hpp"

namespace seqeffect {

/// Defaults for the bounded counterexample searches.
inline constexpr std::size_t kSearchCandidates = 500;
/// thm_2_3 clause (6) checks B <= A^(2^k) for k = 0..kPowerSquarings.
inline constexpr std::size_t kPowerSquarings = 64;

// Axioms of a sequential product. One clause per axiom, plus
// SEA2.right_unit (a∘1 = a), which every sequential product on E(H)
// satisfies and which isolates |f_A|^2 != id.
VerificationReport check_sea_axioms(const SeqProduct& p, const SampleConfig& cfg);

// (tA)∘B = A∘(tB) = t(A∘B)
VerificationReport check_scalar_homogeneity(const SeqProduct& p, const SampleConfig& cfg);

// Characterizations that hold for every sequential product on E(H).
VerificationReport check_thm_2_1(const SeqProduct& p, const SampleConfig& cfg);
VerificationReport check_thm_2_2(const SeqProduct& p, const SampleConfig& cfg);
VerificationReport check_thm_2_3(const SeqProduct& p, const SampleConfig& cfg);
VerificationReport check_thm_2_4(const SeqProduct& p, const SampleConfig& cfg);
VerificationReport check_thm_2_5(const SeqProduct& p, const SampleConfig& cfg);
VerificationReport check_thm_2_6(const SeqProduct& p, const SampleConfig& cfg);
VerificationReport check_lemma_suite(const SeqProduct& p, const SampleConfig& cfg);

// Properties of products built from a family A -> f_A; these use p.family().
VerificationReport check_condition(const SeqProduct& p, const SampleConfig& cfg);
VerificationReport check_thm_4_1(const SeqProduct& p, const SampleConfig& cfg);
VerificationReport check_thm_4_2(const SeqProduct& p, const SampleConfig& cfg);
VerificationReport check_thm_4_3(const SeqProduct& p, const SampleConfig& cfg);
VerificationReport check_thm_4_4(const SeqProduct& p, const SampleConfig& cfg);

struct SuiteInfo {
  std::string_view id;
  std::string_view reference;
  std::string_view summary;
  VerificationReport (*run)(const SeqProduct&, const SampleConfig&);
};

/// All suites in a fixed order.
std::span<const SuiteInfo> suite_registry();
const SuiteInfo* find_suite(std::string_view id);

/// Runs one suite and embeds the configuration needed to rerun it.
VerificationReport run_suite(std::string_view id, const SeqProduct& p, const SampleConfig& cfg);

/// Rebuilds product and config from a report's "config" object and reruns.
VerificationReport run_from_config(const Json& config);

Json config_to_json(std::string_view suite, const SeqProduct& p, const SampleConfig& cfg);

/// Re-evaluates a recorded failure from its serialized inputs. Returns
/// whether it still fails, or std::nullopt for clauses that cannot be
/// replayed from inputs alone.
std::optional<bool> replay_failure(const SeqProduct& p, const Record& failure, const Tolerance& tol);

}  // namespace seqeffect
