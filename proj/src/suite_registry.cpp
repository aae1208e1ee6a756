#include <array>
#include <string>
#include <vector>

#include "seqeffect/error.hpp"
#include "suite_support.hpp"

namespace seqeffect {

namespace {

constexpr std::array<SuiteInfo, 14> kSuites{{
    {"sea", "SEA1-SEA5", "sequential product axioms, plus a∘1 = a", check_sea_axioms},
    {"homogeneity", "Lemma 2.4", "(tA)∘B = A∘(tB) = t(A∘B)", check_scalar_homogeneity},
    {"lemmas", "Lemmas 2.1-2.3", "sharpness, absorption below sharp b, a∘b <= a, monotonicity", check_lemma_suite},
    {"thm_2_1", "Theorem 2.1", "E∘B = EBE for projections E", check_thm_2_1},
    {"thm_2_2", "Theorem 2.2", "AB = BA implies A∘B = B∘A = AB", check_thm_2_2},
    {"thm_2_3", "Theorem 2.3", "AB = BA = B iff B <= P_Ker(I-A) and four equivalents", check_thm_2_3},
    {"thm_2_4", "Theorem 2.4", "associativity and <(A∘B)x,x> = <Ax,x><Bx,x> iff A or B scalar", check_thm_2_4},
    {"thm_2_5", "Theorem 2.5", "E∘B <= B iff EB = BE iff E∘B = B∘E", check_thm_2_5},
    {"thm_2_6", "Theorem 2.6, Corollary 2.1", "order and cancellation for invertible A", check_thm_2_6},
    {"condition", "Theorem 3.1", "|f_A(t)| = sqrt(t) and phase compatibility on commuting pairs", check_condition},
    {"thm_4_1", "Theorem 4.1", "AB = BA iff A◇B = B◇A iff ◇ associates", check_thm_4_1},
    {"thm_4_2", "Theorem 4.2", "A◇B a projection implies AB = BA", check_thm_4_2},
    {"thm_4_3", "Theorem 4.3", "associativity and product form of A◇B iff A or B scalar", check_thm_4_3},
    {"thm_4_4", "Theorem 4.4, Corollaries 4.1-4.2", "A◇E <= E iff E conj(f_A)(A)(I-E) = 0", check_thm_4_4},
}};

}  // namespace

std::span<const SuiteInfo> suite_registry() { return kSuites; }

const SuiteInfo* find_suite(std::string_view id) {
  for (const auto& s : kSuites)
    if (s.id == id) return &s;
  return nullptr;
}

VerificationReport run_suite(std::string_view id, const SeqProduct& p, const SampleConfig& cfg) {
  const SuiteInfo* info = find_suite(id);
  if (info == nullptr) throw Error(ErrorCode::InvalidSpec, "unknown suite: " + std::string(id));
  const auto required = p.family().required_dim();
  if (required && *required != cfg.dim)
    throw Error(ErrorCode::InvalidSpec, p.label() + " requires dim " + std::to_string(*required));
  return info->run(p, cfg);
}

Json config_to_json(std::string_view suite, const SeqProduct& p, const SampleConfig& cfg) {
  return Json{{"suite", suite},
              {"dim", cfg.dim},
              {"samples", cfg.samples},
              {"seed", cfg.seed},
              {"tol", {{"eq_tol", cfg.tol.eq_tol}, {"psd_tol", cfg.tol.psd_tol}, {"cluster_gap", cfg.tol.cluster_gap}}},
              {"product", p.spec()}};
}

VerificationReport run_from_config(const Json& config) {
  try {
    SampleConfig cfg;
    cfg.dim = config.at("dim").get<std::size_t>();
    cfg.samples = config.at("samples").get<std::size_t>();
    cfg.seed = config.at("seed").get<std::uint64_t>();
    if (config.contains("tol")) {
      const auto& t = config.at("tol");
      cfg.tol.eq_tol = t.value("eq_tol", cfg.tol.eq_tol);
      cfg.tol.psd_tol = t.value("psd_tol", cfg.tol.psd_tol);
      cfg.tol.cluster_gap = t.value("cluster_gap", cfg.tol.cluster_gap);
    }
    cfg.validate();
    const auto p = product_from_json(config.at("product"), cfg.tol);
    return run_suite(config.at("suite").get<std::string>(), p, cfg);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad run config: ") + e.what());
  }
}

std::optional<bool> replay_failure(const SeqProduct& p, const Record& failure, const Tolerance& tol) {
  const auto* check = detail::find_clause_check(failure.clause);
  if (check == nullptr) return std::nullopt;
  std::vector<Effect> args;
  for (std::size_t k = 0; k < check->arity; ++k) {
    const std::string name(check->inputs[k]);
    if (!failure.inputs.contains(name)) return std::nullopt;
    args.push_back(effect_from_json(failure.inputs.at(name), tol));
  }
  return check->eval(p, args, tol).truth == detail::Truth::False;
}

}  // namespace seqeffect
