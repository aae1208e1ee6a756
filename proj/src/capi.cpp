#include "seqeffect/seqeffect.h"

#include <cstring>
#include <exception>
#include <string>

#include "seqeffect/error.hpp"
#include "seqeffect/suites.hpp"

struct seqeffect_product {
  seqeffect::SeqProduct product;
  seqeffect::Tolerance tol;
};

struct seqeffect_report {
  seqeffect::VerificationReport report;
};

namespace {

thread_local std::string g_last_error;

seqeffect_status map_code(seqeffect::ErrorCode c) {
  return static_cast<seqeffect_status>(static_cast<int>(c) + 1);
}

template <class F>
seqeffect_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SEQEFFECT_OK;
  } catch (const seqeffect::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const seqeffect::Json::exception& e) {
    g_last_error = e.what();
    return SEQEFFECT_E_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SEQEFFECT_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return SEQEFFECT_E_INTERNAL;
  }
}

seqeffect_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return SEQEFFECT_E_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

seqeffect::Tolerance to_tolerance(const seqeffect_tolerance& t) {
  seqeffect::Tolerance tol;
  tol.eq_tol = t.eq_tol;
  tol.psd_tol = t.psd_tol;
  tol.cluster_gap = t.cluster_gap;
  tol.validate();
  return tol;
}

}  // namespace

extern "C" {

const char* seqeffect_status_string(seqeffect_status status) {
  switch (status) {
    case SEQEFFECT_OK: return "ok";
    case SEQEFFECT_E_NULL_ARGUMENT: return "NullArgument";
    case SEQEFFECT_E_INTERNAL: return "Internal";
    default: break;
  }
  if (status > SEQEFFECT_OK && status <= SEQEFFECT_E_PARSE)
    return seqeffect::to_string(static_cast<seqeffect::ErrorCode>(static_cast<int>(status) - 1));
  return "unknown";
}

const char* seqeffect_last_error(void) { return g_last_error.c_str(); }

void seqeffect_default_tolerance(seqeffect_tolerance* out) {
  if (out == nullptr) return;
  const seqeffect::Tolerance tol;
  *out = seqeffect_tolerance{tol.eq_tol, tol.psd_tol, tol.cluster_gap};
}

void seqeffect_default_run_config(seqeffect_run_config* out) {
  if (out == nullptr) return;
  const seqeffect::SampleConfig cfg;
  out->dim = cfg.dim;
  out->samples = cfg.samples;
  out->seed = cfg.seed;
  seqeffect_default_tolerance(&out->tol);
}

void seqeffect_string_free(char* s) { delete[] s; }

seqeffect_status seqeffect_product_create(const char* spec_json, const seqeffect_tolerance* tol,
                                          seqeffect_product** out) {
  if (spec_json == nullptr) return null_argument("spec_json");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    seqeffect::Tolerance t;
    if (tol != nullptr) t = to_tolerance(*tol);
    seqeffect::Json spec;
    try {
      spec = seqeffect::Json::parse(spec_json);
    } catch (const seqeffect::Json::exception& e) {
      throw seqeffect::Error(seqeffect::ErrorCode::ParseError, e.what());
    }
    *out = new seqeffect_product{seqeffect::product_from_json(spec, t), t};
  });
}

void seqeffect_product_free(seqeffect_product* p) { delete p; }

seqeffect_status seqeffect_product_label(const seqeffect_product* p, char** out) {
  if (p == nullptr) return null_argument("product");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = dup_string(p->product.label()); });
}

seqeffect_status seqeffect_product_required_dim(const seqeffect_product* p, size_t* out) {
  if (p == nullptr) return null_argument("product");
  if (out == nullptr) return null_argument("out");
  *out = p->product.family().required_dim().value_or(0);
  return SEQEFFECT_OK;
}

seqeffect_status seqeffect_product_apply(const seqeffect_product* p, const char* a_json, const char* b_json,
                                         char** out_json) {
  if (p == nullptr) return null_argument("product");
  if (a_json == nullptr || b_json == nullptr) return null_argument("operand");
  if (out_json == nullptr) return null_argument("out_json");
  return guarded([&] {
    const auto a = seqeffect::effect_from_json(seqeffect::Json::parse(a_json), p->tol);
    const auto b = seqeffect::effect_from_json(seqeffect::Json::parse(b_json), p->tol);
    *out_json = dup_string(seqeffect::effect_to_json(p->product(a, b)).dump());
  });
}

size_t seqeffect_suite_count(void) { return seqeffect::suite_registry().size(); }

seqeffect_status seqeffect_suite_info(size_t index, const char** id, const char** reference, const char** summary) {
  const auto suites = seqeffect::suite_registry();
  if (index >= suites.size()) {
    g_last_error = "suite index out of range";
    return SEQEFFECT_E_INVALID_SPEC;
  }
  // registry strings are literals, so data() is null-terminated
  if (id != nullptr) *id = suites[index].id.data();
  if (reference != nullptr) *reference = suites[index].reference.data();
  if (summary != nullptr) *summary = suites[index].summary.data();
  return SEQEFFECT_OK;
}

seqeffect_status seqeffect_run_suite(const seqeffect_product* p, const char* suite_id, const seqeffect_run_config* cfg,
                                     seqeffect_report** out) {
  if (p == nullptr) return null_argument("product");
  if (suite_id == nullptr) return null_argument("suite_id");
  if (cfg == nullptr) return null_argument("cfg");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    seqeffect::SampleConfig c;
    c.dim = cfg->dim;
    c.samples = cfg->samples;
    c.seed = cfg->seed;
    c.tol = to_tolerance(cfg->tol);
    c.validate();
    *out = new seqeffect_report{seqeffect::run_suite(suite_id, p->product, c)};
  });
}

seqeffect_status seqeffect_run_from_config(const char* config_json, seqeffect_report** out) {
  if (config_json == nullptr) return null_argument("config_json");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new seqeffect_report{seqeffect::run_from_config(seqeffect::Json::parse(config_json))};
  });
}

seqeffect_status seqeffect_report_load(const char* report_json, seqeffect_report** out) {
  if (report_json == nullptr) return null_argument("report_json");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new seqeffect_report{seqeffect::VerificationReport::from_json(seqeffect::Json::parse(report_json))};
  });
}

void seqeffect_report_free(seqeffect_report* r) { delete r; }

seqeffect_status seqeffect_report_status(const seqeffect_report* r, seqeffect_verdict* out) {
  if (r == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  switch (r->report.status()) {
    case seqeffect::Status::Pass: *out = SEQEFFECT_REPORT_PASS; break;
    case seqeffect::Status::Fail: *out = SEQEFFECT_REPORT_FAIL; break;
    case seqeffect::Status::Vacuous: *out = SEQEFFECT_REPORT_VACUOUS; break;
  }
  return SEQEFFECT_OK;
}

seqeffect_status seqeffect_report_counts(const seqeffect_report* r, size_t* checked, size_t* indeterminate,
                                         size_t* positives, size_t* failures, size_t* witnesses) {
  if (r == nullptr) return null_argument("report");
  const auto& rep = r->report;
  if (checked != nullptr) *checked = rep.checked;
  if (indeterminate != nullptr) *indeterminate = rep.indeterminate;
  if (positives != nullptr) *positives = rep.positives;
  if (failures != nullptr) *failures = rep.failures.size();
  if (witnesses != nullptr) *witnesses = rep.witnesses.size();
  return SEQEFFECT_OK;
}

seqeffect_status seqeffect_report_json(const seqeffect_report* r, char** out) {
  if (r == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = dup_string(r->report.to_json().dump(2) + "\n"); });
}

seqeffect_status seqeffect_report_text(const seqeffect_report* r, char** out) {
  if (r == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = dup_string(r->report.to_text()); });
}

seqeffect_status seqeffect_report_config_json(const seqeffect_report* r, char** out) {
  if (r == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = dup_string(r->report.config.dump()); });
}

seqeffect_status seqeffect_report_replay(const seqeffect_report* r, size_t* replayable, size_t* reproduced) {
  if (r == nullptr) return null_argument("report");
  if (replayable == nullptr || reproduced == nullptr) return null_argument("out");
  return guarded([&] {
    const auto& config = r->report.config;
    seqeffect::Tolerance tol;
    if (config.contains("tol")) {
      const auto& t = config.at("tol");
      tol.eq_tol = t.value("eq_tol", tol.eq_tol);
      tol.psd_tol = t.value("psd_tol", tol.psd_tol);
      tol.cluster_gap = t.value("cluster_gap", tol.cluster_gap);
    }
    const auto product = seqeffect::product_from_json(config.at("product"), tol);
    std::size_t n = 0;
    std::size_t k = 0;
    for (const auto& f : r->report.failures) {
      const auto again = seqeffect::replay_failure(product, f, tol);
      if (!again) continue;
      ++n;
      if (*again) ++k;
    }
    *replayable = n;
    *reproduced = k;
  });
}

}  // extern "C"
