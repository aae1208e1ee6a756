#include <cstring>
#include <string>

#include "doctest.h"
#include "seqeffect/seqeffect.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  seqeffect_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status strings and defaults") {
  CHECK(std::strcmp(seqeffect_status_string(SEQEFFECT_OK), "ok") == 0);
  CHECK(std::strcmp(seqeffect_status_string(SEQEFFECT_E_INVALID_SPEC), "InvalidSpec") == 0);
  CHECK(std::strcmp(seqeffect_status_string(SEQEFFECT_E_NOT_HERMITIAN), "NotHermitian") == 0);
  seqeffect_run_config cfg;
  seqeffect_default_run_config(&cfg);
  CHECK(cfg.dim == 2);
  CHECK(cfg.samples == 200);
  CHECK(cfg.tol.eq_tol == 1e-9);
  CHECK(cfg.tol.psd_tol == 1e-10);
  CHECK(cfg.tol.cluster_gap == 1e-8);
}

TEST_CASE("products") {
  seqeffect_product* p = nullptr;
  REQUIRE(seqeffect_product_create("\"standard\"", nullptr, &p) == SEQEFFECT_OK);
  char* label = nullptr;
  REQUIRE(seqeffect_product_label(p, &label) == SEQEFFECT_OK);
  CHECK_FALSE(take(label).empty());
  size_t dim = 99;
  seqeffect_product_required_dim(p, &dim);
  CHECK(dim == 0);

  char* out = nullptr;
  const char* a = R"({"dim":2,"re":[0.25,0,0,1],"im":[0,0,0,0]})";
  const char* b = R"({"dim":2,"re":[0.5,0.5,0.5,0.5],"im":[0,0,0,0]})";
  REQUIRE(seqeffect_product_apply(p, a, b, &out) == SEQEFFECT_OK);
  const auto json = take(out);
  CHECK(json.find("0.125") != std::string::npos);

  const char* bad = R"({"dim":2,"re":[1.5,0,0,0],"im":[0,0,0,0]})";
  CHECK(seqeffect_product_apply(p, bad, b, &out) == SEQEFFECT_E_SPECTRUM_OUT_OF_RANGE);
  CHECK(std::strlen(seqeffect_last_error()) > 0);
  CHECK(seqeffect_product_apply(p, "{", b, &out) == SEQEFFECT_E_PARSE);
  CHECK(seqeffect_product_apply(nullptr, a, b, &out) == SEQEFFECT_E_NULL_ARGUMENT);
  seqeffect_product_free(p);

  CHECK(seqeffect_product_create("{\"kind\":\"nope\"}", nullptr, &p) == SEQEFFECT_E_INVALID_SPEC);
  CHECK(p == nullptr);
  CHECK(seqeffect_product_create("not json", nullptr, &p) == SEQEFFECT_E_PARSE);
  seqeffect_tolerance bad_tol{1e-9, 1e-10, 1e-10};
  CHECK(seqeffect_product_create("\"standard\"", &bad_tol, &p) == SEQEFFECT_E_INVALID_SPEC);

  REQUIRE(seqeffect_product_create(R"({"kind":"dim2","seed":7,"xi":[]})", nullptr, &p) == SEQEFFECT_OK);
  seqeffect_product_required_dim(p, &dim);
  CHECK(dim == 2);
  seqeffect_product_free(p);
}

TEST_CASE("suites and reports") {
  CHECK(seqeffect_suite_count() >= 12);
  const char* id = nullptr;
  const char* ref = nullptr;
  REQUIRE(seqeffect_suite_info(0, &id, &ref, nullptr) == SEQEFFECT_OK);
  CHECK(std::strlen(id) > 0);
  CHECK(std::strlen(ref) > 0);
  CHECK(seqeffect_suite_info(1000, &id, nullptr, nullptr) == SEQEFFECT_E_INVALID_SPEC);

  seqeffect_product* p = nullptr;
  REQUIRE(seqeffect_product_create(R"({"kind":"borel","lambda":1})", nullptr, &p) == SEQEFFECT_OK);
  seqeffect_run_config cfg;
  seqeffect_default_run_config(&cfg);
  cfg.samples = 20;
  cfg.seed = 3;
  seqeffect_report* r = nullptr;
  REQUIRE(seqeffect_run_suite(p, "thm_2_5", &cfg, &r) == SEQEFFECT_OK);
  seqeffect_verdict st;
  seqeffect_report_status(r, &st);
  CHECK(st == SEQEFFECT_REPORT_PASS);
  size_t checked = 0, failures = 9;
  seqeffect_report_counts(r, &checked, nullptr, nullptr, &failures, nullptr);
  CHECK(checked > 0);
  CHECK(failures == 0);

  char* body = nullptr;
  seqeffect_report_json(r, &body);
  const auto json = take(body);
  char* cfg_json = nullptr;
  seqeffect_report_config_json(r, &cfg_json);
  seqeffect_report* again = nullptr;
  REQUIRE(seqeffect_run_from_config(take(cfg_json).c_str(), &again) == SEQEFFECT_OK);
  seqeffect_report_json(again, &body);
  CHECK(take(body) == json);

  seqeffect_report* loaded = nullptr;
  REQUIRE(seqeffect_report_load(json.c_str(), &loaded) == SEQEFFECT_OK);
  seqeffect_report_json(loaded, &body);
  CHECK(take(body) == json);
  seqeffect_report_text(loaded, &body);
  CHECK(take(body).find("pass") != std::string::npos);
  CHECK(seqeffect_report_load("{}", &loaded) == SEQEFFECT_E_PARSE);

  CHECK(seqeffect_run_suite(p, "nope", &cfg, &r) == SEQEFFECT_E_INVALID_SPEC);
  cfg.dim = 1;
  CHECK(seqeffect_run_suite(p, "sea", &cfg, &r) == SEQEFFECT_E_INVALID_SPEC);
  seqeffect_report_free(again);
  seqeffect_product_free(p);
}

TEST_CASE("failure replay") {
  seqeffect_product* p = nullptr;
  REQUIRE(seqeffect_product_create(R"({"kind":"linear"})", nullptr, &p) == SEQEFFECT_OK);
  seqeffect_run_config cfg;
  seqeffect_default_run_config(&cfg);
  cfg.samples = 10;
  seqeffect_report* r = nullptr;
  REQUIRE(seqeffect_run_suite(p, "sea", &cfg, &r) == SEQEFFECT_OK);
  seqeffect_verdict st;
  seqeffect_report_status(r, &st);
  CHECK(st == SEQEFFECT_REPORT_FAIL);
  size_t replayable = 0, reproduced = 0;
  REQUIRE(seqeffect_report_replay(r, &replayable, &reproduced) == SEQEFFECT_OK);
  CHECK(replayable > 0);
  CHECK(reproduced == replayable);
  seqeffect_report_free(r);
  seqeffect_product_free(p);
}
