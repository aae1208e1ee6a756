#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqeffect/seqeffect.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

struct ProductDeleter {
  void operator()(seqeffect_product* p) const { seqeffect_product_free(p); }
};
struct ReportDeleter {
  void operator()(seqeffect_report* r) const { seqeffect_report_free(r); }
};
using ProductPtr = std::unique_ptr<seqeffect_product, ProductDeleter>;
using ReportPtr = std::unique_ptr<seqeffect_report, ReportDeleter>;

struct InvalidSpec : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string take(char* s) {
  std::string out(s == nullptr ? "" : s);
  seqeffect_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidSpec("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string api_error(seqeffect_status s) {
  return std::string(seqeffect_status_string(s)) + " (" + seqeffect_last_error() + ")";
}

struct RunOptions {
  std::vector<std::size_t> dims{2};
  std::string product = "standard";
  std::string family_file;
  std::vector<std::string> suites{"all"};
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  double tol_eq = 0.0;
  double tol_psd = 0.0;
  double cluster_gap = 0.0;
  std::string out;
  std::string format = "json";
  bool allow_vacuous = false;
};

std::string product_spec(const RunOptions& o) {
  if (!o.family_file.empty()) return read_file(o.family_file);
  if (o.product == "standard") return "\"standard\"";
  return o.product;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& requested) {
  std::vector<std::string> known;
  for (std::size_t i = 0; i < seqeffect_suite_count(); ++i) {
    const char* id = nullptr;
    seqeffect_suite_info(i, &id, nullptr, nullptr);
    known.emplace_back(id);
  }
  std::vector<std::string> out;
  for (const auto& s : requested) {
    if (s == "all") return known;
    if (std::find(known.begin(), known.end(), s) == known.end()) throw InvalidSpec("unknown suite: " + s);
    out.push_back(s);
  }
  return out;
}

int run(const RunOptions& o) {
  seqeffect_run_config cfg;
  seqeffect_default_run_config(&cfg);
  if (o.tol_eq > 0.0) cfg.tol.eq_tol = o.tol_eq;
  if (o.tol_psd > 0.0) cfg.tol.psd_tol = o.tol_psd;
  if (o.cluster_gap > 0.0) cfg.tol.cluster_gap = o.cluster_gap;
  cfg.samples = o.samples;
  cfg.seed = o.seed;

  if (o.dims.empty()) throw InvalidSpec("at least one --dim is required");
  for (auto d : o.dims)
    if (d < 2) throw InvalidSpec("dimensions must be >= 2");
  if (o.samples < 1) throw InvalidSpec("--samples must be >= 1");
  if (o.format != "json" && o.format != "text") throw InvalidSpec("--format must be json or text");

  seqeffect_product* raw = nullptr;
  const auto spec = product_spec(o);
  if (auto s = seqeffect_product_create(spec.c_str(), &cfg.tol, &raw); s != SEQEFFECT_OK)
    throw InvalidSpec("bad product: " + api_error(s));
  ProductPtr product(raw);
  std::size_t required = 0;
  seqeffect_product_required_dim(product.get(), &required);
  if (required != 0 && (o.dims.size() != 1 || o.dims.front() != required))
    throw InvalidSpec("this product requires --dim " + std::to_string(required) + " only");

  const auto suites = expand_suites(o.suites);
  if (!o.out.empty()) std::filesystem::create_directories(o.out);

  int status = kExitPass;
  for (auto d : o.dims) {
    cfg.dim = d;
    for (const auto& suite : suites) {
      seqeffect_report* rr = nullptr;
      if (auto s = seqeffect_run_suite(product.get(), suite.c_str(), &cfg, &rr); s != SEQEFFECT_OK) {
        if (s == SEQEFFECT_E_INVALID_SPEC) throw InvalidSpec(api_error(s));
        std::cerr << "error: " << suite << " dim " << d << ": " << api_error(s) << '\n';
        status = kExitFail;
        continue;
      }
      ReportPtr report(rr);
      seqeffect_verdict rs;
      seqeffect_report_status(report.get(), &rs);
      if (rs == SEQEFFECT_REPORT_FAIL || (rs == SEQEFFECT_REPORT_VACUOUS && !o.allow_vacuous)) status = kExitFail;

      char* body = nullptr;
      if (o.format == "json")
        seqeffect_report_json(report.get(), &body);
      else
        seqeffect_report_text(report.get(), &body);
      const auto text = take(body);

      const char* label = rs == SEQEFFECT_REPORT_PASS ? "pass" : rs == SEQEFFECT_REPORT_FAIL ? "fail" : "vacuous";
      if (o.out.empty()) {
        std::cout << text;
        std::cerr << suite << " dim=" << d << ' ' << label << '\n';
      } else {
        const auto path = std::filesystem::path(o.out) /
                          (suite + "_dim" + std::to_string(d) + (o.format == "json" ? ".json" : ".txt"));
        std::ofstream(path, std::ios::binary) << text;
        std::cout << suite << " dim=" << d << ' ' << label << ' ' << path.string() << '\n';
      }
    }
  }
  return status;
}

int list() {
  std::printf("%-12s %-34s %s\n", "suite", "reference", "checks");
  for (std::size_t i = 0; i < seqeffect_suite_count(); ++i) {
    const char* id = nullptr;
    const char* ref = nullptr;
    const char* summary = nullptr;
    seqeffect_suite_info(i, &id, &ref, &summary);
    std::printf("%-12s %-34s %s\n", id, ref, summary);
  }
  return kExitPass;
}

// Reruns a report from its embedded config and re-evaluates its failures.
int replay(const std::string& path) {
  const auto original = read_file(path);
  seqeffect_report* raw = nullptr;
  if (auto s = seqeffect_report_load(original.c_str(), &raw); s != SEQEFFECT_OK)
    throw InvalidSpec("bad report: " + api_error(s));
  ReportPtr loaded(raw);

  char* cfg = nullptr;
  seqeffect_report_config_json(loaded.get(), &cfg);
  const auto config = take(cfg);
  seqeffect_report* rr = nullptr;
  if (auto s = seqeffect_run_from_config(config.c_str(), &rr); s != SEQEFFECT_OK)
    throw InvalidSpec("cannot rerun: " + api_error(s));
  ReportPtr rerun(rr);
  char* body = nullptr;
  seqeffect_report_json(rerun.get(), &body);
  const bool identical = take(body) == original;

  std::size_t replayable = 0;
  std::size_t reproduced = 0;
  if (auto s = seqeffect_report_replay(loaded.get(), &replayable, &reproduced); s != SEQEFFECT_OK)
    throw InvalidSpec("cannot replay: " + api_error(s));
  std::cout << "rerun " << (identical ? "identical" : "differs") << '\n'
            << "failures reproduced " << reproduced << '/' << replayable << '\n';
  return identical && reproduced == replayable ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify sequential products on quantum effects"};
  app.require_subcommand(1);

  RunOptions opts;
  auto* run_cmd = app.add_subcommand("run", "run verification suites");
  run_cmd->add_option("--dim", opts.dims, "Hilbert space dimension (repeatable)");
  run_cmd->add_option("--product", opts.product, "\"standard\" or a family JSON object");
  run_cmd->add_option("--family-file", opts.family_file, "JSON file with a family spec")->check(CLI::ExistingFile);
  run_cmd->add_option("--suite", opts.suites, "suite id (repeatable) or all");
  run_cmd->add_option("--samples", opts.samples, "samples per suite");
  run_cmd->add_option("--seed", opts.seed, "RNG seed");
  run_cmd->add_option("--tol-eq", opts.tol_eq, "equality tolerance");
  run_cmd->add_option("--tol-psd", opts.tol_psd, "positivity tolerance");
  run_cmd->add_option("--cluster-gap", opts.cluster_gap, "eigenvalue clustering gap");
  run_cmd->add_option("--out", opts.out, "directory for report files (stdout if omitted)");
  run_cmd->add_option("--format", opts.format, "json or text");
  run_cmd->add_flag("--allow-vacuous", opts.allow_vacuous, "treat vacuous reports as passing");

  auto* list_cmd = app.add_subcommand("list", "list suites");

  std::string report_path;
  auto* replay_cmd = app.add_subcommand("replay", "rerun a report and re-check its failures");
  replay_cmd->add_option("report", report_path, "report JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  try {
    if (*run_cmd) return run(opts);
    if (*list_cmd) return list();
    if (*replay_cmd) return replay(report_path);
  } catch (const InvalidSpec& e) {
    std::cerr << "invalid spec: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitInvalid;
}
