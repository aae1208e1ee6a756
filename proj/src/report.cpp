#include "seqeffect/report.hpp"

#include <sstream>

#include "seqeffect/error.hpp"

namespace seqeffect {

namespace {

Json record_to_json(const Record& r) {
  return Json{{"sample", r.sample}, {"clause", r.clause}, {"residual", r.residual}, {"inputs", r.inputs},
              {"detail", r.detail}};
}

Record record_from_json(const Json& j) {
  return Record{j.at("sample").get<std::size_t>(), j.at("clause").get<std::string>(), j.at("residual").get<double>(),
                j.value("inputs", Json::object()), j.value("detail", Json::object())};
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Vacuous: return "vacuous";
  }
  return "unknown";
}

Status VerificationReport::status() const {
  if (!failures.empty()) return Status::Fail;
  if (checked == 0) return Status::Vacuous;
  return Status::Pass;
}

Json VerificationReport::to_json() const {
  Json clause_json = Json::object();
  for (const auto& [name, s] : clauses) {
    clause_json[name] = Json{{"checked", s.checked},       {"failed", s.failed},       {"positives", s.positives},
                             {"indeterminate", s.indeterminate}, {"searched", s.searched}, {"witnessed", s.witnessed}};
  }
  Json failure_json = Json::array();
  for (const auto& f : failures) failure_json.push_back(record_to_json(f));
  Json witness_json = Json::array();
  for (const auto& w : witnesses) witness_json.push_back(record_to_json(w));
  return Json{{"suite", suite},
              {"config", config},
              {"checked", checked},
              {"indeterminate", indeterminate},
              {"positives", positives},
              {"clauses", std::move(clause_json)},
              {"failures", std::move(failure_json)},
              {"witnesses", std::move(witness_json)},
              {"status", to_string(status())}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " dim=" << config.value("dim", 0) << " status=" << to_string(status())
     << " checked=" << checked << " indeterminate=" << indeterminate << " positives=" << positives
     << " failures=" << failures.size() << " witnesses=" << witnesses.size() << '\n';
  for (const auto& [name, s] : clauses) {
    os << "  clause " << name << " status=" << (s.failed > 0 ? "fail" : "pass") << " checked=" << s.checked
       << " failed=" << s.failed << " positives=" << s.positives << " indeterminate=" << s.indeterminate;
    if (s.searched > 0) os << " searched=" << s.searched << " witnessed=" << s.witnessed;
    os << '\n';
  }
  for (const auto& f : failures) {
    os << "  failure sample=" << f.sample << " clause=" << f.clause << " residual=" << f.residual;
    if (!f.detail.empty()) os << " detail=" << f.detail.dump();
    os << '\n';
  }
  return os.str();
}

VerificationReport VerificationReport::from_json(const Json& j) {
  try {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.config = j.at("config");
    r.checked = j.at("checked").get<std::size_t>();
    r.indeterminate = j.at("indeterminate").get<std::size_t>();
    r.positives = j.value("positives", std::size_t{0});
    const Json clauses = j.value("clauses", Json::object());
    for (const auto& [name, c] : clauses.items()) {
      r.clauses[name] = ClauseStats{c.at("checked"), c.at("failed"), c.at("positives"),
                                    c.at("indeterminate"), c.at("searched"), c.at("witnessed")};
    }
    for (const auto& f : j.at("failures")) r.failures.push_back(record_from_json(f));
    const Json witnesses = j.value("witnesses", Json::array());
    for (const auto& w : witnesses) r.witnesses.push_back(record_from_json(w));
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace seqeffect
