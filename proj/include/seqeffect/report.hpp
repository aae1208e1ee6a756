#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "seqeffect/io.hpp"

namespace seqeffect {

enum class Status { Pass, Fail, Vacuous };

const char* to_string(Status s);

/// Per-clause counters. `searched`/`witnessed` track bounded searches for
/// counterexamples in the negative direction of a characterization.
struct ClauseStats {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t positives = 0;
  std::size_t indeterminate = 0;
  std::size_t searched = 0;
  std::size_t witnessed = 0;
};

/// A failed check or a found witness. `inputs` maps names to serialized
/// effects (or vectors) sufficient to re-evaluate the clause.
struct Record {
  std::size_t sample = 0;
  std::string clause;
  double residual = 0.0;
  Json inputs = Json::object();
  Json detail = Json::object();
};

struct VerificationReport {
  std::string suite;
  Json config = Json::object();
  std::size_t checked = 0;
  std::size_t indeterminate = 0;
  std::size_t positives = 0;
  std::map<std::string, ClauseStats> clauses;
  std::vector<Record> failures;
  std::vector<Record> witnesses;

  /// Fail iff failures is nonempty; otherwise vacuous iff nothing was checked.
  Status status() const;
  Json to_json() const;
  std::string to_text() const;

  /// Inverse of to_json; ParseError on malformed documents.
  static VerificationReport from_json(const Json& j);
};

}  // namespace seqeffect
