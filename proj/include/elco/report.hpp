#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elco/judge.hpp"

namespace elco {

struct RunOptions {
  std::string format = "text";  // text | records
  std::optional<std::string> explain;   // item id to trace in full
  std::optional<std::string> relation;  // judge only this relation
};

struct ReportLine {
  std::string item;
  int link = 0;
  std::string relation;
  bool felicitous = false;
  std::string reason;
  std::string lf;
  std::string route;
  std::optional<bool> gold;
  bool match = false;
  std::vector<std::string> trace;
};

struct Report {
  std::vector<ReportLine> lines;
  int matched = 0;
  int mismatched = 0;

  int exit_code() const { return mismatched == 0 ? 0 : 1; }
  double accuracy() const;
  std::string render(const RunOptions& opts) const;
};

// Loads the three input files, judges every item, and compares verdicts to
// the gold annotations.  Throws InputError (and other elco::Error subtypes)
// on malformed input; the CLI maps those to exit code 2.
Report run_corpus(const std::string& corpus_path,
                  const std::string& lexicon_path, const std::string& kb_path,
                  const RunOptions& opts = {});

}  // namespace elco
