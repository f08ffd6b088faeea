#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace elco {

// One judged connection between two clauses of an item.  `reading` narrows
// ambiguous conjunctions (and: symmetric/asymmetric; but: contrast/
// violated-expectation).  `intended` names the head predicate of the
// bracketed interpretation an elliptical form is judged under.  `gold` maps
// relation names to the transcribed felicity mark (unmarked = felicitous,
// '#' and '??' = infelicitous).
struct Link {
  int from = 0;
  int to = 0;
  std::string conj;
  std::optional<std::string> reading;
  std::optional<std::string> intended;
  std::map<std::string, bool> gold;
};

struct DiscourseItem {
  std::string id;
  std::vector<std::string> clauses;  // bracketed tree texts
  std::vector<Link> links;
};

// Corpus file: UTF-8, one JSON record per line with fields
//   {"id": ..., "clauses": [...], "links": [{"from", "to", "conj",
//    "reading"?, "intended"?, "gold": {...}}]}
// Gold marks are "ok", "#" or "??".  Throws InputError on malformed input.
std::vector<DiscourseItem> load_corpus(const std::string& path);
std::vector<DiscourseItem> parse_corpus(const std::string& contents);

}  // namespace elco
