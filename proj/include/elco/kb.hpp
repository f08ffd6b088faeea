#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace elco {

// World knowledge consulted by the discourse-inference checkers: salient
// property facts with polarity, predicate subsumption, plausible-implication
// axioms, antonym pairs, membership/subset facts and the nominalization map.
//
// File format, one record per line ('#' comments):
//   prop <q> <entity> [neg]
//   isa <p> <p'>
//   plausible <p> <p'>
//   antonym <p> <p'>
//   member <b> <a>
//   subset <b> <a>
//   nominal <noun> <verb>
class KnowledgeBase {
 public:
  static KnowledgeBase load(const std::string& path);       // throws InputError
  static KnowledgeBase parse(const std::string& contents);  // throws InputError

  // Similar: some salient q with q(a) and q(b).  Dissimilar: some q with
  // q(a) and an explicit negative fact for q(b).  Identity counts as
  // similar; everything else is closed-world over the declared facts.
  bool similar(const std::string& a, const std::string& b) const;
  bool dissimilar(const std::string& a, const std::string& b) const;

  // Least common subsumer in the isa graph within `depth` steps from each
  // side; identity when p0 == p1; nullopt when the predicates do not meet.
  std::optional<std::string> generalize(const std::string& p0,
                                        const std::string& p1,
                                        int depth = 3) const;

  bool is_member(const std::string& b, const std::string& a) const;
  bool is_subset(const std::string& b, const std::string& a) const;
  // Equal constants, or KB-declared coextension (subset both ways).
  bool same_entity(const std::string& a, const std::string& b) const;

  bool antonym(const std::string& x, const std::string& y) const;

  // Shortest chain of plausible edges from `from` to `to`, up to `max_edges`
  // long; the empty chain witnesses from == to.  Returns the node sequence
  // including both endpoints, or nullopt.
  std::optional<std::vector<std::string>> plausible_chain(
      const std::string& from, const std::string& to, int max_edges = 2) const;
  // All predicates reachable by plausible edges within `max_edges` steps,
  // including `from` itself; deterministic order.
  std::vector<std::string> plausible_reach(const std::string& from,
                                           int max_edges = 2) const;

  std::optional<std::string> nominal_verb(const std::string& noun) const;

  bool has_entity(const std::string& e) const;

 private:
  std::map<std::string, std::map<std::string, bool>> props_;  // q -> entity -> polarity
  std::map<std::string, std::set<std::string>> isa_;
  std::map<std::string, std::set<std::string>> plausible_;
  std::set<std::pair<std::string, std::string>> antonyms_;
  std::set<std::pair<std::string, std::string>> member_;
  std::set<std::pair<std::string, std::string>> subset_;
  std::map<std::string, std::string> nominal_;
  std::set<std::string> entities_;

  std::map<std::string, int> ancestors(const std::string& p, int depth) const;
};

}  // namespace elco
