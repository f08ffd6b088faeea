#pragma once

// Shared fixtures for the test suites: data-file paths, random well-typed
// term generation, and small clause generators for route-equivalence and
// gate checks.

#include <random>
#include <string>
#include <vector>

#include "elco/derive.hpp"
#include "elco/kb.hpp"
#include "elco/lexicon.hpp"
#include "elco/term.hpp"

namespace testsup {

inline std::string data_path(const std::string& name) {
  return std::string(ELCO_DATA_DIR) + "/" + name;
}

inline const elco::Lexicon& lexicon() {
  static const elco::Lexicon lex = elco::Lexicon::load(data_path("lexicon.tsv"));
  return lex;
}

inline const elco::KnowledgeBase& kb() {
  static const elco::KnowledgeBase k =
      elco::KnowledgeBase::load(data_path("kb.txt"));
  return k;
}

// ---- random simply-typed terms ----

using Rng = std::mt19937;

inline elco::SemType random_type(Rng& rng, int depth = 2) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 3 : 2);
  switch (pick(rng)) {
    case 0: return elco::SemType::entity();
    case 1: return elco::SemType::truth();
    case 2: return elco::SemType::event();
    default:
      return elco::SemType::arrow(random_type(rng, depth - 1),
                                  random_type(rng, depth - 1));
  }
}

// Closed well-typed term of the requested type.  Constants are drawn from a
// small per-type pool; abstraction and application keep the term finite via
// the size budget.
inline elco::Term random_term(Rng& rng, const elco::SemType& type,
                              std::vector<elco::Term> scope, int budget,
                              int* next_var) {
  using elco::SemType;
  using elco::Term;

  auto constant = [&]() -> Term {
    std::uniform_int_distribution<int> pick(0, 2);
    std::string tag;
    SemType t = type;
    while (t.is_arrow()) {
      tag += "f";
      t = t.to();
    }
    switch (t.base_kind()) {
      case SemType::Base::Entity: tag += "e"; break;
      case SemType::Base::Truth: tag += "t"; break;
      case SemType::Base::Event: tag += "v"; break;
    }
    return elco::mk_const("c" + tag + std::to_string(pick(rng)), type);
  };

  std::vector<Term> usable;
  for (const Term& v : scope)
    if (v->type == type) usable.push_back(v);

  std::uniform_int_distribution<int> coin(0, 99);
  int roll = coin(rng);

  if (budget > 0 && type.is_arrow() && roll < 45) {
    Term v = elco::mk_var("v" + std::to_string(++*next_var), type.from());
    scope.push_back(v);
    Term body = random_term(rng, type.to(), scope, budget - 1, next_var);
    return elco::mk_abs(v, body);
  }
  if (budget > 0 && roll >= 45 && roll < 70) {
    SemType arg_ty = random_type(rng, 1);
    Term fn = random_term(rng, elco::SemType::arrow(arg_ty, type), scope,
                          budget - 1, next_var);
    Term arg = random_term(rng, arg_ty, scope, budget - 1, next_var);
    return elco::mk_app(fn, arg);
  }
  if (!usable.empty() && roll % 2 == 0) {
    std::uniform_int_distribution<std::size_t> pick(0, usable.size() - 1);
    return usable[pick(rng)];
  }
  return constant();
}

inline elco::Term random_closed_term(Rng& rng, int budget = 4) {
  int next_var = 100;
  return random_term(rng, random_type(rng), {}, budget, &next_var);
}

// Closed subterms of a term, used as abstraction pivots.
inline void closed_subterms(const elco::Term& t, std::vector<elco::Term>& out) {
  if (elco::is_closed(t)) out.push_back(t);
  switch (t->kind) {
    case elco::TermNode::Kind::App:
      closed_subterms(t->fn, out);
      closed_subterms(t->arg, out);
      break;
    case elco::TermNode::Kind::Abs:
      closed_subterms(t->body, out);
      break;
    default:
      break;
  }
}

// ---- small clause generators over the shipped lexicon ----

struct VpeItem {
  std::string source;  // full clause
  std::string target;  // elided clause
};

// Source/target pairs where the syntactic route is applicable: matching
// voice, overt antecedent VP.
inline std::vector<VpeItem> generated_vpe_items(int n) {
  static const char* subjects[] = {"Bill", "Hillary", "John",  "Mary",
                                   "Fred", "George",  "Clinton", "Bush"};
  static const char* transitive[] = {"supports", "dislikes", "provoked"};
  static const char* adjectives[] = {"upset", "angry", "honest", "dishonest"};
  static const char* ppart[] = {"introduced", "invited"};
  static const char* active_aux[] = {"did", "does"};

  Rng rng(20240617);
  std::uniform_int_distribution<int> subj(0, 7), verb(0, 2), adj(0, 3),
      part(0, 1), aux(0, 1), frame(0, 3);
  std::vector<VpeItem> items;
  while (static_cast<int>(items.size()) < n) {
    std::string s0 = subjects[subj(rng)];
    std::string s1 = subjects[subj(rng)];
    std::string s2 = subjects[subj(rng)];
    // Distinct participants: reflexive sources raise the strict/sloppy
    // ambiguity, which is out of scope.
    if (s1 == s0 || s2 == s0 || s2 == s1) continue;
    VpeItem item;
    switch (frame(rng)) {
      case 0:  // transitive active
        item.source = "(S (NP " + s0 + ") (VP (V " +
                      std::string(transitive[verb(rng)]) + ") (NP " + s2 + ")))";
        item.target = "(S (NP " + s1 + ") (VP[elided] (AUX " +
                      std::string(active_aux[aux(rng)]) + ")))";
        break;
      case 1:  // become + AP
        item.source = "(S (NP " + s0 + ") (VP (V became) (AP " +
                      std::string(adjectives[adj(rng)]) + ")))";
        item.target = "(S (NP " + s1 + ") (VP[elided] (AUX did)))";
        break;
      case 2:  // passive with by-phrase, passive target
        item.source = "(S (NP " + s0 + ") (VP (AUX was) (VP (V " +
                      std::string(ppart[part(rng)]) + ") (PP (P by) (NP " + s2 +
                      ")))))";
        item.target = "(S (NP " + s1 + ") (VP[elided] (AUX was)))";
        break;
      default:  // agentless passive, passive target
        item.source = "(S (NP " + s0 + ") (VP (AUX was) (VP (V " +
                      std::string(ppart[part(rng)]) + "))))";
        item.target = "(S (NP " + s1 + ") (VP[elided] (AUX was)))";
        break;
    }
    items.push_back(item);
  }
  return items;
}

// Clause texts for synthetic Coherent Situation links (gate checks).
struct CsItem {
  std::string source;
  std::string target;
  std::string conj;
};

inline std::vector<CsItem> generated_cs_items(int n) {
  static const char* subjects[] = {"Bill", "Hillary", "John", "Mary", "Fred"};
  static const char* conjs[] = {"because", "therefore", "even though",
                                "although", "despite"};
  Rng rng(905311);
  std::uniform_int_distribution<int> subj(0, 4), conj(0, 4), shape(0, 3);
  std::vector<CsItem> items;
  while (static_cast<int>(items.size()) < n) {
    std::string s0 = subjects[subj(rng)];
    std::string s1 = subjects[subj(rng)];
    CsItem item;
    item.conj = conjs[conj(rng)];
    item.source = "(S (NP " + s0 + ") (VP (V supports) (NP Clinton)))";
    switch (shape(rng)) {
      case 0:  // gapped target
        item.target = "(S[gapped] (NP " + s1 + ") (NP Bush))";
        break;
      case 1:  // stripped target
        item.target = "(S[stripped] (NP " + s1 + "))";
        break;
      case 2:  // elided VP target
        item.target = "(S (NP " + s1 + ") (VP[elided] (AUX does)))";
        break;
      default:  // event reference target
        item.target = "(S (NP " + s1 + ") (VP (V does) (NP it)))";
        break;
    }
    items.push_back(item);
  }
  return items;
}

}  // namespace testsup
