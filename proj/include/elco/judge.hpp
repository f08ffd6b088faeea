#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elco/coherence.hpp"
#include "elco/corpus.hpp"
#include "elco/derive.hpp"
#include "elco/kb.hpp"
#include "elco/lexicon.hpp"
#include "elco/resolve.hpp"

namespace elco {

struct Verdict {
  int link_index = 0;
  CoherenceRelation relation;
  bool felicitous = false;
  std::string reason;  // failure code plus detail when infelicitous
  std::optional<Term> lf;
  std::optional<Route> route;
  std::optional<Tree> tree;  // reconstructed syntax, syntactic route only
  std::vector<std::string> trace;
};

// Judges one source/target connection under one candidate relation.
//
// Common Topic inference recovers missing constituents as a by-product:
// gapped and stripped targets are reconstructed by copying, elided VPs take
// the syntactic route, and the relation's constraints are then checked over
// the reconstructed pair.  Coherent Situation inference consults only
// sentence-level semantics: anaphoric forms resolve semantically, and a
// gapped or stripped target — which has no sentence-level semantics at all —
// is infelicitous outright, with no reconstruction attempted.
Verdict judge_link(const Derivation& source, const Derivation& target,
                   const CoherenceRelation& rel, const KnowledgeBase& kb,
                   const Lexicon& lexicon,
                   const std::optional<std::string>& intended,
                   int& trace_counter);

struct ItemJudgment {
  std::string item_id;
  std::vector<Verdict> verdicts;
};

// Judges every (link, candidate relation) pair of an item, in order.  A
// link's successful resolution feeds forward: later links whose source is a
// resolved clause see the resolved derivation, reconstructed syntax
// included.  Earlier failures leave the raw derivation in place.
// Throws on malformed input (unknown words, bad trees, bad conjunctions).
ItemJudgment judge_item(const DiscourseItem& item, const Lexicon& lexicon,
                        const KnowledgeBase& kb,
                        const std::optional<std::string>& only_relation =
                            std::nullopt);

// Number of times a reconstruction transform ran under a Coherent Situation
// relation; stays zero on every input.
std::uint64_t gate_violations();

}  // namespace elco
