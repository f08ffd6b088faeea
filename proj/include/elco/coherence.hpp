#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elco/derive.hpp"
#include "elco/kb.hpp"
#include "elco/term.hpp"

namespace elco {

enum class RelationName {
  Parallel,
  Contrast,
  Exemplification,
  Elaboration,
  Result,
  Explanation,
  ViolatedExpectation,
  DenialOfPreventer,
};

enum class RelationFamily { CommonTopic, CoherentSituation };

struct CoherenceRelation {
  RelationName name = RelationName::Parallel;
  RelationFamily family = RelationFamily::CommonTopic;
  std::string constraint;  // schema sketch, for reports
};

std::string relation_name(RelationName n);
std::optional<RelationName> relation_from_name(const std::string& s);
CoherenceRelation make_relation(RelationName n);
const std::vector<CoherenceRelation>& all_relations();

// Candidate relations for a conjunction, optionally narrowed by an annotated
// reading (symmetric/asymmetric for `and`, contrast/violated-expectation for
// `but`).  Throws UnknownConjunctionError for conjunctions outside the
// tabled set.
std::vector<CoherenceRelation> candidate_relations(
    const std::string& conjunction,
    const std::optional<std::string>& reading = std::nullopt);

// Common Topic constraint check over a clause pair whose sentence-level
// semantics are both available (reconstruction, if any, already done).
struct CTResult {
  bool satisfied = false;
  std::string p0, p1;                       // clause predicates
  std::optional<std::string> generalized;   // common predicate, if found
  std::vector<std::pair<std::string, std::string>> arg_pairs;
  std::vector<std::string> pair_verdicts;   // per-pair similarity notes
  std::vector<std::pair<std::string, std::string>> aligned_constituents;
  std::string reason;                       // failure reason when unsatisfied
};

// Throws std::logic_error when either clause lacks a sentence LF: callers
// must reconstruct before checking, so a missing LF is a sequencing bug.
CTResult check_common_topic(const CoherenceRelation& rel, const Derivation& source,
                            const Derivation& target, const KnowledgeBase& kb);

// Coherent Situation constraint check over whole-sentence semantics.  The
// abduced presupposition is one of A->B, B->A, A->not-B, B->not-A, witnessed
// by a bounded chain of plausible axioms plus antonym facts for the negated
// forms.  Absent semantics yield an unsatisfied result with reason
// MissingSemantics (the harness maps that to infelicity for gapped targets).
struct CSResult {
  bool satisfied = false;
  std::string presupposition;        // e.g. "politician -> dishonest"
  std::vector<std::string> chain;    // plausible-axiom path, endpoints included
  std::string reason;
};

CSResult check_coherent_situation(const CoherenceRelation& rel,
                                  const std::optional<Term>& source_lf,
                                  const std::optional<Term>& target_lf,
                                  const KnowledgeBase& kb);

// Outermost constant of a normal-form LF together with its argument
// signature (each argument collapsed to its own head constant).
struct LfDecomposition {
  std::string head;
  std::vector<std::string> args;
};
LfDecomposition decompose_lf(const Term& lf);

}  // namespace elco
