#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elco/derive.hpp"
#include "elco/kb.hpp"
#include "elco/term.hpp"
#include "elco/tree.hpp"

namespace elco {

enum class Route { SyntacticCopy, SemanticAnaphora };

std::string route_name(Route r);

struct ResolutionResult {
  Term lf;  // closed, beta-normal
  Route route = Route::SyntacticCopy;
  std::optional<Tree> tree;  // reconstructed syntax, present iff SyntacticCopy
  std::vector<std::string> notes;
};

enum class ResolveError {
  None,
  RemnantMismatch,
  NoSourceSyntax,
  FormMismatch,
  UnsuitableAntecedent,
  NoVPAntecedent,
  NoSolution,
  MissingSemantics,
};

std::string resolve_error_name(ResolveError e);

struct ResolveOutcome {
  std::optional<ResolutionResult> result;
  ResolveError error = ResolveError::None;
  std::string detail;
  bool ok() const { return result.has_value(); }
};

// Gapping/stripping reconstruction: fronts the source over the pivot
// categories, copies the embedded sentence into the target, and derives the
// target's sentence-level semantics.  Only ever invoked under Common Topic
// inference (the judgment controller enforces the gate).
ResolveOutcome resolve_gapping(const Derivation& source,
                               const Derivation& target,
                               const std::vector<Category>& pivots,
                               const Lexicon& lexicon, int& trace_counter);

// Syntactic route for VP-ellipsis: copies a suitable source VP to the site
// of the empty node; the anaphoric assumption is constrained to the copied
// constituent's semantics.  `intended` restricts antecedents to VPs headed
// by the given predicate (the bracketed reading of the corpus item).
ResolveOutcome resolve_vpe_syntactic(
    const Derivation& source, const Derivation& target, const Lexicon& lexicon,
    const std::optional<std::string>& intended = std::nullopt,
    int* counter = nullptr);

// Semantic route for VP-ellipsis: discharges the anaphoric assumption by
// solving the property equation against the source clause semantics, with
// the target subject as the sole parallel argument.  Nominal sources are
// coerced through the knowledge base's nominalization map.  Target syntax is
// never modified.
ResolveOutcome resolve_vpe_semantic(
    const Derivation& source, const Derivation& target,
    const KnowledgeBase& kb,
    const std::optional<std::string>& intended = std::nullopt);

// Event reference (do it / do that / do so): binds the event pronoun to the
// source event property; works the same under either family of discourse
// inference and never touches syntax.
ResolveOutcome resolve_event_ref(
    const Derivation& source, const Derivation& target,
    const std::optional<std::string>& intended = std::nullopt);

}  // namespace elco
