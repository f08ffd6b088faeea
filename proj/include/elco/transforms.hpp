#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elco/tree.hpp"

namespace elco {

enum class TransformError {
  None,
  NoMatch,                // a remnant category matches no eligible constituent
  RemnantMismatch,        // remnant category sequences differ
  FormMismatch,           // voice/vform incompatible with the target auxiliary
  UnsuitableAntecedent,   // VP contains a trace bound outside of it
};

std::string transform_error_name(TransformError e);

struct TransformResult {
  std::optional<Tree> tree;
  TransformError error = TransformError::None;
  std::string detail;
  bool ok() const { return tree.has_value(); }
};

// Adjoins the constituents matching `remnant_categories` (leftmost first) to
// the clause front, leaving trace-marked empty nodes in their original
// positions.  Fresh trace ids are drawn from `trace_counter`.
TransformResult front_parallel(const Tree& clause,
                               const std::vector<Category>& remnant_categories,
                               int& trace_counter);

// Copies the embedded sentence of a fronted source into a gapped or stripped
// target, generating fresh trace assumptions bound by the target remnants.
TransformResult copy_embedded_sentence(const Tree& fronted_source,
                                       const Tree& gapped_target,
                                       int& trace_counter);

// Copies an overt VP for grafting under the bare auxiliary of an elided
// clause, lemmatizing finite verbs to base form when the auxiliary requires
// it.  Fails on voice mismatches and on VPs containing externally bound
// traces.
TransformResult copy_vp(const Tree& source_vp, const Tree& target_aux);

// Pairs of corresponding constituents (same category, same structural role),
// outermost first; constituents without a counterpart are reported
// separately.  Swapping the arguments swaps every pair.
struct Alignment {
  std::vector<std::pair<Tree, Tree>> pairs;
  std::vector<Tree> only_source;
  std::vector<Tree> only_target;
};

Alignment align_parallel(const Tree& source, const Tree& target);

}  // namespace elco
