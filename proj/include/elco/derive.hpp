#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elco/lexicon.hpp"
#include "elco/term.hpp"
#include "elco/tree.hpp"

namespace elco {

// A pending anaphoric expression discovered during derivation: the elided-VP
// assumption P, or the event pronoun of a do-it form.  `local_subject` is the
// subject of the minimal clause containing the site; `aux_voice` is the voice
// of the stranding auxiliary (always active for event pronouns).
struct AnaphorSite {
  int assumption_id = 0;
  std::optional<Term> local_subject;
  Voice aux_voice = Voice::Active;
  bool event_pronoun = false;
};

// Result of compositional derivation over a clause tree.  Full clauses end
// with a closed beta-normal sentence LF and no pending assumptions; gapped
// and stripped clauses have no sentence-level LF at all; elided clauses carry
// the open LF together with the pending anaphoric assumption.
struct Derivation {
  Tree tree;  // semantics-annotated copy of the input
  std::optional<Term> sentence;
  std::vector<Assumption> pending;
  std::vector<AnaphorSite> anaphor_sites;
  std::optional<std::string> error;  // ill-formed clause (type clash etc.)

  // Clause metadata read off the sentence LF's application spine.
  std::string head;                     // outermost constant
  bool head_stative = false;
  std::optional<Term> logical_subject;  // last spine argument
  std::optional<Term> theme;            // preceding entity argument, if any

  bool closed() const { return sentence && pending.empty() && !error; }
};

// Reads the bracketed tree format and resolves leaf words against the
// lexicon (semantics, lemma, voice/vform and lexical features).
// Throws SyntaxError with a position, or UnknownWordError.
Tree parse_tree(const std::string& text, const Lexicon& lexicon);

// Bottom-up typed composition.  Traces and anaphors contribute assumption
// variables; trace assumptions introduced by fronting are discharged when
// the fronted constituent combines back in.  Fresh assumption ids are drawn
// from `counter` when given, so chained reconstructions stay deterministic.
Derivation derive(const Tree& tree, const Lexicon& lexicon,
                  int* counter = nullptr);

// Form classification: Gapping/Stripping (empty in syntax, not anaphoric),
// VPE (both features), EventRef (anaphoric only), Full otherwise.
FormProfile classify_form(const Tree& tree);

// Recomputes head/subject/theme metadata from d.sentence, e.g. after a
// semantic resolution replaced the sentence LF.
void attach_spine_metadata(Derivation& d, const Lexicon& lexicon);

}  // namespace elco
