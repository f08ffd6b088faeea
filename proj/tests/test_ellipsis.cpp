#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elco/resolve.hpp"
#include "elco/term_io.hpp"
#include "support.hpp"

using namespace elco;

namespace {

const Lexicon& lex() { return testsup::lexicon(); }
const KnowledgeBase& kb() { return testsup::kb(); }

Derivation derive_text(const std::string& text) {
  return derive(parse_tree(text, lex()), lex());
}

std::vector<Category> remnants_of(const Derivation& d) {
  std::vector<Category> cats;
  for (const Tree& c : d.tree->children) cats.push_back(c->cat);
  return cats;
}

}  // namespace

TEST_CASE("resolve_gapping reconstructs gapped and stripped targets") {
  Derivation src = derive_text("(S (NP Bill) (VP (V became) (AP upset)))");

  Derivation gap = derive_text("(S[gapped] (NP Hillary) (AP angry))");
  int counter = 0;
  ResolveOutcome r = resolve_gapping(src, gap, remnants_of(gap), lex(), counter);
  REQUIRE(r.ok());
  CHECK(print_term(r.result->lf) == "become angry hillary");
  CHECK(r.result->route == Route::SyntacticCopy);
  REQUIRE(r.result->tree.has_value());
  // The reconstructed tree itself derives the same LF.
  Derivation redo = derive(*r.result->tree, lex());
  CHECK(alpha_eq(*redo.sentence, r.result->lf));

  Derivation src2 = derive_text("(S (NP John) (VP (V supports) (NP Clinton)))");
  Derivation gap2 = derive_text("(S[gapped] (NP Mary) (NP Bush))");
  ResolveOutcome r2 =
      resolve_gapping(src2, gap2, remnants_of(gap2), lex(), counter);
  REQUIRE(r2.ok());
  CHECK(print_term(r2.result->lf) == "support bush mary");

  Derivation strip = derive_text("(S[stripped] (NP Hillary))");
  ResolveOutcome r3 =
      resolve_gapping(src, strip, remnants_of(strip), lex(), counter);
  REQUIRE(r3.ok());
  CHECK(print_term(r3.result->lf) == "become upset hillary");
}

TEST_CASE("resolve_gapping propagates mismatches and missing syntax") {
  Derivation src = derive_text("(S (NP Bill) (VP (V became) (AP upset)))");
  Derivation bad = derive_text("(S[gapped] (NP Hillary) (PP (P at) (NP (N noon))))");
  int counter = 0;
  ResolveOutcome r = resolve_gapping(src, bad, remnants_of(bad), lex(), counter);
  CHECK_FALSE(r.ok());
  CHECK(r.error == ResolveError::RemnantMismatch);

  // An unresolved gapped clause cannot serve as the source.
  Derivation gap_source = derive_text("(S[gapped] (NP Mary) (NP Bush))");
  Derivation gap = derive_text("(S[gapped] (NP Hillary) (AP angry))");
  ResolveOutcome r2 =
      resolve_gapping(gap_source, gap, remnants_of(gap), lex(), counter);
  CHECK_FALSE(r2.ok());
  CHECK(r2.error == ResolveError::NoSourceSyntax);
}

TEST_CASE("resolve_vpe_syntactic copies compatible VPs") {
  Derivation src = derive_text("(S (NP Bill) (VP (V became) (AP upset)))");
  Derivation tgt = derive_text("(S (NP Hillary) (VP[elided] (AUX did)))");
  ResolveOutcome r = resolve_vpe_syntactic(src, tgt, lex());
  REQUIRE(r.ok());
  CHECK(print_term(r.result->lf) == "become upset hillary");
  CHECK(r.result->route == Route::SyntacticCopy);
  REQUIRE(r.result->tree.has_value());
  // The graft sits under the stranded auxiliary.
  Tree base_v = find_first(*r.result->tree, [](const TreeNode& n) {
    return n.cat == Category::V && n.word == "become";
  });
  CHECK(base_v);
}

TEST_CASE("resolve_vpe_syntactic: voice mismatch and nominalized source") {
  Derivation passive_src = derive_text(
      "(S (NP (N decision)) (VP (AUX was) (VP (V reversed) (PP (P by) (NP (N FBI))))))");
  Derivation did_tgt = derive_text("(S (NP (N ICC)) (VP[elided] (AUX did)))");
  ResolveOutcome mismatch =
      resolve_vpe_syntactic(passive_src, did_tgt, lex(), std::string("reverse"));
  CHECK_FALSE(mismatch.ok());
  CHECK(mismatch.error == ResolveError::FormMismatch);

  // Nominalized source: no VP is headed by the intended predicate.
  Derivation nominal_src = derive_text(
      "(S (NP (N letter)) (VP (V provoked) (NP (N response) (PP (P from) (NP Bush)))))");
  Derivation clinton_tgt = derive_text("(S (NP Clinton) (VP[elided] (AUX did)))");
  ResolveOutcome nominal = resolve_vpe_syntactic(nominal_src, clinton_tgt, lex(),
                                                 std::string("respond"));
  CHECK_FALSE(nominal.ok());
  CHECK(nominal.error == ResolveError::NoVPAntecedent);
}

TEST_CASE("resolve_vpe_syntactic: reconstructed source VP with open trace") {
  Derivation src = derive_text("(S (NP John) (VP (V supports) (NP Clinton)))");
  Derivation gap = derive_text("(S[gapped] (NP Mary) (NP Bush))");
  int counter = 0;
  ResolveOutcome rec = resolve_gapping(src, gap, remnants_of(gap), lex(), counter);
  REQUIRE(rec.ok());
  Derivation resolved_gap = derive(*rec.result->tree, lex(), &counter);
  REQUIRE(resolved_gap.closed());

  Derivation tgt = derive_text("(S (NP Fred) (VP[elided] (AUX does)))");
  ResolveOutcome r = resolve_vpe_syntactic(resolved_gap, tgt, lex(),
                                           std::string("support"), &counter);
  CHECK_FALSE(r.ok());
  CHECK(r.error == ResolveError::UnsuitableAntecedent);
}

TEST_CASE("resolve_vpe_semantic discharges the anaphoric assumption") {
  // Embedded passive antecedent, intended reading 'reverse'.
  Derivation src = derive_text(
      "(S (NP (N manufacturers)) (VP (V asked) (S (NP (N decision)) (VP (AUX be) (VP (V reversed))))))");
  Derivation tgt = derive_text("(S (NP (N ICC)) (VP[elided] (AUX did)))");
  ResolveOutcome r =
      resolve_vpe_semantic(src, tgt, kb(), std::string("reverse"));
  REQUIRE(r.ok());
  CHECK(print_term(r.result->lf) == "reverse decision icc");
  CHECK(r.result->route == Route::SemanticAnaphora);
  CHECK_FALSE(r.result->tree.has_value());

  // Nominalized source resolves through the nominalization map.
  Derivation nominal_src = derive_text(
      "(S (NP (N letter)) (VP (V provoked) (NP (N response) (PP (P from) (NP Clinton)))))");
  Derivation he_did = derive_text("(S (NP Clinton) (VP[elided] (AUX did)))");
  ResolveOutcome r2 =
      resolve_vpe_semantic(nominal_src, he_did, kb(), std::string("respond"));
  REQUIRE(r2.ok());
  CHECK(print_term(r2.result->lf) == "respond clinton");

  // Default reading: the source subject's property.
  Derivation simple_src = derive_text("(S (NP Bill) (VP (V became) (AP upset)))");
  Derivation simple_tgt = derive_text("(S (NP Hillary) (VP[elided] (AUX did)))");
  ResolveOutcome r3 = resolve_vpe_semantic(simple_src, simple_tgt, kb());
  REQUIRE(r3.ok());
  CHECK(print_term(r3.result->lf) == "become upset hillary");
}

TEST_CASE("resolve_vpe_semantic succeeds where the copied VP is unsuitable") {
  // A reconstructed gapped clause offers no copyable VP (its object is a
  // trace), yet the semantic route recovers the property from its LF.
  Derivation src = derive_text("(S (NP John) (VP (V supports) (NP Clinton)))");
  Derivation gap = derive_text("(S[gapped] (NP Mary) (NP Bush))");
  int counter = 0;
  ResolveOutcome rec = resolve_gapping(src, gap, remnants_of(gap), lex(), counter);
  REQUIRE(rec.ok());
  Derivation resolved_gap = derive(*rec.result->tree, lex(), &counter);

  Derivation tgt = derive_text("(S (NP Fred) (VP[elided] (AUX does)))");
  CHECK_FALSE(resolve_vpe_syntactic(resolved_gap, tgt, lex(),
                                    std::string("support"), &counter)
                  .ok());
  ResolveOutcome sem =
      resolve_vpe_semantic(resolved_gap, tgt, kb(), std::string("support"));
  REQUIRE(sem.ok());
  CHECK(print_term(sem.result->lf) == "support bush fred");
}

TEST_CASE("resolve_vpe_semantic never touches the target syntax") {
  Derivation src = derive_text("(S (NP Bill) (VP (V became) (AP upset)))");
  Derivation tgt = derive_text("(S (NP Hillary) (VP[elided] (AUX did)))");
  Tree before = tgt.tree;
  std::string printed = print_tree(tgt.tree);
  ResolveOutcome r = resolve_vpe_semantic(src, tgt, kb());
  REQUIRE(r.ok());
  CHECK(tgt.tree.get() == before.get());
  CHECK(print_tree(tgt.tree) == printed);
}

TEST_CASE("resolve_vpe_semantic needs source semantics") {
  Derivation gap_source = derive_text("(S[gapped] (NP Mary) (NP Bush))");
  Derivation tgt = derive_text("(S (NP Fred) (VP[elided] (AUX does)))");
  ResolveOutcome r = resolve_vpe_semantic(gap_source, tgt, kb());
  CHECK_FALSE(r.ok());
  CHECK(r.error == ResolveError::MissingSemantics);
}

TEST_CASE("resolve_event_ref binds the event pronoun") {
  Derivation src = derive_text(
      "(S (NP (N decision)) (VP (AUX was) (VP (V reversed) (PP (P by) (NP (N FBI))))))");
  Derivation tgt = derive_text("(S (NP (N ICC)) (VP (V did) (NP it)))");
  ResolveOutcome r = resolve_event_ref(src, tgt);
  REQUIRE(r.ok());
  CHECK(print_term(r.result->lf) == "reverse decision icc");
  CHECK(r.result->route == Route::SemanticAnaphora);
  CHECK_FALSE(r.result->tree.has_value());

  // Resolution does not consult the discourse relation at all, so the LF is
  // the same however the clauses are related.
  ResolveOutcome again = resolve_event_ref(src, tgt);
  REQUIRE(again.ok());
  CHECK(alpha_eq(r.result->lf, again.result->lf));
}

TEST_CASE("resolve_event_ref rejects stative sources") {
  Derivation src = derive_text("(S (NP Bill) (VP (V dislikes) (NP George)))");
  Derivation tgt = derive_text("(S (NP Hillary) (VP (V does) (NP it)))");
  ResolveOutcome r = resolve_event_ref(src, tgt);
  CHECK_FALSE(r.ok());
  CHECK(r.error == ResolveError::NoSolution);
  CHECK(r.detail.find("state") != std::string::npos);
}

TEST_CASE("gapping has no semantic route") {
  Derivation src = derive_text("(S (NP Bill) (VP (V became) (AP upset)))");
  Derivation gap = derive_text("(S[gapped] (NP Hillary) (AP angry))");
  // Neither anaphoric resolver produces an LF for a gapped target.
  CHECK_FALSE(resolve_vpe_semantic(src, gap, kb()).ok());
  CHECK_FALSE(resolve_event_ref(src, gap).ok());
}

TEST_CASE("route equivalence over generated VPE items") {
  int checked = 0;
  for (const testsup::VpeItem& item : testsup::generated_vpe_items(120)) {
    Derivation src = derive_text(item.source);
    Derivation tgt = derive_text(item.target);
    REQUIRE(src.closed());
    ResolveOutcome syn = resolve_vpe_syntactic(src, tgt, lex());
    if (!syn.ok()) continue;
    ResolveOutcome sem = resolve_vpe_semantic(src, tgt, kb());
    REQUIRE(sem.ok());
    CHECK(alpha_eq(syn.result->lf, sem.result->lf));
    ++checked;
  }
  CHECK(checked >= 100);
}
