#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "elco/term.hpp"

namespace elco {

enum class Category { S, NP, VP, V, AUX, AP, PP, P, N, DET };

enum class Voice { None, Active, Passive };
enum class VForm { None, Finite, Base, PassiveParticiple };

// Gapped/Stripped mark an S whose embedded sentence is missing; Elided marks
// a VP site signalled by a bare auxiliary.
enum class EllipsisMark { None, Gapped, Stripped, Elided };

struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;

// Labeled syntax tree.  Trees are immutable after construction; transforms
// return fresh trees.
struct TreeNode {
  Category cat = Category::S;
  Voice voice = Voice::None;
  VForm vform = VForm::None;
  bool stative = false;  // lexical feature on verbs
  EllipsisMark mark = EllipsisMark::None;
  bool empty = false;                 // childless phi node left by a transform
  std::optional<int> trace_id;        // on empty nodes only
  std::optional<int> binds_trace;     // on the constituent that discharges it
  std::optional<int> anaphor_id;      // on elided-VP sites and event pronouns
  bool event_anaphor = false;         // event pronoun leaf (it/that/so)
  std::string word;                   // terminals
  std::string lemma;                  // base form of a verb terminal
  std::vector<Tree> children;
  std::optional<Term> sem;            // attached by the lexicon / derivation
};

std::string category_name(Category c);
std::optional<Category> category_from_name(const std::string& name);

// Bracketed text format: (CAT[flag,feat=val,...] child ...) with terminals as
// bare words, e.g. (S (NP Bill) (VP (V became) (AP upset))).  Empty nodes
// print as (CAT[elided]); gapped/stripped clauses as (S[gapped] remnant ...).
// print_tree -> parse_tree_text round-trips exactly (semantics excepted).
std::string print_tree(const Tree& t);
Tree parse_tree_text(const std::string& text);  // throws SyntaxError

// Structural equality ignoring semantic attachments.
bool same_shape(const Tree& a, const Tree& b);

Tree find_first(const Tree& t, const std::function<bool(const TreeNode&)>& pred);

// Running count of syntactic reconstruction operations (fronting and the two
// copy transforms).  The judgment controller uses it to verify that no
// reconstruction ever happens under Coherent Situation inference.
std::uint64_t reconstruction_ops();
void count_reconstruction_op();

// Two-feature classification of a clause form.
enum class FormKind { Full, Gapping, Stripping, VPE, EventRef };

struct FormProfile {
  FormKind kind = FormKind::Full;
  bool empty_in_syntax = false;
  bool anaphoric_in_semantics = false;
};

std::string form_kind_name(FormKind k);

}  // namespace elco
