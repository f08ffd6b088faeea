#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "elco/semtype.hpp"

namespace elco {

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

// Immutable, fully typed lambda terms.  Every node carries its SemType so
// composition failures surface at construction time.
struct TermNode {
  enum class Kind { Const, Var, App, Abs };

  Kind kind;
  SemType type;
  std::string name;   // Const, Var
  Term fn, arg;       // App
  Term binder, body;  // Abs; binder is a Var node
};

Term mk_const(std::string name, SemType type);
Term mk_var(std::string name, SemType type);
Term mk_app(Term fn, Term arg);  // throws TypeClashError on a type mismatch
Term mk_abs(Term binder, Term body);

inline bool is_const(const Term& t) { return t->kind == TermNode::Kind::Const; }
inline bool is_var(const Term& t) { return t->kind == TermNode::Kind::Var; }
inline bool is_app(const Term& t) { return t->kind == TermNode::Kind::App; }
inline bool is_abs(const Term& t) { return t->kind == TermNode::Kind::Abs; }

std::set<std::string> free_vars(const Term& t);
bool is_closed(const Term& t);

// Capture-avoiding substitution of `value` for the free variable `name`.
Term substitute(const Term& t, const std::string& name, const Term& value);

// Beta-normal form; termination is guaranteed by the simply-typed fragment.
// No eta conversion is performed anywhere.
Term beta_normalize(const Term& t);

// Identity up to consistent renaming of bound variables.
bool alpha_eq(const Term& a, const Term& b);

// Left fold of applications: apply_all(f, {a, b}) == (f a) b.
Term apply_all(Term fn, const std::vector<Term>& args);

// Abstracts all occurrences of each closed pivot, yielding
// \vn...\v1.term[pivot_i := v_i].  Applying the result to the pivots in
// reverse abstraction order and normalizing recovers the original term.
// A pivot with no occurrence produces a vacuous binder.
Term abstract_over(const Term& term, const std::vector<Term>& pivots);

// Solves P(args...) = rhs for P under the all-occurrences policy, i.e.
// returns \u1...\un.rhs[arg_i := u_i] such that normalizing
// apply_all(P, args) is alpha-equal to rhs.  Returns nullopt when the
// solution's type differs from the anaphor variable's expected type.
std::optional<Term> solve_anaphor(const Term& anaphor_var,
                                  const std::vector<Term>& args,
                                  const Term& rhs);

// Largest N such that a variable named v<N> occurs anywhere in t; 0 if none.
int max_var_index(const Term& t);

// Pending trace or anaphoric assumption attached to a derivation.  The
// assumption's variable occurs free in the carrying term until discharge
// substitutes a closed term for it.
enum class AssumptionFlavor { Trace, Anaphor };

struct Assumption {
  int id = 0;
  AssumptionFlavor flavor = AssumptionFlavor::Trace;
  Term variable;
  SemType expected;
};

}  // namespace elco
