#include "elco/term.hpp"

#include <algorithm>
#include <map>

#include "elco/errors.hpp"

namespace elco {

Term mk_const(std::string name, SemType type) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermNode::Kind::Const;
  n->name = std::move(name);
  n->type = std::move(type);
  return n;
}

Term mk_var(std::string name, SemType type) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermNode::Kind::Var;
  n->name = std::move(name);
  n->type = std::move(type);
  return n;
}

Term mk_app(Term fn, Term arg) {
  if (!fn->type.is_arrow() || fn->type.from() != arg->type)
    throw TypeClashError("cannot apply " + fn->type.str() + " to " +
                         arg->type.str());
  auto n = std::make_shared<TermNode>();
  n->kind = TermNode::Kind::App;
  n->type = fn->type.to();
  n->fn = std::move(fn);
  n->arg = std::move(arg);
  return n;
}

Term mk_abs(Term binder, Term body) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermNode::Kind::Abs;
  n->type = SemType::arrow(binder->type, body->type);
  n->binder = std::move(binder);
  n->body = std::move(body);
  return n;
}

namespace {

void collect_free(const Term& t, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (t->kind) {
    case TermNode::Kind::Const:
      return;
    case TermNode::Kind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case TermNode::Kind::App:
      collect_free(t->fn, bound, out);
      collect_free(t->arg, bound, out);
      return;
    case TermNode::Kind::Abs: {
      bool added = bound.insert(t->binder->name).second;
      collect_free(t->body, bound, out);
      if (added) bound.erase(t->binder->name);
      return;
    }
  }
}

int var_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'v') return 0;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
  return std::stoi(name.substr(1));
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

bool is_closed(const Term& t) { return free_vars(t).empty(); }

int max_var_index(const Term& t) {
  switch (t->kind) {
    case TermNode::Kind::Const:
      return 0;
    case TermNode::Kind::Var:
      return var_index(t->name);
    case TermNode::Kind::App:
      return std::max(max_var_index(t->fn), max_var_index(t->arg));
    case TermNode::Kind::Abs:
      return std::max(var_index(t->binder->name), max_var_index(t->body));
  }
  return 0;
}

Term substitute(const Term& t, const std::string& name, const Term& value) {
  switch (t->kind) {
    case TermNode::Kind::Const:
      return t;
    case TermNode::Kind::Var:
      return t->name == name ? value : t;
    case TermNode::Kind::App:
      return mk_app(substitute(t->fn, name, value),
                    substitute(t->arg, name, value));
    case TermNode::Kind::Abs: {
      if (t->binder->name == name) return t;
      if (free_vars(value).count(t->binder->name)) {
        // Rename the binder out of the way before descending.
        int fresh = std::max(max_var_index(t), max_var_index(value)) + 1;
        Term nb = mk_var("v" + std::to_string(fresh), t->binder->type);
        Term renamed = substitute(t->body, t->binder->name, nb);
        return mk_abs(nb, substitute(renamed, name, value));
      }
      return mk_abs(t->binder, substitute(t->body, name, value));
    }
  }
  return t;
}

Term beta_normalize(const Term& t) {
  switch (t->kind) {
    case TermNode::Kind::Const:
    case TermNode::Kind::Var:
      return t;
    case TermNode::Kind::Abs:
      return mk_abs(t->binder, beta_normalize(t->body));
    case TermNode::Kind::App: {
      Term fn = beta_normalize(t->fn);
      Term arg = beta_normalize(t->arg);
      if (is_abs(fn))
        return beta_normalize(substitute(fn->body, fn->binder->name, arg));
      return mk_app(fn, arg);
    }
  }
  return t;
}

namespace {

bool alpha_eq_rec(const Term& a, const Term& b,
                  std::map<std::string, std::string>& a2b,
                  std::map<std::string, std::string>& b2a) {
  if (a->kind != b->kind || a->type != b->type) return false;
  switch (a->kind) {
    case TermNode::Kind::Const:
      return a->name == b->name;
    case TermNode::Kind::Var: {
      auto ia = a2b.find(a->name);
      auto ib = b2a.find(b->name);
      if (ia == a2b.end() && ib == b2a.end()) return a->name == b->name;
      return ia != a2b.end() && ib != b2a.end() && ia->second == b->name &&
             ib->second == a->name;
    }
    case TermNode::Kind::App:
      return alpha_eq_rec(a->fn, b->fn, a2b, b2a) &&
             alpha_eq_rec(a->arg, b->arg, a2b, b2a);
    case TermNode::Kind::Abs: {
      auto olda = a2b.find(a->binder->name) == a2b.end()
                      ? std::optional<std::string>{}
                      : std::optional<std::string>{a2b[a->binder->name]};
      auto oldb = b2a.find(b->binder->name) == b2a.end()
                      ? std::optional<std::string>{}
                      : std::optional<std::string>{b2a[b->binder->name]};
      a2b[a->binder->name] = b->binder->name;
      b2a[b->binder->name] = a->binder->name;
      bool ok = alpha_eq_rec(a->body, b->body, a2b, b2a);
      if (olda)
        a2b[a->binder->name] = *olda;
      else
        a2b.erase(a->binder->name);
      if (oldb)
        b2a[b->binder->name] = *oldb;
      else
        b2a.erase(b->binder->name);
      return ok;
    }
  }
  return false;
}

// Structural replacement of every subterm alpha-equal to `pivot`.
Term replace_all(const Term& t, const Term& pivot, const Term& replacement) {
  if (t->type == pivot->type && alpha_eq(t, pivot)) return replacement;
  switch (t->kind) {
    case TermNode::Kind::Const:
    case TermNode::Kind::Var:
      return t;
    case TermNode::Kind::App:
      return mk_app(replace_all(t->fn, pivot, replacement),
                    replace_all(t->arg, pivot, replacement));
    case TermNode::Kind::Abs:
      return mk_abs(t->binder, replace_all(t->body, pivot, replacement));
  }
  return t;
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
  std::map<std::string, std::string> a2b, b2a;
  return alpha_eq_rec(a, b, a2b, b2a);
}

Term apply_all(Term fn, const std::vector<Term>& args) {
  for (const Term& a : args) fn = mk_app(std::move(fn), a);
  return fn;
}

Term abstract_over(const Term& term, const std::vector<Term>& pivots) {
  int next = max_var_index(term);
  for (const Term& p : pivots) next = std::max(next, max_var_index(p));
  Term body = term;
  std::vector<Term> vars;
  for (const Term& p : pivots) {
    Term v = mk_var("v" + std::to_string(++next), p->type);
    body = replace_all(body, p, v);
    vars.push_back(v);
  }
  Term out = body;
  for (const Term& v : vars) out = mk_abs(v, out);
  return out;
}

std::optional<Term> solve_anaphor(const Term& anaphor_var,
                                  const std::vector<Term>& args,
                                  const Term& rhs) {
  int next = max_var_index(rhs);
  for (const Term& a : args) next = std::max(next, max_var_index(a));
  Term body = rhs;
  std::vector<Term> vars;
  for (const Term& a : args) {
    Term v = mk_var("v" + std::to_string(++next), a->type);
    body = replace_all(body, a, v);
    vars.push_back(v);
  }
  Term out = body;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = mk_abs(*it, out);
  if (out->type != anaphor_var->type) return std::nullopt;
  return out;
}

}  // namespace elco
