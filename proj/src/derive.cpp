#include "elco/derive.hpp"

#include <algorithm>

#include "elco/errors.hpp"

namespace elco {

namespace {

Tree resolve_leaves(const Tree& t, const Lexicon& lex) {
  auto n = std::make_shared<TreeNode>(*t);
  if (!n->word.empty()) {
    const LexEntry* e = lex.lookup(n->word, n->cat);
    if (!e) throw UnknownWordError(n->word, category_name(n->cat));
    if (e->sem) n->sem = e->sem;
    if (n->lemma.empty()) n->lemma = e->lemma;
    if (n->voice == Voice::None) n->voice = e->voice;
    if (n->vform == VForm::None) n->vform = e->vform;
    n->stative = n->stative || e->stative;
    n->event_anaphor = n->event_anaphor || e->event_anaphor;
  }
  n->children.clear();
  for (const Tree& c : t->children) n->children.push_back(resolve_leaves(c, lex));
  return n;
}

struct DeriveFail {
  std::string msg;
};

SemType trace_type(Category cat) {
  switch (cat) {
    case Category::NP:
    case Category::PP:
      return SemType::entity();
    case Category::AP:
    case Category::VP:
      return SemType::arrow(SemType::entity(), SemType::truth());
    default:
      throw DeriveFail{"no trace type for category " + category_name(cat)};
  }
}

struct Ann {
  Tree node;
  std::optional<Term> sem;
};

struct Deriver {
  const Lexicon& lex;
  int* counter;
  int local_counter = 0;
  std::vector<Assumption> pending;
  std::vector<AnaphorSite> sites;

  int fresh_id() { return counter ? ++*counter : ++local_counter; }

  Term assume(int id, AssumptionFlavor flavor, const SemType& ty) {
    Term v = mk_var("v" + std::to_string(id), ty);
    pending.push_back(Assumption{id, flavor, v, ty});
    return v;
  }

  void discharge(int id, const Term& value, Term& host) {
    auto it = std::find_if(pending.begin(), pending.end(),
                           [&](const Assumption& a) { return a.id == id; });
    if (it == pending.end())
      throw DeriveFail{"no pending assumption " + std::to_string(id)};
    host = substitute(host, it->variable->name, value);
    pending.erase(it);
  }

  static Tree with_sem(const Tree& t, const Term& sem,
                       std::vector<Tree> children) {
    auto n = std::make_shared<TreeNode>(*t);
    n->sem = sem;
    n->children = std::move(children);
    return n;
  }

  Ann fold_children(const Tree& t, const std::vector<Ann>& anns) {
    std::optional<Term> acc;
    std::vector<Tree> kids;
    for (const Ann& a : anns) {
      kids.push_back(a.node);
      if (!a.sem) continue;  // auxiliaries contribute no semantics
      if (!acc) {
        acc = a.sem;
        continue;
      }
      const Term& f = *acc;
      const Term& x = *a.sem;
      if (f->type.is_arrow() && f->type.from() == x->type)
        acc = mk_app(f, x);
      else if (x->type.is_arrow() && x->type.from() == f->type)
        acc = mk_app(x, f);
      else
        throw DeriveFail{"type clash at " + category_name(t->cat) + ": " +
                         f->type.str() + " against " + x->type.str()};
    }
    if (!acc)
      throw DeriveFail{"no semantics under " + category_name(t->cat)};
    auto n = std::make_shared<TreeNode>(*t);
    n->sem = *acc;
    n->children = std::move(kids);
    return {n, acc};
  }

  Ann go(const Tree& t) {
    if (t->empty) {
      if (!t->trace_id) throw DeriveFail{"empty node without a trace marker"};
      SemType ty = trace_type(t->cat);
      Term v = assume(*t->trace_id, AssumptionFlavor::Trace, ty);
      return {with_sem(t, v, {}), v};
    }

    // Elided VP under a bare auxiliary: an anaphoric property assumption.
    if (t->cat == Category::VP && t->mark == EllipsisMark::Elided) {
      const Tree* aux = nullptr;
      for (const Tree& c : t->children)
        if (c->cat == Category::AUX) aux = &c;
      if (!aux) throw DeriveFail{"elided VP without an auxiliary"};
      int id = fresh_id();
      SemType ty = SemType::arrow(SemType::entity(), SemType::truth());
      Term v = assume(id, AssumptionFlavor::Anaphor, ty);
      sites.push_back(AnaphorSite{id, std::nullopt, (*aux)->voice, false});
      auto n = std::make_shared<TreeNode>(*t);
      n->sem = v;
      n->anaphor_id = id;
      return {n, v};
    }

    if (!t->word.empty()) {
      if (t->cat == Category::AUX) return {t, std::nullopt};
      if (t->event_anaphor) {
        int id = fresh_id();
        SemType ty = t->sem ? (*t->sem)->type
                            : SemType::arrow(SemType::entity(), SemType::truth());
        const LexEntry* e = lex.lookup(t->word, t->cat);
        if (e && e->type) ty = *e->type;
        Term v = assume(id, AssumptionFlavor::Anaphor, ty);
        sites.push_back(AnaphorSite{id, std::nullopt, Voice::Active, true});
        auto n = std::make_shared<TreeNode>(*t);
        n->sem = v;
        n->anaphor_id = id;
        return {n, v};
      }
      if (!t->sem) throw DeriveFail{"no semantics for word '" + t->word + "'"};
      return {t, t->sem};
    }

    switch (t->cat) {
      case Category::S: return go_s(t);
      case Category::VP: return go_vp(t);
      default: break;
    }
    std::vector<Ann> anns;
    for (const Tree& c : t->children) anns.push_back(go(c));
    return fold_children(t, anns);
  }

  Ann go_s(const Tree& t) {
    // Fronted structure: the left sister discharges the trace it binds.
    if (t->children.size() == 2 && t->children[0]->binds_trace) {
      Ann binder = go(t->children[0]);
      Ann inner = go(t->children[1]);
      if (!binder.sem || !inner.sem)
        throw DeriveFail{"fronted structure without semantics"};
      Term sem = *inner.sem;
      discharge(*t->children[0]->binds_trace, *binder.sem, sem);
      sem = beta_normalize(sem);
      return {with_sem(t, sem, {binder.node, inner.node}), sem};
    }

    std::size_t site_mark = sites.size();
    std::vector<Ann> anns;
    for (const Tree& c : t->children) anns.push_back(go(c));
    Ann out = fold_children(t, anns);

    // Record this clause's subject on any anaphor site found below it.
    std::optional<Term> subject;
    for (const Ann& a : anns)
      if (a.node->cat == Category::NP && a.sem) {
        subject = a.sem;
        break;
      }
    if (subject)
      for (std::size_t i = site_mark; i < sites.size(); ++i)
        if (!sites[i].local_subject) sites[i].local_subject = subject;
    return out;
  }

  Ann go_vp(const Tree& t) {
    const Tree* aux = nullptr;
    for (const Tree& c : t->children)
      if (c->cat == Category::AUX) aux = &c;
    if (!aux) {
      std::vector<Ann> anns;
      for (const Tree& c : t->children) anns.push_back(go(c));
      Ann out = fold_children(t, anns);
      for (const Tree& c : t->children)
        if (c->cat == Category::V && c->vform == VForm::PassiveParticiple) {
          auto n = std::make_shared<TreeNode>(*out.node);
          n->voice = Voice::Passive;
          out.node = n;
        }
      return out;
    }

    // Auxiliary-headed VP: the auxiliary itself is semantically inert.
    Ann auxAnn = go(*aux);
    std::vector<Tree> vps;
    for (const Tree& c : t->children)
      if (c->cat == Category::VP) vps.push_back(c);
    if (vps.size() != 1 || t->children.size() != 2)
      throw DeriveFail{"auxiliary '" + (*aux)->word +
                       "' requires a verb phrase complement"};
    const Tree& inner = vps[0];

    if ((*aux)->voice == Voice::Passive) return go_passive(t, auxAnn, inner);

    Ann innerAnn = go(inner);
    auto n = std::make_shared<TreeNode>(*t);
    n->sem = innerAnn.sem;
    n->children = {auxAnn.node, innerAnn.node};
    return {n, innerAnn.sem};
  }

  // Passive: the participial core denotes theme-then-agent; a by-phrase
  // saturates the agent so the surface subject lands on the theme slot.
  // Without a by-phrase the agent argument stays open and the clause denotes
  // a property (closed off with an arbitrary agent at the root only).
  Ann go_passive(const Tree& t, Ann& auxAnn, const Tree& inner) {
    const Tree* verb = nullptr;
    std::optional<Term> agent;
    std::vector<Ann> innerAnns;
    std::optional<Term> core;
    std::vector<Tree> innerKids;
    for (const Tree& c : inner->children) {
      if (c->cat == Category::V) {
        verb = &c;
        Ann a = go(c);
        innerKids.push_back(a.node);
        core = a.sem;
        continue;
      }
      bool is_by = c->cat == Category::PP && !c->children.empty() &&
                   c->children[0]->cat == Category::P &&
                   c->children[0]->word == "by";
      Ann a = go(c);
      innerKids.push_back(a.node);
      if (is_by) {
        agent = a.sem;
      } else if (a.sem) {
        if (!core || !(*core)->type.is_arrow() ||
            (*core)->type.from() != (*a.sem)->type)
          throw DeriveFail{"type clash in passive verb phrase"};
        core = mk_app(*core, *a.sem);
      }
    }
    if (!verb || !core) throw DeriveFail{"passive auxiliary without a verb"};

    Term sem = *core;
    if (agent) {
      if (!sem->type.is_arrow() || !sem->type.to().is_arrow() ||
          sem->type.to().from() != (*agent)->type)
        throw DeriveFail{"by-phrase does not fit the verb"};
      int idx = std::max(max_var_index(sem), max_var_index(*agent)) + 1;
      Term th = mk_var("v" + std::to_string(idx), sem->type.from());
      sem = mk_abs(th, mk_app(mk_app(sem, th), *agent));
    }
    auto in = std::make_shared<TreeNode>(*inner);
    in->voice = Voice::Passive;
    in->sem = sem;
    in->children = std::move(innerKids);
    auto n = std::make_shared<TreeNode>(*t);
    n->voice = Voice::Passive;
    n->sem = sem;
    n->children = {auxAnn.node, in};
    return {n, sem};
  }
};

void read_spine(const Term& t, Term& head, std::vector<Term>& args) {
  if (is_app(t)) {
    read_spine(t->fn, head, args);
    args.push_back(t->arg);
  } else {
    head = t;
  }
}

}  // namespace

Tree parse_tree(const std::string& text, const Lexicon& lexicon) {
  return resolve_leaves(parse_tree_text(text), lexicon);
}

Derivation derive(const Tree& tree, const Lexicon& lexicon, int* counter) {
  Derivation d;
  d.tree = tree;
  if (tree->cat != Category::S) {
    d.error = "derivation requires a clause (S) root";
    return d;
  }

  Deriver dv{lexicon, counter, 0, {}, {}};
  // Keep locally generated ids clear of trace ids already in the tree.
  std::function<void(const Tree&)> scan = [&](const Tree& t) {
    if (t->trace_id) dv.local_counter = std::max(dv.local_counter, *t->trace_id);
    if (t->binds_trace)
      dv.local_counter = std::max(dv.local_counter, *t->binds_trace);
    for (const Tree& c : t->children) scan(c);
  };
  scan(tree);

  try {
    if (tree->mark == EllipsisMark::Gapped ||
        tree->mark == EllipsisMark::Stripped) {
      // No sentence-level semantics before reconstruction; only the remnants
      // receive interpretations.
      std::vector<Tree> kids;
      for (const Tree& c : tree->children) kids.push_back(dv.go(c).node);
      auto n = std::make_shared<TreeNode>(*tree);
      n->children = std::move(kids);
      d.tree = n;
      d.pending = dv.pending;
      return d;
    }

    Ann root = dv.go(tree);
    if (!root.sem) {
      d.error = "clause has no semantics";
      return d;
    }
    Term sem = *root.sem;
    // Agentless passive main clause: close the agent slot off.
    if (sem->type ==
        SemType::arrow(SemType::entity(), SemType::truth())) {
      sem = mk_app(sem, mk_const("someone", SemType::entity()));
    }
    if (sem->type != SemType::truth()) {
      d.error = "clause does not reduce to a truth value (" +
                sem->type.str() + ")";
      return d;
    }
    sem = beta_normalize(sem);
    d.tree = root.node;
    d.sentence = sem;
    d.pending = dv.pending;
    d.anaphor_sites = dv.sites;
    attach_spine_metadata(d, lexicon);
  } catch (const DeriveFail& f) {
    d.tree = tree;
    d.sentence = std::nullopt;
    d.pending.clear();
    d.anaphor_sites.clear();
    d.error = f.msg;
  }
  return d;
}

void attach_spine_metadata(Derivation& d, const Lexicon& lexicon) {
  d.head.clear();
  d.head_stative = false;
  d.logical_subject.reset();
  d.theme.reset();
  if (!d.sentence) return;
  Term head;
  std::vector<Term> args;
  read_spine(*d.sentence, head, args);
  if (is_const(head)) {
    d.head = head->name;
    d.head_stative = lexicon.stative_constant(head->name);
  }
  if (!args.empty() && is_const(args.back()) &&
      args.back()->type == SemType::entity())
    d.logical_subject = args.back();
  if (args.size() >= 2) {
    const Term& prev = args[args.size() - 2];
    if (is_const(prev) && prev->type == SemType::entity()) d.theme = prev;
  }
}

FormProfile classify_form(const Tree& tree) {
  if (find_first(tree, [](const TreeNode& n) {
        return n.mark == EllipsisMark::Gapped;
      }))
    return {FormKind::Gapping, true, false};
  if (find_first(tree, [](const TreeNode& n) {
        return n.mark == EllipsisMark::Stripped;
      }))
    return {FormKind::Stripping, true, false};
  if (find_first(tree, [](const TreeNode& n) {
        return n.cat == Category::VP && n.mark == EllipsisMark::Elided;
      }))
    return {FormKind::VPE, true, true};
  Tree event_vp = find_first(tree, [](const TreeNode& n) {
    if (n.cat != Category::VP) return false;
    bool main_do = false, pronoun = false;
    for (const Tree& c : n.children) {
      if (c->cat == Category::V && c->lemma == "do") main_do = true;
      if (c->cat == Category::NP && c->event_anaphor) pronoun = true;
    }
    return main_do && pronoun;
  });
  if (event_vp) return {FormKind::EventRef, false, true};
  return {FormKind::Full, false, false};
}

}  // namespace elco
