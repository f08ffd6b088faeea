#include "elco/transforms.hpp"

#include <algorithm>
#include <set>

namespace elco {

std::string transform_error_name(TransformError e) {
  switch (e) {
    case TransformError::None: return "None";
    case TransformError::NoMatch: return "NoMatch";
    case TransformError::RemnantMismatch: return "RemnantMismatch";
    case TransformError::FormMismatch: return "FormMismatch";
    case TransformError::UnsuitableAntecedent: return "UnsuitableAntecedent";
  }
  return {};
}

namespace {

Tree clone_with(const TreeNode& src, std::vector<Tree> children) {
  auto n = std::make_shared<TreeNode>(src);
  n->children = std::move(children);
  return n;
}

// Replaces `victim` (by node identity) with `replacement` anywhere in `t`.
Tree replace_node(const Tree& t, const Tree& victim, const Tree& replacement) {
  if (t == victim) return replacement;
  bool changed = false;
  std::vector<Tree> kids;
  kids.reserve(t->children.size());
  for (const Tree& c : t->children) {
    Tree nc = replace_node(c, victim, replacement);
    changed |= (nc != c);
    kids.push_back(nc);
  }
  return changed ? clone_with(*t, std::move(kids)) : t;
}

// Constituents available for fronting: the subject NP(s) of the clause and
// the non-head children of its VP, in linear order.
void eligible_constituents(const Tree& clause, std::vector<Tree>& out) {
  for (const Tree& c : clause->children) {
    if (c->cat == Category::NP || c->cat == Category::AP ||
        c->cat == Category::PP)
      out.push_back(c);
    if (c->cat == Category::VP) {
      for (const Tree& vc : c->children) {
        if (vc->cat == Category::NP || vc->cat == Category::AP ||
            vc->cat == Category::PP)
          out.push_back(vc);
        if (vc->cat == Category::VP)  // passive participial core
          for (const Tree& ic : vc->children)
            if (ic->cat == Category::NP || ic->cat == Category::AP ||
                ic->cat == Category::PP)
              out.push_back(ic);
      }
    }
  }
}

void collect_trace_ids(const Tree& t, std::set<int>& traces,
                       std::set<int>& binders) {
  if (t->empty && t->trace_id) traces.insert(*t->trace_id);
  if (t->binds_trace) binders.insert(*t->binds_trace);
  for (const Tree& c : t->children) collect_trace_ids(c, traces, binders);
}

Tree renumber_traces(const Tree& t, const std::vector<std::pair<int, int>>& map) {
  auto n = std::make_shared<TreeNode>(*t);
  if (n->trace_id)
    for (auto& [from, to] : map)
      if (*n->trace_id == from) n->trace_id = to;
  if (n->binds_trace)
    for (auto& [from, to] : map)
      if (*n->binds_trace == from) n->binds_trace = to;
  n->children.clear();
  for (const Tree& c : t->children)
    n->children.push_back(renumber_traces(c, map));
  return n;
}

}  // namespace

TransformResult front_parallel(const Tree& clause,
                               const std::vector<Category>& remnant_categories,
                               int& trace_counter) {
  count_reconstruction_op();
  if (remnant_categories.empty()) return {clause, TransformError::None, {}};

  std::vector<Tree> eligible;
  eligible_constituents(clause, eligible);

  std::vector<Tree> matched;
  std::set<const TreeNode*> used;
  for (Category want : remnant_categories) {
    Tree hit;
    for (const Tree& cand : eligible) {
      if (cand->cat == want && !used.count(cand.get())) {
        hit = cand;  // leftmost unused constituent wins
        break;
      }
    }
    if (!hit)
      return {std::nullopt, TransformError::NoMatch,
              "no " + category_name(want) + " constituent to front"};
    used.insert(hit.get());
    matched.push_back(hit);
  }

  // Replace each matched constituent with a trace-marked empty node, then
  // adjoin the constituents in list order (first remnant outermost).
  Tree embedded = clause;
  std::vector<int> ids;
  for (const Tree& m : matched) {
    int id = ++trace_counter;
    ids.push_back(id);
    auto phi = std::make_shared<TreeNode>();
    phi->cat = m->cat;
    phi->empty = true;
    phi->trace_id = id;
    embedded = replace_node(embedded, m, phi);
  }
  Tree out = embedded;
  for (std::size_t i = matched.size(); i-- > 0;) {
    auto fronted = std::make_shared<TreeNode>(*matched[i]);
    fronted->binds_trace = ids[i];
    auto s = std::make_shared<TreeNode>();
    s->cat = Category::S;
    s->children = {fronted, out};
    out = s;
  }
  return {out, TransformError::None, {}};
}

TransformResult copy_embedded_sentence(const Tree& fronted_source,
                                       const Tree& gapped_target,
                                       int& trace_counter) {
  count_reconstruction_op();

  // Walk down the fronted spine collecting (constituent, trace id) levels.
  std::vector<std::pair<Tree, int>> levels;
  Tree embedded = fronted_source;
  while (embedded->cat == Category::S && embedded->children.size() == 2 &&
         embedded->children[0]->binds_trace) {
    levels.emplace_back(embedded->children[0],
                        *embedded->children[0]->binds_trace);
    embedded = embedded->children[1];
  }

  const std::vector<Tree>& remnants = gapped_target->children;
  if (remnants.size() != levels.size())
    return {std::nullopt, TransformError::RemnantMismatch,
            "source fronts " + std::to_string(levels.size()) +
                " constituents, target has " + std::to_string(remnants.size()) +
                " remnants"};
  for (std::size_t i = 0; i < remnants.size(); ++i)
    if (remnants[i]->cat != levels[i].first->cat)
      return {std::nullopt, TransformError::RemnantMismatch,
              "remnant " + std::to_string(i + 1) + " is " +
                  category_name(remnants[i]->cat) + ", source fronted " +
                  category_name(levels[i].first->cat)};

  std::vector<std::pair<int, int>> idmap;
  std::vector<int> fresh;
  for (auto& [node, id] : levels) {
    int nid = ++trace_counter;
    idmap.emplace_back(id, nid);
    fresh.push_back(nid);
  }
  Tree copied = renumber_traces(embedded, idmap);

  Tree out = copied;
  for (std::size_t i = remnants.size(); i-- > 0;) {
    auto binder = std::make_shared<TreeNode>(*remnants[i]);
    binder->binds_trace = fresh[i];
    auto s = std::make_shared<TreeNode>();
    s->cat = Category::S;
    s->children = {binder, out};
    out = s;
  }
  return {out, TransformError::None, {}};
}

TransformResult copy_vp(const Tree& source_vp, const Tree& target_aux) {
  count_reconstruction_op();

  Voice aux_voice = target_aux->voice;
  Voice vp_voice = Voice::Active;
  for (const Tree& c : source_vp->children)
    if (c->cat == Category::V && c->vform == VForm::PassiveParticiple)
      vp_voice = Voice::Passive;
  if (source_vp->voice != Voice::None) vp_voice = source_vp->voice;

  if (aux_voice == Voice::Active && vp_voice == Voice::Passive)
    return {std::nullopt, TransformError::FormMismatch,
            "passive participle VP under active '" + target_aux->word + "'"};
  if (aux_voice == Voice::Passive && vp_voice == Voice::Active)
    return {std::nullopt, TransformError::FormMismatch,
            "active VP under passive '" + target_aux->word + "'"};

  std::set<int> traces, binders;
  collect_trace_ids(source_vp, traces, binders);
  for (int id : traces)
    if (!binders.count(id))
      return {std::nullopt, TransformError::UnsuitableAntecedent,
              "VP contains a trace assumption bound outside it"};

  // Under an active auxiliary the finite verb is lemmatized to base form.
  std::function<Tree(const Tree&)> lemmatize = [&](const Tree& t) -> Tree {
    auto n = std::make_shared<TreeNode>(*t);
    if (n->cat == Category::V && n->vform == VForm::Finite &&
        aux_voice == Voice::Active) {
      if (!n->lemma.empty()) n->word = n->lemma;
      n->vform = VForm::Base;
    }
    n->children.clear();
    for (const Tree& c : t->children) n->children.push_back(lemmatize(c));
    return n;
  };
  return {lemmatize(source_vp), TransformError::None, {}};
}

namespace {

void align_rec(const Tree& a, const Tree& b, Alignment& out) {
  out.pairs.emplace_back(a, b);
  std::vector<bool> used(b->children.size(), false);
  for (const Tree& ac : a->children) {
    bool matched = false;
    for (std::size_t j = 0; j < b->children.size(); ++j) {
      if (!used[j] && b->children[j]->cat == ac->cat) {
        used[j] = true;
        align_rec(ac, b->children[j], out);
        matched = true;
        break;
      }
    }
    if (!matched) out.only_source.push_back(ac);
  }
  for (std::size_t j = 0; j < b->children.size(); ++j)
    if (!used[j]) out.only_target.push_back(b->children[j]);
}

}  // namespace

Alignment align_parallel(const Tree& source, const Tree& target) {
  Alignment out;
  if (source->cat != target->cat) {
    out.only_source.push_back(source);
    out.only_target.push_back(target);
    return out;
  }
  align_rec(source, target, out);
  return out;
}

}  // namespace elco
