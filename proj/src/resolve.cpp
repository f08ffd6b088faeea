#include "elco/resolve.hpp"

#include <algorithm>

#include "elco/term_io.hpp"
#include "elco/transforms.hpp"

namespace elco {

std::string route_name(Route r) {
  return r == Route::SyntacticCopy ? "syntactic-copy" : "semantic-anaphora";
}

std::string resolve_error_name(ResolveError e) {
  switch (e) {
    case ResolveError::None: return "None";
    case ResolveError::RemnantMismatch: return "RemnantMismatch";
    case ResolveError::NoSourceSyntax: return "NoSourceSyntax";
    case ResolveError::FormMismatch: return "FormMismatch";
    case ResolveError::UnsuitableAntecedent: return "UnsuitableAntecedent";
    case ResolveError::NoVPAntecedent: return "NoVPAntecedent";
    case ResolveError::NoSolution: return "NoSolution";
    case ResolveError::MissingSemantics: return "MissingSemantics";
  }
  return {};
}

namespace {

ResolveOutcome failure(ResolveError e, std::string detail) {
  return ResolveOutcome{std::nullopt, e, std::move(detail)};
}

// Head constant of a property candidate: strip binders, walk the spine.
std::string property_head(const Term& t) {
  Term cur = t;
  while (is_abs(cur)) cur = cur->body;
  while (is_app(cur)) cur = cur->fn;
  return is_const(cur) ? cur->name : std::string{};
}

const Assumption* find_assumption(const Derivation& d, int id) {
  for (const Assumption& a : d.pending)
    if (a.id == id) return &a;
  return nullptr;
}

Tree replace_node(const Tree& t, const Tree& victim, const Tree& replacement) {
  if (t == victim) return replacement;
  bool changed = false;
  std::vector<Tree> kids;
  for (const Tree& c : t->children) {
    Tree nc = replace_node(c, victim, replacement);
    changed |= (nc != c);
    kids.push_back(nc);
  }
  if (!changed) return t;
  auto n = std::make_shared<TreeNode>(*t);
  n->children = std::move(kids);
  return n;
}

}  // namespace

ResolveOutcome resolve_gapping(const Derivation& source,
                               const Derivation& target,
                               const std::vector<Category>& pivots,
                               const Lexicon& lexicon, int& trace_counter) {
  FormProfile tf = classify_form(target.tree);
  if (tf.kind != FormKind::Gapping && tf.kind != FormKind::Stripping)
    return failure(ResolveError::RemnantMismatch,
                   "target is not a gapped or stripped clause");
  if (!source.tree || classify_form(source.tree).kind != FormKind::Full ||
      source.error)
    return failure(ResolveError::NoSourceSyntax,
                   "source clause has no usable syntax to copy from");

  TransformResult fronted = front_parallel(source.tree, pivots, trace_counter);
  if (!fronted.ok())
    return failure(ResolveError::RemnantMismatch, fronted.detail);
  TransformResult copied =
      copy_embedded_sentence(*fronted.tree, target.tree, trace_counter);
  if (!copied.ok())
    return failure(ResolveError::RemnantMismatch, copied.detail);

  Derivation d = derive(*copied.tree, lexicon, &trace_counter);
  if (!d.closed())
    return failure(ResolveError::RemnantMismatch,
                   d.error ? *d.error : "reconstructed clause did not close");
  ResolutionResult r;
  r.lf = *d.sentence;
  r.route = Route::SyntacticCopy;
  r.tree = d.tree;
  r.notes.push_back("copied embedded sentence from fronted source");
  return ResolveOutcome{r, ResolveError::None, {}};
}

ResolveOutcome resolve_vpe_syntactic(const Derivation& source,
                                     const Derivation& target,
                                     const Lexicon& lexicon,
                                     const std::optional<std::string>& intended,
                                     int* counter) {
  if (classify_form(target.tree).kind != FormKind::VPE)
    return failure(ResolveError::NoVPAntecedent, "target has no elided VP");
  if (!source.tree || source.error)
    return failure(ResolveError::NoSourceSyntax, "source syntax unavailable");

  // Candidate antecedents: VP nodes with an overt verb head.
  std::vector<Tree> candidates;
  std::function<void(const Tree&)> collect = [&](const Tree& t) {
    if (t->cat == Category::VP) {
      for (const Tree& c : t->children)
        if (c->cat == Category::V && !c->word.empty()) {
          candidates.push_back(t);
          break;
        }
    }
    for (const Tree& c : t->children) collect(c);
  };
  collect(source.tree);

  if (intended) {
    std::vector<Tree> kept;
    for (const Tree& vp : candidates)
      for (const Tree& c : vp->children)
        if (c->cat == Category::V && c->sem && is_const(*c->sem) &&
            (*c->sem)->name == *intended) {
          kept.push_back(vp);
          break;
        }
    candidates = kept;
  }
  if (candidates.empty())
    return failure(ResolveError::NoVPAntecedent,
                   intended ? "source has no VP headed by '" + *intended + "'"
                            : "source has no overt VP");

  Tree site = find_first(target.tree, [](const TreeNode& n) {
    return n.cat == Category::VP && n.mark == EllipsisMark::Elided;
  });
  Tree aux;
  for (const Tree& c : site->children)
    if (c->cat == Category::AUX) aux = c;
  if (!aux)
    return failure(ResolveError::NoVPAntecedent,
                   "elided VP has no stranded auxiliary");

  TransformResult copied = copy_vp(candidates.front(), aux);
  if (!copied.ok()) {
    ResolveError e = copied.error == TransformError::FormMismatch
                         ? ResolveError::FormMismatch
                         : ResolveError::UnsuitableAntecedent;
    return failure(e, copied.detail);
  }

  auto grafted_vp = std::make_shared<TreeNode>();
  grafted_vp->cat = Category::VP;
  grafted_vp->children = {aux, *copied.tree};
  Tree grafted = replace_node(target.tree, site, grafted_vp);

  Derivation d = derive(grafted, lexicon, counter);
  if (d.error) return failure(ResolveError::FormMismatch, *d.error);
  if (!d.closed())
    return failure(ResolveError::UnsuitableAntecedent,
                   "copied VP still carries unresolved material");
  ResolutionResult r;
  r.lf = *d.sentence;
  r.route = Route::SyntacticCopy;
  r.tree = d.tree;
  r.notes.push_back("copied VP grafted at the empty node");
  return ResolveOutcome{r, ResolveError::None, {}};
}

namespace {

// Closed subterms of property type (e->t), outermost first, alpha-deduped.
void collect_properties(const Term& t, std::vector<Term>& out) {
  static const SemType prop =
      SemType::arrow(SemType::entity(), SemType::truth());
  if (t->type == prop && is_closed(t)) {
    bool seen = false;
    for (const Term& have : out)
      if (alpha_eq(have, t)) seen = true;
    if (!seen) out.push_back(t);
  }
  switch (t->kind) {
    case TermNode::Kind::App:
      collect_properties(t->fn, out);
      collect_properties(t->arg, out);
      break;
    case TermNode::Kind::Abs:
      collect_properties(t->body, out);
      break;
    default:
      break;
  }
}

void collect_constants(const Term& t, std::vector<std::string>& out) {
  switch (t->kind) {
    case TermNode::Kind::Const:
      if (std::find(out.begin(), out.end(), t->name) == out.end())
        out.push_back(t->name);
      break;
    case TermNode::Kind::App:
      collect_constants(t->fn, out);
      collect_constants(t->arg, out);
      break;
    case TermNode::Kind::Abs:
      collect_constants(t->body, out);
      break;
    default:
      break;
  }
}

struct SiteInfo {
  const AnaphorSite* site;
  const Assumption* assumption;
};

std::optional<SiteInfo> anaphor_site_of(const Derivation& d, bool event) {
  for (const AnaphorSite& s : d.anaphor_sites) {
    if (s.event_pronoun != event) continue;
    if (const Assumption* a = find_assumption(d, s.assumption_id))
      return SiteInfo{&s, a};
  }
  return std::nullopt;
}

ResolveOutcome discharge_with(const Derivation& target, const SiteInfo& info,
                              const Term& property, const char* note) {
  if (!target.sentence)
    return failure(ResolveError::NoSolution, "target has no pending LF");
  Term resolved = beta_normalize(
      substitute(*target.sentence, info.assumption->variable->name, property));
  if (!is_closed(resolved))
    return failure(ResolveError::NoSolution,
                   "discharge left free variables in the target LF");
  ResolutionResult r;
  r.lf = resolved;
  r.route = Route::SemanticAnaphora;
  r.notes.push_back(note);
  r.notes.push_back("antecedent property: " + print_term(property));
  return ResolveOutcome{r, ResolveError::None, {}};
}

}  // namespace

ResolveOutcome resolve_vpe_semantic(const Derivation& source,
                                    const Derivation& target,
                                    const KnowledgeBase& kb,
                                    const std::optional<std::string>& intended) {
  auto info = anaphor_site_of(target, /*event=*/false);
  if (!info)
    return failure(ResolveError::NoSolution,
                   "target has no pending anaphoric assumption");
  if (!source.closed())
    return failure(ResolveError::MissingSemantics,
                   "source clause has no sentence-level semantics");

  std::vector<Term> candidates;
  // The parallel-argument equation: abstract the source participant filling
  // the role the target subject will fill (agent under an active auxiliary,
  // theme under a passive one).
  std::optional<Term> pivot = info->site->aux_voice == Voice::Passive
                                  ? source.theme
                                  : source.logical_subject;
  if (pivot) {
    if (auto sol = solve_anaphor(info->assumption->variable, {*pivot},
                                 *source.sentence))
      candidates.push_back(*sol);
  }
  collect_properties(*source.sentence, candidates);
  // Nominal event descriptions coerce to their verbal predicate.
  std::vector<std::string> consts;
  collect_constants(*source.sentence, consts);
  for (const std::string& c : consts)
    if (auto verb = kb.nominal_verb(c))
      candidates.push_back(mk_const(
          *verb, SemType::arrow(SemType::entity(), SemType::truth())));

  if (intended) {
    std::vector<Term> kept;
    for (const Term& c : candidates)
      if (property_head(c) == *intended) kept.push_back(c);
    candidates = kept;
  }
  if (candidates.empty())
    return failure(ResolveError::NoSolution,
                   intended ? "no semantic antecedent headed by '" + *intended +
                                  "' in the source"
                            : "no semantic antecedent in the source");
  return discharge_with(target, *info, candidates.front(),
                        "anaphoric assumption discharged semantically");
}

ResolveOutcome resolve_event_ref(const Derivation& source,
                                 const Derivation& target,
                                 const std::optional<std::string>& intended) {
  auto info = anaphor_site_of(target, /*event=*/true);
  if (!info)
    return failure(ResolveError::NoSolution, "target has no event pronoun");
  if (!source.closed())
    return failure(ResolveError::MissingSemantics,
                   "source clause has no sentence-level semantics");
  if (source.head_stative)
    return failure(ResolveError::NoSolution,
                   "the source describes a state, not an event");
  if (!source.logical_subject)
    return failure(ResolveError::NoSolution,
                   "source LF offers no event-typed referent");

  auto sol = solve_anaphor(info->assumption->variable,
                           {*source.logical_subject}, *source.sentence);
  if (!sol)
    return failure(ResolveError::NoSolution,
                   "no well-typed event property in the source");
  if (intended && property_head(*sol) != *intended)
    return failure(ResolveError::NoSolution,
                   "source event is not headed by '" + *intended + "'");
  return discharge_with(target, *info, *sol,
                        "event pronoun bound to the source event property");
}

}  // namespace elco
