#include "elco/judge.hpp"

#include <atomic>

#include "elco/errors.hpp"
#include "elco/term_io.hpp"

namespace elco {

namespace {

std::atomic<std::uint64_t> g_gate_violations{0};

Verdict infelicitous(int link, const CoherenceRelation& rel, std::string reason) {
  Verdict v;
  v.link_index = link;
  v.relation = rel;
  v.felicitous = false;
  v.reason = std::move(reason);
  return v;
}

std::string render_resolve_failure(const ResolveOutcome& out) {
  if (out.error == ResolveError::MissingSemantics)
    return "NoSententialSemantics (" + out.detail + ")";
  return resolve_error_name(out.error) +
         (out.detail.empty() ? "" : " (" + out.detail + ")");
}

// Target-side derivation standing in for the resolved clause while checking
// relation constraints.
Derivation as_resolved(const Derivation& original, const ResolutionResult& r) {
  Derivation d = original;
  d.sentence = r.lf;
  d.pending.clear();
  d.anaphor_sites.clear();
  d.error.reset();
  if (r.tree) d.tree = *r.tree;
  return d;
}

std::vector<Category> remnant_categories(const Tree& gapped) {
  std::vector<Category> cats;
  for (const Tree& c : gapped->children) cats.push_back(c->cat);
  return cats;
}

Verdict from_ct(int link, const CoherenceRelation& rel, const CTResult& ct,
                const std::optional<ResolutionResult>& res,
                const Derivation& target) {
  Verdict v;
  v.link_index = link;
  v.relation = rel;
  if (res) {
    v.route = res->route;
    v.tree = res->tree;
    v.trace = res->notes;
  }
  for (const auto& [a, b] : ct.arg_pairs)
    v.trace.push_back("pair: " + a + " / " + b);
  if (ct.generalized) v.trace.push_back("common predicate: " + *ct.generalized);
  for (const std::string& s : ct.pair_verdicts) v.trace.push_back(s);
  if (ct.satisfied) {
    v.felicitous = true;
    v.lf = res ? res->lf : target.sentence;
  } else {
    v.reason = relation_name(rel.name) + " constraint failed: " + ct.reason;
  }
  return v;
}

Verdict from_cs(int link, const CoherenceRelation& rel, const CSResult& cs,
                const std::optional<ResolutionResult>& res,
                const Derivation& target) {
  Verdict v;
  v.link_index = link;
  v.relation = rel;
  if (res) {
    v.route = res->route;
    v.trace = res->notes;
  }
  if (!cs.presupposition.empty())
    v.trace.push_back("presupposes: " + cs.presupposition);
  if (cs.satisfied) {
    v.felicitous = true;
    v.lf = res ? res->lf : target.sentence;
  } else if (cs.reason == "MissingSemantics") {
    v.reason = "NoSententialSemantics";
  } else {
    v.reason = relation_name(rel.name) + " constraint failed: " + cs.reason;
  }
  return v;
}

}  // namespace

std::uint64_t gate_violations() { return g_gate_violations.load(); }

Verdict judge_link(const Derivation& source, const Derivation& target,
                   const CoherenceRelation& rel, const KnowledgeBase& kb,
                   const Lexicon& lexicon,
                   const std::optional<std::string>& intended,
                   int& trace_counter) {
  const int link = 0;  // caller rewrites the index
  if (target.error)
    return infelicitous(link, rel, "IllFormed: " + *target.error);
  if (source.error)
    return infelicitous(link, rel, "IllFormed (source): " + *source.error);

  FormProfile profile = classify_form(target.tree);

  if (rel.family == RelationFamily::CommonTopic) {
    // The relation constraints read both sentence LFs, so a source left
    // unresolved by an earlier failed link is a dead end here too.
    auto check_resolved = [&](const ResolveOutcome& out) -> Verdict {
      if (!out.ok())
        return infelicitous(link, rel, render_resolve_failure(out));
      if (!source.closed())
        return infelicitous(link, rel, "NoSententialSemantics (source)");
      Derivation resolved = as_resolved(target, *out.result);
      CTResult ct = check_common_topic(rel, source, resolved, kb);
      return from_ct(link, rel, ct, out.result, resolved);
    };
    switch (profile.kind) {
      case FormKind::Gapping:
      case FormKind::Stripping:
        return check_resolved(resolve_gapping(
            source, target, remnant_categories(target.tree), lexicon,
            trace_counter));
      case FormKind::VPE:
        return check_resolved(resolve_vpe_syntactic(source, target, lexicon,
                                                    intended, &trace_counter));
      case FormKind::EventRef:
        return check_resolved(resolve_event_ref(source, target, intended));
      case FormKind::Full: {
        if (!source.closed())
          return infelicitous(link, rel, "NoSententialSemantics (source)");
        if (!target.closed())
          return infelicitous(link, rel, "NoSententialSemantics");
        CTResult ct = check_common_topic(rel, source, target, kb);
        return from_ct(link, rel, ct, std::nullopt, target);
      }
    }
  }

  // Coherent Situation inference: sentence-level semantics only.  No
  // syntactic recovery is triggered on this path; the counter check makes
  // the guarantee observable.
  std::uint64_t ops_before = reconstruction_ops();
  Verdict v;
  switch (profile.kind) {
    case FormKind::Gapping:
    case FormKind::Stripping:
      // No sentence-level semantics, and no mechanism to recover it.
      v = infelicitous(link, rel, "NoSententialSemantics");
      break;
    case FormKind::VPE: {
      ResolveOutcome out = resolve_vpe_semantic(source, target, kb, intended);
      if (!out.ok()) {
        v = infelicitous(link, rel, render_resolve_failure(out));
        break;
      }
      CSResult cs = check_coherent_situation(rel, source.sentence,
                                             out.result->lf, kb);
      v = from_cs(link, rel, cs, out.result, target);
      break;
    }
    case FormKind::EventRef: {
      ResolveOutcome out = resolve_event_ref(source, target, intended);
      if (!out.ok()) {
        v = infelicitous(link, rel, render_resolve_failure(out));
        break;
      }
      CSResult cs = check_coherent_situation(rel, source.sentence,
                                             out.result->lf, kb);
      v = from_cs(link, rel, cs, out.result, target);
      break;
    }
    case FormKind::Full: {
      CSResult cs = check_coherent_situation(rel, source.sentence,
                                             target.sentence, kb);
      v = from_cs(link, rel, cs, std::nullopt, target);
      break;
    }
  }
  if (reconstruction_ops() != ops_before) ++g_gate_violations;
  return v;
}

ItemJudgment judge_item(const DiscourseItem& item, const Lexicon& lexicon,
                        const KnowledgeBase& kb,
                        const std::optional<std::string>& only_relation) {
  ItemJudgment out;
  out.item_id = item.id;

  int counter = 0;
  std::vector<Derivation> original;
  for (const std::string& text : item.clauses) {
    Tree t = parse_tree(text, lexicon);  // input errors propagate
    original.push_back(derive(t, lexicon, &counter));
  }
  std::vector<Derivation> current = original;  // source pool, updated forward

  for (std::size_t li = 0; li < item.links.size(); ++li) {
    const Link& link = item.links[li];
    std::vector<CoherenceRelation> rels =
        candidate_relations(link.conj, link.reading);
    if (only_relation) {
      std::vector<CoherenceRelation> kept;
      for (const CoherenceRelation& r : rels)
        if (relation_name(r.name) == *only_relation) kept.push_back(r);
      rels = kept;
    }

    const Derivation& src = current[link.from];
    const Derivation& tgt = original[link.to];
    std::optional<Verdict> propagate;
    for (const CoherenceRelation& rel : rels) {
      Verdict v = judge_link(src, tgt, rel, kb, lexicon, link.intended, counter);
      v.link_index = static_cast<int>(li);
      if (v.felicitous) {
        bool better = !propagate || (v.route == Route::SyntacticCopy &&
                                     propagate->route != Route::SyntacticCopy);
        if (better) propagate = v;
      }
      out.verdicts.push_back(std::move(v));
    }

    if (propagate && propagate->lf) {
      if (propagate->tree) {
        current[link.to] = derive(*propagate->tree, lexicon, &counter);
      } else {
        Derivation d = original[link.to];
        d.sentence = propagate->lf;
        d.pending.clear();
        d.anaphor_sites.clear();
        attach_spine_metadata(d, lexicon);
        current[link.to] = d;
      }
    }
  }
  return out;
}

}  // namespace elco
