#include "elco/coherence.hpp"

#include <stdexcept>

#include "elco/errors.hpp"
#include "elco/term_io.hpp"
#include "elco/transforms.hpp"

namespace elco {

namespace {

struct RelationInfo {
  RelationName name;
  RelationFamily family;
  const char* label;
  const char* constraint;
};

const RelationInfo kRelations[] = {
    {RelationName::Parallel, RelationFamily::CommonTopic, "Parallel",
     "p0 = p1, ai and bi similar"},
    {RelationName::Contrast, RelationFamily::CommonTopic, "Contrast",
     "p0 = not p1 with similar args, or p0 = p1 with some pair dissimilar"},
    {RelationName::Exemplification, RelationFamily::CommonTopic,
     "Exemplification", "p0 = p1, bi member of or subset of ai"},
    {RelationName::Elaboration, RelationFamily::CommonTopic, "Elaboration",
     "p0 = p1, ai = bi"},
    {RelationName::Result, RelationFamily::CoherentSituation, "Result",
     "presuppose A -> B"},
    {RelationName::Explanation, RelationFamily::CoherentSituation,
     "Explanation", "presuppose B -> A"},
    {RelationName::ViolatedExpectation, RelationFamily::CoherentSituation,
     "ViolatedExpectation", "presuppose A -> not B"},
    {RelationName::DenialOfPreventer, RelationFamily::CoherentSituation,
     "DenialOfPreventer", "presuppose B -> not A"},
};

const RelationInfo& info_of(RelationName n) {
  return kRelations[static_cast<int>(n)];
}

}  // namespace

std::string relation_name(RelationName n) { return info_of(n).label; }

std::optional<RelationName> relation_from_name(const std::string& s) {
  for (const RelationInfo& r : kRelations)
    if (s == r.label) return r.name;
  return std::nullopt;
}

CoherenceRelation make_relation(RelationName n) {
  const RelationInfo& r = info_of(n);
  return CoherenceRelation{r.name, r.family, r.constraint};
}

const std::vector<CoherenceRelation>& all_relations() {
  static const std::vector<CoherenceRelation> all = [] {
    std::vector<CoherenceRelation> v;
    for (const RelationInfo& r : kRelations) v.push_back(make_relation(r.name));
    return v;
  }();
  return all;
}

std::vector<CoherenceRelation> candidate_relations(
    const std::string& conjunction, const std::optional<std::string>& reading) {
  auto one = [](RelationName n) {
    return std::vector<CoherenceRelation>{make_relation(n)};
  };
  if (conjunction == "and") {
    if (!reading)
      return {make_relation(RelationName::Parallel),
              make_relation(RelationName::Result)};
    if (*reading == "symmetric") return one(RelationName::Parallel);
    if (*reading == "asymmetric") return one(RelationName::Result);
    throw UnknownConjunctionError("and (" + *reading + ")");
  }
  if (conjunction == "but") {
    if (!reading)
      return {make_relation(RelationName::Contrast),
              make_relation(RelationName::ViolatedExpectation)};
    if (*reading == "contrast") return one(RelationName::Contrast);
    if (*reading == "violated-expectation")
      return one(RelationName::ViolatedExpectation);
    throw UnknownConjunctionError("but (" + *reading + ")");
  }
  if (conjunction == "because") return one(RelationName::Explanation);
  if (conjunction == "therefore") return one(RelationName::Result);
  if (conjunction == "even though" || conjunction == "despite" ||
      conjunction == "although")
    return one(RelationName::DenialOfPreventer);
  if (conjunction == "for example") return one(RelationName::Exemplification);
  if (conjunction == "in other words") return one(RelationName::Elaboration);
  throw UnknownConjunctionError(conjunction);
}

namespace {

// Head constant of an argument term: strip binders, walk the spine.
std::string arg_signature(const Term& t) {
  Term cur = t;
  while (is_abs(cur)) cur = cur->body;
  while (is_app(cur)) cur = cur->fn;
  return cur->name;  // empty for a bare variable
}

}  // namespace

LfDecomposition decompose_lf(const Term& lf) {
  LfDecomposition out;
  Term cur = lf;
  std::vector<Term> raw;
  while (is_app(cur)) {
    raw.push_back(cur->arg);
    cur = cur->fn;
  }
  out.head = is_const(cur) || is_var(cur) ? cur->name : std::string{};
  for (auto it = raw.rbegin(); it != raw.rend(); ++it)
    out.args.push_back(arg_signature(*it));
  return out;
}

CTResult check_common_topic(const CoherenceRelation& rel,
                            const Derivation& source, const Derivation& target,
                            const KnowledgeBase& kb) {
  if (rel.family != RelationFamily::CommonTopic)
    throw std::logic_error("check_common_topic called with a " +
                           relation_name(rel.name) + " relation");
  if (!source.closed() || !target.closed())
    throw std::logic_error(
        "MissingSemantics: common-topic check before reconstruction");

  CTResult out;
  LfDecomposition a = decompose_lf(*source.sentence);
  LfDecomposition b = decompose_lf(*target.sentence);
  out.p0 = a.head;
  out.p1 = b.head;

  // Syntax guides the identification of parallel elements; report the
  // constituent pairing alongside the semantic argument pairing.
  Alignment al = align_parallel(source.tree, target.tree);
  for (const auto& [sn, tn] : al.pairs) {
    if (sn->sem && tn->sem && (is_const(*sn->sem) || is_var(*sn->sem)))
      out.aligned_constituents.emplace_back(print_term(*sn->sem),
                                            print_term(*tn->sem));
  }

  std::size_t n = std::min(a.args.size(), b.args.size());
  for (std::size_t i = 0; i < n; ++i)
    out.arg_pairs.emplace_back(a.args[i], b.args[i]);

  out.generalized = kb.generalize(a.head, b.head);
  bool arity_ok = a.args.size() == b.args.size();

  auto fail = [&](const std::string& why) {
    out.satisfied = false;
    out.reason = why;
    return out;
  };

  switch (rel.name) {
    case RelationName::Parallel: {
      if (!out.generalized)
        return fail("no common predicate generalizing '" + a.head + "' and '" +
                    b.head + "'");
      if (!arity_ok) return fail("argument arity differs");
      for (auto& [ai, bi] : out.arg_pairs) {
        if (!kb.similar(ai, bi))
          return fail("'" + ai + "' and '" + bi + "' are not similar");
        out.pair_verdicts.push_back(ai + " ~ " + bi);
      }
      out.satisfied = true;
      return out;
    }
    case RelationName::Contrast: {
      // Schema 1: contrasting predicates over similar arguments.
      if (kb.antonym(a.head, b.head) && arity_ok) {
        bool all = true;
        for (auto& [ai, bi] : out.arg_pairs)
          if (!kb.similar(ai, bi)) all = false;
        if (all) {
          for (auto& [ai, bi] : out.arg_pairs)
            out.pair_verdicts.push_back(ai + " ~ " + bi);
          out.satisfied = true;
          out.reason = "p0 = not p1";
          return out;
        }
      }
      // Schema 2: same predicate, some argument pair dissimilar.
      if (out.generalized && arity_ok) {
        for (auto& [ai, bi] : out.arg_pairs) {
          if (kb.dissimilar(ai, bi) || kb.dissimilar(bi, ai)) {
            out.pair_verdicts.push_back(ai + " !~ " + bi);
            out.satisfied = true;
            out.reason = "p0 = p1, dissimilar pair";
            return out;
          }
        }
      }
      return fail("neither contrast schema holds");
    }
    case RelationName::Exemplification: {
      if (!out.generalized)
        return fail("no common predicate generalizing '" + a.head + "' and '" +
                    b.head + "'");
      if (!arity_ok) return fail("argument arity differs");
      for (auto& [ai, bi] : out.arg_pairs) {
        if (kb.is_member(bi, ai))
          out.pair_verdicts.push_back(bi + " in " + ai);
        else if (kb.is_subset(bi, ai))
          out.pair_verdicts.push_back(bi + " subset of " + ai);
        else if (ai == bi)
          out.pair_verdicts.push_back(ai + " = " + bi);
        else
          return fail("'" + bi + "' is not a member or subset of '" + ai + "'");
      }
      out.satisfied = true;
      return out;
    }
    case RelationName::Elaboration: {
      if (!out.generalized)
        return fail("no common predicate generalizing '" + a.head + "' and '" +
                    b.head + "'");
      if (!arity_ok) return fail("argument arity differs");
      for (auto& [ai, bi] : out.arg_pairs) {
        if (!kb.same_entity(ai, bi))
          return fail("'" + ai + "' and '" + bi + "' are not identical");
        out.pair_verdicts.push_back(ai + " = " + bi);
      }
      out.satisfied = true;
      return out;
    }
    default:
      break;
  }
  return fail("unsupported relation");
}

namespace {

// A -> not-B: either some predicate plausibly implied by A's head is an
// antonym of B's head, or the heads meet along plausible edges while exactly
// the argument pairs that differ are antonymous.
bool negated_implication(const LfDecomposition& a, const LfDecomposition& b,
                         const KnowledgeBase& kb, std::string& presup,
                         std::vector<std::string>& chain) {
  for (const std::string& p : kb.plausible_reach(a.head)) {
    if (kb.antonym(p, b.head)) {
      auto path = kb.plausible_chain(a.head, p);
      chain = path ? *path : std::vector<std::string>{a.head};
      presup = a.head + " -> " + p + ", antonym(" + p + ", " + b.head + ")";
      return true;
    }
  }
  if (a.args.size() == b.args.size()) {
    if (auto path = kb.plausible_chain(a.head, b.head)) {
      bool antonymous = false, rest_equal = true;
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (a.args[i] == b.args[i]) continue;
        if (kb.antonym(a.args[i], b.args[i]) && !antonymous)
          antonymous = true;
        else
          rest_equal = false;
      }
      if (antonymous && rest_equal) {
        chain = *path;
        presup = a.head + "(..) -> not " + b.head + "(..) via antonymous arguments";
        return true;
      }
    }
  }
  return false;
}

}  // namespace

CSResult check_coherent_situation(const CoherenceRelation& rel,
                                  const std::optional<Term>& source_lf,
                                  const std::optional<Term>& target_lf,
                                  const KnowledgeBase& kb) {
  if (rel.family != RelationFamily::CoherentSituation)
    throw std::logic_error("check_coherent_situation called with a " +
                           relation_name(rel.name) + " relation");
  CSResult out;
  if (!source_lf || !target_lf) {
    out.reason = "MissingSemantics";
    return out;
  }
  LfDecomposition a = decompose_lf(*source_lf);
  LfDecomposition b = decompose_lf(*target_lf);
  if (a.head.empty() || b.head.empty()) {
    out.reason = "no head predicate to abduce over";
    return out;
  }

  switch (rel.name) {
    case RelationName::Result: {
      if (auto chain = kb.plausible_chain(a.head, b.head)) {
        out.satisfied = true;
        out.chain = *chain;
        out.presupposition = a.head + " -> " + b.head;
        return out;
      }
      out.reason = "cannot abduce " + a.head + " -> " + b.head;
      return out;
    }
    case RelationName::Explanation: {
      if (auto chain = kb.plausible_chain(b.head, a.head)) {
        out.satisfied = true;
        out.chain = *chain;
        out.presupposition = b.head + " -> " + a.head;
        return out;
      }
      out.reason = "cannot abduce " + b.head + " -> " + a.head;
      return out;
    }
    case RelationName::ViolatedExpectation: {
      if (negated_implication(a, b, kb, out.presupposition, out.chain)) {
        out.satisfied = true;
        return out;
      }
      out.reason = "cannot abduce " + a.head + " -> not " + b.head;
      return out;
    }
    case RelationName::DenialOfPreventer: {
      if (negated_implication(b, a, kb, out.presupposition, out.chain)) {
        out.satisfied = true;
        return out;
      }
      out.reason = "cannot abduce " + b.head + " -> not " + a.head;
      return out;
    }
    default:
      break;
  }
  out.reason = "unsupported relation";
  return out;
}

}  // namespace elco
