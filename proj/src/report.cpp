#include "elco/report.hpp"

#include <sstream>

#include <json.hpp>

#include "elco/errors.hpp"
#include "elco/term_io.hpp"

namespace elco {

double Report::accuracy() const {
  int total = matched + mismatched;
  return total == 0 ? 1.0 : static_cast<double>(matched) / total;
}

std::string Report::render(const RunOptions& opts) const {
  std::ostringstream os;
  if (opts.format == "records") {
    for (const ReportLine& l : lines) {
      nlohmann::json j{{"item", l.item},
                       {"link", l.link},
                       {"relation", l.relation},
                       {"felicitous", l.felicitous},
                       {"reason", l.reason},
                       {"lf", l.lf},
                       {"route", l.route}};
      if (l.gold)
        j["gold"] = *l.gold ? "ok" : "#";
      else
        j["gold"] = nullptr;
      j["match"] = l.match;
      os << j.dump() << "\n";
    }
    nlohmann::json summary{{"matched", matched},
                           {"mismatched", mismatched},
                           {"accuracy", accuracy()}};
    os << summary.dump() << "\n";
    return os.str();
  }

  for (const ReportLine& l : lines) {
    os << l.item << " link " << l.link << " [" << l.relation << "] ";
    os << (l.felicitous ? "felicitous" : "infelicitous");
    if (!l.felicitous && !l.reason.empty()) os << " <" << l.reason << ">";
    if (!l.lf.empty()) os << " lf=" << l.lf;
    if (!l.route.empty()) os << " route=" << l.route;
    if (l.gold)
      os << (l.match ? "  [gold agrees]" : "  [GOLD DISAGREES: expected " +
                                               std::string(*l.gold ? "ok" : "#") +
                                               "]");
    else
      os << "  [NO GOLD ANNOTATION]";
    os << "\n";
    if (opts.explain && l.item == *opts.explain)
      for (const std::string& t : l.trace) os << "    . " << t << "\n";
  }
  os << "----\n";
  os << "matched " << matched << " / " << (matched + mismatched);
  os << "  accuracy " << accuracy() << "\n";
  return os.str();
}

Report run_corpus(const std::string& corpus_path,
                  const std::string& lexicon_path, const std::string& kb_path,
                  const RunOptions& opts) {
  Lexicon lexicon = Lexicon::load(lexicon_path);
  KnowledgeBase kb = KnowledgeBase::load(kb_path);
  std::vector<DiscourseItem> items = load_corpus(corpus_path);

  Report report;
  for (const DiscourseItem& item : items) {
    ItemJudgment judged;
    try {
      judged = judge_item(item, lexicon, kb, opts.relation);
    } catch (const Error& e) {
      throw InputError("item " + item.id + ": " + e.what());
    }

    // One line per judged (link, relation); then flag gold entries that no
    // candidate relation covered.
    std::vector<std::map<std::string, bool>> seen(item.links.size());
    for (const Verdict& v : judged.verdicts) {
      ReportLine l;
      l.item = item.id;
      l.link = v.link_index;
      l.relation = relation_name(v.relation.name);
      l.felicitous = v.felicitous;
      l.reason = v.reason;
      if (v.lf) l.lf = print_term(*v.lf);
      if (v.route) l.route = route_name(*v.route);
      l.trace = v.trace;
      const Link& link = item.links[v.link_index];
      auto g = link.gold.find(l.relation);
      if (g != link.gold.end()) {
        l.gold = g->second;
        l.match = (g->second == v.felicitous);
      } else {
        l.gold = std::nullopt;
        l.match = false;
      }
      seen[v.link_index][l.relation] = true;
      (l.match ? report.matched : report.mismatched)++;
      report.lines.push_back(std::move(l));
    }
    for (std::size_t li = 0; li < item.links.size(); ++li) {
      for (const auto& [relname, gold] : item.links[li].gold) {
        if (opts.relation && relname != *opts.relation) continue;
        if (seen[li].count(relname)) continue;
        ReportLine l;
        l.item = item.id;
        l.link = static_cast<int>(li);
        l.relation = relname;
        l.reason = "gold names a relation the conjunction does not license";
        l.gold = gold;
        l.match = false;
        report.mismatched++;
        report.lines.push_back(std::move(l));
      }
    }
  }
  return report;
}

}  // namespace elco
