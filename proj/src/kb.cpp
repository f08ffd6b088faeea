#include "elco/kb.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <sstream>

#include "elco/errors.hpp"

namespace elco {

namespace {

std::vector<std::string> words_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

KnowledgeBase KnowledgeBase::parse(const std::string& contents) {
  KnowledgeBase kb;
  std::istringstream in(contents);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<std::string> w = words_of(line);
    if (w.empty()) continue;
    const std::string& rec = w[0];
    auto need = [&](std::size_t lo, std::size_t hi) {
      if (w.size() < lo + 1 || w.size() > hi + 1)
        throw InputError("kb line " + std::to_string(lineno) +
                         ": malformed '" + rec + "' record");
    };
    if (rec == "prop") {
      need(2, 3);
      bool positive = true;
      if (w.size() == 4) {
        if (w[3] != "neg")
          throw InputError("kb line " + std::to_string(lineno) +
                           ": expected 'neg'");
        positive = false;
      }
      kb.props_[w[1]][w[2]] = positive;
      kb.entities_.insert(w[2]);
    } else if (rec == "isa") {
      need(2, 2);
      kb.isa_[w[1]].insert(w[2]);
    } else if (rec == "plausible") {
      need(2, 2);
      kb.plausible_[w[1]].insert(w[2]);
    } else if (rec == "antonym") {
      need(2, 2);
      kb.antonyms_.insert({w[1], w[2]});
      kb.antonyms_.insert({w[2], w[1]});
    } else if (rec == "member") {
      need(2, 2);
      kb.member_.insert({w[1], w[2]});
      kb.entities_.insert(w[1]);
      kb.entities_.insert(w[2]);
    } else if (rec == "subset") {
      need(2, 2);
      kb.subset_.insert({w[1], w[2]});
      kb.entities_.insert(w[1]);
      kb.entities_.insert(w[2]);
    } else if (rec == "nominal") {
      need(2, 2);
      kb.nominal_[w[1]] = w[2];
    } else {
      throw InputError("kb line " + std::to_string(lineno) +
                       ": unknown record '" + rec + "'");
    }
  }
  // The subsumption graph must stay acyclic for generalize to make sense.
  std::map<std::string, int> color;  // 0 new, 1 open, 2 done
  std::function<void(const std::string&)> visit = [&](const std::string& p) {
    if (color[p] == 1) throw InputError("kb: isa cycle through '" + p + "'");
    if (color[p] == 2) return;
    color[p] = 1;
    auto it = kb.isa_.find(p);
    if (it != kb.isa_.end())
      for (const std::string& parent : it->second) visit(parent);
    color[p] = 2;
  };
  for (const auto& [child, parents] : kb.isa_) visit(child);
  return kb;
}

KnowledgeBase KnowledgeBase::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open kb file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

bool KnowledgeBase::similar(const std::string& a, const std::string& b) const {
  if (a == b) return true;
  for (const auto& [q, holders] : props_) {
    auto ia = holders.find(a);
    auto ib = holders.find(b);
    if (ia != holders.end() && ia->second && ib != holders.end() && ib->second)
      return true;
  }
  return false;
}

bool KnowledgeBase::dissimilar(const std::string& a,
                               const std::string& b) const {
  for (const auto& [q, holders] : props_) {
    auto ia = holders.find(a);
    auto ib = holders.find(b);
    if (ia != holders.end() && ia->second && ib != holders.end() &&
        !ib->second)
      return true;
  }
  return false;
}

std::map<std::string, int> KnowledgeBase::ancestors(const std::string& p,
                                                    int depth) const {
  std::map<std::string, int> dist{{p, 0}};
  std::deque<std::string> queue{p};
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    int d = dist[cur];
    if (d >= depth) continue;
    auto it = isa_.find(cur);
    if (it == isa_.end()) continue;
    for (const std::string& parent : it->second) {
      if (!dist.count(parent)) {
        dist[parent] = d + 1;
        queue.push_back(parent);
      }
    }
  }
  return dist;
}

std::optional<std::string> KnowledgeBase::generalize(const std::string& p0,
                                                     const std::string& p1,
                                                     int depth) const {
  if (p0 == p1) return p0;
  auto a0 = ancestors(p0, depth);
  auto a1 = ancestors(p1, depth);
  std::optional<std::string> best;
  int best_cost = 0;
  for (const auto& [anc, d0] : a0) {
    auto it = a1.find(anc);
    if (it == a1.end()) continue;
    int cost = d0 + it->second;
    if (!best || cost < best_cost || (cost == best_cost && anc < *best)) {
      best = anc;
      best_cost = cost;
    }
  }
  return best;
}

bool KnowledgeBase::is_member(const std::string& b, const std::string& a) const {
  return member_.count({b, a}) > 0;
}

bool KnowledgeBase::is_subset(const std::string& b, const std::string& a) const {
  return subset_.count({b, a}) > 0;
}

bool KnowledgeBase::same_entity(const std::string& a,
                                const std::string& b) const {
  if (a == b) return true;
  return is_subset(a, b) && is_subset(b, a);
}

bool KnowledgeBase::antonym(const std::string& x, const std::string& y) const {
  return antonyms_.count({x, y}) > 0;
}

std::vector<std::string> KnowledgeBase::plausible_reach(const std::string& from,
                                                        int max_edges) const {
  std::vector<std::string> order{from};
  std::map<std::string, int> dist{{from, 0}};
  std::size_t next = 0;
  while (next < order.size()) {
    std::string cur = order[next++];
    int d = dist[cur];
    if (d >= max_edges) continue;
    auto it = plausible_.find(cur);
    if (it == plausible_.end()) continue;
    for (const std::string& dst : it->second) {
      if (!dist.count(dst)) {
        dist[dst] = d + 1;
        order.push_back(dst);
      }
    }
  }
  return order;
}

std::optional<std::vector<std::string>> KnowledgeBase::plausible_chain(
    const std::string& from, const std::string& to, int max_edges) const {
  std::map<std::string, std::string> parent;
  std::map<std::string, int> dist{{from, 0}};
  std::deque<std::string> queue{from};
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    if (cur == to) {
      std::vector<std::string> chain{cur};
      while (cur != from) {
        cur = parent[cur];
        chain.push_back(cur);
      }
      std::reverse(chain.begin(), chain.end());
      return chain;
    }
    int d = dist[cur];
    if (d >= max_edges) continue;
    auto it = plausible_.find(cur);
    if (it == plausible_.end()) continue;
    for (const std::string& dst : it->second) {
      if (!dist.count(dst)) {
        dist[dst] = d + 1;
        parent[dst] = cur;
        queue.push_back(dst);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> KnowledgeBase::nominal_verb(
    const std::string& noun) const {
  auto it = nominal_.find(noun);
  if (it == nominal_.end()) return std::nullopt;
  return it->second;
}

bool KnowledgeBase::has_entity(const std::string& e) const {
  return entities_.count(e) > 0;
}

}  // namespace elco
