#include "elco/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "elco/errors.hpp"

namespace elco {

namespace {

using nlohmann::json;

bool gold_mark_to_bool(const std::string& mark, const std::string& where) {
  if (mark == "ok") return true;
  if (mark == "#" || mark == "??") return false;
  throw InputError(where + ": bad gold mark '" + mark +
                   "' (expected ??, # or ok)");
}

DiscourseItem item_from_json(const json& j, int lineno) {
  std::string where = "corpus line " + std::to_string(lineno);
  if (!j.is_object() || !j.contains("id") || !j.contains("clauses") ||
      !j.contains("links"))
    throw InputError(where + ": record needs id, clauses and links");
  DiscourseItem item;
  item.id = j.at("id").get<std::string>();
  where += " (" + item.id + ")";
  for (const json& c : j.at("clauses")) item.clauses.push_back(c.get<std::string>());
  for (const json& l : j.at("links")) {
    Link link;
    link.from = l.at("from").get<int>();
    link.to = l.at("to").get<int>();
    link.conj = l.at("conj").get<std::string>();
    if (l.contains("reading") && !l.at("reading").is_null())
      link.reading = l.at("reading").get<std::string>();
    if (l.contains("intended") && !l.at("intended").is_null())
      link.intended = l.at("intended").get<std::string>();
    if (!l.contains("gold") || !l.at("gold").is_object())
      throw InputError(where + ": link needs a gold map");
    for (auto it = l.at("gold").begin(); it != l.at("gold").end(); ++it)
      link.gold[it.key()] = gold_mark_to_bool(it.value().get<std::string>(), where);
    if (link.from < 0 || link.to < 0 ||
        link.from >= static_cast<int>(item.clauses.size()) ||
        link.to >= static_cast<int>(item.clauses.size()))
      throw InputError(where + ": link index out of range");
    if (link.from >= link.to)
      throw InputError(where + ": links must run forward (no cataphora)");
    item.links.push_back(std::move(link));
  }
  return item;
}

}  // namespace

std::vector<DiscourseItem> parse_corpus(const std::string& contents) {
  std::vector<DiscourseItem> items;
  std::istringstream in(contents);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t")] == '#') continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InputError("corpus line " + std::to_string(lineno) + ": " +
                       e.what());
    }
    items.push_back(item_from_json(j, lineno));
  }
  return items;
}

std::vector<DiscourseItem> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

}  // namespace elco
