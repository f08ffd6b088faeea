#include "elco/lexicon.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "elco/errors.hpp"
#include "elco/term_io.hpp"

namespace elco {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == sep) {
      out.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(field);
  return out;
}

}  // namespace

Lexicon Lexicon::parse(const std::string& contents) {
  Lexicon lex;
  std::istringstream in(contents);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != 6)
      throw InputError("lexicon line " + std::to_string(lineno) +
                       ": expected 6 tab-separated fields");
    LexEntry e;
    e.word = f[0];
    auto cat = category_from_name(f[1]);
    if (!cat)
      throw InputError("lexicon line " + std::to_string(lineno) +
                       ": unknown category '" + f[1] + "'");
    e.cat = *cat;
    if (f[2] != "-") e.type = SemType::parse(f[2]);
    if (f[3] != "-") {
      if (f[3].find('\\') != std::string::npos ||
          f[3].find(' ') != std::string::npos) {
        e.sem = parse_term(f[3], {});
      } else {
        if (!e.type)
          throw InputError("lexicon line " + std::to_string(lineno) +
                           ": constant without a type");
        e.sem = mk_const(f[3], *e.type);
      }
    }
    e.lemma = f[4] == "-" ? f[0] : f[4];
    if (f[5] != "-") {
      for (const std::string& feat : split(f[5], ',')) {
        if (feat == "stative") e.stative = true;
        else if (feat == "anaphor=event") e.event_anaphor = true;
        else if (feat == "voice=active") e.voice = Voice::Active;
        else if (feat == "voice=passive") e.voice = Voice::Passive;
        else if (feat == "vform=finite") e.vform = VForm::Finite;
        else if (feat == "vform=base") e.vform = VForm::Base;
        else if (feat == "vform=ppart") e.vform = VForm::PassiveParticiple;
        else
          throw InputError("lexicon line " + std::to_string(lineno) +
                           ": unknown feature '" + feat + "'");
      }
    }
    auto key = std::make_pair(e.word, e.cat);
    if (lex.entries_.count(key))
      throw InputError("lexicon line " + std::to_string(lineno) +
                       ": duplicate entry for '" + e.word + "' / " + f[1]);
    if (e.stative && e.sem && is_const(*e.sem))
      lex.stative_constants_.insert((*e.sem)->name);
    lex.entries_[key] = std::move(e);
  }
  return lex;
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open lexicon file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const LexEntry* Lexicon::lookup(const std::string& word, Category cat) const {
  auto it = entries_.find(std::make_pair(word, cat));
  return it == entries_.end() ? nullptr : &it->second;
}

bool Lexicon::stative_constant(const std::string& constant) const {
  return stative_constants_.count(constant) > 0;
}

}  // namespace elco
