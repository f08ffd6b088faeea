#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "elco/term.hpp"
#include "elco/tree.hpp"

namespace elco {

struct LexEntry {
  std::string word;
  Category cat = Category::N;
  std::optional<SemType> type;
  std::optional<Term> sem;  // a constant, or a small lambda for function words
  std::string lemma;
  Voice voice = Voice::None;
  VForm vform = VForm::None;
  bool stative = false;
  bool event_anaphor = false;
};

// Closed lexicon loaded from a line-oriented file:
//   word<TAB>category<TAB>semtype<TAB>constant<TAB>lemma<TAB>features
// '#' starts a comment, '-' marks an absent field.  The constant field may
// hold a lambda term in the term syntax for function words.  Features are a
// comma list of voice=..., vform=..., stative, anaphor=event.
class Lexicon {
 public:
  static Lexicon load(const std::string& path);       // throws InputError
  static Lexicon parse(const std::string& contents);  // throws InputError

  const LexEntry* lookup(const std::string& word, Category cat) const;
  bool stative_constant(const std::string& constant) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<std::string, Category>, LexEntry> entries_;
  std::set<std::string> stative_constants_;
};

}  // namespace elco
