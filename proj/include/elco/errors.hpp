#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elco {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text in one of the line/bracket formats (types, terms, trees).
struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

// A leaf word with no lexicon entry for its category.
struct UnknownWordError : Error {
  UnknownWordError(const std::string& word, const std::string& category)
      : Error("unknown word '" + word + "' under " + category), word(word) {}
  std::string word;
};

// Ill-typed application while building or composing terms.
struct TypeClashError : Error {
  using Error::Error;
};

// Bad lexicon/KB/corpus input files.
struct InputError : Error {
  using Error::Error;
};

struct UnknownConjunctionError : Error {
  explicit UnknownConjunctionError(const std::string& conj)
      : Error("unknown conjunction '" + conj + "'") {}
};

}  // namespace elco
