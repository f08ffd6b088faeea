#include "elco/semtype.hpp"

#include "elco/errors.hpp"

namespace elco {

SemType SemType::base(Base b) {
  auto n = std::make_shared<Node>();
  n->base = b;
  return SemType(n);
}

SemType SemType::entity() {
  static const SemType t = base(Base::Entity);
  return t;
}

SemType SemType::truth() {
  static const SemType t = base(Base::Truth);
  return t;
}

SemType SemType::event() {
  static const SemType t = base(Base::Event);
  return t;
}

SemType SemType::arrow(const SemType& from, const SemType& to) {
  auto n = std::make_shared<Node>();
  n->from = from.node_;
  n->to = to.node_;
  return SemType(n);
}

bool SemType::operator==(const SemType& other) const {
  if (node_ == other.node_) return true;
  if (is_base() != other.is_base()) return false;
  if (is_base()) return base_kind() == other.base_kind();
  return from() == other.from() && to() == other.to();
}

std::string SemType::str() const {
  if (is_base()) {
    switch (base_kind()) {
      case Base::Entity: return "e";
      case Base::Truth: return "t";
      case Base::Event: return "v";
    }
  }
  std::string lhs = from().str();
  if (from().is_arrow()) lhs = "(" + lhs + ")";
  return lhs + "->" + to().str();
}

namespace {

SemType parse_type_at(std::string_view text, std::size_t& pos);

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

SemType parse_prim(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  if (pos >= text.size()) throw SyntaxError("expected type", pos);
  char c = text[pos];
  switch (c) {
    case 'e': ++pos; return SemType::entity();
    case 't': ++pos; return SemType::truth();
    case 'v': ++pos; return SemType::event();
    case '(': {
      ++pos;
      SemType inner = parse_type_at(text, pos);
      skip_ws(text, pos);
      if (pos >= text.size() || text[pos] != ')')
        throw SyntaxError("expected ')' in type", pos);
      ++pos;
      return inner;
    }
    default:
      throw SyntaxError(std::string("unexpected '") + c + "' in type", pos);
  }
}

SemType parse_type_at(std::string_view text, std::size_t& pos) {
  SemType lhs = parse_prim(text, pos);
  skip_ws(text, pos);
  if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
    pos += 2;
    SemType rhs = parse_type_at(text, pos);
    return SemType::arrow(lhs, rhs);
  }
  return lhs;
}

}  // namespace

SemType SemType::parse(std::string_view text) {
  std::size_t pos = 0;
  SemType t = parse_type_at(text, pos);
  skip_ws(text, pos);
  if (pos != text.size())
    throw SyntaxError("trailing characters after type", pos);
  return t;
}

}  // namespace elco
