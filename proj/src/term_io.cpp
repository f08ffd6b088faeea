#include "elco/term_io.hpp"

#include <cctype>
#include <vector>

#include "elco/errors.hpp"

namespace elco {

namespace {

std::string print_atom(const Term& t) {
  if (is_const(t) || is_var(t)) return t->name;
  return "(" + print_term(t) + ")";
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

struct TermParser {
  std::string_view text;
  std::size_t pos = 0;
  const std::map<std::string, SemType>& consts;
  std::vector<std::pair<std::string, SemType>> scope;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at(char c) { return pos < text.size() && text[pos] == c; }

  std::string read_name() {
    std::size_t start = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    if (pos == start) throw SyntaxError("expected name", pos);
    return std::string(text.substr(start, pos - start));
  }

  SemType read_binder_type() {
    // Type text runs to the '.' that starts the abstraction body.
    std::size_t dot = text.find('.', pos);
    if (dot == std::string_view::npos)
      throw SyntaxError("expected '.' after binder type", pos);
    SemType ty = SemType::parse(text.substr(pos, dot - pos));
    pos = dot;
    return ty;
  }

  Term parse_atom() {
    skip_ws();
    if (at('(')) {
      ++pos;
      Term t = parse();
      skip_ws();
      if (!at(')')) throw SyntaxError("expected ')'", pos);
      ++pos;
      return t;
    }
    std::size_t start = pos;
    std::string name = read_name();
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return mk_var(name, it->second);
    auto c = consts.find(name);
    if (c == consts.end())
      throw SyntaxError("unknown name '" + name + "'", start);
    return mk_const(name, c->second);
  }

  Term parse() {
    skip_ws();
    if (at('\\')) {
      ++pos;
      std::string vn = read_name();
      if (!at(':')) throw SyntaxError("expected ':' after binder", pos);
      ++pos;
      SemType ty = read_binder_type();
      if (!at('.')) throw SyntaxError("expected '.'", pos);
      ++pos;
      scope.emplace_back(vn, ty);
      Term body = parse();
      scope.pop_back();
      return mk_abs(mk_var(vn, ty), body);
    }
    Term t = parse_atom();
    for (;;) {
      skip_ws();
      if (pos >= text.size() || at(')')) return t;
      if (at('\\')) {
        Term rhs = parse();
        return mk_app(t, rhs);
      }
      t = mk_app(t, parse_atom());
    }
  }
};

}  // namespace

std::string print_term(const Term& t) {
  switch (t->kind) {
    case TermNode::Kind::Const:
    case TermNode::Kind::Var:
      return t->name;
    case TermNode::Kind::App: {
      std::string head =
          is_abs(t->fn) ? "(" + print_term(t->fn) + ")" : print_term(t->fn);
      return head + " " + print_atom(t->arg);
    }
    case TermNode::Kind::Abs:
      return "\\" + t->binder->name + ":" + t->binder->type.str() + "." +
             print_term(t->body);
  }
  return {};
}

Term parse_term(std::string_view text,
                const std::map<std::string, SemType>& consts) {
  TermParser p{text, 0, consts, {}};
  Term t = p.parse();
  p.skip_ws();
  if (p.pos != text.size())
    throw SyntaxError("trailing characters after term", p.pos);
  return t;
}

}  // namespace elco
