#include "elco/tree.hpp"

#include <atomic>
#include <cctype>
#include <sstream>

#include "elco/errors.hpp"

namespace elco {

namespace {

std::atomic<std::uint64_t> g_reconstruction_ops{0};

const char* kCategoryNames[] = {"S",  "NP", "VP", "V", "AUX",
                                "AP", "PP", "P",  "N", "DET"};

}  // namespace

void count_reconstruction_op() { ++g_reconstruction_ops; }

std::uint64_t reconstruction_ops() { return g_reconstruction_ops.load(); }

std::string category_name(Category c) {
  return kCategoryNames[static_cast<int>(c)];
}

std::optional<Category> category_from_name(const std::string& name) {
  for (int i = 0; i < 10; ++i)
    if (name == kCategoryNames[i]) return static_cast<Category>(i);
  return std::nullopt;
}

std::string form_kind_name(FormKind k) {
  switch (k) {
    case FormKind::Full: return "Full";
    case FormKind::Gapping: return "Gapping";
    case FormKind::Stripping: return "Stripping";
    case FormKind::VPE: return "VPE";
    case FormKind::EventRef: return "EventRef";
  }
  return {};
}

namespace {

std::string flags_of(const TreeNode& n) {
  std::vector<std::string> fs;
  switch (n.mark) {
    case EllipsisMark::Gapped: fs.push_back("gapped"); break;
    case EllipsisMark::Stripped: fs.push_back("stripped"); break;
    case EllipsisMark::Elided: fs.push_back("elided"); break;
    case EllipsisMark::None: break;
  }
  if (n.empty) fs.push_back("elided");
  if (n.voice == Voice::Active) fs.push_back("voice=active");
  if (n.voice == Voice::Passive) fs.push_back("voice=passive");
  if (n.vform == VForm::Finite) fs.push_back("vform=finite");
  if (n.vform == VForm::Base) fs.push_back("vform=base");
  if (n.vform == VForm::PassiveParticiple) fs.push_back("vform=ppart");
  if (n.stative) fs.push_back("stative");
  if (n.event_anaphor) fs.push_back("event");
  if (n.trace_id) fs.push_back("trace=" + std::to_string(*n.trace_id));
  if (n.binds_trace) fs.push_back("binds=" + std::to_string(*n.binds_trace));
  if (!n.lemma.empty() && n.lemma != n.word)
    fs.push_back("lemma=" + n.lemma);
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i)
    out += (i ? "," : "") + fs[i];
  return out;
}

}  // namespace

std::string print_tree(const Tree& t) {
  std::ostringstream os;
  os << "(" << category_name(t->cat);
  std::string flags = flags_of(*t);
  if (!flags.empty()) os << "[" << flags << "]";
  if (!t->word.empty()) os << " " << t->word;
  for (const Tree& c : t->children) os << " " << print_tree(c);
  os << ")";
  return os.str();
}

namespace {

struct TreeParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, pos); }

  std::string read_token() {
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')' && text[pos] != '[')
      ++pos;
    if (pos == start) fail("expected token");
    return text.substr(start, pos - start);
  }

  void apply_flag(TreeNode& n, const std::string& flag) {
    auto eq = flag.find('=');
    std::string key = flag.substr(0, eq);
    std::string val = eq == std::string::npos ? "" : flag.substr(eq + 1);
    if (key == "gapped") n.mark = EllipsisMark::Gapped;
    else if (key == "stripped") n.mark = EllipsisMark::Stripped;
    else if (key == "elided") n.mark = EllipsisMark::Elided;
    else if (key == "stative") n.stative = true;
    else if (key == "event") n.event_anaphor = true;
    else if (key == "trace") n.trace_id = std::stoi(val);
    else if (key == "binds") n.binds_trace = std::stoi(val);
    else if (key == "lemma") n.lemma = val;
    else if (key == "voice") {
      if (val == "active") n.voice = Voice::Active;
      else if (val == "passive") n.voice = Voice::Passive;
      else fail("bad voice '" + val + "'");
    } else if (key == "vform") {
      if (val == "finite") n.vform = VForm::Finite;
      else if (val == "base") n.vform = VForm::Base;
      else if (val == "ppart") n.vform = VForm::PassiveParticiple;
      else fail("bad vform '" + val + "'");
    } else {
      fail("unknown flag '" + key + "'");
    }
  }

  Tree parse_node() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    skip_ws();
    auto node = std::make_shared<TreeNode>();
    std::string catname = read_token();
    auto cat = category_from_name(catname);
    if (!cat) fail("unknown category '" + catname + "'");
    node->cat = *cat;
    if (pos < text.size() && text[pos] == '[') {
      ++pos;
      std::string flag;
      while (pos < text.size() && text[pos] != ']') {
        if (text[pos] == ',') {
          if (!flag.empty()) apply_flag(*node, flag);
          flag.clear();
        } else {
          flag += text[pos];
        }
        ++pos;
      }
      if (pos >= text.size()) fail("unterminated '['");
      ++pos;  // ']'
      if (!flag.empty()) apply_flag(*node, flag);
    }
    for (;;) {
      skip_ws();
      if (pos >= text.size()) fail("expected ')'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == '(') {
        node->children.push_back(parse_node());
      } else {
        node->word = read_token();
      }
    }
    // A childless, wordless node marked [elided] is an empty phi node.
    if (node->mark == EllipsisMark::Elided && node->children.empty() &&
        node->word.empty()) {
      node->mark = EllipsisMark::None;
      node->empty = true;
    }
    return node;
  }
};

}  // namespace

Tree parse_tree_text(const std::string& text) {
  TreeParser p{text, 0};
  Tree t = p.parse_node();
  p.skip_ws();
  if (p.pos != text.size())
    throw SyntaxError("trailing characters after tree", p.pos);
  return t;
}

bool same_shape(const Tree& a, const Tree& b) {
  // An empty lemma stands for the word itself.
  const std::string& lem_a = a->lemma.empty() ? a->word : a->lemma;
  const std::string& lem_b = b->lemma.empty() ? b->word : b->lemma;
  if (a->cat != b->cat || a->word != b->word || a->empty != b->empty ||
      a->mark != b->mark || a->voice != b->voice || a->vform != b->vform ||
      a->stative != b->stative || a->event_anaphor != b->event_anaphor ||
      lem_a != lem_b || a->trace_id != b->trace_id ||
      a->binds_trace != b->binds_trace ||
      a->children.size() != b->children.size())
    return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!same_shape(a->children[i], b->children[i])) return false;
  return true;
}

Tree find_first(const Tree& t,
                const std::function<bool(const TreeNode&)>& pred) {
  if (pred(*t)) return t;
  for (const Tree& c : t->children)
    if (Tree hit = find_first(c, pred)) return hit;
  return nullptr;
}

}  // namespace elco
