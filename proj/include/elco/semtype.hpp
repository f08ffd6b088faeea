#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace elco {

// Simple semantic types over the bases e (entity), t (truth value) and
// v (event).  Arrows are right-associative: e->e->t reads e->(e->t).
class SemType {
 public:
  enum class Base { Entity, Truth, Event };

  SemType() : SemType(entity()) {}

  static SemType entity();
  static SemType truth();
  static SemType event();
  static SemType base(Base b);
  static SemType arrow(const SemType& from, const SemType& to);

  bool is_base() const { return node_->base.has_value(); }
  bool is_arrow() const { return !is_base(); }
  Base base_kind() const { return *node_->base; }
  SemType from() const { return SemType(node_->from); }
  SemType to() const { return SemType(node_->to); }

  bool operator==(const SemType& other) const;
  bool operator!=(const SemType& other) const { return !(*this == other); }

  // Right-associated rendering; parse(str(t)) == t.
  std::string str() const;
  static SemType parse(std::string_view text);

 private:
  struct Node {
    std::optional<Base> base;
    std::shared_ptr<const Node> from, to;
  };
  explicit SemType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace elco
