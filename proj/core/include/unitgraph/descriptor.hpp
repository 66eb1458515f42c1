#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace unitgraph {

/// Finite groups available as group-algebra supports.
struct GroupId {
  enum class Kind { Cyclic, Dihedral8, Quaternion8 };

  Kind kind = Kind::Cyclic;
  std::uint32_t cyclic_order = 1;  ///< only meaningful for Cyclic

  static GroupId cyclic(std::uint32_t m) { return {Kind::Cyclic, m}; }
  static GroupId dihedral8() { return {Kind::Dihedral8, 0}; }
  static GroupId quaternion8() { return {Kind::Quaternion8, 0}; }

  std::uint32_t order() const;
  std::string name() const;  ///< "C4", "D4", "Q8"

  friend bool operator==(const GroupId& a, const GroupId& b) {
    return a.kind == b.kind && (a.kind != Kind::Cyclic || a.cyclic_order == b.cyclic_order);
  }
};

class RingDescriptor;

struct ZnNode {
  std::uint64_t n;
};
struct GfNode {
  std::uint64_t q;
};
struct MatNode {
  std::uint32_t k;
  std::shared_ptr<const RingDescriptor> base;
};
struct ProductNode {
  std::vector<RingDescriptor> factors;
};
struct GroupAlgebraNode {
  std::shared_ptr<const RingDescriptor> field;  ///< Gf(q) or Zn(p)
  GroupId group;
};

/// Compositional description of a finite ring. Cheap to copy.
class RingDescriptor {
 public:
  using Node = std::variant<ZnNode, GfNode, MatNode, ProductNode, GroupAlgebraNode>;

  static RingDescriptor zn(std::uint64_t n);
  static RingDescriptor gf(std::uint64_t q);
  static RingDescriptor mat(std::uint32_t k, RingDescriptor base);
  static RingDescriptor product(std::vector<RingDescriptor> factors);
  static RingDescriptor group_algebra(RingDescriptor field, GroupId group);

  const Node& node() const noexcept { return node_; }

  template <class T>
  const T* as() const noexcept {
    return std::get_if<T>(&node_);
  }

  /// Canonical ring-expression text; parse(to_string()) reproduces the descriptor.
  std::string to_string() const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);

 private:
  explicit RingDescriptor(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// Throws InvalidArgument when a descriptor violates its invariants.
void validate(const RingDescriptor& d);

/// |R| computed symbolically; nullopt when it exceeds 2^63.
std::optional<std::uint64_t> symbolic_order(const RingDescriptor& d);

/// True when the descriptor is literally a field: Gf(q) or Zn(p) with p prime.
bool is_field_descriptor(const RingDescriptor& d);

/// Order of the field described by a field descriptor.
std::uint64_t field_order(const RingDescriptor& d);

}  // namespace unitgraph
