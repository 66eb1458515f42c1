#include "unitgraph/descriptor.hpp"

#include <sstream>

#include "unitgraph/errors.hpp"
#include "unitgraph/number_theory.hpp"

namespace unitgraph {

std::uint32_t GroupId::order() const {
  switch (kind) {
    case Kind::Cyclic:
      return cyclic_order;
    case Kind::Dihedral8:
    case Kind::Quaternion8:
      return 8;
  }
  return 0;
}

std::string GroupId::name() const {
  switch (kind) {
    case Kind::Cyclic:
      return "C" + std::to_string(cyclic_order);
    case Kind::Dihedral8:
      return "D4";
    case Kind::Quaternion8:
      return "Q8";
  }
  return "?";
}

RingDescriptor RingDescriptor::zn(std::uint64_t n) { return RingDescriptor(ZnNode{n}); }
RingDescriptor RingDescriptor::gf(std::uint64_t q) { return RingDescriptor(GfNode{q}); }

RingDescriptor RingDescriptor::mat(std::uint32_t k, RingDescriptor base) {
  return RingDescriptor(MatNode{k, std::make_shared<const RingDescriptor>(std::move(base))});
}

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> factors) {
  return RingDescriptor(ProductNode{std::move(factors)});
}

RingDescriptor RingDescriptor::group_algebra(RingDescriptor field, GroupId group) {
  return RingDescriptor(
      GroupAlgebraNode{std::make_shared<const RingDescriptor>(std::move(field)), group});
}

namespace {

void print(std::ostream& os, const RingDescriptor& d, bool in_product) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ZnNode>) {
          os << 'Z' << node.n;
        } else if constexpr (std::is_same_v<T, GfNode>) {
          os << "GF(" << node.q << ')';
        } else if constexpr (std::is_same_v<T, MatNode>) {
          os << 'M' << node.k << '(';
          print(os, *node.base, false);
          os << ')';
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          if (in_product) os << '(';
          for (std::size_t i = 0; i < node.factors.size(); ++i) {
            if (i != 0) os << " x ";
            print(os, node.factors[i], true);
          }
          if (in_product) os << ')';
        } else {
          os << "GA(";
          print(os, *node.field, false);
          os << ", " << node.group.name() << ')';
        }
      },
      d.node());
}

}  // namespace

std::string RingDescriptor::to_string() const {
  std::ostringstream os;
  print(os, *this, false);
  return os.str();
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.node_.index() != b.node_.index()) return false;
  return std::visit(
      [&](const auto& na) {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node_);
        if constexpr (std::is_same_v<T, ZnNode>) {
          return na.n == nb.n;
        } else if constexpr (std::is_same_v<T, GfNode>) {
          return na.q == nb.q;
        } else if constexpr (std::is_same_v<T, MatNode>) {
          return na.k == nb.k && *na.base == *nb.base;
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          return na.factors == nb.factors;
        } else {
          return na.group == nb.group && *na.field == *nb.field;
        }
      },
      a.node_);
}

bool is_field_descriptor(const RingDescriptor& d) {
  if (const auto* z = d.as<ZnNode>()) return nt::is_prime(z->n);
  return d.as<GfNode>() != nullptr;
}

std::uint64_t field_order(const RingDescriptor& d) {
  if (const auto* z = d.as<ZnNode>()) return z->n;
  if (const auto* g = d.as<GfNode>()) return g->q;
  throw InvalidArgument(d.to_string() + " is not a field descriptor");
}

void validate(const RingDescriptor& d) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ZnNode>) {
          if (node.n < 2) throw InvalidArgument("Z" + std::to_string(node.n) + ": n must be at least 2");
        } else if constexpr (std::is_same_v<T, GfNode>) {
          if (!nt::prime_power(node.q)) {
            throw InvalidArgument(std::to_string(node.q) + " is not a prime power");
          }
        } else if constexpr (std::is_same_v<T, MatNode>) {
          if (node.k < 1) throw InvalidArgument("matrix size must be at least 1");
          validate(*node.base);
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          if (node.factors.empty()) throw InvalidArgument("product needs at least one factor");
          for (const auto& f : node.factors) validate(f);
        } else {
          if (!is_field_descriptor(*node.field)) {
            throw InvalidArgument("group algebra coefficients must be a field, got " +
                                  node.field->to_string());
          }
          validate(*node.field);
          if (node.group.kind == GroupId::Kind::Cyclic && node.group.cyclic_order < 1) {
            throw InvalidArgument("cyclic group order must be at least 1");
          }
        }
      },
      d.node());
}

std::optional<std::uint64_t> symbolic_order(const RingDescriptor& d) {
  return std::visit(
      [&](const auto& node) -> std::optional<std::uint64_t> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ZnNode>) {
          return node.n;
        } else if constexpr (std::is_same_v<T, GfNode>) {
          return node.q;
        } else if constexpr (std::is_same_v<T, MatNode>) {
          const auto b = symbolic_order(*node.base);
          if (!b) return std::nullopt;
          return nt::checked_pow(*b, std::uint64_t{node.k} * node.k);
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          std::uint64_t total = 1;
          for (const auto& f : node.factors) {
            const auto o = symbolic_order(f);
            if (!o || total > (std::uint64_t{1} << 63) / *o) return std::nullopt;
            total *= *o;
          }
          return total;
        } else {
          return nt::checked_pow(field_order(*node.field), node.group.order());
        }
      },
      d.node());
}

}  // namespace unitgraph
