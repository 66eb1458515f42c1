#include "unitgraph/radical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "unitgraph/errors.hpp"
#include "unitgraph/number_theory.hpp"

namespace unitgraph {

namespace {

VertexSet radical_generic(const Ring& ring) {
  const std::size_t n = ring.order();
  VertexSet out(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool in = true;
    for (std::size_t r = 0; r < n && in; ++r) {
      in = ring.is_unit(ring.sub(ring.one(), ring.mul(static_cast<Elem>(r), static_cast<Elem>(x))));
    }
    if (in) out.insert(x);
  }
  return out;
}

bool is_p_group_over(const GroupId& g, std::uint64_t p) {
  std::uint64_t n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

VertexSet radical_structural(const Ring& ring) {
  if (!ring.descriptor()) throw Unsupported("structural radical needs a descriptor");
  const auto& d = *ring.descriptor();
  const std::size_t n = ring.order();
  VertexSet out(n);

  if (const auto* z = d.as<ZnNode>()) {
    const auto rad = nt::radical(z->n);
    for (std::size_t x = 0; x < n; x += rad) out.insert(x);
    return out;
  }
  if (d.as<GfNode>() != nullptr) {
    out.insert(0);
    return out;
  }
  if (d.as<MatNode>() != nullptr) {
    const auto jb = radical_structural(ring.base());
    for (std::size_t x = 0; x < n; ++x) {
      const auto entries = ring.components(static_cast<Elem>(x));
      if (std::all_of(entries.begin(), entries.end(), [&](Elem e) { return jb.contains(e); })) {
        out.insert(x);
      }
    }
    return out;
  }
  if (d.as<ProductNode>() != nullptr) {
    std::vector<VertexSet> parts;
    for (const auto& f : ring.factors()) parts.push_back(radical_structural(*f));
    for (std::size_t x = 0; x < n; ++x) {
      const auto c = ring.components(static_cast<Elem>(x));
      bool in = true;
      for (std::size_t i = 0; i < c.size() && in; ++i) in = parts[i].contains(c[i]);
      if (in) out.insert(x);
    }
    return out;
  }
  const auto& ga = *d.as<GroupAlgebraNode>();
  const Ring& field = ring.base();
  if (!is_p_group_over(ga.group, field.characteristic())) {
    throw Unsupported(d.to_string() + ": group order is not a power of the characteristic");
  }
  for (std::size_t x = 0; x < n; ++x) {
    Elem sum = field.zero();
    for (auto c : ring.components(static_cast<Elem>(x))) sum = field.add(sum, c);
    if (sum == field.zero()) out.insert(x);
  }
  return out;
}

// Unsorted blocks with per-element images (one component per block).
struct Projected {
  std::vector<WedderburnBlock> blocks;
  std::vector<std::vector<Elem>> images;
};

std::optional<std::vector<WedderburnBlock>> raw_blocks(const RingDescriptor& d) {
  return std::visit(
      [&](const auto& node) -> std::optional<std::vector<WedderburnBlock>> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ZnNode>) {
          std::vector<WedderburnBlock> out;
          for (auto p : nt::prime_divisors(node.n)) out.push_back({1, p});
          return out;
        } else if constexpr (std::is_same_v<T, GfNode>) {
          return std::vector<WedderburnBlock>{{1, node.q}};
        } else if constexpr (std::is_same_v<T, MatNode>) {
          auto inner = raw_blocks(*node.base);
          if (!inner) return std::nullopt;
          for (auto& b : *inner) b.n *= node.k;
          return inner;
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          std::vector<WedderburnBlock> out;
          for (const auto& f : node.factors) {
            auto inner = raw_blocks(f);
            if (!inner) return std::nullopt;
            out.insert(out.end(), inner->begin(), inner->end());
          }
          return out;
        } else {
          const std::uint64_t q = field_order(*node.field);
          const std::uint64_t p = nt::prime_power(q)->first;
          if (!is_p_group_over(node.group, p)) return std::nullopt;
          return std::vector<WedderburnBlock>{{1, q}};
        }
      },
      d.node());
}

std::vector<Elem> to_digits(Elem x, std::uint64_t radix, std::size_t count) {
  std::vector<Elem> d(count);
  std::uint64_t v = x;
  for (std::size_t i = 0; i < count; ++i) {
    d[i] = static_cast<Elem>(v % radix);
    v /= radix;
  }
  return d;
}

Elem from_digits(const std::vector<Elem>& d, std::uint64_t radix) {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * radix + d[i];
  return static_cast<Elem>(v);
}

std::optional<Projected> project_all(const Ring& ring) {
  const auto& d = *ring.descriptor();
  auto blocks = raw_blocks(d);
  if (!blocks) return std::nullopt;
  Projected out{*blocks, std::vector<std::vector<Elem>>(ring.order())};
  const std::size_t n = ring.order();

  if (d.as<ZnNode>() != nullptr) {
    for (std::size_t x = 0; x < n; ++x) {
      for (const auto& b : out.blocks) out.images[x].push_back(static_cast<Elem>(x % b.q));
    }
    return out;
  }
  if (d.as<GfNode>() != nullptr) {
    for (std::size_t x = 0; x < n; ++x) out.images[x] = {static_cast<Elem>(x)};
    return out;
  }
  if (d.as<GroupAlgebraNode>() != nullptr) {
    const Ring& field = ring.base();
    for (std::size_t x = 0; x < n; ++x) {
      Elem sum = field.zero();
      for (auto c : ring.components(static_cast<Elem>(x))) sum = field.add(sum, c);
      out.images[x] = {sum};
    }
    return out;
  }
  if (d.as<ProductNode>() != nullptr) {
    std::vector<Projected> parts;
    for (const auto& f : ring.factors()) parts.push_back(*project_all(*f));
    for (std::size_t x = 0; x < n; ++x) {
      const auto c = ring.components(static_cast<Elem>(x));
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& img = parts[i].images[c[i]];
        out.images[x].insert(out.images[x].end(), img.begin(), img.end());
      }
    }
    return out;
  }
  // M_k(B): each entry projects into the blocks of B; block i of the result is
  // the k x k block matrix of those n_i x n_i images.
  const auto base = project_all(ring.base());
  const std::uint32_t k = ring.matrix_size();
  for (std::size_t x = 0; x < n; ++x) {
    const auto entries = ring.components(static_cast<Elem>(x));
    for (std::size_t bi = 0; bi < base->blocks.size(); ++bi) {
      const std::uint32_t m = base->blocks[bi].n;
      const std::uint64_t q = base->blocks[bi].q;
      const std::uint32_t big = k * m;
      std::vector<Elem> digits(static_cast<std::size_t>(big) * big, 0);
      for (std::uint32_t r = 0; r < k; ++r) {
        for (std::uint32_t c = 0; c < k; ++c) {
          const auto small = to_digits(base->images[entries[r * k + c]][bi], q,
                                       static_cast<std::size_t>(m) * m);
          for (std::uint32_t a = 0; a < m; ++a) {
            for (std::uint32_t b = 0; b < m; ++b) {
              digits[(r * m + a) * big + (c * m + b)] = small[a * m + b];
            }
          }
        }
      }
      out.images[x].push_back(from_digits(digits, q));
    }
  }
  return out;
}

}  // namespace

VertexSet jacobson_radical(const Ring& ring, RadicalMethod method) {
  return method == RadicalMethod::Generic ? radical_generic(ring) : radical_structural(ring);
}

VertexSet QuotientRing::coset(Elem c) const {
  VertexSet out(parent_->order());
  const Elem rep = representative(c);
  ideal_.for_each([&](std::size_t j) { out.insert(parent_->add(rep, static_cast<Elem>(j))); });
  return out;
}

VertexSet QuotientRing::preimage(const VertexSet& cosets) const {
  VertexSet out(parent_->order());
  for (std::size_t x = 0; x < parent_->order(); ++x) {
    if (cosets.contains(reduce(static_cast<Elem>(x)))) out.insert(x);
  }
  return out;
}

VertexSet QuotientRing::image(const VertexSet& elements) const {
  VertexSet out(order());
  elements.for_each([&](std::size_t x) { out.insert(reduce(static_cast<Elem>(x))); });
  return out;
}

QuotientRing quotient_by_ideal(const RingPtr& ring, const VertexSet& ideal) {
  const std::size_t n = ring->order();
  if (ideal.universe() != n || !ideal.contains(0)) {
    throw InvalidArgument("ideal must be a subset of the ring containing zero");
  }
  std::shared_ptr<Ring> q(new Ring());
  q->kind_ = Ring::Kind::Quotient;
  q->parent_ = ring;
  q->label_ = ring->label() + " / J";
  constexpr Elem unassigned = ~Elem{0};
  q->class_of_.assign(n, unassigned);
  for (std::size_t x = 0; x < n; ++x) {
    if (q->class_of_[x] != unassigned) continue;
    const auto c = static_cast<Elem>(q->reps_.size());
    q->reps_.push_back(static_cast<Elem>(x));
    ideal.for_each([&](std::size_t j) {
      q->class_of_[ring->add(static_cast<Elem>(x), static_cast<Elem>(j))] = c;
    });
  }
  q->order_ = q->reps_.size();
  if (q->order_ * ideal.size() != n) throw InvalidArgument("ideal cosets do not partition the ring");
  q->one_ = q->class_of_[ring->one()];
  q->finish(RingOptions{});

  QuotientRing out;
  out.parent_ = ring;
  out.ideal_ = ideal;
  out.ring_ = std::move(q);
  return out;
}

QuotientRing quotient_by_radical(const RingPtr& ring) {
  return quotient_by_ideal(ring, jacobson_radical(*ring, RadicalMethod::Generic));
}

std::uint64_t WedderburnShape::semisimple_order() const {
  std::uint64_t total = 1;
  for (const auto& b : blocks) total *= *nt::checked_pow(b.q, std::uint64_t{b.n} * b.n);
  return total;
}

std::uint64_t WedderburnShape::characteristic() const {
  std::uint64_t c = 1;
  for (const auto& b : blocks) c = std::lcm(c, nt::prime_power(b.q)->first);
  return c;
}

std::string WedderburnShape::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i != 0) os << ',';
    os << '(' << blocks[i].n << ',' << blocks[i].q << ')';
  }
  os << ']';
  return os.str();
}

std::optional<WedderburnShape> wedderburn_shape(const RingDescriptor& descriptor) {
  auto blocks = raw_blocks(descriptor);
  if (!blocks) return std::nullopt;
  std::stable_sort(blocks->begin(), blocks->end(), [](const auto& a, const auto& b) {
    return a.q != b.q ? a.q < b.q : a.n < b.n;
  });
  return WedderburnShape{std::move(*blocks)};
}

RingDescriptor shape_descriptor(const WedderburnShape& shape) {
  std::vector<RingDescriptor> factors;
  for (const auto& b : shape.blocks) {
    auto field = RingDescriptor::gf(b.q);
    factors.push_back(b.n == 1 ? field : RingDescriptor::mat(b.n, field));
  }
  return RingDescriptor::product(std::move(factors));
}

std::optional<SemisimpleProjection> semisimple_projection(const Ring& ring,
                                                          const RingOptions& opts) {
  if (!ring.descriptor()) return std::nullopt;
  auto projected = project_all(ring);
  if (!projected) return std::nullopt;

  std::vector<std::size_t> perm(projected->blocks.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = projected->blocks[a];
    const auto& y = projected->blocks[b];
    return x.q != y.q ? x.q < y.q : x.n < y.n;
  });

  SemisimpleProjection out;
  for (auto i : perm) out.shape.blocks.push_back(projected->blocks[i]);
  out.target = build_ring(shape_descriptor(out.shape), opts);
  out.image.resize(ring.order());
  std::vector<Elem> parts(perm.size());
  for (std::size_t x = 0; x < ring.order(); ++x) {
    for (std::size_t i = 0; i < perm.size(); ++i) parts[i] = projected->images[x][perm[i]];
    out.image[x] = out.target->compose(parts);
  }
  return out;
}

}  // namespace unitgraph
