#include "unitgraph/constructions.hpp"

#include "unitgraph/errors.hpp"
#include "unitgraph/graph.hpp"
#include "unitgraph/indsets.hpp"

namespace unitgraph {

namespace {

// Field and size behind a matrix ring (a field counts as 1x1).
struct MatrixShape {
  const Ring* field;
  std::uint32_t n;
};

MatrixShape matrix_shape(const Ring& r) {
  if (r.is_prime_field_or_gf()) return {&r, 1};
  if (r.kind() == Ring::Kind::Mat && r.base().is_prime_field_or_gf()) {
    return {&r.base(), r.matrix_size()};
  }
  throw Unsupported(r.label() + " is not a matrix ring over a field");
}

using Entries = std::vector<Elem>;

Entries identity(const MatrixShape& s) {
  Entries e(static_cast<std::size_t>(s.n) * s.n, s.field->zero());
  for (std::uint32_t i = 0; i < s.n; ++i) e[i * s.n + i] = s.field->one();
  return e;
}

Entries multiply(const MatrixShape& s, const Entries& a, const Entries& b) {
  const Ring& f = *s.field;
  Entries c(a.size(), f.zero());
  for (std::uint32_t r = 0; r < s.n; ++r) {
    for (std::uint32_t k = 0; k < s.n; ++k) {
      for (std::uint32_t t = 0; t < s.n; ++t) {
        c[r * s.n + k] = f.add(c[r * s.n + k], f.mul(a[r * s.n + t], b[t * s.n + k]));
      }
    }
  }
  return c;
}

Entries invert(const MatrixShape& s, Entries m) {
  const Ring& f = *s.field;
  const std::uint32_t n = s.n;
  Entries inv = identity(s);
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && m[piv * n + col] == f.zero()) ++piv;
    if (piv == n) throw InvalidArgument("matrix is singular");
    for (std::uint32_t c = 0; c < n; ++c) {
      std::swap(m[piv * n + c], m[col * n + c]);
      std::swap(inv[piv * n + c], inv[col * n + c]);
    }
    const Elem scale = *f.inverse(m[col * n + col]);
    for (std::uint32_t c = 0; c < n; ++c) {
      m[col * n + c] = f.mul(scale, m[col * n + c]);
      inv[col * n + c] = f.mul(scale, inv[col * n + c]);
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || m[r * n + col] == f.zero()) continue;
      const Elem factor = m[r * n + col];
      for (std::uint32_t c = 0; c < n; ++c) {
        m[r * n + c] = f.sub(m[r * n + c], f.mul(factor, m[col * n + c]));
        inv[r * n + c] = f.sub(inv[r * n + c], f.mul(factor, inv[col * n + c]));
      }
    }
  }
  return inv;
}

Entries entries_of(const Ring& r, Elem x) {
  return r.kind() == Ring::Kind::Mat ? r.components(x) : Entries{x};
}

Elem element_of(const Ring& r, const Entries& e) {
  return r.kind() == Ring::Kind::Mat ? r.compose(e) : e.at(0);
}

void verify_maximal(const Ring& ring, const VertexSet& s, const char* what) {
  const auto g = build_graph(ring, GraphKind::Unit);
  if (!is_maximal_independent(g, s)) {
    throw InvalidArgument(std::string(what) + " is not a maximal independent set of the unit graph of " +
                          ring.label() + " (precondition violated)");
  }
}

std::vector<const Ring*> factor_list(const Ring& product) {
  std::vector<const Ring*> out;
  if (product.kind() == Ring::Kind::Product) {
    for (const auto& f : product.factors()) out.push_back(f.get());
  } else {
    out.push_back(&product);
  }
  return out;
}

std::vector<Elem> factor_components(const Ring& product, Elem x) {
  return product.kind() == Ring::Kind::Product ? product.components(x) : std::vector<Elem>{x};
}

Elem component_witness(const Ring& r, Elem y) {
  if (r.kind() == Ring::Kind::Product) {
    auto parts = r.components(y);
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = component_witness(*r.factors()[i], parts[i]);
    return r.compose(parts);
  }
  const auto shape = matrix_shape(r);
  if (y == r.zero()) return r.one();
  if (r.is_unit(y)) return r.zero();
  // y = U diag(I_t, 0) V with U = P^-1, V = Q^-1; z = U diag(0, I_{m-t}) V
  const auto nf = rank_normal_form(r, y);
  const auto u = invert(shape, entries_of(r, nf.p));
  const auto v = invert(shape, entries_of(r, nf.q));
  Entries tail(static_cast<std::size_t>(shape.n) * shape.n, shape.field->zero());
  for (std::uint32_t i = nf.rank; i < shape.n; ++i) tail[i * shape.n + i] = shape.field->one();
  return element_of(r, multiply(shape, multiply(shape, u, tail), v));
}

bool is_semisimple(const Ring& r) { return jacobson_radical(r, RadicalMethod::Generic).size() == 1; }

}  // namespace

RingPtr matrix_ring(std::uint32_t n, std::uint64_t q) {
  if (n == 0) throw InvalidArgument("matrix size must be at least 1");
  auto field = RingDescriptor::gf(q);
  return build_ring(n == 1 ? field : RingDescriptor::mat(n, field));
}

VertexSet signature_set(const Ring& mr, const ConstructionOptions& opts) {
  const auto shape = matrix_shape(mr);
  const Ring& f = *shape.field;
  if (f.characteristic() == 2) {
    throw InvalidArgument("signature matrices need characteristic other than 2");
  }
  VertexSet out(mr.order());
  const Elem minus_one = f.neg(f.one());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << shape.n); ++mask) {
    Entries e(static_cast<std::size_t>(shape.n) * shape.n, f.zero());
    for (std::uint32_t i = 0; i < shape.n; ++i) e[i * shape.n + i] = ((mask >> i) & 1U) ? minus_one : f.one();
    out.insert(element_of(mr, e));
  }
  if (opts.verify) verify_maximal(mr, out, "signature set");
  return out;
}

VertexSet zero_first_row_set(const Ring& mr, const ConstructionOptions& opts) {
  const auto shape = matrix_shape(mr);
  VertexSet out(mr.order());
  for (std::size_t x = 0; x < mr.order(); ++x) {
    const auto e = entries_of(mr, static_cast<Elem>(x));
    bool zero_row = true;
    for (std::uint32_t c = 0; c < shape.n && zero_row; ++c) zero_row = e[c] == shape.field->zero();
    if (zero_row) out.insert(x);
  }
  if (opts.verify) verify_maximal(mr, out, "zero-first-row set");
  return out;
}

VertexSet product_nonunit_extend(const Ring& product, std::size_t factor, const VertexSet& factor_set,
                                 const ConstructionOptions& opts) {
  const auto factors = factor_list(product);
  if (factor >= factors.size()) throw InvalidArgument("factor index out of range");
  const Ring& ri = *factors[factor];
  if (factor_set.universe() != ri.order()) throw InvalidArgument("factor set has the wrong universe");
  if (factor_set.intersects(ri.unit_set())) {
    throw InvalidArgument("factor set must consist of nonunits");
  }
  VertexSet out(product.order());
  for (std::size_t x = 0; x < product.order(); ++x) {
    if (factor_set.contains(factor_components(product, static_cast<Elem>(x))[factor])) out.insert(x);
  }
  if (opts.verify) verify_maximal(product, out, "extended nonunit set");
  return out;
}

VertexSet product_unit_sets(const Ring& product, const std::vector<VertexSet>& factor_sets,
                            const ConstructionOptions& opts) {
  const auto factors = factor_list(product);
  if (factor_sets.size() != factors.size()) throw InvalidArgument("need one set per factor");
  if (!product.is_unit(product.from_integer(2))) throw InvalidArgument("2 is not a unit of " + product.label());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factor_sets[i].universe() != factors[i]->order() ||
        !factor_sets[i].is_subset_of(factors[i]->unit_set())) {
      throw InvalidArgument("factor sets must consist of units");
    }
  }
  VertexSet out(product.order());
  for (std::size_t x = 0; x < product.order(); ++x) {
    const auto c = factor_components(product, static_cast<Elem>(x));
    bool in = true;
    for (std::size_t i = 0; i < c.size() && in; ++i) in = factor_sets[i].contains(c[i]);
    if (in) out.insert(x);
  }
  if (opts.verify) verify_maximal(product, out, "product of unit sets");
  return out;
}

VertexSet lift_nonunit_mis(const QuotientRing& quotient, const VertexSet& quotient_set,
                           const ConstructionOptions& opts) {
  const Ring& qr = *quotient.ring();
  if (quotient_set.universe() != qr.order()) throw InvalidArgument("quotient set has the wrong universe");
  if (quotient_set.intersects(qr.unit_set())) throw InvalidArgument("quotient set must consist of nonunits");
  if (opts.verify) verify_maximal(qr, quotient_set, "quotient set");
  auto out = quotient.preimage(quotient_set);
  if (out.size() != quotient_set.size() * quotient.radical().size()) {
    throw InternalInconsistency("lifted size differs from |M| * |J|");
  }
  if (opts.verify) verify_maximal(*quotient.parent(), out, "lifted nonunit set");
  return out;
}

VertexSet lift_unit_mis_reps(const QuotientRing& quotient, const VertexSet& quotient_set,
                             const ConstructionOptions& opts) {
  const Ring& parent = *quotient.parent();
  const Ring& qr = *quotient.ring();
  if (!parent.is_unit(parent.from_integer(2))) throw InvalidArgument("2 is not a unit of " + parent.label());
  if (quotient_set.universe() != qr.order()) throw InvalidArgument("quotient set has the wrong universe");
  if (!quotient_set.is_subset_of(qr.unit_set())) throw InvalidArgument("quotient set must consist of units");
  if (opts.verify) verify_maximal(qr, quotient_set, "quotient set");
  VertexSet out(parent.order());
  quotient_set.for_each([&](std::size_t c) { out.insert(quotient.representative(static_cast<Elem>(c))); });
  if (opts.verify) verify_maximal(parent, out, "lifted unit representatives");
  return out;
}

RankNormalForm rank_normal_form(const Ring& mr, Elem a) {
  const auto shape = matrix_shape(mr);
  const Ring& f = *shape.field;
  const std::uint32_t n = shape.n;
  Entries m = entries_of(mr, a);
  Entries p = identity(shape);
  Entries q = identity(shape);
  auto at = [n](Entries& e, std::uint32_t r, std::uint32_t c) -> Elem& { return e[r * n + c]; };

  std::uint32_t t = 0;
  for (; t < n; ++t) {
    // first nonzero of the trailing block, row-major
    std::uint32_t pr = n, pc = n;
    for (std::uint32_t r = t; r < n && pr == n; ++r) {
      for (std::uint32_t c = t; c < n; ++c) {
        if (at(m, r, c) != f.zero()) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr == n) break;
    for (std::uint32_t c = 0; c < n; ++c) {
      std::swap(at(m, pr, c), at(m, t, c));
      std::swap(at(p, pr, c), at(p, t, c));
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      std::swap(at(m, r, pc), at(m, r, t));
      std::swap(at(q, r, pc), at(q, r, t));
    }
    const Elem scale = *f.inverse(at(m, t, t));
    for (std::uint32_t c = 0; c < n; ++c) {
      at(m, t, c) = f.mul(scale, at(m, t, c));
      at(p, t, c) = f.mul(scale, at(p, t, c));
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == t || at(m, r, t) == f.zero()) continue;
      const Elem factor = at(m, r, t);
      for (std::uint32_t c = 0; c < n; ++c) {
        at(m, r, c) = f.sub(at(m, r, c), f.mul(factor, at(m, t, c)));
        at(p, r, c) = f.sub(at(p, r, c), f.mul(factor, at(p, t, c)));
      }
    }
    for (std::uint32_t c = 0; c < n; ++c) {
      if (c == t || at(m, t, c) == f.zero()) continue;
      const Elem factor = at(m, t, c);
      for (std::uint32_t r = 0; r < n; ++r) {
        at(m, r, c) = f.sub(at(m, r, c), f.mul(factor, at(m, r, t)));
        at(q, r, c) = f.sub(at(q, r, c), f.mul(factor, at(q, r, t)));
      }
    }
  }
  return {element_of(mr, p), element_of(mr, q), t};
}

Elem claim_complement_witness(const Ring& s, Elem y) {
  if (y >= s.order()) throw InvalidArgument("element index out of range");
  if (y == s.zero()) throw InvalidArgument("y must be nonzero");
  if (s.is_unit(y)) throw InvalidArgument("y must be a nonunit");
  const Elem z = component_witness(s, y);
  if (s.is_unit(z) || !s.is_unit(s.add(y, z))) {
    throw InternalInconsistency("complement witness failed its postcondition");
  }
  return z;
}

RTimesSWitnesses r_times_s_witnesses(const RingPtr& r, const RingPtr& s, const ConstructionOptions& opts) {
  if (!r->descriptor() || !s->descriptor()) throw Unsupported("both rings need descriptors");
  if (r->characteristic() != 2) throw InvalidArgument("R must have characteristic 2");
  if (!s->is_unit(s->from_integer(2))) {
    throw InvalidArgument("every simple factor of S needs odd characteristic (2 a unit of S)");
  }
  if (!is_semisimple(*r) || !is_semisimple(*s)) throw InvalidArgument("R and S must be semisimple");

  const auto proj = semisimple_projection(*r);
  if (!proj) throw Unsupported("no semisimple decomposition for " + r->label());
  // The projection is a bijection here; pull the construction back to R.
  const Ring& target = *proj->target;
  const auto first_block = factor_list(target).front();
  const auto m1 = zero_first_row_set(*first_block, opts);
  const auto m_target = product_nonunit_extend(target, 0, m1, opts);
  VertexSet m(r->order());
  for (std::size_t x = 0; x < r->order(); ++x) {
    if (m_target.contains(proj->image[x])) m.insert(x);
  }
  if (opts.verify) verify_maximal(*r, m, "M");

  RTimesSWitnesses out;
  out.product = build_ring(RingDescriptor::product({*r->descriptor(), *s->descriptor()}));
  out.m = m;
  out.nonunits = VertexSet::full(s->order()) - s->unit_set();
  out.m_times_s = VertexSet(out.product->order());
  out.n = VertexSet(out.product->order());
  for (std::size_t x = 0; x < out.product->order(); ++x) {
    const auto c = out.product->components(static_cast<Elem>(x));
    if (m.contains(c[0])) out.m_times_s.insert(x);
    if (c[1] == s->zero() || (m.contains(c[0]) && out.nonunits.contains(c[1]))) out.n.insert(x);
  }
  if (opts.verify) {
    verify_maximal(*out.product, out.m_times_s, "M x S");
    verify_maximal(*out.product, out.n, "N");
  }
  if (out.m_times_s.size() == out.n.size()) {
    throw InternalInconsistency("M x S and N have the same size");
  }
  return out;
}

TwoSizeWitnesses two_size_witnesses_2unit(const RingPtr& r, const ConstructionOptions& opts) {
  if (!r->is_unit(r->from_integer(2))) throw InvalidArgument("2 is not a unit of " + r->label());
  const auto proj = semisimple_projection(*r);
  if (!proj) throw Unsupported("unsupported Wedderburn shape for " + r->label());
  const Ring& target = *proj->target;
  const auto quotient = quotient_by_radical(r);

  // coset number -> element of the explicit semisimple ring, and back
  if (quotient.order() != target.order()) {
    throw InternalInconsistency("quotient order differs from the symbolic shape");
  }
  std::vector<Elem> coset_of_target(target.order(), ~Elem{0});
  for (std::size_t c = 0; c < quotient.order(); ++c) {
    const Elem img = proj->image[quotient.representative(static_cast<Elem>(c))];
    if (coset_of_target[img] != ~Elem{0}) throw InternalInconsistency("projection is not injective on cosets");
    coset_of_target[img] = static_cast<Elem>(c);
  }
  auto to_quotient = [&](const VertexSet& in_target) {
    VertexSet out(quotient.order());
    in_target.for_each([&](std::size_t y) { out.insert(coset_of_target[y]); });
    return out;
  };

  const auto blocks = factor_list(target);
  std::vector<VertexSet> signatures;
  for (const auto* b : blocks) signatures.push_back(signature_set(*b, opts));
  const auto s_target = product_unit_sets(target, signatures, opts);
  const auto m_target = product_nonunit_extend(target, 0, zero_first_row_set(*blocks.front(), opts), opts);
  if (m_target.size() % 2 == 0) {
    throw InternalInconsistency("zero-first-row product has even size although 2 is a unit");
  }

  TwoSizeWitnesses out;
  out.unit_side = lift_unit_mis_reps(quotient, to_quotient(s_target), opts);
  out.nonunit_side = lift_nonunit_mis(quotient, to_quotient(m_target), opts);
  if (out.unit_side.size() == out.nonunit_side.size()) {
    throw InternalInconsistency("two-size witnesses have equal size");
  }
  return out;
}

}  // namespace unitgraph
