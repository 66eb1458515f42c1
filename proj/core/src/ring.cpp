#include "unitgraph/ring.hpp"

#include <algorithm>
#include <numeric>

#include "unitgraph/errors.hpp"
#include "unitgraph/number_theory.hpp"

namespace unitgraph {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1;
  std::uint64_t e = p - 2;
  a %= p;
  while (e != 0) {
    if (e & 1U) r = r * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return r;
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = static_cast<std::uint64_t>(lead) * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // every monic polynomial of degree d
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree k, tuple (c_0..c_{k-1}).
Poly smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(k + 1, 0);
    f[k] = 1;
    // c_0 is the most significant digit of the lexicographic counter
    std::uint64_t c = code;
    for (std::uint32_t i = k; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (irreducible(f, p)) return f;
  }
  throw InternalInconsistency("no irreducible polynomial found");
}

}  // namespace

std::vector<std::string> group_elements(const GroupId& g) {
  std::vector<std::string> out;
  switch (g.kind) {
    case GroupId::Kind::Cyclic:
      for (std::uint32_t i = 0; i < g.cyclic_order; ++i) {
        out.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
      }
      break;
    case GroupId::Kind::Dihedral8:
      out = {"e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"};
      break;
    case GroupId::Kind::Quaternion8:
      out = {"1", "i", "-1", "-i", "j", "ij", "-j", "-ij"};
      break;
  }
  return out;
}

std::vector<std::uint32_t> group_multiplication(const GroupId& g) {
  const std::uint32_t n = g.order();
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t r = 0;
      switch (g.kind) {
        case GroupId::Kind::Cyclic:
          r = (a + b) % n;
          break;
        case GroupId::Kind::Dihedral8: {
          // (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j + l)
          const std::uint32_t i = a % 4, j = a / 4, k = b % 4, l = b / 4;
          const std::uint32_t rot = (j == 0 ? i + k : i + 4 - k) % 4;
          r = rot + 4 * ((j + l) % 2);
          break;
        }
        case GroupId::Kind::Quaternion8: {
          // j i = i^-1 j and j^2 = i^2
          const std::uint32_t x = a % 4, y = a / 4, u = b % 4, v = b / 4;
          std::uint32_t rot = (y == 0 ? x + u : x + 4 - u) % 4;
          std::uint32_t jj = y + v;
          if (jj == 2) {
            rot = (rot + 2) % 4;
            jj = 0;
          }
          r = rot + 4 * jj;
          break;
        }
      }
      t[static_cast<std::size_t>(a) * n + b] = r;
    }
  }
  return t;
}

const Ring& Ring::base() const {
  if (!base_) throw InvalidArgument(label_ + " has no base ring");
  return *base_;
}

bool Ring::is_prime_field_or_gf() const noexcept {
  return kind_ == Kind::Gf || (kind_ == Kind::Zn && nt::is_prime(modulus_));
}

std::vector<Elem> Ring::digits(Elem x, std::uint64_t radix, std::size_t count) const {
  std::vector<Elem> d(count);
  std::uint64_t v = x;
  for (std::size_t i = 0; i < count; ++i) {
    d[i] = static_cast<Elem>(v % radix);
    v /= radix;
  }
  return d;
}

Elem Ring::undigits(std::span<const Elem> d, std::uint64_t radix) const {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * radix + d[i];
  return static_cast<Elem>(v);
}

std::vector<Elem> Ring::components(Elem x) const {
  switch (kind_) {
    case Kind::Mat:
      return digits(x, base_->order(), static_cast<std::size_t>(k_) * k_);
    case Kind::GroupAlgebra:
      return digits(x, base_->order(), group_.order());
    case Kind::Product: {
      std::vector<Elem> out(factors_.size());
      std::uint64_t v = x;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        out[i] = static_cast<Elem>(v % factors_[i]->order());
        v /= factors_[i]->order();
      }
      return out;
    }
    default:
      return {x};
  }
}

Elem Ring::compose(std::span<const Elem> parts) const {
  switch (kind_) {
    case Kind::Mat:
    case Kind::GroupAlgebra:
      return undigits(parts, base_->order());
    case Kind::Product: {
      if (parts.size() != factors_.size()) throw InvalidArgument("component count mismatch");
      std::uint64_t v = 0;
      for (std::size_t i = factors_.size(); i-- > 0;) v = v * factors_[i]->order() + parts[i];
      return static_cast<Elem>(v);
    }
    default:
      if (parts.size() != 1) throw InvalidArgument("component count mismatch");
      return parts[0];
  }
}

Elem Ring::gf_mul_poly(Elem a, Elem b) const {
  // Horner in b: acc = acc * x + b_i, reducing modulo the field polynomial.
  const auto p = static_cast<std::uint32_t>(prime_);
  const auto ad = digits(a, p, degree_);
  const auto bd = digits(b, p, degree_);
  std::vector<std::uint64_t> acc(degree_, 0);
  for (std::size_t i = degree_; i-- > 0;) {
    // acc *= x
    const std::uint64_t top = acc[degree_ - 1];
    for (std::size_t j = degree_ - 1; j > 0; --j) acc[j] = acc[j - 1];
    acc[0] = 0;
    for (std::size_t j = 0; j < degree_; ++j) {
      acc[j] = (acc[j] + (p - modulus_poly_[j]) * top) % p;
    }
    // acc += b_i * a
    for (std::size_t j = 0; j < degree_; ++j) acc[j] = (acc[j] + bd[i] * ad[j]) % p;
  }
  std::vector<Elem> out(acc.begin(), acc.end());
  return undigits(out, p);
}

Elem Ring::raw_add(Elem a, Elem b) const {
  switch (kind_) {
    case Kind::Zn:
      return static_cast<Elem>((std::uint64_t{a} + b) % modulus_);
    case Kind::Gf: {
      if (prime_ == 2) return a ^ b;
      const auto da = digits(a, prime_, degree_);
      auto db = digits(b, prime_, degree_);
      for (std::size_t i = 0; i < degree_; ++i) db[i] = static_cast<Elem>((da[i] + db[i]) % prime_);
      return undigits(db, prime_);
    }
    case Kind::Mat:
    case Kind::GroupAlgebra:
    case Kind::Product: {
      const auto ca = components(a);
      auto cb = components(b);
      for (std::size_t i = 0; i < ca.size(); ++i) {
        const Ring& r = kind_ == Kind::Product ? *factors_[i] : *base_;
        cb[i] = r.add(ca[i], cb[i]);
      }
      return compose(cb);
    }
    case Kind::Quotient:
      return class_of_[parent_->add(reps_[a], reps_[b])];
  }
  return 0;
}

Elem Ring::raw_neg(Elem a) const {
  switch (kind_) {
    case Kind::Zn:
      return static_cast<Elem>((modulus_ - a) % modulus_);
    case Kind::Gf: {
      if (prime_ == 2) return a;
      auto d = digits(a, prime_, degree_);
      for (auto& x : d) x = static_cast<Elem>((prime_ - x) % prime_);
      return undigits(d, prime_);
    }
    case Kind::Mat:
    case Kind::GroupAlgebra:
    case Kind::Product: {
      auto c = components(a);
      for (std::size_t i = 0; i < c.size(); ++i) {
        const Ring& r = kind_ == Kind::Product ? *factors_[i] : *base_;
        c[i] = r.neg(c[i]);
      }
      return compose(c);
    }
    case Kind::Quotient:
      return class_of_[parent_->neg(reps_[a])];
  }
  return 0;
}

Elem Ring::raw_mul(Elem a, Elem b) const {
  switch (kind_) {
    case Kind::Zn:
      return static_cast<Elem>(std::uint64_t{a} * b % modulus_);
    case Kind::Gf:
      if (a == 0 || b == 0) return 0;
      if (!log_.empty()) return exp_[(std::uint64_t{log_[a]} + log_[b]) % (order_ - 1)];
      return gf_mul_poly(a, b);
    case Kind::Mat: {
      const auto ea = components(a);
      const auto eb = components(b);
      std::vector<Elem> ec(ea.size());
      for (std::uint32_t r = 0; r < k_; ++r) {
        for (std::uint32_t c = 0; c < k_; ++c) {
          Elem acc = base_->zero();
          for (std::uint32_t t = 0; t < k_; ++t) {
            acc = base_->add(acc, base_->mul(ea[r * k_ + t], eb[t * k_ + c]));
          }
          ec[r * k_ + c] = acc;
        }
      }
      return compose(ec);
    }
    case Kind::Product: {
      const auto ca = components(a);
      auto cb = components(b);
      for (std::size_t i = 0; i < ca.size(); ++i) cb[i] = factors_[i]->mul(ca[i], cb[i]);
      return compose(cb);
    }
    case Kind::GroupAlgebra: {
      const std::uint32_t n = group_.order();
      const auto ca = components(a);
      const auto cb = components(b);
      std::vector<Elem> cc(n, base_->zero());
      for (std::uint32_t x = 0; x < n; ++x) {
        if (ca[x] == 0) continue;
        for (std::uint32_t y = 0; y < n; ++y) {
          if (cb[y] == 0) continue;
          const auto g = group_mul_[static_cast<std::size_t>(x) * n + y];
          cc[g] = base_->add(cc[g], base_->mul(ca[x], cb[y]));
        }
      }
      return compose(cc);
    }
    case Kind::Quotient:
      return class_of_[parent_->mul(reps_[a], reps_[b])];
  }
  return 0;
}

Elem Ring::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
  return raw_add(a, b);
}

Elem Ring::neg(Elem a) const {
  if (!neg_table_.empty()) return neg_table_[a];
  return raw_neg(a);
}

Elem Ring::mul(Elem a, Elem b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * order_ + b];
  return raw_mul(a, b);
}

Elem Ring::from_integer(std::int64_t n) const {
  Elem acc = zero();
  const Elem step = n >= 0 ? one_ : neg(one_);
  const std::uint64_t reps = n >= 0 ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(-n);
  const std::uint64_t bounded = characteristic_ != 0 ? reps % characteristic_ : reps;
  for (std::uint64_t i = 0; i < bounded; ++i) acc = add(acc, step);
  return acc;
}

std::optional<Elem> Ring::inverse_generic(Elem x) const {
  for (std::size_t y = 0; y < order_; ++y) {
    if (mul(x, static_cast<Elem>(y)) == one_) {
      if (mul(static_cast<Elem>(y), x) != one_) {
        throw InternalInconsistency("right inverse is not a left inverse in " + label_);
      }
      return static_cast<Elem>(y);
    }
  }
  return std::nullopt;
}

std::optional<Elem> Ring::inverse(Elem x) const {
  if (kind_ == Kind::Zn) {
    if (nt::gcd(x, modulus_) != 1) return std::nullopt;
    // extended Euclid
    std::int64_t t = 0, nt_ = 1;
    std::int64_t r = static_cast<std::int64_t>(modulus_), nr = x;
    while (nr != 0) {
      const std::int64_t q = r / nr;
      std::tie(t, nt_) = std::make_pair(nt_, t - q * nt_);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(modulus_);
    return static_cast<Elem>(t);
  }
  if (kind_ == Kind::Gf) {
    if (x == 0) return std::nullopt;
    if (degree_ == 1) return static_cast<Elem>(inv_mod(x, prime_));
    if (!log_.empty()) return exp_[(order_ - 1 - log_[x]) % (order_ - 1)];
  }
  return inverse_generic(x);
}

bool Ring::matrix_over_field_invertible(Elem x) const {
  const Ring& f = *base_;
  auto m = components(x);
  const std::uint32_t k = k_;
  for (std::uint32_t col = 0; col < k; ++col) {
    std::uint32_t pivot = col;
    while (pivot < k && m[pivot * k + col] == 0) ++pivot;
    if (pivot == k) return false;
    if (pivot != col) {
      for (std::uint32_t c = 0; c < k; ++c) std::swap(m[pivot * k + c], m[col * k + c]);
    }
    const Elem inv = *f.inverse(m[col * k + col]);
    for (std::uint32_t r = col + 1; r < k; ++r) {
      if (m[r * k + col] == 0) continue;
      const Elem factor = f.mul(m[r * k + col], inv);
      for (std::uint32_t c = col; c < k; ++c) {
        m[r * k + c] = f.sub(m[r * k + c], f.mul(factor, m[col * k + c]));
      }
    }
  }
  return true;
}

void Ring::finish(const RingOptions& opts) {
  if (order_ <= opts.table_threshold && kind_ != Kind::Zn) {
    const std::size_t n = order_;
    std::vector<Elem> add(n * n);
    std::vector<Elem> mul(n * n);
    std::vector<Elem> neg(n);
    for (std::size_t a = 0; a < n; ++a) {
      neg[a] = raw_neg(static_cast<Elem>(a));
      for (std::size_t b = 0; b < n; ++b) {
        add[a * n + b] = raw_add(static_cast<Elem>(a), static_cast<Elem>(b));
        mul[a * n + b] = raw_mul(static_cast<Elem>(a), static_cast<Elem>(b));
      }
    }
    add_table_ = std::move(add);
    mul_table_ = std::move(mul);
    neg_table_ = std::move(neg);
  }

  characteristic_ = 1;
  for (Elem s = one_; s != zero(); s = add(s, one_)) ++characteristic_;

  units_ = VertexSet(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    const auto e = static_cast<Elem>(x);
    bool unit = false;
    switch (kind_) {
      case Kind::Zn:
        unit = nt::gcd(e, modulus_) == 1;
        break;
      case Kind::Gf:
        unit = e != 0;
        break;
      case Kind::Mat:
        unit = base_->is_prime_field_or_gf() ? matrix_over_field_invertible(e) : is_unit_generic(e);
        break;
      case Kind::Product: {
        const auto c = components(e);
        unit = true;
        for (std::size_t i = 0; i < c.size() && unit; ++i) unit = factors_[i]->is_unit(c[i]);
        break;
      }
      default:
        unit = is_unit_generic(e);
        break;
    }
    if (unit) units_.insert(x);
  }
}

RingPtr build_ring(const RingDescriptor& descriptor, const RingOptions& opts) {
  validate(descriptor);
  const auto order = symbolic_order(descriptor);
  if (!order || *order > opts.max_order) {
    throw CapExceeded(descriptor.to_string() + " has order above the cap of " +
                      std::to_string(opts.max_order));
  }

  std::shared_ptr<Ring> r(new Ring());
  r->descriptor_ = descriptor;
  r->label_ = descriptor.to_string();
  r->order_ = static_cast<std::size_t>(*order);

  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ZnNode>) {
          r->kind_ = Ring::Kind::Zn;
          r->modulus_ = node.n;
          r->one_ = static_cast<Elem>(1 % node.n);
        } else if constexpr (std::is_same_v<T, GfNode>) {
          const auto [p, k] = *nt::prime_power(node.q);
          if (k == 1) {
            // GF(p) shares the residue arithmetic of Z_p.
            r->kind_ = Ring::Kind::Zn;
            r->modulus_ = p;
            r->one_ = 1;
            return;
          }
          r->kind_ = Ring::Kind::Gf;
          r->prime_ = p;
          r->degree_ = k;
          r->modulus_poly_ = smallest_irreducible(static_cast<std::uint32_t>(p), k);
          r->one_ = 1;
          // log/exp tables from the first primitive element
          const std::size_t q = r->order_;
          for (Elem g = 2; g < q; ++g) {
            std::vector<Elem> exp(q - 1);
            Elem acc = 1;
            std::size_t ord = 0;
            do {
              exp[ord++] = acc;
              acc = r->gf_mul_poly(acc, g);
            } while (acc != 1 && ord < q - 1);
            if (acc == 1 && ord == q - 1) {
              r->log_.assign(q, 0);
              for (std::size_t i = 0; i < q - 1; ++i) r->log_[exp[i]] = static_cast<Elem>(i);
              r->exp_ = std::move(exp);
              break;
            }
          }
        } else if constexpr (std::is_same_v<T, MatNode>) {
          r->kind_ = Ring::Kind::Mat;
          r->k_ = node.k;
          r->base_ = build_ring(*node.base, opts);
          std::vector<Elem> id(static_cast<std::size_t>(node.k) * node.k, r->base_->zero());
          for (std::uint32_t i = 0; i < node.k; ++i) id[i * node.k + i] = r->base_->one();
          r->one_ = r->compose(id);
        } else if constexpr (std::is_same_v<T, ProductNode>) {
          r->kind_ = Ring::Kind::Product;
          for (const auto& f : node.factors) r->factors_.push_back(build_ring(f, opts));
          std::vector<Elem> ones;
          for (const auto& f : r->factors_) ones.push_back(f->one());
          r->one_ = r->compose(ones);
        } else {
          r->kind_ = Ring::Kind::GroupAlgebra;
          r->group_ = node.group;
          r->group_mul_ = group_multiplication(node.group);
          r->base_ = build_ring(*node.field, opts);
          std::vector<Elem> coeffs(node.group.order(), r->base_->zero());
          coeffs[0] = r->base_->one();
          r->one_ = r->compose(coeffs);
        }
      },
      descriptor.node());

  r->finish(opts);
  return r;
}

bool is_unit(const Ring& ring, Elem x) {
  if (x >= ring.order()) throw InvalidArgument("element index out of range");
  return ring.is_unit(x);
}

bool is_boolean_ring(const Ring& ring) {
  for (std::size_t x = 0; x < ring.order(); ++x) {
    const auto e = static_cast<Elem>(x);
    if (ring.mul(e, e) != e) return false;
  }
  return true;
}

bool is_field(const Ring& ring) {
  if (ring.unit_set().size() + 1 != ring.order()) return false;
  for (std::size_t a = 0; a < ring.order(); ++a) {
    for (std::size_t b = a + 1; b < ring.order(); ++b) {
      const auto ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
      if (ring.mul(ea, eb) != ring.mul(eb, ea)) return false;
    }
  }
  return true;
}

}  // namespace unitgraph
