#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unitgraph/descriptor.hpp"
#include "unitgraph/vertex_set.hpp"

namespace unitgraph {

class Ring;
class QuotientRing;
using RingPtr = std::shared_ptr<const Ring>;

struct RingOptions {
  /// Largest realized order accepted for arithmetic.
  std::uint64_t max_order = std::uint64_t{1} << 16;
  /// Orders up to this size get dense add/mul tables.
  std::uint64_t table_threshold = 1024;
};

/**
 * A realized finite ring over element indices 0..order-1.
 *
 * Index encodings:
 *  - Zn: the residue itself.
 *  - GF(p^k): little-endian base-p coefficients of a polynomial in x, reduced
 *    modulo the lexicographically smallest monic irreducible of degree k
 *    (coefficient tuple compared low degree first).
 *  - M_k(B): row-major entries, entry (r, c) is the base-|B| digit of weight
 *    |B|^(r*k + c).
 *  - R_1 x ... x R_t: mixed radix, first factor least significant.
 *  - F[G]: base-|F| digits of the coefficient vector in group-element order
 *    (see group_elements()).
 *  - Quotients by the radical: coset number, cosets ordered by their
 *    smallest member.
 *
 * Immutable after construction; safe to share between threads.
 */
class Ring {
 public:
  enum class Kind { Zn, Gf, Mat, Product, GroupAlgebra, Quotient };

  Kind kind() const noexcept { return kind_; }
  std::size_t order() const noexcept { return order_; }
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return one_; }
  std::uint64_t characteristic() const noexcept { return characteristic_; }

  /// Present for every ring built from a descriptor; absent for quotients.
  const std::optional<RingDescriptor>& descriptor() const noexcept { return descriptor_; }
  const std::string& label() const noexcept { return label_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  /// n * 1 for an integer n.
  Elem from_integer(std::int64_t n) const;

  /// Cached U(R), computed with the fast path for the ring's kind.
  const VertexSet& unit_set() const noexcept { return units_; }
  bool is_unit(Elem x) const { return units_.contains(x); }

  /// Two-sided inverse by exhaustive search; throws InternalInconsistency when
  /// a one-sided inverse is not two-sided.
  std::optional<Elem> inverse_generic(Elem x) const;
  bool is_unit_generic(Elem x) const { return inverse_generic(x).has_value(); }
  /// Inverse using the fastest route available for this kind.
  std::optional<Elem> inverse(Elem x) const;

  /// True for Zn(p) with p prime and for Gf(q).
  bool is_prime_field_or_gf() const noexcept;

  // Structure of composite rings.
  /// Matrix size for Mat rings.
  std::uint32_t matrix_size() const noexcept { return k_; }
  /// Mat entry ring or group-algebra coefficient field.
  const Ring& base() const;
  const std::vector<RingPtr>& factors() const noexcept { return factors_; }
  /// Quotient: the ring it was taken from.
  const RingPtr& parent() const noexcept { return parent_; }
  /// Group-algebra support group.
  const GroupId& group() const noexcept { return group_; }
  /// Mat entries (row-major), product components, or group-algebra coefficients.
  std::vector<Elem> components(Elem x) const;
  Elem compose(std::span<const Elem> parts) const;

  /// Gf(p^k) data.
  std::uint64_t field_prime() const noexcept { return prime_; }
  std::uint32_t field_degree() const noexcept { return degree_; }
  /// Monic irreducible used for GF(p^k), low degree first, leading 1 included.
  const std::vector<std::uint32_t>& field_modulus() const noexcept { return modulus_poly_; }

  /// Zn modulus.
  std::uint64_t modulus() const noexcept { return modulus_; }

 private:
  friend RingPtr build_ring(const RingDescriptor&, const RingOptions&);
  friend class QuotientRing;
  friend QuotientRing quotient_by_radical(const RingPtr&);
  friend QuotientRing quotient_by_ideal(const RingPtr&, const VertexSet&);

  Ring() = default;

  Elem raw_add(Elem a, Elem b) const;
  Elem raw_neg(Elem a) const;
  Elem raw_mul(Elem a, Elem b) const;
  std::vector<Elem> digits(Elem x, std::uint64_t radix, std::size_t count) const;
  Elem undigits(std::span<const Elem> d, std::uint64_t radix) const;
  Elem gf_mul_poly(Elem a, Elem b) const;
  bool matrix_over_field_invertible(Elem x) const;
  void finish(const RingOptions& opts);

  Kind kind_ = Kind::Zn;
  std::optional<RingDescriptor> descriptor_;
  std::string label_;
  std::size_t order_ = 0;
  Elem one_ = 0;
  std::uint64_t characteristic_ = 0;

  std::uint64_t modulus_ = 0;

  std::uint64_t prime_ = 0;
  std::uint32_t degree_ = 0;
  std::vector<std::uint32_t> modulus_poly_;
  std::vector<Elem> exp_;
  std::vector<Elem> log_;

  std::uint32_t k_ = 0;
  RingPtr base_;
  std::vector<RingPtr> factors_;
  std::vector<std::size_t> strides_;

  GroupId group_;
  std::vector<std::uint32_t> group_mul_;

  RingPtr parent_;
  std::vector<Elem> reps_;
  std::vector<Elem> class_of_;

  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<Elem> neg_table_;
  VertexSet units_;
};

/// Realizes a descriptor. Throws InvalidArgument on invalid descriptors and
/// CapExceeded when the order is above opts.max_order.
RingPtr build_ring(const RingDescriptor& descriptor, const RingOptions& opts = {});

bool is_unit(const Ring& ring, Elem x);

/// Group elements in encoding order. Cn: g^i at i. D4: r^i s^j at i + 4j.
/// Q8: i^a j^b at a + 4b (so 1, i, -1, -i, j, ij, -j, -ij).
std::vector<std::string> group_elements(const GroupId& g);
/// Multiplication table of the group, row-major: table[a * n + b] = a*b.
std::vector<std::uint32_t> group_multiplication(const GroupId& g);

/// Every element idempotent (the finite Boolean rings are exactly Z_2^k).
bool is_boolean_ring(const Ring& ring);

/// Every nonzero element a unit and multiplication commutative.
bool is_field(const Ring& ring);

}  // namespace unitgraph
