#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitgraph/descriptor.hpp"
#include "unitgraph/ring.hpp"
#include "unitgraph/vertex_set.hpp"

namespace unitgraph {

enum class RadicalMethod { Structural, Generic };

/**
 * Jacobson radical as an element set.
 *
 * Generic: {x : 1 - r x is a unit for every r}. Structural: closed forms
 * composed over the descriptor (J(Z_n) = rad(n) Z_n, J(GF(q)) = 0,
 * J(M_k(B)) = M_k(J(B)), J(R x S) = J(R) x J(S), augmentation ideal of F[G]
 * for a p-group G in characteristic p). Structural throws Unsupported when a
 * group algebra falls outside that case or the ring has no descriptor.
 */
VertexSet jacobson_radical(const Ring& ring, RadicalMethod method = RadicalMethod::Generic);

/// R/I for a two-sided ideal I, with cosets numbered by their smallest member.
class QuotientRing {
 public:
  const RingPtr& parent() const noexcept { return parent_; }
  const VertexSet& radical() const noexcept { return ideal_; }
  /// Arithmetic on coset numbers 0..order()-1.
  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t order() const noexcept { return ring_->order(); }
  std::uint64_t characteristic() const noexcept { return ring_->characteristic(); }

  /// Smallest parent element of each coset, ascending.
  const std::vector<Elem>& representatives() const noexcept { return ring_->reps_; }
  Elem representative(Elem coset) const { return ring_->reps_.at(coset); }
  /// Coset number of a parent element.
  Elem reduce(Elem x) const { return ring_->class_of_.at(x); }
  /// Parent elements of one coset.
  VertexSet coset(Elem c) const;
  /// Union of the cosets in a set of coset numbers.
  VertexSet preimage(const VertexSet& cosets) const;
  /// Coset numbers hit by a set of parent elements.
  VertexSet image(const VertexSet& elements) const;

 private:
  friend QuotientRing quotient_by_ideal(const RingPtr&, const VertexSet&);
  RingPtr parent_;
  VertexSet ideal_;
  RingPtr ring_;
};

/// Quotient by a known two-sided ideal (not checked).
QuotientRing quotient_by_ideal(const RingPtr& ring, const VertexSet& ideal);
/// R/J(R) using the generic radical.
QuotientRing quotient_by_radical(const RingPtr& ring);

/// One simple factor M_n(GF(q)) of R/J(R).
struct WedderburnBlock {
  std::uint32_t n;
  std::uint64_t q;
  friend bool operator==(const WedderburnBlock&, const WedderburnBlock&) = default;
};

/// Blocks of R/J(R), sorted ascending by q then n.
struct WedderburnShape {
  std::vector<WedderburnBlock> blocks;

  /// Order of the semisimple quotient: product over blocks of q^(n^2).
  std::uint64_t semisimple_order() const;
  /// Characteristic of the semisimple quotient, lcm of the field characteristics.
  std::uint64_t characteristic() const;
  std::string to_string() const;  ///< "[(1,2),(1,3)]"
  friend bool operator==(const WedderburnShape&, const WedderburnShape&) = default;
};

/// Symbolic shape of R/J(R); nullopt marks an unsupported descriptor.
std::optional<WedderburnShape> wedderburn_shape(const RingDescriptor& descriptor);

/// Descriptor of the canonical semisimple ring for a shape:
/// product of Mat(n_i, GF(q_i)) in block order.
RingDescriptor shape_descriptor(const WedderburnShape& shape);

/**
 * Explicit surjective homomorphism R -> prod M_{n_i}(GF(q_i)) with kernel J(R),
 * following the descriptor structure (reduction mod primes, augmentation,
 * entrywise projection of matrix rings with block flattening).
 */
struct SemisimpleProjection {
  WedderburnShape shape;
  RingPtr target;             ///< built from shape_descriptor(shape)
  std::vector<Elem> image;    ///< image[x] for each element x of the source
};

std::optional<SemisimpleProjection> semisimple_projection(const Ring& ring,
                                                          const RingOptions& opts = {});

}  // namespace unitgraph
