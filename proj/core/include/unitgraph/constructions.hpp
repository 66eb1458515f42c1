#pragma once

#include <cstdint>
#include <vector>

#include "unitgraph/radical.hpp"
#include "unitgraph/ring.hpp"
#include "unitgraph/vertex_set.hpp"

namespace unitgraph {

/// When verify is set, every construction checks its output with
/// is_maximal_independent on the unit graph and throws InvalidArgument on failure.
struct ConstructionOptions {
  bool verify = true;
};

/// M_n(GF(q)), or GF(q) itself when n == 1.
RingPtr matrix_ring(std::uint32_t n, std::uint64_t q);

/// The 2^n diagonal matrices with entries ±1. Rejects characteristic 2.
VertexSet signature_set(const Ring& matrix_ring, const ConstructionOptions& opts = {});

/// Matrices whose first row is zero; q^(n^2 - n) elements.
VertexSet zero_first_row_set(const Ring& matrix_ring, const ConstructionOptions& opts = {});

/// R_1 x ... x M_i x ... x R_t for a nonunit maximal independent set M_i of
/// factor i (0-based). A non-product ring is treated as a single factor.
VertexSet product_nonunit_extend(const Ring& product, std::size_t factor, const VertexSet& factor_set,
                                 const ConstructionOptions& opts = {});

/// M_1 x ... x M_t for unit maximal independent sets; requires 2 to be a unit.
VertexSet product_unit_sets(const Ring& product, const std::vector<VertexSet>& factor_sets,
                            const ConstructionOptions& opts = {});

/// Union of the radical cosets of a nonunit maximal independent set of R/J(R)
/// (given as coset numbers). Size |M| * |J(R)|.
VertexSet lift_nonunit_mis(const QuotientRing& quotient, const VertexSet& quotient_set,
                           const ConstructionOptions& opts = {});

/// Smallest representative of each coset of a unit maximal independent set of
/// R/J(R). Requires 2 to be a unit of R.
VertexSet lift_unit_mis_reps(const QuotientRing& quotient, const VertexSet& quotient_set,
                             const ConstructionOptions& opts = {});

/// P * A * Q = diag(I_t, 0) with P, Q invertible, as elements of the matrix ring.
struct RankNormalForm {
  Elem p;
  Elem q;
  std::uint32_t rank;
};

/// Gauss-Jordan with row and column swaps; pivot is the first nonzero entry
/// of the remaining block in row-major order.
RankNormalForm rank_normal_form(const Ring& matrix_ring, Elem a);

/// Nonunit z with y + z a unit, for a nonzero nonunit y of a product of matrix
/// rings over fields. Throws InvalidArgument for y = 0 or y a unit, Unsupported
/// for other rings.
Elem claim_complement_witness(const Ring& semisimple, Elem y);

struct RTimesSWitnesses {
  RingPtr product;     ///< R x S
  VertexSet m;         ///< nonunit maximal independent set of the unit graph of R
  VertexSet nonunits;  ///< X, the nonunits of S
  VertexSet m_times_s;
  VertexSet n;         ///< (R x {0}) ∪ (M x X)
};

/// Two maximal independent sets of different sizes in the unit graph of R x S,
/// for semisimple R of characteristic 2 and semisimple S with 2 a unit.
RTimesSWitnesses r_times_s_witnesses(const RingPtr& r, const RingPtr& s,
                                     const ConstructionOptions& opts = {});

struct TwoSizeWitnesses {
  VertexSet unit_side;     ///< lifted product of signature sets, size prod 2^{n_i}
  VertexSet nonunit_side;  ///< lifted zero-first-row construction, size |M| * |J|
};

/// Two maximal independent sets of different sizes when 2 is a unit of R.
TwoSizeWitnesses two_size_witnesses_2unit(const RingPtr& r, const ConstructionOptions& opts = {});

}  // namespace unitgraph
