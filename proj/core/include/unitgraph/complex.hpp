#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unitgraph/graph.hpp"
#include "unitgraph/indsets.hpp"
#include "unitgraph/vertex_set.hpp"

namespace unitgraph {

/// Sorted vertex list.
using Face = std::vector<Elem>;

/// Simplicial complex given by its facets: duplicate-free, no facet inside
/// another, sorted lexicographically.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Normalizes: sorts each facet, drops duplicates and non-maximal faces.
  SimplicialComplex(std::size_t vertex_count, std::vector<Face> facets);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  /// Largest facet size minus one; -1 for {∅}.
  int dimension() const noexcept { return dimension_; }

  /// Link of a face: {τ : τ ∩ σ = ∅, τ ∪ σ a face}.
  SimplicialComplex link(const Face& sigma) const;
  /// All faces including ∅, grouped by size; throws CapExceeded above max_faces.
  std::vector<std::vector<Face>> faces_by_size(std::size_t max_faces) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Face> facets_;
  int dimension_ = -1;
};

struct ComplexLimits {
  std::size_t max_faces = 200000;
  std::size_t max_facets_for_shelling = 12;
  std::size_t max_shelling_states = 1000000;
};

/// Facets are the maximal independent sets. Throws CapExceeded on truncation.
SimplicialComplex independence_complex(const Graph& g, const MisLimits& limits = {});

bool is_pure(const SimplicialComplex& c);

enum class Decision { Yes, No, Undecided };

struct ShellabilityResult {
  Decision decision = Decision::Undecided;
  std::string reason;         ///< "not pure", "facet cap", "state budget", ...
  std::vector<std::size_t> order;  ///< facet indices of a shelling, when found
};

/// Pure shellability by search over facet orders, memoized on the set of
/// placed facets. Non-pure complexes are rejected with reason "not pure".
ShellabilityResult is_shellable(const SimplicialComplex& c, const ComplexLimits& limits = {});

/// Reduced GF(2) Betti numbers for dimensions -1..dim (index i holds h̃_{i-1}).
std::vector<std::size_t> reduced_homology_gf2(const SimplicialComplex& c, const ComplexLimits& limits = {});

/// Reisner criterion over GF(2).
bool is_cm_gf2(const SimplicialComplex& c, const ComplexLimits& limits = {});

/// Vertices lying in every facet removed.
SimplicialComplex core(const SimplicialComplex& c);

/// Every link of the core is a GF(2) homology sphere of its own dimension.
bool is_gorenstein_gf2(const SimplicialComplex& c, const ComplexLimits& limits = {});

/// Face counts f_{-1}, f_0, ... (index i holds faces of size i).
std::vector<std::size_t> face_counts(const SimplicialComplex& c, const ComplexLimits& limits = {});

/// JSON array of sorted index arrays.
std::string facets_to_json(const SimplicialComplex& c);
SimplicialComplex facets_from_json(std::string_view text);

}  // namespace unitgraph
