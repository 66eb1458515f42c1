#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "unitgraph/graph.hpp"
#include "unitgraph/vertex_set.hpp"

namespace unitgraph {

bool is_independent(const Graph& g, const VertexSet& s);

/// Independent, and every vertex outside s has a neighbor in s.
bool is_maximal_independent(const Graph& g, const VertexSet& s);

enum class StopMode { All, FirstTwoSizes };

struct MisLimits {
  /// nullopt disables the cap.
  std::optional<std::size_t> max_sets = 1000000;
  std::optional<std::chrono::duration<double>> time_budget = std::chrono::duration<double>(60.0);
  StopMode stop_mode = StopMode::All;
};

struct MisReport {
  std::map<std::size_t, std::size_t> sizes_seen;  ///< size -> multiplicity
  std::size_t count = 0;
  std::size_t independence_number = 0;
  bool well_covered = false;
  /// Two maximal independent sets of different sizes, when found.
  std::vector<VertexSet> witnesses;
  /// A limit stopped enumeration before the family was exhausted.
  bool truncated = false;
  /// Halted early because two sizes were observed (stop_mode FirstTwoSizes).
  bool stopped_early = false;
};

using MisCallback = std::function<void(const VertexSet&)>;

/**
 * Enumerates maximal independent sets as maximal cliques of the complement,
 * Bron-Kerbosch with the pivot maximizing |P ∩ N(u)| over P ∪ X (ties to the
 * lowest index). Every emitted set is maximal independent.
 */
MisReport enumerate_mis(const Graph& g, const MisCallback& on_set = {}, const MisLimits& limits = {});

/// All maximal independent sets, sorted lexicographically. Throws CapExceeded on truncation.
std::vector<VertexSet> collect_mis(const Graph& g, const MisLimits& limits = {});

enum class WellCovered { Yes, No, Undecided };

/// Brute-force decision with early stop on the second distinct size.
WellCovered well_covered_bruteforce(const Graph& g, const MisLimits& limits = {});

}  // namespace unitgraph
