#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unitgraph/ring.hpp"
#include "unitgraph/vertex_set.hpp"

namespace unitgraph {

enum class GraphKind {
  Unit,         ///< x ~ y iff x + y is a unit
  Cayley,       ///< x ~ y iff x - y is a unit
  Generalized,  ///< x ~ y iff x + u y is a unit for some unit u
  Plain,        ///< imported or hand-built
};

std::string_view to_string(GraphKind kind);
GraphKind graph_kind_from_string(std::string_view name);

/// Simple undirected graph with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, GraphKind kind, std::string label = {});

  /// Build from an edge list; throws InvalidArgument on loops or bad indices.
  static Graph from_edges(std::size_t n, const std::vector<std::pair<Elem, Elem>>& edges,
                          GraphKind kind = GraphKind::Plain, std::string label = {});

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  GraphKind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }

  const VertexSet& neighbors(std::size_t v) const { return rows_.at(v); }
  bool adjacent(std::size_t a, std::size_t b) const { return rows_.at(a).contains(b); }
  std::size_t degree(std::size_t v) const { return rows_.at(v).size(); }
  std::size_t edge_count() const;
  /// Edges (a, b) with a < b, sorted.
  std::vector<std::pair<Elem, Elem>> edges() const;

  /// Adjacency rows of the complement graph (no loops).
  std::vector<VertexSet> complement_rows() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  friend Graph build_graph(const Ring&, GraphKind, std::size_t);
  void connect(std::size_t a, std::size_t b);

  GraphKind kind_ = GraphKind::Plain;
  std::string label_;
  std::vector<VertexSet> rows_;
};

/// Default vertex cap for graph construction.
inline constexpr std::size_t kDefaultGraphCap = 4096;

/// Unit, unitary Cayley, or generalized unit graph of a ring.
/// Throws CapExceeded above max_vertices.
Graph build_graph(const Ring& ring, GraphKind kind, std::size_t max_vertices = kDefaultGraphCap);

/// Identical adjacency; throws InvalidArgument on vertex-count mismatch.
bool graphs_equal(const Graph& a, const Graph& b);

enum class GraphFormat { Dot, Json };

/// Canonical text export: edges once, lower index first, sorted.
std::string export_graph(const Graph& g, GraphFormat format);

/// Parse the JSON export format back into a graph.
Graph import_graph_json(std::string_view text);

}  // namespace unitgraph
