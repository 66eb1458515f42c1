#include "unitgraph/graph.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "unitgraph/errors.hpp"

namespace unitgraph {

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Unit:
      return "unit";
    case GraphKind::Cayley:
      return "cayley";
    case GraphKind::Generalized:
      return "generalized";
    case GraphKind::Plain:
      return "plain";
  }
  return "plain";
}

GraphKind graph_kind_from_string(std::string_view name) {
  if (name == "unit") return GraphKind::Unit;
  if (name == "cayley") return GraphKind::Cayley;
  if (name == "generalized") return GraphKind::Generalized;
  if (name == "plain") return GraphKind::Plain;
  throw InvalidArgument("unknown graph kind '" + std::string(name) + "'");
}

Graph::Graph(std::size_t n, GraphKind kind, std::string label)
    : kind_(kind), label_(std::move(label)), rows_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<Elem, Elem>>& edges,
                        GraphKind kind, std::string label) {
  Graph g(n, kind, std::move(label));
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw InvalidArgument("edge endpoint out of range");
    if (a == b) throw InvalidArgument("loops are not allowed");
    g.connect(a, b);
  }
  return g;
}

void Graph::connect(std::size_t a, std::size_t b) {
  rows_[a].insert(b);
  rows_[b].insert(a);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total / 2;
}

std::vector<std::pair<Elem, Elem>> Graph::edges() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    rows_[a].for_each([&](std::size_t b) {
      if (a < b) out.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
    });
  }
  return out;
}

std::vector<VertexSet> Graph::complement_rows() const {
  const std::size_t n = rows_.size();
  std::vector<VertexSet> out;
  out.reserve(n);
  const auto all = VertexSet::full(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto row = all - rows_[v];
    row.erase(v);
    out.push_back(std::move(row));
  }
  return out;
}

Graph build_graph(const Ring& ring, GraphKind kind, std::size_t max_vertices) {
  const std::size_t n = ring.order();
  if (n > max_vertices) {
    throw CapExceeded(ring.label() + " has " + std::to_string(n) + " elements, graph cap is " +
                      std::to_string(max_vertices));
  }
  if (kind == GraphKind::Plain) throw InvalidArgument("plain graphs are not built from rings");
  Graph g(n, kind, ring.label());
  const auto units = ring.unit_set().elements();
  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = static_cast<Elem>(x);
    for (std::size_t y = x + 1; y < n; ++y) {
      const auto ey = static_cast<Elem>(y);
      bool edge = false;
      switch (kind) {
        case GraphKind::Unit:
          edge = ring.is_unit(ring.add(ex, ey));
          break;
        case GraphKind::Cayley:
          edge = ring.is_unit(ring.sub(ex, ey));
          break;
        case GraphKind::Generalized:
          // x + u y = v gives y + u^-1 x = u^-1 v, so one orientation suffices.
          for (auto u : units) {
            if (ring.is_unit(ring.add(ex, ring.mul(u, ey)))) {
              edge = true;
              break;
            }
          }
          break;
        case GraphKind::Plain:
          break;
      }
      if (edge) g.connect(x, y);
    }
  }
  return g;
}

bool graphs_equal(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw InvalidArgument("graphs have different vertex counts");
  }
  return a == b;
}

std::string export_graph(const Graph& g, GraphFormat format) {
  const auto edges = g.edges();
  if (format == GraphFormat::Json) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["kind"] = std::string(to_string(g.kind()));
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : edges) j["edges"].push_back({a, b});
    return j.dump();
  }
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const auto& [a, b] : edges) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

Graph import_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("graph JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("edges")) throw InvalidArgument("graph JSON needs n and edges");
  const auto n = j.at("n").get<std::size_t>();
  const auto kind = j.contains("kind") ? graph_kind_from_string(j.at("kind").get<std::string>())
                                       : GraphKind::Plain;
  std::vector<std::pair<Elem, Elem>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Elem>(), e.at(1).get<Elem>());
  return Graph::from_edges(n, edges, kind);
}

}  // namespace unitgraph
