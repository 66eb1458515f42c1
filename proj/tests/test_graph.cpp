#include <doctest.h>

#include "catalog.hpp"
#include "oracles.hpp"
#include "unitgraph/dsl.hpp"
#include "unitgraph/errors.hpp"
#include "unitgraph/graph.hpp"
#include "unitgraph/radical.hpp"

using namespace unitgraph;

namespace {

RingPtr ring(const std::string& text) { return build_ring(parse_ring_expr(text)); }

using EdgeList = std::vector<std::pair<Elem, Elem>>;

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("examples") {
    const auto z4 = build_graph(*ring("Z4"), GraphKind::Unit);
    CHECK(z4.edges() == EdgeList{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    const auto gf4 = build_graph(*ring("GF(4)"), GraphKind::Unit);
    CHECK(gf4.edge_count() == 6);

    const auto z9 = build_graph(*ring("Z9"), GraphKind::Unit);
    CHECK(z9.adjacent(1, 4));
  }

  TEST_CASE("adjacency matches the definitions") {
    for (const auto& text : testcat::all_rings()) {
      const auto r = ring(text);
      if (r->order() > 256) continue;
      CAPTURE(text);
      const auto units = oracle::naive_units(*r);
      for (auto kind : {GraphKind::Unit, GraphKind::Cayley, GraphKind::Generalized}) {
        CAPTURE(to_string(kind));
        const auto g = build_graph(*r, kind);
        CHECK(g.kind() == kind);
        CHECK(g == oracle::graph_from_definition(*r, kind, units));
        for (std::size_t v = 0; v < g.vertex_count(); ++v) CHECK_FALSE(g.adjacent(v, v));
      }
    }
  }

  TEST_CASE("degree formulas") {
    for (const auto& text : testcat::all_rings()) {
      CAPTURE(text);
      const auto r = ring(text);
      const auto u = r->unit_set().size();
      const auto unit = build_graph(*r, GraphKind::Unit);
      const auto cayley = build_graph(*r, GraphKind::Cayley);
      for (Elem x = 0; x < r->order(); ++x) {
        CHECK(cayley.degree(x) == u);
        CHECK(unit.degree(x) == (r->is_unit(r->add(x, x)) ? u - 1 : u));
      }
    }
  }

  TEST_CASE("unit graph equals unitary Cayley graph iff quotient characteristic is 2") {
    CHECK(graphs_equal(build_graph(*ring("Z8"), GraphKind::Cayley), build_graph(*ring("Z8"), GraphKind::Unit)));
    CHECK_FALSE(graphs_equal(build_graph(*ring("Z3"), GraphKind::Cayley), build_graph(*ring("Z3"), GraphKind::Unit)));
    const auto z4 = build_graph(*ring("Z4"), GraphKind::Unit);
    CHECK(graphs_equal(z4, z4));
    CHECK_THROWS_AS(graphs_equal(z4, build_graph(*ring("Z5"), GraphKind::Unit)), InvalidArgument);

    for (const auto& text : testcat::all_rings()) {
      CAPTURE(text);
      const auto r = ring(text);
      const bool eq = graphs_equal(build_graph(*r, GraphKind::Cayley), build_graph(*r, GraphKind::Unit));
      CHECK(eq == (quotient_by_radical(r).characteristic() == 2));
    }
  }

  TEST_CASE("adjacency descends to the quotient when 2 is not a unit") {
    for (const auto& text : testcat::all_rings()) {
      const auto r = ring(text);
      if (r->is_unit(r->from_integer(2)) || r->order() > 256) continue;
      CAPTURE(text);
      const auto q = quotient_by_radical(r);
      const auto g = build_graph(*r, GraphKind::Unit);
      const auto gq = build_graph(*q.ring(), GraphKind::Unit);
      for (Elem x = 0; x < r->order(); ++x) {
        for (Elem y = x + 1; y < r->order(); ++y) {
          const Elem a = q.reduce(x), b = q.reduce(y);
          CHECK(g.adjacent(x, y) == (a != b && gq.adjacent(a, b)));
        }
      }
    }
  }

  TEST_CASE("generalized unit graph of a field is complete") {
    for (const std::string f : {"GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(8)", "GF(9)", "GF(25)"}) {
      const auto g = build_graph(*ring(f), GraphKind::Generalized);
      const auto n = g.vertex_count();
      CHECK(g.edge_count() == n * (n - 1) / 2);
    }
  }

  TEST_CASE("export formats") {
    const auto k2 = Graph::from_edges(2, {{0, 1}});
    const auto dot = export_graph(k2, GraphFormat::Dot);
    CHECK(dot == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");

    const auto z4 = build_graph(*ring("Z4"), GraphKind::Unit);
    CHECK(export_graph(z4, GraphFormat::Json) == R"({"n":4,"kind":"unit","edges":[[0,1],[0,3],[1,2],[2,3]]})");
    CHECK(export_graph(Graph::from_edges(3, {}), GraphFormat::Json) == R"({"n":3,"kind":"plain","edges":[]})");

    for (const auto& text : testcat::acceptance_rings()) {
      CAPTURE(text);
      const auto g = build_graph(*ring(text), GraphKind::Unit);
      const auto back = import_graph_json(export_graph(g, GraphFormat::Json));
      CHECK(back == g);
      CHECK(back.kind() == g.kind());
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(build_graph(*ring("Z100"), GraphKind::Unit, 50), CapExceeded);
    CHECK_THROWS_AS(import_graph_json("{"), InvalidArgument);
    CHECK_THROWS_AS(graph_kind_from_string("directed"), InvalidArgument);
  }
}
