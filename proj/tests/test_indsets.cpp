#include <doctest.h>

#include <random>
#include <set>

#include "catalog.hpp"
#include "oracles.hpp"
#include "unitgraph/dsl.hpp"
#include "unitgraph/errors.hpp"
#include "unitgraph/indsets.hpp"
#include "unitgraph/radical.hpp"

using namespace unitgraph;

namespace {

RingPtr ring(const std::string& text) { return build_ring(parse_ring_expr(text)); }
Graph unit_graph(const std::string& text) { return build_graph(*ring(text), GraphKind::Unit); }

Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Elem, Elem>> edges;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(n, edges);
}

MisLimits unlimited() {
  MisLimits l;
  l.max_sets.reset();
  l.time_budget.reset();
  return l;
}

}  // namespace

TEST_SUITE("indsets") {
  TEST_CASE("predicates") {
    const auto z3 = unit_graph("Z3");
    CHECK(is_independent(z3, VertexSet(3, {1, 2})));
    CHECK(is_maximal_independent(z3, VertexSet(3, {1, 2})));
    CHECK(is_maximal_independent(z3, VertexSet(3, {0})));
    CHECK(is_independent(z3, VertexSet(3)));
    CHECK_FALSE(is_maximal_independent(z3, VertexSet(3)));

    CHECK_FALSE(is_independent(unit_graph("Z9"), VertexSet(9, {1, 2, 4, 5, 7, 8})));
    CHECK_FALSE(is_maximal_independent(unit_graph("Z4"), VertexSet(4, {0})));
    CHECK_FALSE(is_maximal_independent(z3, VertexSet(4, {0})));  // wrong universe
  }

  TEST_CASE("enumeration examples") {
    CHECK(collect_mis(unit_graph("Z4")) == std::vector<VertexSet>{VertexSet(4, {0, 2}), VertexSet(4, {1, 3})});
    CHECK(collect_mis(unit_graph("Z3")) == std::vector<VertexSet>{VertexSet(3, {0}), VertexSet(3, {1, 2})});
    CHECK(collect_mis(Graph::from_edges(5, {})) == std::vector<VertexSet>{VertexSet::full(5)});
    CHECK(collect_mis(Graph::from_edges(0, {})) == std::vector<VertexSet>{VertexSet(0)});

    const auto rep = enumerate_mis(unit_graph("Z3"));
    CHECK(rep.count == 2);
    CHECK_FALSE(rep.well_covered);
    CHECK(rep.independence_number == 2);
    CHECK(rep.sizes_seen == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}});
    REQUIRE(rep.witnesses.size() == 2);
    CHECK(rep.witnesses[0].size() != rep.witnesses[1].size());
  }

  TEST_CASE("well-covered examples") {
    CHECK(well_covered_bruteforce(unit_graph("M2(GF(2))")) == WellCovered::Yes);
    CHECK(well_covered_bruteforce(unit_graph("M2(GF(3))")) == WellCovered::No);
    CHECK(well_covered_bruteforce(unit_graph("Z2 x Z3")) == WellCovered::No);
  }

  TEST_CASE("agrees with the subset oracle on every ring graph up to 16 vertices") {
    for (const auto& text : testcat::all_rings()) {
      const auto r = ring(text);
      if (r->order() > 16) continue;
      CAPTURE(text);
      for (auto kind : {GraphKind::Unit, GraphKind::Cayley, GraphKind::Generalized}) {
        const auto g = build_graph(*r, kind);
        CHECK(collect_mis(g) == oracle::mis_by_subsets(g));
      }
    }
  }

  TEST_CASE("agrees with the subset oracle on random graphs up to 16 vertices") {
    std::mt19937 rng(1234);
    for (std::size_t n = 0; n <= 16; ++n) {
      for (double p : {0.1, 0.3, 0.5, 0.8}) {
        for (int rep = 0; rep < 4; ++rep) {
          CAPTURE(n);
          CAPTURE(p);
          const auto g = random_graph(n, p, rng);
          const auto expected = oracle::mis_by_subsets(g);
          const auto got = collect_mis(g);
          CHECK(got == expected);
          std::set<std::size_t> sizes;
          for (const auto& s : expected) sizes.insert(s.size());
          const auto report = enumerate_mis(g);
          CHECK(report.count == expected.size());
          CHECK(report.well_covered == (sizes.size() == 1));
          CHECK(report.independence_number == *sizes.rbegin());
          CHECK((well_covered_bruteforce(g) == WellCovered::Yes) == (sizes.size() == 1));
        }
      }
    }
  }

  TEST_CASE("every emitted set is maximal and every vertex is covered") {
    for (const std::string text : {"Z2 x Z2 x Z2 x Z2", "M2(GF(3))", "GF(4) x GF(8)", "Z25", "Z3 x Z3 x Z3"}) {
      CAPTURE(text);
      const auto g = unit_graph(text);
      VertexSet seen(g.vertex_count());
      std::size_t emitted = 0;
      enumerate_mis(g, [&](const VertexSet& s) {
        CHECK(is_maximal_independent(g, s));
        seen |= s;
        ++emitted;
      });
      CHECK(emitted > 0);
      CHECK(seen.size() == g.vertex_count());
    }
  }

  TEST_CASE("limits are reported in band") {
    const auto g = unit_graph("Z2 x Z2 x Z2 x Z2");  // 256 sets
    MisLimits l = unlimited();
    l.max_sets = 10;
    const auto rep = enumerate_mis(g, {}, l);
    CHECK(rep.truncated);
    CHECK(rep.count == 10);
    CHECK_THROWS_AS(collect_mis(g, l), CapExceeded);

    l = unlimited();
    l.time_budget = std::chrono::duration<double>(0.0);
    CHECK(enumerate_mis(unit_graph("M2(GF(3))"), {}, l).truncated);

    l = unlimited();
    l.max_sets = 3;
    CHECK(well_covered_bruteforce(g, l) == WellCovered::Undecided);

    l = unlimited();
    l.stop_mode = StopMode::FirstTwoSizes;
    const auto early = enumerate_mis(unit_graph("M2(GF(3))"), {}, l);
    CHECK(early.stopped_early);
    CHECK_FALSE(early.truncated);
    CHECK(early.sizes_seen.size() == 2);
    CHECK_FALSE(early.well_covered);
  }

  TEST_CASE("local rings with large radicals finish quickly") {
    for (const std::string text : {"GA(GF(2), Q8)", "GA(GF(2), D4)", "M2(Z4)"}) {
      CAPTURE(text);
      CHECK(well_covered_bruteforce(unit_graph(text)) == WellCovered::Yes);
    }
    CHECK(collect_mis(unit_graph("GA(GF(2), Q8)")).size() == 2);
  }

  TEST_CASE("maximal independent sets are coset unions over the quotient when 2 is not a unit") {
    for (const auto& text : testcat::all_rings()) {
      const auto r = ring(text);
      if (r->is_unit(r->from_integer(2)) || r->order() > 256) continue;
      const auto q = quotient_by_radical(r);
      if (q.radical().size() == 1) continue;
      CAPTURE(text);
      const auto g = build_graph(*r, GraphKind::Unit);
      const auto gq = build_graph(*q.ring(), GraphKind::Unit);
      const auto up = collect_mis(g);
      std::vector<VertexSet> lifted;
      for (const auto& s : collect_mis(gq)) lifted.push_back(q.preimage(s));
      std::sort(lifted.begin(), lifted.end());
      CHECK(up == lifted);
      CHECK((well_covered_bruteforce(g) == WellCovered::Yes) == (well_covered_bruteforce(gq) == WellCovered::Yes));
    }
  }
}
