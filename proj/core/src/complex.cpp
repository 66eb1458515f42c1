#include "unitgraph/complex.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <unordered_set>

#include "unitgraph/errors.hpp"

namespace unitgraph {

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<Face> facets)
    : vertex_count_(vertex_count) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (!f.empty() && f.back() >= vertex_count) throw InvalidArgument("facet vertex out of range");
  }
  // larger faces first so containment only needs checking against kept ones
  std::sort(facets.begin(), facets.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (auto& f : facets) {
    const bool contained = std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) {
      return std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!contained) facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end());
  dimension_ = -1;
  for (const auto& f : facets_) dimension_ = std::max(dimension_, static_cast<int>(f.size()) - 1);
  if (facets_.empty()) facets_.push_back({});
}

SimplicialComplex SimplicialComplex::link(const Face& sigma) const {
  std::vector<Face> out;
  for (const auto& f : facets_) {
    if (!std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) continue;
    Face rest;
    std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return SimplicialComplex(vertex_count_, std::move(out));
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_size(std::size_t max_faces) const {
  std::vector<std::set<Face>> levels(static_cast<std::size_t>(dimension_ + 2));
  std::size_t total = 0;
  for (const auto& f : facets_) {
    if (f.size() >= 63) throw CapExceeded("facet too large to expand into faces");
    const std::uint64_t subsets = std::uint64_t{1} << f.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      Face face;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if ((mask >> i) & 1U) face.push_back(f[i]);
      }
      const std::size_t sz = face.size();
      if (levels[sz].insert(std::move(face)).second && ++total > max_faces) {
        throw CapExceeded("face budget of " + std::to_string(max_faces) + " exceeded");
      }
    }
  }
  std::vector<std::vector<Face>> out;
  for (auto& l : levels) out.emplace_back(l.begin(), l.end());
  return out;
}

SimplicialComplex independence_complex(const Graph& g, const MisLimits& limits) {
  const auto sets = collect_mis(g, limits);
  std::vector<Face> facets;
  facets.reserve(sets.size());
  for (const auto& s : sets) facets.push_back(s.elements());
  return SimplicialComplex(g.vertex_count(), std::move(facets));
}

bool is_pure(const SimplicialComplex& c) {
  const auto& f = c.facets();
  return std::all_of(f.begin(), f.end(), [&](const Face& x) { return x.size() == f.front().size(); });
}

namespace {

// Rank over GF(2) of a sparse 0/1 matrix given column-wise by row indices.
std::size_t gf2_rank(std::size_t rows, const std::vector<std::vector<std::size_t>>& columns) {
  const std::size_t words = (rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis;  // reduced vectors keyed by pivot
  std::vector<std::ptrdiff_t> pivot_of(rows, -1);
  std::size_t rank = 0;
  for (const auto& col : columns) {
    std::vector<std::uint64_t> v(words, 0);
    for (auto r : col) v[r >> 6] ^= std::uint64_t{1} << (r & 63);
    for (;;) {
      std::ptrdiff_t top = -1;
      for (std::size_t w = words; w-- > 0;) {
        if (v[w] != 0) {
          top = static_cast<std::ptrdiff_t>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(v[w])));
          break;
        }
      }
      if (top < 0) break;
      if (pivot_of[top] < 0) {
        pivot_of[top] = static_cast<std::ptrdiff_t>(basis.size());
        basis.push_back(std::move(v));
        ++rank;
        break;
      }
      const auto& b = basis[pivot_of[top]];
      for (std::size_t w = 0; w < words; ++w) v[w] ^= b[w];
    }
  }
  return rank;
}

bool homology_vanishes_below_top(const SimplicialComplex& c, const ComplexLimits& limits, bool sphere) {
  const auto h = reduced_homology_gf2(c, limits);
  const int dim = c.dimension();
  for (int i = -1; i < dim; ++i) {
    if (h[static_cast<std::size_t>(i + 1)] != 0) return false;
  }
  if (sphere) return h[static_cast<std::size_t>(dim + 1)] == 1;
  return true;
}

bool every_link(const SimplicialComplex& c, const ComplexLimits& limits, bool sphere) {
  for (const auto& level : c.faces_by_size(limits.max_faces)) {
    for (const auto& sigma : level) {
      if (!homology_vanishes_below_top(c.link(sigma), limits, sphere)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::size_t> face_counts(const SimplicialComplex& c, const ComplexLimits& limits) {
  std::vector<std::size_t> out;
  for (const auto& level : c.faces_by_size(limits.max_faces)) out.push_back(level.size());
  return out;
}

std::vector<std::size_t> reduced_homology_gf2(const SimplicialComplex& c, const ComplexLimits& limits) {
  const auto levels = c.faces_by_size(limits.max_faces);
  // ranks[s] = rank of the boundary from faces of size s to faces of size s-1
  std::vector<std::size_t> ranks(levels.size() + 1, 0);
  for (std::size_t s = 1; s < levels.size(); ++s) {
    const auto& lower = levels[s - 1];
    std::vector<std::vector<std::size_t>> columns;
    columns.reserve(levels[s].size());
    for (const auto& face : levels[s]) {
      std::vector<std::size_t> col;
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        Face b;
        for (std::size_t i = 0; i < face.size(); ++i) {
          if (i != drop) b.push_back(face[i]);
        }
        col.push_back(static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), b) - lower.begin()));
      }
      columns.push_back(std::move(col));
    }
    ranks[s] = gf2_rank(lower.size(), columns);
  }
  std::vector<std::size_t> h(levels.size());
  for (std::size_t s = 0; s < levels.size(); ++s) h[s] = levels[s].size() - ranks[s] - ranks[s + 1];
  return h;
}

bool is_cm_gf2(const SimplicialComplex& c, const ComplexLimits& limits) {
  return every_link(c, limits, false);
}

SimplicialComplex core(const SimplicialComplex& c) {
  const auto& facets = c.facets();
  Face common = facets.front();
  for (const auto& f : facets) {
    Face next;
    std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::back_inserter(next));
    common = std::move(next);
  }
  std::vector<Face> out;
  for (const auto& f : facets) {
    Face rest;
    std::set_difference(f.begin(), f.end(), common.begin(), common.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return SimplicialComplex(c.vertex_count(), std::move(out));
}

bool is_gorenstein_gf2(const SimplicialComplex& c, const ComplexLimits& limits) {
  return every_link(core(c), limits, true);
}

ShellabilityResult is_shellable(const SimplicialComplex& c, const ComplexLimits& limits) {
  ShellabilityResult result;
  if (!is_pure(c)) {
    result.decision = Decision::No;
    result.reason = "not pure";
    return result;
  }
  const auto& f = c.facets();
  const std::size_t m = f.size();
  if (m > limits.max_facets_for_shelling) {
    result.reason = "facet cap";
    return result;
  }

  // fits[j][i]: facets k with F_j ∩ F_i ⊆ F_j ∩ F_k and |F_j \ F_k| = 1
  std::vector<std::vector<VertexSet>> fits(m, std::vector<VertexSet>(m, VertexSet(m)));
  std::vector<VertexSet> as_sets;
  for (const auto& face : f) as_sets.push_back(VertexSet::from(c.vertex_count(), face));
  const std::size_t words = as_sets.front().words().size();
  for (std::size_t j = 0; j < m; ++j) {
    const auto fj = as_sets[j].words();
    for (std::size_t k = 0; k < m; ++k) {
      // |F_j \ F_k| = 1
      const auto fk = as_sets[k].words();
      std::size_t missing = 0;
      for (std::size_t w = 0; w < words; ++w) missing += std::popcount(fj[w] & ~fk[w]);
      if (missing != 1) continue;
      for (std::size_t i = 0; i < m; ++i) {
        const auto fi = as_sets[i].words();
        bool inside = true;
        for (std::size_t w = 0; w < words && inside; ++w) inside = (fj[w] & fi[w] & ~fk[w]) == 0;
        if (inside) fits[j][i].insert(k);
      }
    }
  }

  std::unordered_set<VertexSet, VertexSetHash> dead;
  std::vector<std::size_t> order;
  bool budget_hit = false;
  auto can_follow = [&](std::size_t j, const VertexSet& placed) {
    bool ok = true;
    placed.for_each([&](std::size_t i) {
      if (ok && !fits[j][i].intersects(placed)) ok = false;
    });
    return ok;
  };
  auto search = [&](auto&& self, VertexSet& placed) -> bool {
    if (placed.size() == m) return true;
    if (dead.contains(placed)) return false;
    if (dead.size() >= limits.max_shelling_states) {
      budget_hit = true;
      return false;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (placed.contains(j) || !can_follow(j, placed)) continue;
      placed.insert(j);
      order.push_back(j);
      if (self(self, placed)) return true;
      order.pop_back();
      placed.erase(j);
      if (budget_hit) return false;
    }
    dead.insert(placed);
    return false;
  };
  VertexSet placed(m);
  if (search(search, placed)) {
    result.decision = Decision::Yes;
    result.order = order;
  } else if (budget_hit) {
    result.reason = "state budget";
  } else {
    result.decision = Decision::No;
    result.reason = "no shelling order";
  }
  return result;
}

std::string facets_to_json(const SimplicialComplex& c) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& f : c.facets()) j.push_back(f);
  return j.dump();
}

SimplicialComplex facets_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("facet JSON: ") + e.what());
  }
  if (!j.is_array()) throw InvalidArgument("facet file must be a JSON array of arrays");
  std::vector<Face> facets;
  Elem max_vertex = 0;
  bool any = false;
  for (const auto& f : j) {
    if (!f.is_array()) throw InvalidArgument("facet must be an array of vertex indices");
    Face face = f.get<Face>();
    if (!std::is_sorted(face.begin(), face.end())) throw InvalidArgument("facet arrays must be sorted");
    for (auto v : face) {
      max_vertex = std::max(max_vertex, v);
      any = true;
    }
    facets.push_back(std::move(face));
  }
  return SimplicialComplex(any ? max_vertex + 1 : 0, std::move(facets));
}

}  // namespace unitgraph
