#include "unitgraph/indsets.hpp"

#include <algorithm>

#include "unitgraph/errors.hpp"

namespace unitgraph {

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](std::size_t v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count() || !is_independent(g, s)) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!s.contains(v) && !g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Graph& g, const MisCallback& cb, const MisLimits& limits)
      : comp_(g.complement_rows()),
        cb_(cb),
        limits_(limits),
        start_(std::chrono::steady_clock::now()) {}

  MisReport run(std::size_t n) {
    VertexSet r(n);
    expand(r, VertexSet::full(n), VertexSet(n));
    report_.independence_number = report_.sizes_seen.empty() ? 0 : report_.sizes_seen.rbegin()->first;
    report_.well_covered = report_.sizes_seen.size() == 1;
    return report_;
  }

 private:
  bool out_of_budget() {
    if (limits_.max_sets && report_.count >= *limits_.max_sets) return true;
    if (limits_.time_budget && (++ticks_ & 0xFF) == 0 &&
        std::chrono::steady_clock::now() - start_ > *limits_.time_budget) {
      return true;
    }
    return false;
  }

  void emit(const VertexSet& r) {
    ++report_.count;
    auto [it, inserted] = report_.sizes_seen.try_emplace(r.size(), 0);
    ++it->second;
    if (report_.witnesses.empty()) {
      report_.witnesses.push_back(r);
    } else if (report_.witnesses.size() == 1 && report_.witnesses[0].size() != r.size()) {
      report_.witnesses.push_back(r);
    }
    if (cb_) cb_(r);
    if (limits_.stop_mode == StopMode::FirstTwoSizes && report_.sizes_seen.size() >= 2) {
      report_.stopped_early = true;
      halt_ = true;
    }
  }

  void expand(VertexSet& r, VertexSet p, VertexSet x) {
    if (halt_) return;
    if (out_of_budget()) {
      report_.truncated = true;
      halt_ = true;
      return;
    }
    if (p.empty()) {
      if (x.empty()) emit(r);
      return;
    }
    // pivot from P ∪ X maximizing |P ∩ N(u)|, lowest index on ties
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    const auto px = p | x;
    px.for_each([&](std::size_t u) {
      const std::size_t score = p.intersection_size(comp_[u]);
      if (!have || score > best) {
        pivot = u;
        best = score;
        have = true;
      }
    });
    const auto branch = (p - comp_[pivot]).elements();
    for (auto v : branch) {
      if (halt_) return;
      r.insert(v);
      expand(r, p & comp_[v], x & comp_[v]);
      r.erase(v);
      p.erase(v);
      x.insert(v);
    }
  }

  std::vector<VertexSet> comp_;
  const MisCallback& cb_;
  MisLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::size_t ticks_ = 0;
  bool halt_ = false;
  MisReport report_;
};

}  // namespace

MisReport enumerate_mis(const Graph& g, const MisCallback& on_set, const MisLimits& limits) {
  if (limits.max_sets && *limits.max_sets == 0) {
    MisReport r;
    r.truncated = g.vertex_count() > 0;
    return r;
  }
  return Enumerator(g, on_set, limits).run(g.vertex_count());
}

std::vector<VertexSet> collect_mis(const Graph& g, const MisLimits& limits) {
  std::vector<VertexSet> out;
  MisLimits all = limits;
  all.stop_mode = StopMode::All;
  const auto report = enumerate_mis(g, [&](const VertexSet& s) { out.push_back(s); }, all);
  if (report.truncated) throw CapExceeded("maximal independent set enumeration truncated");
  std::sort(out.begin(), out.end());
  return out;
}

WellCovered well_covered_bruteforce(const Graph& g, const MisLimits& limits) {
  MisLimits l = limits;
  l.stop_mode = StopMode::FirstTwoSizes;
  const auto report = enumerate_mis(g, {}, l);
  if (report.sizes_seen.size() >= 2) return WellCovered::No;
  if (report.truncated) return WellCovered::Undecided;
  return WellCovered::Yes;
}

}  // namespace unitgraph
