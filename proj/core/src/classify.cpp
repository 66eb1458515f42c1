#include "unitgraph/classify.hpp"

#include <algorithm>

#include "unitgraph/errors.hpp"
#include "unitgraph/graph.hpp"
#include "unitgraph/number_theory.hpp"

namespace unitgraph {

namespace {

bool power_of_two(std::uint64_t q) { return q >= 2 && (q & (q - 1)) == 0; }

}  // namespace

std::optional<bool> classify_well_covered(const RingDescriptor& descriptor) {
  const auto shape = wedderburn_shape(descriptor);
  if (!shape) return std::nullopt;
  const auto& b = shape->blocks;
  if (b.empty()) return false;
  if (!std::all_of(b.begin(), b.end(), [](const auto& x) { return power_of_two(x.q); })) return false;
  if (b.size() == 1 && (b[0].n == 1 || b[0].n == 2)) return true;
  if (b.size() == 2 && b[0] == b[1] && b[0].n == 1) return true;
  return std::all_of(b.begin(), b.end(), [](const auto& x) { return x.n == 1 && x.q == 2; });
}

CmPrediction classify_cm(const Ring& ring) {
  const bool boolean = is_boolean_ring(ring);
  const bool char2_field = ring.characteristic() == 2 && is_field(ring);
  CmPrediction p;
  p.cm = boolean || char2_field;
  p.shellable = p.cm;
  p.gorenstein = boolean;
  return p;
}

std::string to_string(Check c) {
  switch (c) {
    case Check::WellCovered:
      return "wc";
    case Check::Cm:
      return "cm";
    case Check::Shellable:
      return "shellable";
    case Check::Gorenstein:
      return "gorenstein";
  }
  return "?";
}

std::optional<Check> check_from_string(const std::string& name) {
  if (name == "wc") return Check::WellCovered;
  if (name == "cm") return Check::Cm;
  if (name == "shellable") return Check::Shellable;
  if (name == "gorenstein") return Check::Gorenstein;
  return std::nullopt;
}

ClassificationReport cross_validate(const RingDescriptor& descriptor, const std::set<Check>& checks,
                                    const OracleCaps& caps) {
  ClassificationReport rep;
  rep.descriptor = descriptor;
  const auto ring = build_ring(descriptor);
  rep.quotient_char = quotient_by_radical(ring).characteristic();
  rep.shape = wedderburn_shape(descriptor);

  const auto wc = classify_well_covered(descriptor);
  rep.predicted_well_covered = wc ? Outcome{wc, ""} : Outcome{std::nullopt, "unknown: unsupported shape"};
  const auto cm = classify_cm(*ring);
  rep.predicted_cm = {cm.cm, ""};
  rep.predicted_shellable = {cm.shellable, ""};
  rep.predicted_gorenstein = {cm.gorenstein, ""};

  const bool want_wc = checks.contains(Check::WellCovered);
  const bool want_complex =
      checks.contains(Check::Cm) || checks.contains(Check::Shellable) || checks.contains(Check::Gorenstein);

  std::optional<Graph> graph;
  if ((want_wc && ring->order() <= caps.max_wc_order) ||
      (want_complex && ring->order() <= caps.max_complex_order)) {
    graph = build_graph(*ring, GraphKind::Unit);
  }

  if (!want_wc) {
    rep.observed_well_covered.note = "skipped: not requested";
  } else if (!graph || ring->order() > caps.max_wc_order) {
    rep.observed_well_covered.note = "skipped: order above oracle cap";
  } else {
    switch (well_covered_bruteforce(*graph, caps.mis)) {
      case WellCovered::Yes:
        rep.observed_well_covered.value = true;
        break;
      case WellCovered::No:
        rep.observed_well_covered.value = false;
        break;
      case WellCovered::Undecided:
        rep.observed_well_covered.note = "skipped: enumeration truncated";
        break;
    }
  }

  auto skip_all = [&](const std::string& why) {
    for (auto* o : {&rep.observed_cm_gf2, &rep.observed_shellable, &rep.observed_gorenstein_gf2}) {
      o->note = why;
    }
  };
  if (!want_complex) {
    skip_all("skipped: not requested");
  } else if (!graph || ring->order() > caps.max_complex_order) {
    skip_all("skipped: order above oracle cap");
  } else {
    try {
      const auto complex = independence_complex(*graph, caps.mis);
      if (checks.contains(Check::Cm)) {
        try {
          rep.observed_cm_gf2.value = is_cm_gf2(complex, caps.complex);
        } catch (const CapExceeded& e) {
          rep.observed_cm_gf2.note = std::string("skipped: ") + e.what();
        }
      } else {
        rep.observed_cm_gf2.note = "skipped: not requested";
      }
      if (checks.contains(Check::Shellable)) {
        const auto s = is_shellable(complex, caps.complex);
        if (s.decision == Decision::Undecided) {
          rep.observed_shellable.note = "skipped: " + s.reason;
        } else {
          rep.observed_shellable.value = s.decision == Decision::Yes;
        }
      } else {
        rep.observed_shellable.note = "skipped: not requested";
      }
      if (checks.contains(Check::Gorenstein)) {
        try {
          rep.observed_gorenstein_gf2.value = is_gorenstein_gf2(complex, caps.complex);
        } catch (const CapExceeded& e) {
          rep.observed_gorenstein_gf2.note = std::string("skipped: ") + e.what();
        }
      } else {
        rep.observed_gorenstein_gf2.note = "skipped: not requested";
      }
    } catch (const CapExceeded& e) {
      skip_all(std::string("skipped: ") + e.what());
    }
  }

  std::optional<bool> agree;
  auto fold = [&](const Outcome& predicted, const Outcome& observed) {
    if (!predicted.value || !observed.value) return;
    agree = agree.value_or(true) && (*predicted.value == *observed.value);
  };
  fold(rep.predicted_well_covered, rep.observed_well_covered);
  fold(rep.predicted_cm, rep.observed_cm_gf2);
  fold(rep.predicted_shellable, rep.observed_shellable);
  fold(rep.predicted_gorenstein, rep.observed_gorenstein_gf2);
  rep.agreement = agree;
  return rep;
}

}  // namespace unitgraph
