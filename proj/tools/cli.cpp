#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "unitgraph/classify.hpp"
#include "unitgraph/complex.hpp"
#include "unitgraph/constructions.hpp"
#include "unitgraph/dsl.hpp"
#include "unitgraph/errors.hpp"
#include "unitgraph/graph.hpp"
#include "unitgraph/indsets.hpp"
#include "unitgraph/radical.hpp"
#include "unitgraph/ring.hpp"

namespace unitgraph::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Thrown by command bodies to pick a non-zero exit code after output is written.
struct ExitWith {
  int code;
};

json tri(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

json outcome(const Outcome& o) {
  if (o.value) return *o.value;
  return o.note.empty() ? json(nullptr) : json(o.note);
}

json set_json(const VertexSet& s, const Graph* g = nullptr) {
  json j;
  j["size"] = s.size();
  j["elements"] = s.elements();
  if (g != nullptr) j["verified_maximal"] = is_maximal_independent(*g, s);
  return j;
}

void render_pretty(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    const bool scalar_array =
        value.is_array() && std::all_of(value.begin(), value.end(), [](const json& v) { return v.is_primitive(); });
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_pretty(os, value, indent + 2);
    } else if (value.is_array() && !scalar_array) {
      os << pad << key << ":\n";
      std::size_t i = 0;
      for (const auto& item : value) {
        if (item.is_object()) {
          os << pad << "  [" << i++ << "]\n";
          render_pretty(os, item, indent + 4);
        } else {
          os << pad << "  " << item.dump() << '\n';
        }
      }
    } else {
      os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

void render_table(std::ostream& os, const json& rows) {
  os << std::left << std::setw(22) << "ring" << std::setw(12) << "check" << std::setw(10) << "expected"
     << std::setw(11) << "predicted" << std::setw(34) << "observed"
     << "status\n";
  for (const auto& row : rows) {
    for (const auto& [check, cell] : row["checks"].items()) {
      auto show = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
      os << std::setw(22) << row["ring"].get<std::string>() << std::setw(12) << check << std::setw(10)
         << show(cell["expected"]) << std::setw(11) << show(cell["predicted"]) << std::setw(34)
         << show(cell["observed"]) << (cell["ok"].get<bool>() ? "ok" : "MISMATCH") << '\n';
    }
  }
}

struct Emitter {
  std::ostream& out;
  bool pretty = false;
  Clock::time_point start = Clock::now();

  void emit(const std::string& ring, const std::string& command, const json& result, bool truncated) const {
    json top;
    top["ring"] = ring.empty() ? json(nullptr) : json(ring);
    top["command"] = command;
    top["result"] = result;
    top["truncated"] = truncated;
    top["runtime_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    if (!pretty) {
      out << top.dump() << '\n';
      return;
    }
    if (command == "verify") {
      render_table(out, result["rows"]);
      out << "agreement: " << result["agreement"].dump() << "  (" << top["runtime_ms"].dump() << " ms)\n";
      return;
    }
    render_pretty(out, top, 0);
  }
};

RingPtr realize(const std::string& text, RingDescriptor& desc) {
  desc = parse_ring_expr(text);
  return build_ring(desc);
}

MisLimits mis_limits(std::optional<std::size_t> max_sets, std::optional<double> seconds) {
  MisLimits l;
  if (max_sets) l.max_sets = max_sets;
  if (seconds) l.time_budget = std::chrono::duration<double>(*seconds);
  return l;
}

std::set<Check> parse_checks(const std::string& list) {
  std::set<Check> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto c = check_from_string(item);
    if (!c) throw InvalidArgument("unknown check '" + item + "' (expected wc, cm, shellable, gorenstein)");
    out.insert(*c);
  }
  return out;
}

json report_json(const ClassificationReport& r) {
  json j;
  j["quotient_char"] = r.quotient_char;
  j["shape"] = r.shape ? json(r.shape->to_string()) : json("unsupported");
  j["predicted"] = {{"well_covered", outcome(r.predicted_well_covered)},
                    {"cm", outcome(r.predicted_cm)},
                    {"shellable", outcome(r.predicted_shellable)},
                    {"gorenstein", outcome(r.predicted_gorenstein)}};
  j["observed"] = {{"well_covered", outcome(r.observed_well_covered)},
                   {"cm_gf2", outcome(r.observed_cm_gf2)},
                   {"shellable", outcome(r.observed_shellable)},
                   {"gorenstein_gf2", outcome(r.observed_gorenstein_gf2)}};
  j["agreement"] = r.agreement ? json(*r.agreement) : json("not_applicable");
  return j;
}

json complex_json(const SimplicialComplex& c, bool pure, bool shell, bool cm, bool gor, const ComplexLimits& lim,
                  bool& undecided) {
  json j;
  j["vertices"] = c.vertex_count();
  j["facets"] = c.facets().size();
  j["dimension"] = c.dimension();
  if (pure) j["pure"] = is_pure(c);
  if (shell) {
    const auto s = is_shellable(c, lim);
    if (s.decision == Decision::Undecided) {
      j["shellable"] = nullptr;
      j["shellable_reason"] = s.reason;
      undecided = true;
    } else {
      j["shellable"] = s.decision == Decision::Yes;
      if (s.decision == Decision::Yes) j["shelling_order"] = s.order;
    }
  }
  if (cm) j["cm_gf2"] = is_cm_gf2(c, lim);
  if (gor) j["gorenstein_gf2"] = is_gorenstein_gf2(c, lim);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit graphs of finite rings: construction, independent sets, classification"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable rendering instead of JSON");

  std::function<int(const Emitter&)> action;
  std::string ring_text;

  // info
  auto* info = app.add_subcommand("info", "Order, characteristic, units, radical and quotient shape");
  info->add_option("ring", ring_text, "Ring expression")->required();
  info->callback([&] {
    action = [&](const Emitter& em) {
      RingDescriptor d = RingDescriptor::zn(2);
      const auto r = realize(ring_text, d);
      const auto q = quotient_by_radical(r);
      const auto shape = wedderburn_shape(d);
      json j;
      j["order"] = r->order();
      j["characteristic"] = r->characteristic();
      j["units"] = r->unit_set().size();
      j["radical"] = q.radical().size();
      j["quotient_char"] = q.characteristic();
      j["shape"] = shape ? json(shape->to_string()) : json("unsupported");
      em.emit(d.to_string(), "info", j, false);
      return kOk;
    };
  });

  // graph
  std::string kind_text = "unit";
  std::string format_text = "json";
  auto* graph = app.add_subcommand("graph", "Emit a graph as DOT or JSON");
  graph->add_option("ring", ring_text, "Ring expression")->required();
  graph->add_option("--kind", kind_text, "unit | cayley | generalized")
      ->check(CLI::IsMember({"unit", "cayley", "generalized"}));
  graph->add_option("--format", format_text, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  graph->callback([&] {
    action = [&](const Emitter& em) {
      RingDescriptor d = RingDescriptor::zn(2);
      const auto r = realize(ring_text, d);
      const auto g = build_graph(*r, graph_kind_from_string(kind_text));
      // the graph formats are emitted bare so they can be piped to other tools
      em.out << export_graph(g, format_text == "dot" ? GraphFormat::Dot : GraphFormat::Json);
      if (format_text == "json") em.out << '\n';
      return kOk;
    };
  });

  // mis
  bool list = false, sizes = false, count = false;
  std::optional<std::size_t> max_sets;
  std::optional<double> time_budget;
  auto* mis = app.add_subcommand("mis", "Enumerate maximal independent sets");
  mis->add_option("ring", ring_text, "Ring expression")->required();
  mis->add_option("--kind", kind_text, "unit | cayley | generalized")
      ->check(CLI::IsMember({"unit", "cayley", "generalized"}));
  mis->add_flag("--list", list, "List every set");
  mis->add_flag("--sizes", sizes, "Size histogram");
  mis->add_flag("--count", count, "Number of sets");
  mis->add_option("--max-sets", max_sets, "Stop after this many sets");
  mis->add_option("--time-budget", time_budget, "Stop after this many seconds");
  mis->callback([&] {
    action = [&](const Emitter& em) {
      RingDescriptor d = RingDescriptor::zn(2);
      const auto r = realize(ring_text, d);
      const auto g = build_graph(*r, graph_kind_from_string(kind_text));
      std::vector<VertexSet> found;
      MisCallback cb;
      if (list) cb = [&](const VertexSet& s) { found.push_back(s); };
      const auto rep = enumerate_mis(g, cb, mis_limits(max_sets, time_budget));
      const bool all = !list && !sizes && !count;
      json j;
      if (count || all) j["count"] = rep.count;
      if (sizes || all) {
        json h = json::object();
        for (const auto& [sz, mult] : rep.sizes_seen) h[std::to_string(sz)] = mult;
        j["sizes"] = h;
        j["independence_number"] = rep.independence_number;
        j["well_covered"] = rep.truncated ? json(nullptr) : json(rep.well_covered);
      }
      if (list) {
        std::sort(found.begin(), found.end());
        json sets = json::array();
        for (const auto& s : found) sets.push_back(s.elements());
        j["sets"] = sets;
      }
      em.emit(d.to_string(), "mis", j, rep.truncated);
      return kOk;
    };
  });

  // wellcovered
  std::string method = "both";
  auto* wc = app.add_subcommand("wellcovered", "Is the unit graph well-covered?");
  wc->add_option("ring", ring_text, "Ring expression")->required();
  wc->add_option("--method", method, "brute | classify | both")->check(CLI::IsMember({"brute", "classify", "both"}));
  wc->add_option("--max-sets", max_sets, "Enumeration cap for the brute-force oracle");
  wc->add_option("--time-budget", time_budget, "Time cap for the brute-force oracle");
  wc->callback([&] {
    action = [&](const Emitter& em) {
      RingDescriptor d = RingDescriptor::zn(2);
      const auto r = realize(ring_text, d);
      json j;
      std::optional<bool> predicted, observed;
      bool truncated = false;
      if (method != "brute") {
        predicted = classify_well_covered(d);
        j["predicted"] = tri(predicted);
        if (!predicted) j["hint"] = "shape unsupported by the classifier; try --method brute";
      }
      if (method != "classify") {
        const auto g = build_graph(*r, GraphKind::Unit);
        const auto v = well_covered_bruteforce(g, mis_limits(max_sets, time_budget));
        truncated = v == WellCovered::Undecided;
        if (!truncated) observed = v == WellCovered::Yes;
        j["observed"] = tri(observed);
      }
      if (method == "both") {
        j["agreement"] = (predicted && observed) ? json(*predicted == *observed) : json("not_applicable");
      }
      em.emit(d.to_string(), "wellcovered", j, truncated);
      if (predicted && observed && *predicted != *observed) throw ExitWith{kDisagreement};
      return kOk;
    };
  });

  // classify
  std::string checks_text = "wc,cm,shellable,gorenstein";
  bool cross = false;
  auto* cls = app.add_subcommand("classify", "Predictions from the classification theorems");
  cls->add_option("ring", ring_text, "Ring expression")->required();
  cls->add_option("--checks", checks_text, "Comma list of wc, cm, shellable, gorenstein");
  cls->add_flag("--cross-validate", cross, "Also run the brute-force oracles");
  cls->callback([&] {
    action = [&](const Emitter& em) {
      RingDescriptor d = parse_ring_expr(ring_text);
      const auto checks = parse_checks(checks_text);
      if (cross) {
        const auto rep = cross_validate(d, checks);
        em.emit(d.to_string(), "classify", report_json(rep), false);
        if (rep.agreement && !*rep.agreement) throw ExitWith{kDisagreement};
        return kOk;
      }
      const auto r = build_ring(d);
      const auto cm = classify_cm(*r);
      json p = json::object();
      if (checks.contains(Check::WellCovered)) p["well_covered"] = tri(classify_well_covered(d));
      if (checks.contains(Check::Cm)) p["cm"] = cm.cm;
      if (checks.contains(Check::Shellable)) p["shellable"] = cm.shellable;
      if (checks.contains(Check::Gorenstein)) p["gorenstein"] = cm.gorenstein;
      const auto shape = wedderburn_shape(d);
      json j;
      j["quotient_char"] = quotient_by_radical(r).characteristic();
      j["shape"] = shape ? json(shape->to_string()) : json("unsupported");
      j["predicted"] = p;
      em.emit(d.to_string(), "classify", j, false);
      return kOk;
    };
  });

  // construct
  std::string which;
  std::optional<Elem> y;
  auto* con = app.add_subcommand("construct", "Explicit independent-set constructions and witnesses");
  con->add_option("ring", ring_text, "Ring expression")->required();
  con->add_option("construction", which, "signature | zerorow | claim | two-size | lift | rxs")
      ->required()
      ->check(CLI::IsMember({"signature", "zerorow", "claim", "two-size", "lift", "rxs"}));
  con->add_option("--y", y, "Element index for claim");
  con->callback([&] {
    action = [&](const Emitter& em) {
      RingDescriptor d = RingDescriptor::zn(2);
      const auto r = realize(ring_text, d);
      json j;
      if (which == "signature" || which == "zerorow") {
        const auto g = build_graph(*r, GraphKind::Unit);
        j = set_json(which == "signature" ? signature_set(*r) : zero_first_row_set(*r), &g);
      } else if (which == "claim") {
        if (!y) throw InvalidArgument("claim needs --y <index>");
        const Elem z = claim_complement_witness(*r, *y);
        j["y"] = *y;
        j["z"] = z;
        j["z_is_unit"] = r->is_unit(z);
        j["y_plus_z"] = r->add(*y, z);
        j["y_plus_z_is_unit"] = r->is_unit(r->add(*y, z));
      } else if (which == "two-size") {
        const auto w = two_size_witnesses_2unit(r);
        const auto g = build_graph(*r, GraphKind::Unit);
        j["unit_side"] = set_json(w.unit_side, &g);
        j["nonunit_side"] = set_json(w.nonunit_side, &g);
      } else if (which == "lift") {
        const auto q = quotient_by_radical(r);
        const auto qg = build_graph(*q.ring(), GraphKind::Unit);
        const auto& qunits = q.ring()->unit_set();
        std::optional<VertexSet> base;
        for (const auto& s : collect_mis(qg)) {
          if (!s.intersects(qunits)) {
            base = s;
            break;
          }
        }
        if (!base) throw Unsupported("the quotient graph has no maximal independent set of non-units");
        const auto lifted = lift_nonunit_mis(q, *base);
        const auto g = build_graph(*r, GraphKind::Unit);
        j["quotient_set"] = set_json(*base);
        j["radical_size"] = q.radical().size();
        j["lifted"] = set_json(lifted, &g);
      } else {
        const auto* p = d.as<ProductNode>();
        if (p == nullptr || p->factors.size() < 2) throw InvalidArgument("rxs needs a product ring R x S");
        const auto rr = build_ring(p->factors.front());
        std::vector<RingDescriptor> rest(p->factors.begin() + 1, p->factors.end());
        const auto ss = build_ring(rest.size() == 1 ? rest.front() : RingDescriptor::product(rest));
        const auto w = r_times_s_witnesses(rr, ss);
        const auto g = build_graph(*w.product, GraphKind::Unit);
        j["m"] = set_json(w.m);
        j["nonunits_of_s"] = w.nonunits.size();
        j["m_times_s"] = set_json(w.m_times_s, &g);
        j["n"] = set_json(w.n, &g);
      }
      em.emit(d.to_string(), "construct " + which, j, false);
      return kOk;
    };
  });

  // complex
  std::string facets_file;
  bool want_pure = false, want_shell = false, want_cm = false, want_gor = false;
  ComplexLimits lim{200000, 4096, 1000000};
  auto* cx = app.add_subcommand("complex", "Independence complex of the unit graph, or a complex from a file");
  cx->add_option("ring", ring_text, "Ring expression");
  auto* ff = cx->add_option("--facets-file", facets_file, "JSON array of sorted vertex arrays");
  cx->get_option("ring")->excludes(ff);
  cx->add_flag("--pure", want_pure, "Purity");
  cx->add_flag("--shellable", want_shell, "Shellability search");
  cx->add_flag("--cm", want_cm, "Reisner criterion over GF(2)");
  cx->add_flag("--gorenstein", want_gor, "Gorenstein over GF(2)");
  cx->add_option("--max-faces", lim.max_faces, "Face budget for homology");
  cx->add_option("--max-facets", lim.max_facets_for_shelling, "Facet cap for the shelling search");
  cx->add_option("--max-states", lim.max_shelling_states, "State budget for the shelling search");
  cx->callback([&] {
    action = [&](const Emitter& em) {
      if (!want_pure && !want_shell && !want_cm && !want_gor) want_pure = want_shell = want_cm = want_gor = true;
      std::string label;
      SimplicialComplex c;
      if (!facets_file.empty()) {
        std::ifstream in(facets_file);
        if (!in) throw InvalidArgument("cannot read " + facets_file);
        std::stringstream buf;
        buf << in.rdbuf();
        c = facets_from_json(buf.str());
      } else {
        if (ring_text.empty()) throw InvalidArgument("complex needs a ring or --facets-file");
        RingDescriptor d = RingDescriptor::zn(2);
        const auto r = realize(ring_text, d);
        label = d.to_string();
        c = independence_complex(build_graph(*r, GraphKind::Unit));
      }
      bool undecided = false;
      const auto j = complex_json(c, want_pure, want_shell, want_cm, want_gor, lim, undecided);
      em.emit(label, "complex", j, undecided);
      return kOk;
    };
  });

  // verify
  std::string catalog_path;
  auto* ver = app.add_subcommand("verify", "Check a catalog of expected classifications against both sides");
  ver->add_option("--catalog", catalog_path, "Catalog JSON file")->required();
  ver->callback([&] {
    action = [&](const Emitter& em) {
      std::ifstream in(catalog_path);
      if (!in) throw InvalidArgument("cannot read " + catalog_path);
      json cat;
      try {
        cat = json::parse(in);
      } catch (const json::exception& e) {
        throw InvalidArgument(std::string("catalog: ") + e.what());
      }
      json rows = json::array();
      bool all_ok = true;
      for (const auto& entry : cat.at("rings")) {
        const auto d = parse_ring_expr(entry.at("ring").get<std::string>());
        std::set<Check> checks;
        for (const auto& [name, _] : entry.at("expected").items()) {
          const auto c = check_from_string(name);
          if (!c) throw InvalidArgument("catalog: unknown check '" + name + "'");
          checks.insert(*c);
        }
        const auto rep = cross_validate(d, checks);
        json row;
        row["ring"] = d.to_string();
        json cells = json::object();
        for (const auto& [name, expected] : entry.at("expected").items()) {
          const Outcome* pred = nullptr;
          const Outcome* obs = nullptr;
          switch (*check_from_string(name)) {
            case Check::WellCovered:
              pred = &rep.predicted_well_covered, obs = &rep.observed_well_covered;
              break;
            case Check::Cm:
              pred = &rep.predicted_cm, obs = &rep.observed_cm_gf2;
              break;
            case Check::Shellable:
              pred = &rep.predicted_shellable, obs = &rep.observed_shellable;
              break;
            case Check::Gorenstein:
              pred = &rep.predicted_gorenstein, obs = &rep.observed_gorenstein_gf2;
              break;
          }
          const bool e = expected.get<bool>();
          const bool ok = pred->value == e && (!obs->value || *obs->value == e);
          all_ok = all_ok && ok;
          cells[name] = {{"expected", e}, {"predicted", outcome(*pred)}, {"observed", outcome(*obs)}, {"ok", ok}};
        }
        row["checks"] = cells;
        rows.push_back(row);
      }
      json j;
      j["rows"] = rows;
      j["agreement"] = all_ok;
      em.emit("", "verify", j, false);
      return all_ok ? kOk : kDisagreement;
    };
  });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Emitter em{out, pretty};
  try {
    return action(em);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace unitgraph::cli
