#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "orientlat/orientlat.hpp"

namespace orientlat::cli {

namespace {

struct Options {
  std::string graph_path;
  std::string format = "text";
  std::string mode = "P0";
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  int all_connected = 0;
  std::optional<std::uint64_t> code;
  std::optional<std::uint64_t> to;
  std::optional<Vertex> fire_vertex;
  std::optional<Vertex> unfire_vertex;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::string kind;
  std::string method;
};

std::string arcs_text(const Orientation& o) {
  std::string s;
  for (auto [t, h] : o.arcs()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(t) + "->" + std::to_string(h);
  }
  return s.empty() ? "(no edges)" : s;
}

std::string point_text(const Point& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.dimension(); ++i) s += (i ? ", " : "") + to_string(x[i]);
  return s + ")";
}

Point read_point(std::istream& in) {
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InputError(std::string("point JSON on stdin: ") + e.what());
  }
  return parse_point(j);
}

Orientation element_by_code(const Poset& p, std::uint64_t code) {
  const Orientation o = Orientation::from_encoding(p.graph(), code);
  if (!p.find(o)) {
    throw InputError("orientation " + std::to_string(code) + " does not have 0 as a sink");
  }
  return o;
}

const Component& component_containing(const std::vector<Component>& cs, const Orientation& o) {
  for (const auto& c : cs)
    if (c.contains(o)) return c;
  throw InputError("orientation is not in the rooted poset");
}

void emit(std::ostream& out, const Options& opt, const Json& j, const std::string& text) {
  if (opt.format == "json") {
    out << j.dump() << '\n';
  } else {
    out << text;
  }
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const Graph g = load_edge_list(opt.graph_path);
  const auto list = opt.mode == "P" ? enumerate_acyclic(g) : enumerate_sink_zero(g);
  Json items = Json::array();
  Json codes = Json::array();
  std::ostringstream text;
  for (const auto& o : list) {
    items.push_back(serialize(o));
    codes.push_back(o.encoding());
    text << o.encoding() << ": " << arcs_text(o) << '\n';
  }
  Json j;
  j["mode"] = opt.mode;
  j["count"] = list.size();
  j["encodings"] = std::move(codes);
  j["orientations"] = std::move(items);
  text << list.size() << " orientations (" << opt.mode << ")\n";
  emit(out, opt, j, text.str());
  return kPass;
}

int cmd_poset(const Options& opt, std::ostream& out) {
  const Poset p = build_p0(load_edge_list(opt.graph_path));
  if (opt.format == "dot") {
    out << to_dot(p);
    return kPass;
  }
  std::ostringstream text;
  for (std::size_t i = 0; i < p.size(); ++i) {
    text << '[' << i << "] " << p.element(i).encoding() << ": " << arcs_text(p.element(i)) << '\n';
  }
  for (const Cover& c : p.covers()) {
    text << c.lower << " -> " << c.upper << " (fire " << c.vertex << ")\n";
  }
  emit(out, opt, serialize(p), text.str());
  return kPass;
}

int cmd_components(const Options& opt, std::ostream& out) {
  const Poset p = build_p0(load_edge_list(opt.graph_path));
  const auto cs = components(p);
  std::ostringstream text;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    text << "component " << k << " (size " << cs[k].size() << "):";
    for (auto m : cs[k].members) text << ' ' << m;
    text << '\n';
  }
  emit(out, opt, serialize(cs), text.str());
  return kPass;
}

std::string report_text(const LatticeReport& r) {
  std::ostringstream text;
  text << graph_label(r.graph) << ": " << (r.pass ? "PASS" : "FAIL") << "; |P0| = " << r.poset_size
       << ", components = " << r.component_count << ", chromatic count = " << r.greene_zaslavsky
       << ", unique-sink count = " << r.unique_sink_count << '\n';
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    const auto& c = r.components[k];
    text << "  component " << k << ": size " << c.size << ", lattice " << c.is_lattice
         << ", distributive " << c.is_distributive << ", geometric bounds agree "
         << c.geometric_agrees << " (" << c.pairs_checked << " checks)\n";
    for (const auto& f : c.failures) text << "    FAIL " << f << '\n';
  }
  for (const auto& f : r.failures) text << "  FAIL " << f << '\n';
  return text.str();
}

std::vector<PropertyTally> sampled_checks(const Graph& g, const Options& opt) {
  std::vector<PropertyTally> out;
  if (opt.samples == 0) return out;
  Rng rng(opt.seed);
  const Poset p = build_p0(g);
  out.push_back(check_lift_round_trips(g, opt.samples, rng));
  for (auto& t : check_firing_bounds(g, opt.samples, rng)) out.push_back(std::move(t));
  for (auto& t : check_geometry_lemmas(g, p, opt.samples, rng)) out.push_back(std::move(t));
  return out;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  std::vector<Graph> graphs;
  if (opt.all_connected > 0) {
    graphs = connected_graphs_up_to(opt.all_connected);
  } else if (!opt.graph_path.empty()) {
    graphs.push_back(load_edge_list(opt.graph_path));
  } else {
    err << "verify: give a graph file or --all-connected N\n";
    return kUsageError;
  }

  bool pass = true;
  std::size_t total_components = 0;
  Json failed = Json::array();
  std::ostringstream text;
  std::optional<Json> single;
  for (const Graph& g : graphs) {
    const LatticeReport r = verify_theorem(g);
    const auto tallies = sampled_checks(g, opt);
    bool ok = r.pass;
    for (const auto& t : tallies) ok = ok && t.pass();
    pass = pass && ok;
    total_components += r.component_count;

    if (graphs.size() == 1) {
      Json j = serialize(r);
      if (!tallies.empty()) {
        Json ts = Json::array();
        for (const auto& t : tallies) ts.push_back(serialize(t));
        j["samples"] = std::move(ts);
        j["pass"] = ok;
      }
      single = std::move(j);
      text << report_text(r);
    } else if (!ok) {
      Json f;
      f["graph"] = graph_label(g);
      f["failures"] = r.failures;
      failed.push_back(std::move(f));
      text << report_text(r);
    }
    for (const auto& t : tallies) {
      if (graphs.size() == 1 || !t.pass()) {
        text << "  " << (t.pass() ? "PASS " : "FAIL ") << t.name << " (" << t.checks
             << " checks, " << t.violations << " violations)\n";
      }
    }
  }

  if (graphs.size() == 1) {
    emit(out, opt, *single, text.str());
  } else {
    Json j;
    j["graphs"] = graphs.size();
    j["components"] = total_components;
    j["failed"] = std::move(failed);
    j["pass"] = pass;
    text << graphs.size() << " graphs, " << total_components << " components: "
         << (pass ? "PASS" : "FAIL") << '\n';
    emit(out, opt, j, text.str());
  }
  return pass ? kPass : kCheckFailed;
}

int cmd_phi(const Options& opt, std::istream& in, std::ostream& out) {
  const Graph g = load_edge_list(opt.graph_path);
  const Orientation o = phi(g, read_point(in));
  emit(out, opt, serialize(o), arcs_text(o) + "\n");
  return kPass;
}

int cmd_lift(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = load_edge_list(opt.graph_path);
  std::optional<Point> result;
  if (opt.code) {
    if (opt.fire_vertex || opt.unfire_vertex) {
      err << "lift: --fire/--unfire act on a point from stdin, not on an encoding\n";
      return kUsageError;
    }
    const Poset p = build_p0(g);
    const Orientation start = element_by_code(p, *opt.code);
    result = canonical_lift(start);
    if (opt.to) {
      const Orientation target = element_by_code(p, *opt.to);
      const auto cs = components(p);
      const Component& c = component_containing(cs, start);
      result = lift_comparable(g, *result, target, zigzag_path(c, start, target));
    }
  } else {
    if (opt.fire_vertex.has_value() == opt.unfire_vertex.has_value()) {
      err << "lift: give an orientation encoding, or exactly one of --fire/--unfire\n";
      return kUsageError;
    }
    const Point x = read_point(in);
    result = opt.fire_vertex ? lift_fire(g, x, *opt.fire_vertex)
                             : lift_unfire(g, x, *opt.unfire_vertex);
  }
  const Orientation o = phi(g, *result);
  Json j;
  j["point"] = serialize(*result);
  j["orientation"] = serialize(o);
  j["signature"] = serialize(g, region_signature(g, *result));
  j["anchor"] = serialize(cube_anchor(*result));
  emit(out, opt, j, point_text(*result) + " -> " + arcs_text(o) + "\n");
  return kPass;
}

int cmd_bound(const Options& opt, std::ostream& out) {
  const Poset p = build_p0(load_edge_list(opt.graph_path));
  const auto cs = components(p);
  const Orientation a = element_by_code(p, opt.a);
  const Orientation b = element_by_code(p, opt.b);
  const Component& c = component_containing(cs, a);
  if (!c.contains(b)) throw InputError("the two orientations lie in different components");
  const BoundKind kind = opt.kind == "meet" ? BoundKind::Meet : BoundKind::Join;
  const Orientation r =
      opt.method == "geometric" ? geometric_bound(c, a, b, kind) : poset_bound(c, a, b, kind);
  Json j = serialize(r);
  emit(out, opt, j, std::to_string(r.encoding()) + ": " + arcs_text(r) + "\n");
  return kPass;
}

int cmd_chromatic(const Options& opt, std::ostream& out) {
  const Graph g = load_edge_list(opt.graph_path);
  const auto poly = chromatic_polynomial(g);
  const auto count = greene_zaslavsky_count(g);
  Json j;
  j["coefficients"] = serialize(poly);
  j["greene_zaslavsky"] = count;
  std::ostringstream text;
  for (std::size_t k = poly.coefficients.size(); k-- > 0;) {
    const auto c = poly.coefficients[k];
    if (c == 0) continue;
    text << (c < 0 ? " - " : (k + 1 == poly.coefficients.size() ? "" : " + "));
    const auto mag = c < 0 ? -c : c;
    if (mag != 1 || k == 0) text << mag;
    if (k >= 1) text << 't';
    if (k >= 2) text << '^' << k;
  }
  text << "\nunique-sink count: " << count << '\n';
  emit(out, opt, j, text.str());
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Acyclic orientations under source firing: posets, geometry and lattice checks",
               "orientlat"};
  app.require_subcommand(1);

  auto add_graph = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("graph", opt.graph_path, "Edge-list file");
    if (required) o->required();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices = {"text", "json"}) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(choices));
  };

  auto* enumerate = app.add_subcommand("enumerate", "List acyclic orientations");
  add_graph(enumerate);
  add_format(enumerate);
  enumerate->add_option("--mode", opt.mode, "P: all acyclic, P0: sink at 0")
      ->check(CLI::IsMember({"P", "P0"}));

  auto* poset = app.add_subcommand("poset", "Rooted poset under legal firings");
  add_graph(poset);
  add_format(poset, {"text", "json", "dot"});

  auto* comps = app.add_subcommand("components", "Connected components of the rooted poset");
  add_graph(comps);
  add_format(comps);

  auto* verify = app.add_subcommand("verify", "Check lattice, distributivity and counts");
  add_graph(verify, false);
  add_format(verify);
  verify->add_option("--all-connected", opt.all_connected,
                     "Check every connected graph on at most N vertices")
      ->check(CLI::Range(1, 6));
  verify->add_option("--samples", opt.samples, "Random property samples per graph");
  verify->add_option("--seed", opt.seed, "Seed for sampled checks");

  auto* phi_cmd = app.add_subcommand("phi", "Orientation of a point read as JSON from stdin");
  add_graph(phi_cmd);
  add_format(phi_cmd);

  auto* lift = app.add_subcommand("lift", "Lift orientations to points, or move points");
  add_graph(lift);
  add_format(lift);
  lift->add_option("orientation", opt.code, "Encoding of an orientation to lift canonically");
  lift->add_option("--to", opt.to, "Continue the lift to this encoding in the same region");
  lift->add_option("--fire", opt.fire_vertex, "Fire this vertex of the point on stdin");
  lift->add_option("--unfire", opt.unfire_vertex, "Unfire this vertex of the point on stdin");
  lift->add_option("--seed", opt.seed)->group("");

  auto* bound = app.add_subcommand("bound", "Meet or join of two orientations");
  add_graph(bound);
  add_format(bound);
  bound->add_option("a", opt.a, "First orientation encoding")->required();
  bound->add_option("b", opt.b, "Second orientation encoding")->required();
  bound->add_option("kind", opt.kind)->required()->check(CLI::IsMember({"meet", "join"}));
  bound->add_option("method", opt.method)
      ->required()
      ->check(CLI::IsMember({"geometric", "bruteforce"}));

  auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial and root count");
  add_graph(chromatic);
  add_format(chromatic);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kPass : kUsageError;
  }

  try {
    if (*enumerate) return cmd_enumerate(opt, out);
    if (*poset) return cmd_poset(opt, out);
    if (*comps) return cmd_components(opt, out);
    if (*verify) return cmd_verify(opt, out, err);
    if (*phi_cmd) return cmd_phi(opt, in, out);
    if (*lift) return cmd_lift(opt, in, out, err);
    if (*bound) return cmd_bound(opt, out);
    if (*chromatic) return cmd_chromatic(opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CounterexampleError& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsageError;
}

}  // namespace orientlat::cli
