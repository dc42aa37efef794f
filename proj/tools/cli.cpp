#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rdom/connect.hpp"
#include "rdom/cover.hpp"
#include "rdom/domset.hpp"
#include "rdom/error.hpp"
#include "rdom/generators.hpp"
#include "rdom/io.hpp"
#include "rdom/oracle.hpp"
#include "rdom/order.hpp"
#include "rdom/protocols.hpp"
#include "rdom/sim.hpp"
#include "rdom/wreach.hpp"

namespace rdom::cli {

namespace {

// Oracle size limits used by the CLI.
constexpr std::size_t kDomsetLimit = 18;
constexpr std::size_t kConnectedLimit = 14;
constexpr std::size_t kWReachLimit = 10;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LinearOrder pick_order(const Graph& g, const std::string& choice, int k) {
  if (choice == "degeneracy") return heuristic_wcol_order(g, std::max(k, 1));
  if (choice == "identity") return LinearOrder::identity(g.size());
  std::ifstream in(choice);
  if (!in) throw UsageError("cannot read order file '" + choice + "'");
  return read_order(in, g);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

Json ids(const Graph& g, std::span<const Vertex> vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(g.id(v));
  return a;
}

Json graph_summary(const Graph& g) { return {{"n", g.size()}, {"m", g.edge_count()}}; }

// Cap used when a protocol is checked against its congestion bound.
SimModel bounded_model(double alpha, std::size_t c, int r) {
  return SimModel::congest_bc(alpha * static_cast<double>(c) * static_cast<double>(c) * std::max(r, 1));
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  std::vector<double> params;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const Graph g = gen::by_name(a.family, a.params, a.seed);
  std::ostringstream text;
  write_edge_list(g, text);
  if (a.out.empty()) {
    out << text.str();
  } else {
    write_file(a.out, text.str());
  }
  return kOk;
}

// ---------------------------------------------------------------- domset

struct DomsetArgs {
  std::string graph;
  int r = 1;
  std::string connected;
  std::string order = "degeneracy";
  bool verify = false;
  std::string cover_out;
  std::string dot;
};

int cmd_domset(const DomsetArgs& a, std::ostream& out) {
  const Graph g = read_edge_list(a.graph);
  const int r = a.r;
  const LinearOrder order = pick_order(g, a.order, 2 * r);
  const auto res = domset(g, order, r);
  const auto table = wreach(g, order, 2 * r);
  const auto cover = build_cover(g, order, r, table);
  bool ok = true;

  Json j;
  j["graph"] = graph_summary(g);
  const Json base = domset_to_json(res, g);
  for (const auto& [key, value] : base.items()) j[key] = value;
  j["order"] = a.order;
  j["cover"] = {{"degree", cover.degree}, {"max_radius", cover.max_radius}};
  if (a.verify && g.size() <= kDomsetLimit) {
    const auto opt = oracle::min_domset(g, r, kDomsetLimit);
    j["opt_size"] = opt.size();
    j["ratio"] = opt.size() ? static_cast<double>(res.dominators.size()) / static_cast<double>(opt.size()) : 1.0;
    const bool within = res.dominators.size() <= res.certificate_c * opt.size();
    j["ratio_within_certificate"] = within;
    ok &= within;
  }

  std::optional<ConnectedResult> conn;
  std::optional<DPartition> partition;
  if (!a.connected.empty()) {
    if (a.connected == "wreach") {
      conn = connect_via_wreach(g, order, res.dominators, r, wreach(g, order, 2 * r + 1));
    } else if (a.connected == "minor") {
      conn = connect_via_minor(g, res.dominators, r);
      partition = d_partition(g, res.dominators, r);
    } else {
      throw UsageError("--connected expects 'wreach' or 'minor'");
    }
    Json c = connected_to_json(*conn, g);
    c["method"] = a.connected;
    if (a.verify) {
      const bool dominating = is_distance_dominating(g, conn->connected, r);
      const bool within = conn->connected.size() <= conn->size_bound;
      c["dominating"] = dominating;
      c["within_size_bound"] = within;
      ok &= dominating && within && induces_connected_per_component(g, conn->connected);
      if (g.size() <= kConnectedLimit && connected_components(g).count == 1) {
        const auto opt = oracle::min_connected_domset(g, r, kConnectedLimit);
        c["opt_size"] = opt.size();
        c["ratio"] = static_cast<double>(conn->connected.size()) / static_cast<double>(opt.size());
      }
    }
    j["connected"] = std::move(c);
  }

  if (!a.cover_out.empty()) write_file(a.cover_out, cover_to_json(cover, g).dump(2) + "\n");
  if (!a.dot.empty()) {
    if (conn) {
      write_file(a.dot, connected_to_dot(*conn, g, partition ? &*partition : nullptr));
    } else {
      ConnectedResult plain;
      plain.dominators = res.dominators;
      plain.connected = res.dominators;
      write_file(a.dot, connected_to_dot(plain, g));
    }
  }
  j["passed"] = ok;
  out << j.dump(2) << '\n';
  return ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string graph;
  int r = 1;
  std::string protocol;
  std::string model;
  double kappa = 0;
  double alpha = ProtocolConfig{}.alpha;
  std::string trace;
  std::string order = "degeneracy";
  std::string order_phase = "injected";
  int max_rounds = 100000;
};

Json phase_counts(const RoundTrace& trace) {
  Json j = Json::object();
  for (const auto& rec : trace.rounds) {
    if (!j.contains(rec.phase)) j[rec.phase] = 0;
    j[rec.phase] = j[rec.phase].get<int>() + 1;
  }
  return j;
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const Graph g = read_edge_list(a.graph);
  const int r = a.r;
  if (r < 0) throw UsageError("r must be non-negative");
  static const std::vector<std::string> kProtocols{"wreach", "domset", "cds-congest", "cds-local"};
  if (std::find(kProtocols.begin(), kProtocols.end(), a.protocol) == kProtocols.end()) {
    throw UsageError("unknown protocol '" + a.protocol + "'");
  }
  const std::string model_name = !a.model.empty() ? a.model : (a.protocol == "cds-local" ? "local" : "congest_bc");
  SimModel model{parse_model(model_name), a.kappa > 0 ? a.kappa : default_kappa()};
  RunOptions options;
  options.max_rounds = a.max_rounds;

  const int order_radius = a.protocol == "cds-congest" ? 2 * r + 1 : 2 * r;
  ProtocolConfig config;
  config.alpha = a.alpha;
  OrderPhase phase;
  if (a.order_phase == "simulated") {
    phase = simulate_order_phase(g, model, options);
  } else if (a.order_phase == "injected") {
    phase = inject_order(g, pick_order(g, a.order, order_radius), r, config);
  } else {
    throw UsageError("--order-phase expects 'injected' or 'simulated'");
  }
  const LinearOrder& order = phase.order;

  Json j;
  j["graph"] = graph_summary(g);
  j["protocol"] = a.protocol;
  j["model"] = to_string(model.kind);
  j["r"] = r;
  if (const auto cap = model.cap_bits(g.size())) {
    j["kappa"] = model.kappa;
    j["cap_bits"] = *cap;
  }
  j["order_phase"] = {{"source", a.order_phase}, {"rounds", phase.rounds}};

  RoundTrace trace;
  std::size_t c = 0;
  bool matches = false;
  Json outputs;
  if (a.protocol == "wreach") {
    auto res = protocol_wreach_dist(g, order, 2 * r, model, options);
    matches = res.table == wreach(g, order, 2 * r);
    c = res.max_set_size;
    outputs = wreach_to_json(res.table, g);
    trace = std::move(res.trace);
  } else if (a.protocol == "domset") {
    auto res = protocol_domset(g, order, r, model, options);
    const auto seq = domset(g, order, r);
    matches = res.dominators == seq.dominators && res.dominator_of == seq.dominated_by;
    c = res.max_set_size;
    outputs = {{"D", ids(g, res.dominators)}, {"D_size", res.dominators.size()}};
    trace = std::move(res.trace);
  } else if (a.protocol == "cds-congest") {
    auto res = protocol_connected_domset_congest(g, order, r, model, options);
    const auto seq_d = domset(g, order, r);
    const auto seq = connect_via_wreach(g, order, seq_d.dominators, r, wreach(g, order, 2 * r + 1));
    matches = res.dominators == seq.dominators && res.connected == seq.connected;
    c = res.max_set_size;
    outputs = {{"D", ids(g, res.dominators)},
               {"D_prime", ids(g, res.connected)},
               {"D_prime_size", res.connected.size()},
               {"dominating", is_distance_dominating(g, res.connected, r)},
               {"connected_per_component", induces_connected_per_component(g, res.connected)}};
    trace = std::move(res.trace);
  } else {
    const auto seq_d = domset(g, order, r);
    auto res = protocol_connected_domset_local(g, seq_d.dominators, r, model, options);
    const auto seq = connect_via_minor(g, seq_d.dominators, r);
    matches = !res.aborted() && res.connected == seq.connected;
    outputs = {{"D", ids(g, res.dominators)},
               {"D_prime", ids(g, res.connected)},
               {"D_prime_size", res.connected.size()},
               {"undominated", ids(g, res.undominated)}};
    trace = std::move(res.trace);
  }

  j["rounds"] = trace.total_rounds();
  j["phase_rounds"] = phase_counts(trace);
  j["max_message_bits"] = trace.max_bits();
  j["total_bits"] = trace.total_bits();
  if (a.protocol != "cds-local") {
    const auto bound = congestion_bound(a.alpha, c, std::max(r, 1), g.size());
    j["c_measured"] = c;
    j["congestion_bound_bits"] = bound;
    j["within_congestion_bound"] = trace.max_bits() <= bound;
  }
  j["outputs"] = std::move(outputs);
  j["matches_sequential"] = matches;

  if (!a.trace.empty()) {
    std::string text = phase.trace.to_jsonl() + trace.to_jsonl();
    write_file(a.trace, text);
  }
  out << j.dump(2) << '\n';
  return matches ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- verify

class Battery {
 public:
  void add(std::string name, bool passed, std::string witness = {}) {
    checks_.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
  }
  void skip(std::string name, std::string reason) { skipped_.push_back({{"name", name}, {"reason", reason}}); }

  // Runs `f`, turning exceptions into a failed check.
  template <class F>
  void guarded(const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
  }
  Json to_json() const {
    Json a = Json::array();
    for (const auto& c : checks_) {
      Json o{{"name", c.name}, {"passed", c.passed}};
      if (!c.passed) o["witness"] = c.witness;
      a.push_back(std::move(o));
    }
    return a;
  }
  const Json& skipped() const { return skipped_; }

 private:
  std::vector<Check> checks_;
  Json skipped_ = Json::array();
};

std::string first_difference(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  return diff.empty() ? "sizes differ" : "differ at vertex " + std::to_string(g.id(diff.front()));
}

void check_connected_result(Battery& battery, const std::string& name, const Graph& g, const ConnectedResult& cr,
                            int r) {
  Vertex witness = 0;
  if (!is_distance_dominating(g, cr.connected, r, &witness)) {
    battery.add(name, false, "vertex " + std::to_string(g.id(witness)) + " is not dominated by D'");
  } else if (!induces_connected_per_component(g, cr.connected)) {
    battery.add(name, false, "D' does not induce a connected subgraph in every component");
  } else if (cr.connected.size() > cr.size_bound) {
    battery.add(name, false,
                "|D'| = " + std::to_string(cr.connected.size()) + " exceeds bound " + std::to_string(cr.size_bound));
  } else {
    battery.add(name, true);
  }
}

struct VerifyArgs {
  std::string graph;
  int r = 1;
  std::string order = "degeneracy";
  std::string cover;
  double alpha = ProtocolConfig{}.alpha;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Graph g = read_edge_list(a.graph);
  const int r = a.r;
  if (r < 0) throw UsageError("r must be non-negative");
  const LinearOrder order = pick_order(g, a.order, 2 * r);
  Battery battery;

  const auto table = wreach(g, order, 2 * r);
  const auto table_r = wreach(g, order, r);
  const auto defect = check_certificates(g, order, table);
  battery.add("wreach_certificates", !defect, defect.value_or(""));
  if (g.size() <= kWReachLimit) {
    battery.add("wreach_matches_bruteforce", table == oracle::wreach_bruteforce(g, order, 2 * r, kWReachLimit),
                "tables differ");
  } else {
    battery.skip("wreach_matches_bruteforce", "n above oracle limit");
  }

  Cover cover;
  if (!a.cover.empty()) {
    std::ifstream in(a.cover);
    if (!in) throw UsageError("cannot read cover file '" + a.cover + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const std::exception& e) {
      throw UsageError(std::string("malformed cover file: ") + e.what());
    }
    cover = cover_from_json(j, g, order);
  } else {
    cover = build_cover(g, order, r, table);
  }
  for (const auto& c : verify_cover(g, r, cover).checks) battery.add("cover_" + c.name, c.passed, c.witness);
  battery.add("cover_degree_equals_wcol", cover.degree == wcol_value(table),
              "degree " + std::to_string(cover.degree) + " vs wcol " + std::to_string(wcol_value(table)));

  const auto res = domset(g, order, r);
  {
    Vertex w = 0;
    const bool dom = is_distance_dominating(g, res.dominators, r, &w);
    battery.add("domset_dominating", dom, "vertex " + std::to_string(g.id(w)) + " is not dominated");
    VertexSet mins;
    for (Vertex v = 0; v < g.size(); ++v) mins.push_back(table_r.min_reachable(v));
    std::sort(mins.begin(), mins.end());
    mins.erase(std::unique(mins.begin(), mins.end()), mins.end());
    battery.add("domset_equals_min_wreach", mins == res.dominators, first_difference(g, mins, res.dominators));
  }
  if (g.size() <= kDomsetLimit) {
    const auto opt = oracle::min_domset(g, r, kDomsetLimit);
    battery.add("approximation_ratio", res.dominators.size() <= res.certificate_c * opt.size(),
                "|D| = " + std::to_string(res.dominators.size()) + " > c * OPT = " +
                    std::to_string(res.certificate_c) + " * " + std::to_string(opt.size()));
  } else {
    battery.skip("approximation_ratio", "n above oracle limit");
  }

  const auto table_c = wreach(g, order, 2 * r + 1);
  std::optional<ConnectedResult> via_wreach, via_minor;
  battery.guarded("connect_wreach", [&] {
    via_wreach = connect_via_wreach(g, order, res.dominators, r, table_c);
    check_connected_result(battery, "connect_wreach", g, *via_wreach, r);
  });
  battery.guarded("connect_minor", [&] {
    via_minor = connect_via_minor(g, res.dominators, r);
    check_connected_result(battery, "connect_minor", g, *via_minor, r);
  });
  battery.guarded("d_partition", [&] {
    const auto part = d_partition(g, res.dominators, r);
    std::size_t total = 0;
    std::string witness;
    for (std::size_t i = 0; i < part.centers.size(); ++i) {
      total += part.blocks[i].size();
      if (part.block_radius[i] > r && witness.empty()) {
        witness = "block of " + std::to_string(g.id(part.centers[i])) + " has radius above r";
      }
    }
    if (total != g.size() && witness.empty()) witness = "blocks do not partition V(G)";
    battery.add("d_partition", witness.empty(), witness);
  });
  if (g.size() <= kConnectedLimit && connected_components(g).count == 1 && via_wreach && via_minor) {
    const auto opt = oracle::min_connected_domset(g, r, kConnectedLimit);
    const double c = static_cast<double>(res.certificate_c);
    for (const auto* cr : {&*via_wreach, &*via_minor}) {
      // |D'| <= (size_bound / |D|) * |D| <= (size_bound / |D|) * c * OPT.
      const double constant = c * static_cast<double>(cr->size_bound) / static_cast<double>(cr->dominators.size());
      const bool ok = static_cast<double>(cr->connected.size()) <= constant * static_cast<double>(opt.size());
      battery.add(cr == &*via_wreach ? "connected_ratio_wreach" : "connected_ratio_minor", ok,
                  "|D'| = " + std::to_string(cr->connected.size()) + ", OPT = " + std::to_string(opt.size()));
    }
  } else {
    battery.skip("connected_ratio", "n above oracle limit or G disconnected");
  }

  battery.guarded("protocol_wreach", [&] {
    const auto p = protocol_wreach_dist(g, order, 2 * r, bounded_model(a.alpha, wcol_value(table), r));
    battery.add("protocol_wreach", p.table == table, "distributed table differs");
  });
  battery.guarded("protocol_domset", [&] {
    const auto p = protocol_domset(g, order, r, bounded_model(a.alpha, wcol_value(table), r));
    battery.add("protocol_domset", p.dominators == res.dominators, first_difference(g, p.dominators, res.dominators));
  });
  if (via_wreach) {
    battery.guarded("protocol_cds_congest", [&] {
      const auto p = protocol_connected_domset_congest(g, order, r, bounded_model(a.alpha, wcol_value(table_c), r));
      battery.add("protocol_cds_congest", p.connected == via_wreach->connected,
                  first_difference(g, p.connected, via_wreach->connected));
    });
  }
  if (via_minor) {
    battery.guarded("protocol_cds_local", [&] {
      const auto p = protocol_connected_domset_local(g, res.dominators, r);
      battery.add("protocol_cds_local", !p.aborted() && p.connected == via_minor->connected,
                  first_difference(g, p.connected, via_minor->connected));
    });
  }

  Json j;
  j["graph"] = graph_summary(g);
  j["r"] = r;
  j["passed"] = battery.passed();
  j["checks"] = battery.to_json();
  j["skipped"] = battery.skipped();
  out << j.dump(2) << '\n';
  return battery.passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-r dominating sets: sequential algorithms, round simulator and oracles", "rdom"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a graph and write it as an edge list");
  gen->add_option("family", gen_args.family, "path, cycle, star, complete, grid, random_tree, partial_ktree, edgeless")
      ->required();
  gen->add_option("params", gen_args.params, "Numeric family parameters")->required();
  gen->add_option("--seed", gen_args.seed, "Random seed");
  gen->add_option("-o,--out", gen_args.out, "Output file (default: stdout)");

  DomsetArgs dom_args;
  auto* dom = app.add_subcommand("domset", "Run the sequential pipeline and print a JSON report");
  dom->add_option("graph", dom_args.graph, "Edge-list file")->required();
  dom->add_option("r", dom_args.r, "Domination radius")->required()->check(CLI::NonNegativeNumber);
  dom->add_option("--connected", dom_args.connected, "Also build a connected set: wreach or minor")
      ->check(CLI::IsMember({"wreach", "minor"}));
  dom->add_option("--order", dom_args.order, "degeneracy, identity, or an order file");
  dom->add_flag("--verify", dom_args.verify, "Compare against the exact optimum when small enough");
  dom->add_option("--cover-out", dom_args.cover_out, "Write the cover as JSON");
  dom->add_option("--dot", dom_args.dot, "Write a Graphviz rendering");

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Run a distributed protocol in the round simulator");
  sim->add_option("graph", sim_args.graph, "Edge-list file")->required();
  sim->add_option("r", sim_args.r, "Domination radius")->required()->check(CLI::NonNegativeNumber);
  sim->add_option("protocol", sim_args.protocol, "wreach, domset, cds-congest or cds-local")->required();
  sim->add_option("model", sim_args.model, "local, congest or congest_bc");
  sim->add_option("--kappa", sim_args.kappa, "Bandwidth cap in words of ceil(log2 n) bits (default RDOM_KAPPA or 64)");
  sim->add_option("--alpha", sim_args.alpha, "Constant of the congestion bound alpha * c^2 * r * ceil(log2 n)");
  sim->add_option("--trace", sim_args.trace, "Write the round trace as JSON lines");
  sim->add_option("--order", sim_args.order, "degeneracy, identity, or an order file");
  sim->add_option("--order-phase", sim_args.order_phase, "injected or simulated")
      ->check(CLI::IsMember({"injected", "simulated"}));
  sim->add_option("--max-rounds", sim_args.max_rounds, "Round limit")->check(CLI::NonNegativeNumber);

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify", "Run the invariant battery and print pass/fail per check");
  ver->add_option("graph", ver_args.graph, "Edge-list file")->required();
  ver->add_option("r", ver_args.r, "Domination radius")->required()->check(CLI::NonNegativeNumber);
  ver->add_option("--order", ver_args.order, "degeneracy, identity, or an order file");
  ver->add_option("--cover", ver_args.cover, "Verify this cover JSON instead of building one");
  ver->add_option("--alpha", ver_args.alpha, "Constant of the congestion bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_args, out);
    if (*dom) return cmd_domset(dom_args, out);
    if (*sim) return cmd_simulate(sim_args, out);
    if (*ver) return cmd_verify(ver_args, out);
  } catch (const BandwidthViolation& e) {
    err << "model violation: " << e.what() << '\n';
    return kModelViolation;
  } catch (const ModelViolation& e) {
    err << "model violation: " << e.what() << '\n';
    return kModelViolation;
  } catch (const ProtocolFailure& e) {
    err << "protocol failure: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rdom::cli
