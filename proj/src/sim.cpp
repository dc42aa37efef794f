#include "rdom/sim.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <sstream>

namespace rdom {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::local: return "local";
    case ModelKind::congest: return "congest";
    case ModelKind::congest_bc: return "congest_bc";
  }
  return "?";
}

ModelKind parse_model(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "local") return ModelKind::local;
  if (s == "congest") return ModelKind::congest;
  if (s == "congest_bc" || s == "congest-bc") return ModelKind::congest_bc;
  throw InvalidArgument("unknown model '" + name + "' (expected local, congest or congest_bc)");
}

std::optional<std::size_t> SimModel::cap_bits(std::size_t n) const {
  if (kind == ModelKind::local) return std::nullopt;
  const double w = WireFormat{n}.id_width();
  return static_cast<std::size_t>(std::floor(kappa * w));
}

double default_kappa() {
  if (const char* env = std::getenv("RDOM_KAPPA")) {
    char* end = nullptr;
    const double k = std::strtod(env, &end);
    if (end != env && *end == '\0' && k > 0) return k;
    throw InvalidArgument(std::string("RDOM_KAPPA must be a positive number, got '") + env + "'");
  }
  return 64;
}

std::size_t RoundTrace::max_bits() const noexcept {
  std::size_t m = 0;
  for (const auto& r : rounds) m = std::max(m, r.max_bits);
  return m;
}

std::size_t RoundTrace::total_bits() const noexcept {
  std::size_t t = 0;
  for (const auto& r : rounds) t += r.total_bits;
  return t;
}

std::size_t RoundTrace::rounds_in_phase(const std::string& phase) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(rounds.begin(), rounds.end(), [&](const RoundRecord& r) { return r.phase == phase; }));
}

Json round_record_to_json(const RoundRecord& record) {
  Json j;
  j["round"] = record.round;
  j["phase"] = record.phase;
  j["active"] = record.active;
  j["messages"] = record.messages;
  j["deliveries"] = record.deliveries;
  j["max_bits"] = record.max_bits;
  j["total_bits"] = record.total_bits;
  return j;
}

std::string RoundTrace::to_jsonl() const {
  std::string out;
  for (const auto& r : rounds) {
    out += round_record_to_json(r).dump();
    out += '\n';
  }
  return out;
}

Json RunResult::outputs(const Graph& g) const {
  Json j = Json::object();
  for (Vertex v = 0; v < processes.size(); ++v) j[std::to_string(g.id(v))] = processes[v]->output();
  return j;
}

namespace {

template <class F>
void for_each_vertex(const std::vector<Vertex>& order, Exec exec, F&& f) {
  const auto count = static_cast<std::int64_t>(order.size());
  std::vector<std::exception_ptr> errors(order.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        f(order[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        f(order[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  // Report the failure of the smallest vertex so the outcome does not depend
  // on scheduling.
  std::exception_ptr first;
  Vertex first_v = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (errors[i] && (!first || order[i] < first_v)) {
      first = errors[i];
      first_v = order[i];
    }
  }
  if (first) std::rethrow_exception(first);
}

std::string describe(const Graph& g, Vertex v, int round) {
  return "vertex " + std::to_string(g.id(v)) + " in round " + std::to_string(round);
}

}  // namespace

RunResult run(const Graph& g, const SimModel& model, const ProcessFactory& factory, const RunOptions& options) {
  if (options.max_rounds < 0) throw InvalidArgument("max_rounds must be non-negative");
  const std::size_t n = g.size();
  std::vector<Vertex> step_order = options.step_order;
  if (step_order.empty()) {
    step_order.resize(n);
    for (Vertex v = 0; v < n; ++v) step_order[v] = v;
  } else {
    auto check = step_order;
    std::sort(check.begin(), check.end());
    for (Vertex v = 0; v < n; ++v) {
      if (check.size() != n || check[v] != v) throw InvalidArgument("step order is not a permutation of the vertices");
    }
  }

  RunResult result;
  result.processes.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    result.processes[v] = factory(LocalInput{v, g.id(v), n, g.neighbors(v)});
  }

  const WireFormat format{n};
  const auto cap = model.cap_bits(n);
  std::vector<Outbox> outboxes(n);
  std::vector<std::vector<Envelope>> inboxes(n);
  std::vector<char> running(n);

  for (int round = 1;; ++round) {
    std::vector<Vertex> active;
    for (Vertex v : step_order) {
      running[v] = !result.processes[v]->halted();
      if (running[v]) active.push_back(v);
    }
    if (active.empty()) {
      result.terminated = true;
      break;
    }
    if (round > options.max_rounds) break;

    for_each_vertex(active, options.exec, [&](Vertex v) { outboxes[v] = result.processes[v]->send(round); });

    // Barrier: validate and deliver in index order.
    RoundRecord rec;
    rec.round = round;
    rec.phase = options.phase_label ? options.phase_label(round) : std::string();
    rec.active = active.size();
    const auto account = [&](Vertex v, const Message& m) {
      const std::size_t bits = message_bits(m, format);
      if (cap && bits > *cap) {
        throw BandwidthViolation("bandwidth exceeded by " + describe(g, v, round) + ": " + std::to_string(bits) +
                                     " bits > cap " + std::to_string(*cap),
                                 v, round, bits, *cap);
      }
      ++rec.messages;
      rec.max_bits = std::max(rec.max_bits, bits);
      rec.total_bits += bits;
    };
    for (Vertex v = 0; v < n; ++v) {
      if (!running[v]) continue;
      Outbox& box = outboxes[v];
      if (model.kind == ModelKind::congest_bc && !box.unicast.empty()) {
        throw ModelViolation("unicast under CONGEST_BC by " + describe(g, v, round), v, round);
      }
      // Under CONGEST a broadcast is one copy per neighbour, each on its own edge.
      if (model.kind == ModelKind::congest && box.broadcast) {
        for (Vertex u : g.neighbors(v)) box.unicast.emplace_back(u, *box.broadcast);
        box.broadcast.reset();
      }
      if (box.broadcast) {
        account(v, *box.broadcast);
        auto shared = std::make_shared<const Message>(std::move(*box.broadcast));
        for (Vertex u : g.neighbors(v)) {
          if (running[u]) {
            inboxes[u].push_back({v, shared});
            ++rec.deliveries;
          }
        }
      }
      std::sort(box.unicast.begin(), box.unicast.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 0; i < box.unicast.size(); ++i) {
        auto& [to, msg] = box.unicast[i];
        if (to >= n || !g.has_edge(v, to)) {
          throw ModelViolation("message to a non-neighbour by " + describe(g, v, round), v, round);
        }
        if (i > 0 && box.unicast[i - 1].first == to) {
          throw ModelViolation("two messages on one edge by " + describe(g, v, round), v, round);
        }
        account(v, msg);
        if (running[to]) {
          inboxes[to].push_back({v, std::make_shared<const Message>(std::move(msg))});
          ++rec.deliveries;
        }
      }
      box = Outbox{};
    }
    result.trace.rounds.push_back(std::move(rec));

    for_each_vertex(active, options.exec, [&](Vertex v) {
      result.processes[v]->receive(round, inboxes[v]);
      inboxes[v].clear();
    });
  }
  return result;
}

}  // namespace rdom
