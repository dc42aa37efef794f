#include "rdom/protocols.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rdom/connect.hpp"

namespace rdom {

namespace {

enum Kind : std::uint8_t { kPaths = 1, kElect = 2, kNotify = 3, kPeel = 4, kGather = 5 };

using Seq = std::vector<std::uint32_t>;

// Algorithm-4 state: the best known path from every smaller start vertex.
// In round t every path stored in round t-1 is rebroadcast once, extended
// by the receivers; a receiver keeps, per start vertex, the first (hence
// shortest) arrival and among those the least super-id sequence.
class WReachCore {
 public:
  WReachCore(std::uint32_t sid, int k) : sid_(sid), k_(k) {
    stored_.emplace(sid, Seq{sid});
    fresh_.push_back(sid);
  }

  std::optional<Message> broadcast() {
    Message m;
    m.kind = kPaths;
    for (auto s : fresh_) {
      const auto& p = stored_.at(s);
      if (static_cast<int>(p.size()) - 1 < k_) m.paths.push_back(p);
    }
    fresh_.clear();
    if (m.paths.empty()) return std::nullopt;
    return m;
  }

  void absorb(std::span<const Envelope> inbox) {
    std::map<std::uint32_t, Seq> best;
    for (const auto& env : inbox) {
      if (env.message->kind != kPaths) continue;
      for (const auto& p : env.message->paths) {
        const auto u1 = p.front();
        if (u1 >= sid_ || stored_.count(u1)) continue;
        Seq q = p;
        q.push_back(sid_);
        auto [it, inserted] = best.emplace(u1, q);
        if (!inserted && q < it->second) it->second = std::move(q);
      }
    }
    for (auto& [s, p] : best) {
      fresh_.push_back(s);
      stored_.emplace(s, std::move(p));
    }
  }

  std::uint32_t sid() const noexcept { return sid_; }
  const std::map<std::uint32_t, Seq>& stored() const noexcept { return stored_; }

  std::uint32_t min_within(int length) const {
    for (const auto& [s, p] : stored_) {
      if (static_cast<int>(p.size()) - 1 <= length) return s;
    }
    return sid_;
  }

  // Stored path from `target` reversed and without this vertex: the source
  // route from here toward target.
  Seq route_to(std::uint32_t target) const {
    const auto& p = stored_.at(target);
    return Seq(p.rbegin() + 1, p.rend());
  }

 private:
  std::uint32_t sid_;
  int k_;
  std::map<std::uint32_t, Seq> stored_;
  std::vector<std::uint32_t> fresh_;
};

// Source routes merged by target. Least paths are prefix-closed, so two
// routes toward one target through one relay must coincide.
class RouteQueue {
 public:
  void push(Seq route) {
    const auto target = route.back();
    const auto it = queue_.find(target);
    if (it == queue_.end()) {
      queue_.emplace(target, std::move(route));
    } else if (it->second != route) {
      throw ProtocolFailure("two different routes toward super-id " + std::to_string(target + 1) +
                            " meet at one relay");
    }
  }

  std::optional<Message> flush(std::uint8_t kind) {
    if (queue_.empty()) return std::nullopt;
    Message m;
    m.kind = kind;
    for (auto& [t, route] : queue_) m.paths.push_back(std::move(route));
    queue_.clear();
    return m;
  }

 private:
  std::map<std::uint32_t, Seq> queue_;
};

// Handles routes addressed to `self`; returns whether any was. Remaining
// hops are queued after `check(target)` approves the relay.
template <class Check>
bool take_routes(std::span<const Envelope> inbox, std::uint8_t kind, std::uint32_t self, RouteQueue& queue,
                 bool& reached_end, Check&& check) {
  bool hit = false;
  for (const auto& env : inbox) {
    if (env.message->kind != kind) continue;
    for (const auto& route : env.message->paths) {
      if (route.front() != self) continue;
      hit = true;
      if (route.size() == 1) {
        reached_end = true;
        continue;
      }
      Seq rest(route.begin() + 1, route.end());
      check(rest.back());
      queue.push(std::move(rest));
    }
  }
  return hit;
}

std::string sid_text(std::uint32_t sid) { return "super-id " + std::to_string(sid + 1); }

class WReachProcess : public VertexProcess {
 public:
  WReachProcess(std::uint32_t sid, int k) : core_(sid, k), k_(k) {}

  Outbox send(int) override { return {core_.broadcast(), {}}; }
  void receive(int round, std::span<const Envelope> inbox) override {
    core_.absorb(inbox);
    last_ = round;
  }
  bool halted() const override { return last_ >= k_; }
  Json output() const override {
    Json paths = Json::object();
    for (const auto& [s, p] : core_.stored()) {
      Json a = Json::array();
      for (auto x : p) a.push_back(x + 1);
      paths[std::to_string(s + 1)] = std::move(a);
    }
    return {{"super_id", core_.sid() + 1}, {"wreach", std::move(paths)}};
  }
  const WReachCore& core() const noexcept { return core_; }

 private:
  WReachCore core_;
  int k_;
  int last_ = 0;
};

// Shared by the election-based protocols: WReach_k for k rounds, then
// elect for r rounds, then (if notify_rounds > 0) the marking phase.
class ElectProcess : public VertexProcess {
 public:
  ElectProcess(std::uint32_t sid, int r, int k, int notify_rounds)
      : core_(sid, k), r_(r), k_(k), notify_rounds_(notify_rounds) {}

  Outbox send(int round) override {
    if (round <= k_) return {core_.broadcast(), {}};
    if (round <= k_ + r_) return {elect_.flush(kElect), {}};
    return {notify_.flush(kNotify), {}};
  }

  void receive(int round, std::span<const Envelope> inbox) override {
    const auto self = core_.sid();
    if (round <= k_) {
      core_.absorb(inbox);
    } else if (round <= k_ + r_) {
      take_routes(inbox, kElect, self, elect_, elected_, [&](std::uint32_t target) {
        const auto it = core_.stored().find(target);
        if (it == core_.stored().end() || static_cast<int>(it->second.size()) - 1 > r_) {
          throw ProtocolFailure(sid_text(self) + " relays an elect message toward " + sid_text(target) +
                                " outside its WReach_r");
        }
      });
    } else {
      bool end = false;
      if (take_routes(inbox, kNotify, self, notify_, end, [&](std::uint32_t target) {
            if (!core_.stored().count(target)) {
              throw ProtocolFailure(sid_text(self) + " relays a path toward " + sid_text(target) +
                                    " outside its WReach_" + std::to_string(k_));
            }
          })) {
        marked_ = true;
      }
    }
    last_ = round;
    if (round == k_) {
      dominator_ = core_.min_within(r_);
      if (dominator_ != self) elect_.push(core_.route_to(dominator_));
    }
    if (round == k_ + r_ && notify_rounds_ > 0 && in_d()) {
      for (const auto& [s, p] : core_.stored()) {
        if (s != self) notify_.push(core_.route_to(s));
      }
    }
  }

  bool halted() const override { return last_ >= k_ + r_ + notify_rounds_; }

  Json output() const override {
    Json j{{"super_id", core_.sid() + 1}, {"in_D", in_d()}, {"dominator", dominator() + 1}};
    if (notify_rounds_ > 0) j["in_D_prime"] = in_d_prime();
    return j;
  }

  bool in_d() const { return elected_ || dominator() == core_.sid(); }
  bool in_d_prime() const { return in_d() || marked_; }
  std::uint32_t dominator() const { return k_ == 0 ? core_.sid() : dominator_; }
  std::size_t set_size() const { return core_.stored().size(); }

 private:
  WReachCore core_;
  int r_;
  int k_;
  int notify_rounds_;
  int last_ = 0;
  std::uint32_t dominator_ = 0;
  bool elected_ = false;
  bool marked_ = false;
  RouteQueue elect_;
  RouteQueue notify_;
};

class PeelProcess : public VertexProcess {
 public:
  explicit PeelProcess(const LocalInput& in) : self_(in.self), degree_(in.neighbors.size()) {}

  Outbox send(int) override {
    Message m;
    m.kind = kPeel;
    m.ids.push_back(static_cast<std::uint32_t>(degree_));
    return {std::move(m), {}};
  }

  void receive(int round, std::span<const Envelope> inbox) override {
    bool lowest = true;
    std::size_t senders = 0;
    for (const auto& env : inbox) {
      if (env.message->kind != kPeel) continue;
      ++senders;
      const std::size_t d = env.message->ids.front();
      // Key (degree, -id): on equal degree the larger id leaves first.
      if (d < degree_ || (d == degree_ && env.from > self_)) lowest = false;
    }
    if (lowest) {
      class_ = round;
    } else {
      degree_ = senders;
    }
  }

  bool halted() const override { return class_ > 0; }
  Json output() const override { return {{"class", class_}}; }
  int leave_round() const noexcept { return class_; }

 private:
  Vertex self_;
  std::size_t degree_;
  int class_ = 0;
};

// LOCAL connected-DS: gather the (2r+1)-ball, then notify path halves.
class GatherProcess : public VertexProcess {
 public:
  GatherProcess(const LocalInput& in, bool in_d, int r) : self_(in.self), r_(r), in_d_(in_d) {
    records_.emplace(self_, Seq(in.neighbors.begin(), in.neighbors.end()));
    fresh_.push_back(self_);
    if (in_d) flagged_.insert(self_);
  }

  Outbox send(int round) override {
    Message m;
    if (round <= gather_rounds()) {
      m.kind = kGather;
      for (auto x : fresh_) {
        Seq rec{x};
        const auto& nb = records_.at(x);
        rec.insert(rec.end(), nb.begin(), nb.end());
        m.paths.push_back(std::move(rec));
        if (flagged_.count(x)) m.ids.push_back(x);
      }
      fresh_.clear();
      if (m.paths.empty()) return {};
      return {std::move(m), {}};
    }
    if (routes_.empty()) return {};
    m.kind = kNotify;
    m.paths.assign(routes_.begin(), routes_.end());
    routes_.clear();
    return {std::move(m), {}};
  }

  void receive(int round, std::span<const Envelope> inbox) override {
    last_ = round;
    if (round <= gather_rounds()) {
      for (const auto& env : inbox) {
        if (env.message->kind != kGather) continue;
        for (const auto& rec : env.message->paths) {
          if (records_.emplace(rec.front(), Seq(rec.begin() + 1, rec.end())).second) fresh_.push_back(rec.front());
        }
        for (auto x : env.message->ids) flagged_.insert(x);
      }
      if (round == gather_rounds()) plan();
      return;
    }
    for (const auto& env : inbox) {
      if (env.message->kind != kNotify) continue;
      for (const auto& route : env.message->paths) {
        if (route.front() != self_) continue;
        marked_ = true;
        if (route.size() > 1) routes_.emplace(route.begin() + 1, route.end());
      }
    }
  }

  bool halted() const override { return last_ >= 3 * r_ + 1; }
  Json output() const override {
    return {{"in_D", in_d_}, {"in_D_prime", in_d_ || marked_}, {"undominated", undominated_}};
  }

  bool in_d_prime() const noexcept { return in_d_ || marked_; }
  bool undominated() const noexcept { return undominated_; }

 private:
  int gather_rounds() const noexcept { return 2 * r_ + 1; }

  void plan() {
    std::vector<IdPair> edges;
    std::vector<ExternalId> verts;
    for (const auto& [x, nb] : records_) {
      verts.push_back(x);
      for (auto y : nb) {
        verts.push_back(y);
        edges.emplace_back(std::min(x, y), std::max(x, y));
      }
    }
    // Local ids are the global indices, so local index order is global order.
    const Graph local = Graph::from_edges(edges, verts);
    const Vertex me = *local.vertex_of(self_);
    const auto flagged = [&](Vertex xl) { return flagged_.count(static_cast<Vertex>(local.id(xl))) > 0; };

    const auto dist = bfs_distances(local, me, r_ + 1);
    bool dominated = false;
    for (Vertex xl = 0; xl < local.size(); ++xl) dominated |= dist[xl] <= r_ && flagged(xl);
    if (!dominated) {
      undominated_ = true;
      return;
    }
    if (!in_d_) return;

    constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> owner(local.size(), kNone);
    std::vector<char> known(local.size(), 0);
    const auto owner_of = [&](Vertex xl) {
      if (!known[xl]) {
        known[xl] = 1;
        const auto d = bfs_distances(local, xl, r_);
        int best = kInfinity;
        for (Vertex yl = 0; yl < local.size(); ++yl) {
          if (d[yl] < best && flagged(yl)) {
            best = d[yl];
            owner[xl] = yl;
          }
        }
      }
      return owner[xl];
    };

    std::set<Vertex> minor_neighbors;
    for (Vertex xl = 0; xl < local.size(); ++xl) {
      if (dist[xl] > r_ || owner_of(xl) != me) continue;
      for (Vertex yl : local.neighbors(xl)) {
        const Vertex o = owner_of(yl);
        if (o != me && o != kNone) minor_neighbors.insert(o);
      }
    }
    for (Vertex u : minor_neighbors) {
      const Vertex a = std::min(me, u), b = std::max(me, u);
      const auto path = lex_shortest_path(local, a, b, 2 * r_ + 1);
      if (!path) {
        throw ProtocolFailure("vertex " + std::to_string(self_) + " has no path of length <= 2r+1 to minor neighbour " +
                              std::to_string(local.id(u)));
      }
      const std::size_t len = path->size() - 1;
      Seq route;
      for (std::size_t j = 1; j < len && j <= len - j; ++j) {
        const Vertex xl = me == a ? (*path)[j] : (*path)[len - j];
        route.push_back(static_cast<std::uint32_t>(local.id(xl)));
      }
      if (!route.empty()) routes_.insert(std::move(route));
    }
  }

  Vertex self_;
  int r_;
  bool in_d_;
  int last_ = 0;
  bool marked_ = false;
  bool undominated_ = false;
  std::map<std::uint32_t, Seq> records_;
  std::set<std::uint32_t> flagged_;
  std::vector<std::uint32_t> fresh_;
  std::set<Seq> routes_;
};

void require_order(const Graph& g, const LinearOrder& order) {
  if (order.size() != g.size()) throw InvalidArgument("order size does not match graph");
}

void require_terminated(const RunResult& res, const char* what) {
  if (!res.terminated) throw ProtocolFailure(std::string(what) + " did not terminate within max_rounds");
}

template <class P>
const P& process(const RunResult& res, Vertex v) {
  return dynamic_cast<const P&>(*res.processes[v]);
}

}  // namespace

std::size_t congestion_bound(double alpha, std::size_t c, int r, std::size_t n) {
  const double w = WireFormat{n}.id_width();
  return static_cast<std::size_t>(alpha * static_cast<double>(c) * static_cast<double>(c) * r * w);
}

OrderPhase inject_order(const Graph& g, LinearOrder order, int r, const ProtocolConfig& config) {
  require_order(g, order);
  OrderPhase phase;
  phase.source = OrderSource::injected;
  phase.order = std::move(order);
  phase.rounds = config.order_phase_rounds.value_or(static_cast<std::size_t>(r) * r *
                                                    WireFormat{std::max<std::size_t>(g.size(), 2)}.id_width());
  return phase;
}

OrderPhase simulate_order_phase(const Graph& g, const SimModel& model, const RunOptions& options) {
  RunOptions opts = options;
  opts.phase_label = [](int) { return std::string("order"); };
  auto res = run(g, model, [](const LocalInput& in) { return std::make_unique<PeelProcess>(in); }, opts);
  require_terminated(res, "order phase");
  std::vector<Vertex> seq(g.size());
  for (Vertex v = 0; v < g.size(); ++v) seq[v] = v;
  std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) {
    return process<PeelProcess>(res, a).leave_round() > process<PeelProcess>(res, b).leave_round();
  });
  OrderPhase phase;
  phase.source = OrderSource::simulated;
  phase.order = LinearOrder::from_sequence(std::move(seq));
  phase.rounds = res.trace.total_rounds();
  phase.trace = std::move(res.trace);
  return phase;
}

WReachDistResult protocol_wreach_dist(const Graph& g, const LinearOrder& order, int k, const SimModel& model,
                                      const RunOptions& options) {
  require_order(g, order);
  if (k < 0) throw InvalidArgument("radius must be non-negative");
  RunOptions opts = options;
  opts.phase_label = [](int) { return std::string("wreach"); };
  auto res = run(
      g, model, [&](const LocalInput& in) { return std::make_unique<WReachProcess>(order.rank(in.self), k); }, opts);
  require_terminated(res, "wreach protocol");

  WReachDistResult out;
  WReachTable::Builder builder(g.size(), k);
  Path path;
  for (Vertex v = 0; v < g.size(); ++v) {
    builder.begin_vertex(v);
    const auto& stored = process<WReachProcess>(res, v).core().stored();
    out.max_set_size = std::max(out.max_set_size, stored.size());
    for (const auto& [s, p] : stored) {
      path.clear();
      for (auto x : p) path.push_back(order.at(x));
      builder.add(order.at(s), path);
    }
  }
  out.table = builder.finish();
  out.trace = std::move(res.trace);
  return out;
}

namespace {

std::function<std::string(int)> elect_labels(int r, int k, bool notify) {
  return [=](int t) {
    if (t <= k) return std::string("wreach");
    if (t <= k + r || !notify) return std::string("elect");
    return std::string("notify");
  };
}

}  // namespace

DomSetDistResult protocol_domset(const Graph& g, const LinearOrder& order, int r, const SimModel& model,
                                 const RunOptions& options) {
  require_order(g, order);
  if (r < 0) throw InvalidArgument("radius must be non-negative");
  const int k = 2 * r;
  RunOptions opts = options;
  opts.phase_label = elect_labels(r, k, false);
  auto res = run(
      g, model, [&](const LocalInput& in) { return std::make_unique<ElectProcess>(order.rank(in.self), r, k, 0); },
      opts);
  require_terminated(res, "domset protocol");

  DomSetDistResult out;
  out.dominator_of.resize(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto& p = process<ElectProcess>(res, v);
    if (p.in_d()) out.dominators.push_back(v);
    out.dominator_of[v] = order.at(p.dominator());
    out.max_set_size = std::max(out.max_set_size, p.set_size());
  }
  out.trace = std::move(res.trace);
  return out;
}

ConnectedDistResult protocol_connected_domset_congest(const Graph& g, const LinearOrder& order, int r,
                                                      const SimModel& model, const RunOptions& options) {
  require_order(g, order);
  if (r < 0) throw InvalidArgument("radius must be non-negative");
  const int k = 2 * r + 1;
  RunOptions opts = options;
  opts.phase_label = elect_labels(r, k, true);
  auto res = run(
      g, model, [&](const LocalInput& in) { return std::make_unique<ElectProcess>(order.rank(in.self), r, k, k); },
      opts);
  require_terminated(res, "connected domset protocol");

  ConnectedDistResult out;
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto& p = process<ElectProcess>(res, v);
    if (p.in_d()) out.dominators.push_back(v);
    if (p.in_d_prime()) out.connected.push_back(v);
    out.max_set_size = std::max(out.max_set_size, p.set_size());
  }
  out.trace = std::move(res.trace);
  return out;
}

ConnectedDistResult protocol_connected_domset_local(const Graph& g, std::span<const Vertex> dominators, int r,
                                                    const SimModel& model, const RunOptions& options) {
  if (r < 0) throw InvalidArgument("radius must be non-negative");
  std::vector<char> in_d(g.size(), 0);
  for (Vertex v : dominators) {
    if (v >= g.size()) throw InvalidArgument("dominator index out of range");
    in_d[v] = 1;
  }
  RunOptions opts = options;
  opts.phase_label = [r](int t) { return std::string(t <= 2 * r + 1 ? "gather" : "notify"); };
  auto res = run(
      g, model, [&](const LocalInput& in) { return std::make_unique<GatherProcess>(in, in_d[in.self] != 0, r); },
      opts);
  require_terminated(res, "LOCAL connected domset protocol");

  ConnectedDistResult out;
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto& p = process<GatherProcess>(res, v);
    if (in_d[v]) out.dominators.push_back(v);
    if (p.in_d_prime()) out.connected.push_back(v);
    if (p.undominated()) out.undominated.push_back(v);
  }
  // An aborted run has no meaningful D'.
  if (out.aborted()) out.connected.clear();
  out.trace = std::move(res.trace);
  return out;
}

}  // namespace rdom
