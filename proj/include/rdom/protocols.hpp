#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rdom/error.hpp"
#include "rdom/graph.hpp"
#include "rdom/order.hpp"
#include "rdom/sim.hpp"
#include "rdom/wreach.hpp"

namespace rdom {

/// A distributed protocol reached a state its correctness argument rules
/// out, e.g. a relay asked to forward toward a vertex it cannot reach.
class ProtocolFailure : public Error {
 public:
  using Error::Error;
};

struct ProtocolConfig {
  /// Constant in the per-message bound alpha * c^2 * r * ceil(log2 n).
  double alpha = 16;
  /// Modeled round cost of an injected order; default r^2 * ceil(log2 n).
  std::optional<std::size_t> order_phase_rounds;
};

/// alpha * c^2 * r * ceil(log2 n), rounded down.
std::size_t congestion_bound(double alpha, std::size_t c, int r, std::size_t n);

enum class OrderSource { injected, simulated };

struct OrderPhase {
  OrderSource source = OrderSource::injected;
  LinearOrder order;
  std::size_t rounds = 0;  // simulated rounds, or the modeled cost when injected
  RoundTrace trace;        // simulated only
};

/// Order computed centrally and handed to every vertex as initial knowledge.
OrderPhase inject_order(const Graph& g, LinearOrder order, int r, const ProtocolConfig& config = {});

/// Distributed peeling: every round each remaining vertex broadcasts its
/// remaining degree (as of the previous round) and leaves when its
/// (degree, -id) key is below that of every remaining neighbour. Vertices
/// that leave earlier get later positions; ties inside a round go by id.
/// Takes up to n rounds. Turning the leave rounds into positions is done by
/// the driver.
OrderPhase simulate_order_phase(const Graph& g, const SimModel& model, const RunOptions& options = {});

struct WReachDistResult {
  WReachTable table;
  RoundTrace trace;
  std::size_t max_set_size = 0;
};

/// Every vertex learns WReach_k with the same certificate paths as wreach().
/// Paths travel as super-id sequences; runs exactly k broadcast rounds.
WReachDistResult protocol_wreach_dist(const Graph& g, const LinearOrder& order, int k, const SimModel& model,
                                      const RunOptions& options = {});

struct DomSetDistResult {
  VertexSet dominators;
  std::vector<Vertex> dominator_of;  // min WReach_r[w] for every w
  RoundTrace trace;
  std::size_t max_set_size = 0;      // max |WReach_2r| seen by the vertices
};

/// WReach_2r for 2r rounds, then every w sends an elect message along its
/// stored path to min WReach_r[w] over r rounds. Relays check they can
/// reach the target themselves within r.
DomSetDistResult protocol_domset(const Graph& g, const LinearOrder& order, int r, const SimModel& model,
                                 const RunOptions& options = {});

struct ConnectedDistResult {
  VertexSet dominators;
  VertexSet connected;
  RoundTrace trace;
  std::size_t max_set_size = 0;
  VertexSet undominated;  // vertices that aborted (LOCAL variant only)
  bool aborted() const noexcept { return !undominated.empty(); }
};

/// WReach_2r+1 (2r+1 rounds), election (r rounds), then every member of D
/// marks the vertices of its stored paths (2r+1 rounds): 5r + 2 rounds.
ConnectedDistResult protocol_connected_domset_congest(const Graph& g, const LinearOrder& order, int r,
                                                      const SimModel& model, const RunOptions& options = {});

/// Every vertex gathers its (2r+1)-neighbourhood with D flags, every member
/// of D computes its block, its minor neighbours and the least paths to
/// them, and notifies its half of each path interior: 3r + 1 rounds. A
/// vertex with no member of D within r reports itself undominated. If any
/// vertex does, the run is aborted and `connected` is left empty.
ConnectedDistResult protocol_connected_domset_local(const Graph& g, std::span<const Vertex> dominators, int r,
                                                    const SimModel& model = SimModel::local(),
                                                    const RunOptions& options = {});

}  // namespace rdom
