#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rdom/exec.hpp"
#include "rdom/graph.hpp"
#include "rdom/io.hpp"
#include "rdom/order.hpp"

namespace rdom {

/// Weakly k-reachable sets WReach_k[G, L, v] for every v, each member w
/// certified by a path from w to v of length <= k on which w is the minimum.
///
/// The stored path is the shortest such path, ties broken by the
/// lexicographically least super-id sequence read from w. Entries of a
/// vertex are sorted by increasing position of w, so the first entry is
/// min WReach_k[v] and the last is v itself (with the length-0 path).
class WReachTable {
 public:
  struct Entry {
    Vertex target;            // the weakly reachable vertex w
    std::uint32_t path_begin; // offset into the path pool
    std::uint32_t path_size;  // number of vertices on the path (length + 1)
  };

  WReachTable() = default;

  int radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return offsets_.size() - 1; }

  std::span<const Entry> entries(Vertex v) const noexcept {
    return {entries_.data() + offsets_[v], entries_.data() + offsets_[v + 1]};
  }
  /// Vertices from w to v.
  std::span<const Vertex> path(const Entry& e) const noexcept {
    return {paths_.data() + e.path_begin, e.path_size};
  }
  /// Certificate path for w in WReach_k[v], if w is weakly reachable from v.
  std::optional<std::span<const Vertex>> find(Vertex v, Vertex w) const;
  /// min WReach_k[v] with respect to the order the table was built with.
  Vertex min_reachable(Vertex v) const noexcept { return entries_[offsets_[v]].target; }
  /// Smallest w whose certificate path has length <= `length`; this is
  /// min WReach_length[v] for any length <= radius().
  Vertex min_reachable_within(Vertex v, int length) const;

  std::size_t total_entries() const noexcept { return entries_.size(); }

  friend bool operator==(const WReachTable& a, const WReachTable& b);

  /// Incremental construction: add entries grouped by owner in owner order,
  /// with increasing target position inside each owner.
  class Builder;

 private:
  int radius_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Entry> entries_;
  std::vector<Vertex> paths_;
};

class WReachTable::Builder {
 public:
  Builder(std::size_t n, int radius);
  void begin_vertex(Vertex v);
  void add(Vertex target, std::span<const Vertex> path);
  WReachTable finish();

 private:
  WReachTable table_;
  Vertex next_ = 0;
};

/// WReach_k for every vertex by one restricted lexicographic BFS per source
/// (only vertices above the source, at most k steps). `Exec::parallel`
/// distributes sources over OpenMP threads; output is identical.
WReachTable wreach(const Graph& g, const LinearOrder& order, int k, Exec exec = Exec::parallel);

/// max_v |WReach_k[v]|: the weak colouring value witnessed by the order.
std::size_t wcol_value(const WReachTable& table);

/// Replays every certificate: adjacency, endpoints, length, minimality of w
/// and the presence of v's own length-0 entry. Returns a description of the
/// first defect, or nullopt.
std::optional<std::string> check_certificates(const Graph& g, const LinearOrder& order,
                                              const WReachTable& table);

/// {radius, entries: {v: [{w, path: [...]}]}} in external ids.
Json wreach_to_json(const WReachTable& table, const Graph& g);

}  // namespace rdom
