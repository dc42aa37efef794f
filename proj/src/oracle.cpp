#include "rdom/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "rdom/error.hpp"

namespace rdom::oracle {

namespace {

using Mask = std::uint64_t;

void check_limit(const Graph& g, std::size_t limit, const char* what) {
  if (g.size() > limit) {
    throw OracleLimit(std::string(what) + " refuses n = " + std::to_string(g.size()) + " (limit " +
                      std::to_string(limit) + ")");
  }
  if (g.size() > 63) throw OracleLimit(std::string(what) + " supports at most 63 vertices");
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> nb(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex u : g.neighbors(v)) nb[v] |= Mask{1} << u;
  }
  return nb;
}

Mask expand(const std::vector<Mask>& nb, Mask m) {
  Mask out = m;
  for (Vertex v = 0; v < nb.size(); ++v) {
    if (m >> v & 1) out |= nb[v];
  }
  return out;
}

std::vector<Mask> ball_masks(const std::vector<Mask>& nb, int r) {
  std::vector<Mask> balls(nb.size());
  for (Vertex v = 0; v < nb.size(); ++v) {
    Mask m = Mask{1} << v;
    for (int i = 0; i < r; ++i) {
      const Mask next = expand(nb, m);
      if (next == m) break;
      m = next;
    }
    balls[v] = m;
  }
  return balls;
}

bool connected_mask(const std::vector<Mask>& nb, Mask set) {
  if (set == 0) return true;
  Mask seen = set & (~set + 1);
  for (;;) {
    const Mask next = expand(nb, seen) & set;
    if (next == seen) break;
    seen = next;
  }
  return seen == set;
}

// Visits the k-subsets of 0..n-1 in lexicographic order until `f` accepts one.
template <class F>
bool first_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<Vertex> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <class Accept>
SetResult smallest_set(const Graph& g, int r, Accept&& accept) {
  if (r < 0) throw InvalidArgument("radius must be non-negative");
  const std::size_t n = g.size();
  const auto nb = neighbor_masks(g);
  const auto balls = ball_masks(nb, r);
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  SetResult out;
  if (n == 0) return out;
  for (std::size_t k = 1; k <= n; ++k) {
    const bool found = first_subset(n, k, [&](const std::vector<Vertex>& idx) {
      Mask covered = 0, set = 0;
      for (Vertex v : idx) {
        covered |= balls[v];
        set |= Mask{1} << v;
      }
      if (covered != all || !accept(nb, set)) return false;
      out.set = idx;
      return true;
    });
    if (found) return out;
  }
  return out;
}

}  // namespace

SetResult min_domset(const Graph& g, int r, std::size_t limit_n) {
  check_limit(g, limit_n, "min_domset");
  return smallest_set(g, r, [](const std::vector<Mask>&, Mask) { return true; });
}

SetResult min_connected_domset(const Graph& g, int r, std::size_t limit_n) {
  check_limit(g, limit_n, "min_connected_domset");
  const auto nb = neighbor_masks(g);
  const Mask all = (Mask{1} << g.size()) - 1;
  if (!connected_mask(nb, all)) throw PreconditionError("min_connected_domset needs a connected graph");
  return smallest_set(g, r, [](const std::vector<Mask>& adj, Mask set) { return connected_mask(adj, set); });
}

WcolResult exact_wcol(const Graph& g, int k, std::size_t limit_n) {
  check_limit(g, limit_n, "exact_wcol");
  if (k < 0) throw InvalidArgument("radius must be non-negative");
  const std::size_t n = g.size();
  const auto nb = neighbor_masks(g);
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  WcolResult best;
  best.value = n + 1;
  std::vector<std::size_t> count(n);
  do {
    // u is weakly k-reachable from every v that u reaches within k steps
    // through vertices placed after u.
    std::fill(count.begin(), count.end(), 0);
    Mask above = (n == 64 ? ~Mask{0} : (Mask{1} << n) - 1);
    std::size_t worst = 0;
    for (std::size_t p = 0; p < n && worst < best.value; ++p) {
      const Vertex u = seq[p];
      Mask reach = Mask{1} << u;
      for (int i = 0; i < k; ++i) reach = expand(nb, reach) & above;
      for (Vertex v = 0; v < n; ++v) {
        if (reach >> v & 1) worst = std::max(worst, ++count[v]);
      }
      above &= ~(Mask{1} << u);
    }
    if (worst < best.value) {
      best.value = worst;
      best.order = LinearOrder::from_sequence(seq);
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  if (n == 0) best = {0, LinearOrder::identity(0)};
  return best;
}

WReachTable wreach_bruteforce(const Graph& g, const LinearOrder& order, int k, std::size_t limit_n) {
  check_limit(g, limit_n, "wreach_bruteforce");
  if (k < 0) throw InvalidArgument("radius must be non-negative");
  if (order.size() != g.size()) throw InvalidArgument("order size does not match graph");
  const std::size_t n = g.size();
  WReachTable::Builder builder(n, k);
  std::vector<Vertex> walk;
  std::vector<char> on(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    // best[rank of w] = certificate read from w, compared as super-id sequences.
    std::map<std::uint32_t, std::vector<std::uint32_t>> best;
    const auto consider = [&] {
      const Vertex w = walk.back();
      for (Vertex x : walk) {
        if (x != w && order.rank(x) < order.rank(w)) return;
      }
      std::vector<std::uint32_t> cert;
      for (auto it = walk.rbegin(); it != walk.rend(); ++it) cert.push_back(order.rank(*it));
      auto [slot, inserted] = best.emplace(order.rank(w), cert);
      if (!inserted && (cert.size() < slot->second.size() || (cert.size() == slot->second.size() && cert < slot->second))) {
        slot->second = std::move(cert);
      }
    };
    const auto dfs = [&](auto&& self) -> void {
      consider();
      if (static_cast<int>(walk.size()) - 1 == k) return;
      for (Vertex y : g.neighbors(walk.back())) {
        if (on[y]) continue;
        on[y] = 1;
        walk.push_back(y);
        self(self);
        walk.pop_back();
        on[y] = 0;
      }
    };
    walk.assign(1, v);
    on[v] = 1;
    dfs(dfs);
    on[v] = 0;

    builder.begin_vertex(v);
    Path path;
    for (const auto& [rank, cert] : best) {
      path.clear();
      for (auto x : cert) path.push_back(order.at(x));
      builder.add(order.at(rank), path);
    }
  }
  return builder.finish();
}

}  // namespace rdom::oracle
