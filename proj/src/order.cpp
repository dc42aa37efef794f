#include "rdom/order.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <string>

#include "rdom/error.hpp"
#include "rdom/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rdom {

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

LinearOrder LinearOrder::identity(std::size_t n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  return from_sequence(std::move(seq));
}

LinearOrder LinearOrder::from_sequence(std::vector<Vertex> sequence) {
  LinearOrder order;
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  order.rank_.assign(sequence.size(), kUnset);
  for (std::size_t p = 0; p < sequence.size(); ++p) {
    const Vertex v = sequence[p];
    if (v >= sequence.size() || order.rank_[v] != kUnset) {
      throw InvalidArgument("order is not a permutation (position " + std::to_string(p) + ")");
    }
    order.rank_[v] = static_cast<std::uint32_t>(p);
  }
  order.sequence_ = std::move(sequence);
  return order;
}

namespace {

struct PeelResult {
  std::vector<Vertex> removal;  // in removal order
  int degeneracy = 0;
};

PeelResult peel(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> deg(n);
  // Minimum degree first, then largest vertex first.
  const auto cmp = [](const std::pair<std::size_t, Vertex>& a, const std::pair<std::size_t, Vertex>& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::set<std::pair<std::size_t, Vertex>, decltype(cmp)> queue(cmp);
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<bool> removed(n, false);
  PeelResult result;
  result.removal.reserve(n);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    result.removal.push_back(v);
    result.degeneracy = std::max(result.degeneracy, static_cast<int>(d));
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({deg[u], u});
      --deg[u];
      queue.emplace(deg[u], u);
    }
  }
  return result;
}

}  // namespace

LinearOrder degeneracy_order(const Graph& g) {
  auto removal = peel(g).removal;
  std::reverse(removal.begin(), removal.end());
  return LinearOrder::from_sequence(std::move(removal));
}

int degeneracy(const Graph& g) { return peel(g).degeneracy; }

int max_smaller_neighbors(const Graph& g, const LinearOrder& order) {
  int best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto nbrs = g.neighbors(v);
    const int smaller = static_cast<int>(
        std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex u) { return order.less(u, v); }));
    best = std::max(best, smaller);
  }
  return best;
}

LinearOrder heuristic_wcol_order(const Graph& g, int k) {
  if (k < 1) throw InvalidArgument("heuristic_wcol_order needs k >= 1");
  return degeneracy_order(g);
}

OrderedAdjacency sort_adjacency(const Graph& g, const LinearOrder& order) {
  OrderedAdjacency out;
  const std::size_t n = g.size();
  out.offsets_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) out.offsets_[v + 1] = out.offsets_[v] + g.degree(v);
  out.adjacency_.resize(out.offsets_[n]);
  std::vector<std::size_t> fill(out.offsets_.begin(), out.offsets_.end() - 1);
  for (Vertex vi : order.sequence()) {
    for (Vertex vj : g.neighbors(vi)) out.adjacency_[fill[vj]++] = vi;
  }
  return out;
}

LinearOrder read_order(std::istream& in, const Graph& g) {
  std::vector<Vertex> seq;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      if (end == pos) break;
      const std::string token = line.substr(pos, end - pos);
      ExternalId id = 0;
      try {
        std::size_t used = 0;
        id = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError("expected a vertex id, got '" + token + "'", line_no);
      }
      const auto v = g.vertex_of(id);
      if (!v) throw ParseError("unknown vertex id " + token, line_no);
      seq.push_back(*v);
      pos = end;
    }
  }
  if (seq.size() != g.size()) {
    throw ParseError("order lists " + std::to_string(seq.size()) + " vertices, graph has " +
                         std::to_string(g.size()),
                     0);
  }
  return LinearOrder::from_sequence(std::move(seq));
}

void write_order(const LinearOrder& order, const Graph& g, std::ostream& out) {
  for (Vertex v : order.sequence()) out << g.id(v) << '\n';
}

}  // namespace rdom
