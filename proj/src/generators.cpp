#include "rdom/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "rdom/error.hpp"

namespace rdom::gen {

namespace {

std::vector<ExternalId> all_ids(std::size_t n) {
  std::vector<ExternalId> ids(n);
  std::iota(ids.begin(), ids.end(), ExternalId{1});
  return ids;
}

Graph make(std::size_t n, const std::vector<IdPair>& edges) {
  const auto ids = all_ids(n);
  return Graph::from_edges(edges, ids);
}

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw InvalidArgument(std::string(what) + " must be positive");
}

}  // namespace

Graph path(std::size_t n) {
  require_positive(n, "path length");
  std::vector<IdPair> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return make(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<IdPair> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n, 1);
  return make(n, edges);
}

Graph star(std::size_t n) {
  require_positive(n, "star size");
  std::vector<IdPair> edges;
  for (std::size_t i = 2; i <= n; ++i) edges.emplace_back(1, i);
  return make(n, edges);
}

Graph complete(std::size_t n) {
  require_positive(n, "clique size");
  std::vector<IdPair> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return make(n, edges);
}

Graph grid(std::size_t rows, std::size_t cols) {
  require_positive(rows, "grid rows");
  require_positive(cols, "grid cols");
  const auto id = [cols](std::size_t r, std::size_t c) { return static_cast<ExternalId>(r * cols + c + 1); };
  std::vector<IdPair> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return make(rows * cols, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  require_positive(n, "tree size");
  std::mt19937_64 rng(seed);
  std::vector<IdPair> edges;
  for (std::size_t i = 2; i <= n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(1, i - 1);
    edges.emplace_back(pick(rng), i);
  }
  return make(n, edges);
}

Graph partial_ktree(std::size_t n, std::size_t k, double keep, std::uint64_t seed) {
  require_positive(n, "partial k-tree size");
  require_positive(k, "partial k-tree width");
  if (!(keep >= 0.0 && keep <= 1.0)) throw InvalidArgument("edge-keep probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<IdPair> edges;
  const std::size_t base = std::min(n, k + 1);
  for (std::size_t i = 1; i <= base; ++i) {
    for (std::size_t j = i + 1; j <= base; ++j) edges.emplace_back(i, j);
  }
  // k-cliques available for attachment.
  std::vector<std::vector<std::size_t>> cliques;
  if (n > k) {
    for (std::size_t skip = 1; skip <= base; ++skip) {
      std::vector<std::size_t> clique;
      for (std::size_t i = 1; i <= base; ++i) {
        if (i != skip) clique.push_back(i);
      }
      cliques.push_back(std::move(clique));
    }
  }
  for (std::size_t v = base + 1; v <= n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
    const auto host = cliques[pick(rng)];
    for (std::size_t u : host) edges.emplace_back(u, v);
    for (std::size_t drop = 0; drop < host.size(); ++drop) {
      auto clique = host;
      clique[drop] = v;
      cliques.push_back(std::move(clique));
    }
  }
  std::vector<IdPair> kept;
  std::bernoulli_distribution coin(keep);
  for (const auto& e : edges) {
    if (coin(rng)) kept.push_back(e);
  }
  return make(n, kept);
}

Graph edgeless(std::size_t n) {
  require_positive(n, "vertex count");
  return make(n, {});
}

Graph by_name(const std::string& family, const std::vector<double>& params, std::uint64_t seed) {
  const auto count = [&](std::size_t i) -> std::size_t {
    if (i >= params.size()) throw InvalidArgument(family + ": missing parameter " + std::to_string(i + 1));
    const double x = params[i];
    if (!(x >= 1.0) || x != std::floor(x)) {
      throw InvalidArgument(family + ": parameter " + std::to_string(i + 1) + " must be a positive integer");
    }
    return static_cast<std::size_t>(x);
  };
  const auto expect = [&](std::size_t arity) {
    if (params.size() != arity) {
      throw InvalidArgument(family + " takes " + std::to_string(arity) + " parameter(s)");
    }
  };
  if (family == "path") return expect(1), path(count(0));
  if (family == "cycle") return expect(1), cycle(count(0));
  if (family == "star") return expect(1), star(count(0));
  if (family == "complete") return expect(1), complete(count(0));
  if (family == "edgeless") return expect(1), edgeless(count(0));
  if (family == "grid") return expect(2), grid(count(0), count(1));
  if (family == "random_tree") return expect(1), random_tree(count(0), seed);
  if (family == "partial_ktree") {
    expect(3);
    return partial_ktree(count(0), count(1), params[2], seed);
  }
  throw InvalidArgument("unknown graph family '" + family + "'");
}

}  // namespace rdom::gen
