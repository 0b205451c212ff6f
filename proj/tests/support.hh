/*! \file support.hh
  \brief Small graph builders shared by the unit tests.
*/

#ifndef WOM_TESTS_SUPPORT_HH
#define WOM_TESTS_SUPPORT_HH

#include <algorithm>
#include <limits>
#include <vector>

#include "wom/graph.hh"
#include "wom/rng.hh"

namespace wom::testing {

  inline Graph complete(std::size_t n)
  {
    std::vector<Edge> e;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
  }

  inline Graph path(std::size_t n)
  {
    std::vector<Edge> e;
    for (NodeId u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph::from_edges(n, e);
  }

  inline Graph cycle(std::size_t n)
  {
    std::vector<Edge> e;
    for (NodeId u = 0; u < n; ++u) e.emplace_back(u, static_cast<NodeId>((u + 1) % n));
    return Graph::from_edges(n, e);
  }

  inline Graph star(std::size_t leaves)
  {
    std::vector<Edge> e;
    for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, e);
  }

  //! i linked to i+1..i+nei (mod n).
  inline Graph ring_lattice(std::size_t n, std::size_t nei)
  {
    std::vector<Edge> e;
    for (NodeId u = 0; u < n; ++u)
      for (std::size_t j = 1; j <= nei; ++j) e.emplace_back(u, static_cast<NodeId>((u + j) % n));
    return Graph::from_edges(n, e);
  }

  //! G(n, p) drawn from a test-only stream.
  inline Graph random_graph(std::size_t n, double p, std::uint64_t seed)
  {
    Rng rng(RngSeed{seed});
    std::vector<Edge> e;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (rng.bernoulli(p)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
  }

  inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  //! All-pairs hop distances by Floyd-Warshall; kUnreachable between components.
  inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g)
  {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kUnreachable));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (d[i][k] != kUnreachable && d[k][j] != kUnreachable)
            d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
  }

  //! Closed share of all length-2 paths, by enumerating centres and endpoint pairs.
  inline double brute_transitivity(const Graph& g)
  {
    const std::size_t n = g.node_count();
    std::size_t triples = 0, closed = 0;
    for (NodeId c = 0; c < n; ++c)
      for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
          if (a != c && b != c && g.has_edge(a, c) && g.has_edge(b, c)) {
            ++triples;
            if (g.has_edge(a, b)) ++closed;
          }
    return triples ? static_cast<double>(closed) / static_cast<double>(triples) : 0.0;
  }

} // namespace wom::testing

#endif
