/*! \file graph.cc
  \brief Graph construction and metrics.
*/

#include "wom/graph.hh"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace wom {

  namespace {
    constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
  }

  Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges)
  {
    if (node_count > std::numeric_limits<NodeId>::max())
      throw GraphError("node count exceeds id range");

    Graph g;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u >= node_count || v >= node_count)
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside 0.." + std::to_string(node_count));
      if (u == v)
        throw GraphError("self-loop on node " + std::to_string(u));
      g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    std::vector<std::size_t> deg(node_count, 0);
    for (auto [u, v] : g.edges_) {
      ++deg[u];
      ++deg[v];
    }
    g.offsets_.assign(node_count + 1, 0);
    for (std::size_t i = 0; i < node_count; ++i)
      g.offsets_[i + 1] = g.offsets_[i] + deg[i];

    g.adjacency_.resize(2 * g.edges_.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // smaller neighbors first, then larger: rows come out sorted
    for (auto [u, v] : g.edges_) g.adjacency_[fill[v]++] = u;
    for (auto [u, v] : g.edges_) g.adjacency_[fill[u]++] = v;
    return g;
  }

  bool Graph::has_edge(NodeId u, NodeId v) const
  {
    if (u >= node_count() || v >= node_count()) return false;
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  double density(const Graph& g)
  {
    const double n = static_cast<double>(g.node_count());
    if (g.node_count() < 2) throw UndefinedMetric("density needs at least 2 nodes");
    return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
  }

  std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source)
  {
    std::vector<std::uint32_t> dist(g.node_count(), kUnreached);
    std::vector<NodeId> queue;
    queue.reserve(g.node_count());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      NodeId u = queue[head];
      for (NodeId w : g.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  namespace {

    struct PathStats {
      bool connected = true;
      double mean = 0.0;
      std::uint32_t longest = 0;
    };

    PathStats all_pairs(const Graph& g)
    {
      PathStats s;
      const std::size_t n = g.node_count();
      if (n < 2) return s;
      if (!is_connected(g)) {
        s.connected = false;
        return s;
      }
      // 64 breadth-first searches at once, one bit per source; sums over
      // ordered pairs, so every unordered pair is counted twice
      std::uint64_t total = 0;
      std::vector<std::uint64_t> seen(n), frontier(n), next(n);
      for (std::size_t base = 0; base < n; base += 64) {
        std::fill(seen.begin(), seen.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        const std::size_t width = std::min<std::size_t>(64, n - base);
        for (std::size_t b = 0; b < width; ++b) seen[base + b] = frontier[base + b] = 1ull << b;
        for (std::uint32_t level = 1;; ++level) {
          std::uint64_t reached = 0;
          for (NodeId v = 0; v < n; ++v) {
            std::uint64_t bits = 0;
            for (NodeId w : g.neighbors(v)) bits |= frontier[w];
            bits &= ~seen[v];
            next[v] = bits;
            seen[v] |= bits;
            reached += static_cast<std::uint64_t>(std::popcount(bits));
          }
          if (reached == 0) break;
          total += reached * level;
          s.longest = std::max(s.longest, level);
          frontier.swap(next);
        }
      }
      total /= 2;
      const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
      s.mean = static_cast<double>(total) / pairs;
      return s;
    }

  } // namespace

  std::optional<double> average_path_length(const Graph& g)
  {
    auto s = all_pairs(g);
    if (!s.connected || g.node_count() < 2) return std::nullopt;
    return s.mean;
  }

  std::optional<std::uint32_t> diameter(const Graph& g)
  {
    auto s = all_pairs(g);
    if (!s.connected) return std::nullopt;
    return s.longest;
  }

  double global_clustering(const Graph& g)
  {
    std::uint64_t triangles = 0;
    std::uint64_t triples = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      const std::uint64_t d = g.degree(u);
      if (d > 1) triples += d * (d - 1) / 2;
    }
    // each triangle u < v < w counted once from its smallest edge (u,v)
    for (auto [u, v] : g.edges()) {
      auto a = g.neighbors(u);
      auto b = g.neighbors(v);
      auto ia = std::upper_bound(a.begin(), a.end(), v);
      auto ib = std::upper_bound(b.begin(), b.end(), v);
      while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else {
          ++triangles;
          ++ia;
          ++ib;
        }
      }
    }
    if (triples == 0) return 0.0;
    return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
  }

  bool is_connected(const Graph& g)
  {
    if (g.node_count() < 2) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreached; });
  }

  GraphMetrics compute_metrics(const Graph& g)
  {
    GraphMetrics m;
    m.node_count = g.node_count();
    m.edge_count = g.edge_count();
    m.density = density(g);
    m.global_clustering = global_clustering(g);
    auto s = all_pairs(g);
    m.connected = s.connected;
    if (s.connected) {
      m.avg_path_length = s.mean;
      m.diameter = s.longest;
    }
    return m;
  }

} // namespace wom
