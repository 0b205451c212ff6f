/*! \file graph.hh
  \brief Immutable undirected simple graph and its statistical indicators.
*/

#ifndef WOM_GRAPH_HH
#define WOM_GRAPH_HH

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wom {

  using NodeId = std::uint32_t;
  using Edge = std::pair<NodeId, NodeId>;

  //! Raised when a graph cannot be built from the given edges.
  class GraphError : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  /*! \brief Undirected simple graph over dense node ids 0..N-1.

    Adjacency is stored in compressed rows with each neighbor list sorted.
    Edges are kept as (smaller, larger) pairs in lexicographic order.
  */
  class Graph {
  public:
    Graph() = default;

    /*! Builds a graph. Duplicate pairs (in either orientation) collapse to
        one edge; self-loops and out-of-range ids throw GraphError. */
    static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const NodeId> neighbors(NodeId v) const
    {
      return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(NodeId u, NodeId v) const;

    //! Sorted (u < v) edge list.
    std::span<const Edge> edges() const { return edges_; }

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
    std::vector<Edge> edges_;
  };

  //! Raised when a metric is requested on a graph where it is undefined.
  class UndefinedMetric : public std::domain_error {
    using std::domain_error::domain_error;
  };

  struct GraphMetrics {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double density = 0.0;
    std::optional<double> avg_path_length;   //!< empty when disconnected
    double global_clustering = 0.0;
    std::optional<std::uint32_t> diameter;   //!< empty when disconnected
    bool connected = false;
  };

  //! 2m / (n(n-1)); throws UndefinedMetric for fewer than 2 nodes.
  double density(const Graph& g);

  //! Mean shortest-path length over unordered pairs; empty if disconnected.
  std::optional<double> average_path_length(const Graph& g);

  //! Transitivity: 3 * triangles / connected triples, 0 without triples.
  double global_clustering(const Graph& g);

  std::optional<std::uint32_t> diameter(const Graph& g);

  //! True for graphs with fewer than 2 nodes.
  bool is_connected(const Graph& g);

  //! Breadth-first distances from source; unreachable nodes get UINT32_MAX.
  std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

  //! All indicators at once; the all-pairs BFS is shared by APL and diameter.
  GraphMetrics compute_metrics(const Graph& g);

} // namespace wom

#endif
