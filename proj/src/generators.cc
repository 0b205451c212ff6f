/*! \file generators.cc
  \brief Network generators.

  Each generator draws from its own stream split off the seed, and consumes
  draws in the order documented next to the loop that makes them.
*/

#include "wom/generators.hh"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wom {

  namespace {

    bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

    template <typename... Ts>
    [[noreturn]] void fail(const Ts&... parts)
    {
      std::ostringstream os;
      (os << ... << parts);
      throw ParamError(os.str());
    }

    //! Mutable adjacency with insertion-ordered rows, for growth and rewiring.
    class GrowingGraph {
    public:
      explicit GrowingGraph(std::size_t n) : rows_(n) {}

      bool has_edge(NodeId u, NodeId v) const
      {
        if (rows_[u].size() > rows_[v].size()) std::swap(u, v);
        const auto& r = rows_[u];
        return std::find(r.begin(), r.end(), v) != r.end();
      }

      void add(NodeId u, NodeId v)
      {
        rows_[u].push_back(v);
        rows_[v].push_back(u);
      }

      void remove(NodeId u, NodeId v)
      {
        auto drop = [](std::vector<NodeId>& r, NodeId x) {
          r.erase(std::find(r.begin(), r.end(), x));
        };
        drop(rows_[u], v);
        drop(rows_[v], u);
      }

      const std::vector<NodeId>& row(NodeId u) const { return rows_[u]; }

      Graph freeze() const
      {
        std::vector<Edge> edges;
        for (NodeId u = 0; u < rows_.size(); ++u)
          for (NodeId v : rows_[u])
            if (u < v) edges.emplace_back(u, v);
        return Graph::from_edges(rows_.size(), edges);
      }

    private:
      std::vector<std::vector<NodeId>> rows_;
    };

  } // namespace

  std::string model_name(const NetworkParams& params)
  {
    struct Name {
      std::string operator()(const WsParams&) const { return "ws"; }
      std::string operator()(const FfParams&) const { return "ff"; }
      std::string operator()(const SiiParams&) const { return "sii"; }
    };
    return std::visit(Name{}, params);
  }

  void validate(const WsParams& p)
  {
    if (p.nei < 1) fail("ws: nei must be at least 1");
    if (p.n <= 2ull * p.nei) fail("ws: n (", p.n, ") must exceed 2*nei (", 2ull * p.nei, ")");
    if (!is_probability(p.p_rewire)) fail("ws: p_rewire must lie in [0,1], got ", p.p_rewire);
  }

  void validate(const FfParams& p)
  {
    if (p.n < 1) fail("ff: n must be at least 1");
    if (!(std::isfinite(p.fw_prob) && p.fw_prob >= 0.0 && p.fw_prob < 1.0))
      fail("ff: fw_prob must lie in [0,1), got ", p.fw_prob);
    if (!(std::isfinite(p.bw_factor) && p.bw_factor >= 0.0))
      fail("ff: bw_factor must be non-negative, got ", p.bw_factor);
    if (p.fw_prob * p.bw_factor >= 1.0) fail("ff: fw_prob*bw_factor must be below 1");
    if (p.ambs < 1) fail("ff: ambs must be at least 1");
  }

  void validate(const SiiParams& p)
  {
    if (p.n_islands < 1) fail("sii: n_islands must be positive");
    if (p.island_size < 1) fail("sii: island_size must be positive");
    if (p.n_inter < 1) fail("sii: n_inter must be positive");
    if (static_cast<std::uint64_t>(p.n_inter) >
        static_cast<std::uint64_t>(p.island_size) * p.island_size)
      fail("sii: n_inter must not exceed island_size^2");
    if (!is_probability(p.p_in)) fail("sii: p_in must lie in [0,1], got ", p.p_in);
    if (static_cast<std::uint64_t>(p.n_islands) * p.island_size > 0xffffffffull)
      fail("sii: too many nodes");
  }

  void validate(const NetworkParams& p)
  {
    std::visit([](const auto& q) { validate(q); }, p);
  }

  Graph generate_ws(const WsParams& params, RngSeed seed)
  {
    validate(params);
    Rng rng = Rng(seed).split("ws");
    const NodeId n = params.n;
    GrowingGraph g(n);
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = 1; j <= params.nei; ++j) g.add(i, (i + j) % n);

    // replaces `moving` in edge (kept, moving); node draws until admissible
    auto rewire = [&](NodeId kept, NodeId moving) {
      for (int attempt = 0; attempt < 100; ++attempt) {
        auto w = static_cast<NodeId>(rng.uniform_index(n));
        if (w == kept || g.has_edge(kept, w)) continue;
        g.remove(kept, moving);
        g.add(kept, w);
        return w;
      }
      return moving;
    };

    // per lattice edge: decision for the far end (+ its node draws), then
    // decision for the near end (+ its node draws)
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = 1; j <= params.nei; ++j) {
        NodeId near = i;
        NodeId far = (i + j) % n;
        if (rng.bernoulli(params.p_rewire)) far = rewire(near, far);
        if (rng.bernoulli(params.p_rewire)) rewire(far, near);
      }
    }
    return g.freeze();
  }

  namespace {

    //! Failures before the first success of a Bernoulli(1-p) trial.
    std::uint32_t geometric_count(Rng& rng, double p)
    {
      std::uint32_t k = 0;
      while (rng.bernoulli(p)) ++k;
      return k;
    }

  } // namespace

  Graph generate_ff(const FfParams& params, RngSeed seed)
  {
    validate(params);
    Rng rng = Rng(seed).split("ff");
    const NodeId n = params.n;
    const double bw_prob = params.fw_prob * params.bw_factor;
    std::vector<std::vector<NodeId>> out(n), in(n);
    std::vector<NodeId> mark(n, 0);  // mark[x] == v+1: x visited by v's fire
    std::vector<NodeId> frontier, candidates;
    std::vector<Edge> edges;

    auto link = [&](NodeId v, NodeId x) {
      out[v].push_back(x);
      in[x].push_back(v);
      edges.emplace_back(x, v);
      frontier.push_back(x);
    };

    // burns up to `count` unvisited members of `pool`, scanning it in a
    // random order (partial Fisher-Yates, one draw per scanned slot)
    auto burn = [&](NodeId v, const std::vector<NodeId>& pool, std::uint32_t count) {
      const NodeId stamp = v + 1;
      candidates.assign(pool.begin(), pool.end());
      for (std::size_t i = 0; i < candidates.size() && count > 0; ++i) {
        std::size_t j = i + rng.uniform_index(candidates.size() - i);
        std::swap(candidates[i], candidates[j]);
        const NodeId x = candidates[i];
        if (mark[x] == stamp) continue;
        mark[x] = stamp;
        link(v, x);
        --count;
      }
    };

    // per new node v: ambassadors via sample(v, min(ambs, v)); then for each
    // reached node in breadth-first order, the forward count, the backward
    // count, the forward burn and the backward burn
    for (NodeId v = 1; v < n; ++v) {
      const NodeId stamp = v + 1;
      mark[v] = stamp;
      frontier.clear();
      for (NodeId a : rng.sample(v, std::min(params.ambs, v))) {
        mark[a] = stamp;
        link(v, a);
      }
      for (std::size_t head = 0; head < frontier.size(); ++head) {
        const NodeId b = frontier[head];
        const std::uint32_t forward = geometric_count(rng, params.fw_prob);
        const std::uint32_t backward = geometric_count(rng, bw_prob);
        burn(v, out[b], forward);
        burn(v, in[b], backward);
      }
    }
    return Graph::from_edges(n, edges);
  }

  Graph generate_sii(const SiiParams& params, RngSeed seed)
  {
    validate(params);
    Rng rng = Rng(seed).split("sii");
    const NodeId size = params.island_size;
    const NodeId n = params.n_islands * size;
    std::vector<Edge> edges;

    // intra-island pairs (i<j) in lexicographic order, island by island
    for (NodeId island = 0; island < params.n_islands; ++island) {
      const NodeId base = island * size;
      for (NodeId i = 0; i < size; ++i)
        for (NodeId j = i + 1; j < size; ++j)
          if (rng.bernoulli(params.p_in)) edges.emplace_back(base + i, base + j);
    }

    // island pairs (a<b) in lexicographic order; each link draws a member of
    // a then a member of b, redrawing both on duplicate
    std::vector<Edge> inter;
    for (NodeId a = 0; a < params.n_islands; ++a) {
      for (NodeId b = a + 1; b < params.n_islands; ++b) {
        inter.clear();
        while (inter.size() < params.n_inter) {
          Edge e{a * size + static_cast<NodeId>(rng.uniform_index(size)),
                 b * size + static_cast<NodeId>(rng.uniform_index(size))};
          if (std::find(inter.begin(), inter.end(), e) == inter.end()) inter.push_back(e);
        }
        edges.insert(edges.end(), inter.begin(), inter.end());
      }
    }
    return Graph::from_edges(n, edges);
  }

  Graph generate(const NetworkParams& params, RngSeed seed)
  {
    struct Gen {
      RngSeed seed;
      Graph operator()(const WsParams& p) const { return generate_ws(p, seed); }
      Graph operator()(const FfParams& p) const { return generate_ff(p, seed); }
      Graph operator()(const SiiParams& p) const { return generate_sii(p, seed); }
    };
    return std::visit(Gen{seed}, params);
  }

  ValidatedNetwork generate_validated(const NetworkParams& params, RngSeed seed,
                                      std::uint32_t max_retries)
  {
    if (max_retries < 1) throw ParamError("max_retries must be at least 1");
    validate(params);
    for (std::uint32_t attempt = 0; attempt < max_retries; ++attempt) {
      RngSeed s{seed.value + attempt};
      Graph g = generate(params, s);
      if (g.node_count() >= 2 && !is_connected(g)) continue;
      GraphMetrics m = g.node_count() >= 2 ? compute_metrics(g) : GraphMetrics{};
      if (g.node_count() < 2) {
        m.node_count = g.node_count();
        m.connected = true;
      }
      return {std::move(g), m, attempt + 1, s};
    }
    std::ostringstream os;
    os << model_name(params) << ": no connected network for seeds " << seed.value << ".."
       << seed.value + max_retries - 1;
    throw GenerationFailed(os.str());
  }

} // namespace wom
