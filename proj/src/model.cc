/*! \file model.cc
  \brief USA/IPK state machine and round scheduler.
*/

#include "wom/model.hh"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace wom {

  namespace {

    void check_share(double x, const char* name)
    {
      if (!(std::isfinite(x) && x >= 0.0 && x <= 1.0))
        throw ParamError(std::string(name) + " must lie in [0,1], got " + std::to_string(x));
    }

  } // namespace

  void validate(const SimConfig& cfg)
  {
    check_share(cfg.k, "k");
    check_share(cfg.p_curious, "curious");
    check_share(cfg.p_enthusiastic, "enthusiastic");
    check_share(cfg.p_supporter, "supporters");
    check_share(cfg.ad_share, "ad_share");
  }

  std::uint32_t share_count(double share, std::size_t n)
  {
    const double x = std::floor(share * static_cast<double>(n) + 0.5);
    return static_cast<std::uint32_t>(std::min(x, static_cast<double>(n)));
  }

  World::World(const Graph& graph, const SimConfig& cfg)
    : graph_(&graph), cfg_(cfg), agents_(graph.node_count()), rng_(cfg.seed)
  {
    validate(cfg);
    const Rng root(cfg.seed);
    const auto n = static_cast<std::uint32_t>(agents_.size());

    // independent streams, so traits never depend on the expertise draw
    Rng experts = root.split("expertise");
    for (NodeId id : experts.sample(n, share_count(cfg.k, n)))
      agents_[id].expertise = Expertise::Knowledgeable;

    Rng curious = root.split("curious");
    for (NodeId id : curious.sample(n, share_count(cfg.p_curious, n)))
      agents_[id].traits.curious = true;
    Rng enthusiastic = root.split("enthusiastic");
    for (NodeId id : enthusiastic.sample(n, share_count(cfg.p_enthusiastic, n)))
      agents_[id].traits.enthusiastic = true;
    Rng supporter = root.split("supporter");
    for (NodeId id : supporter.sample(n, share_count(cfg.p_supporter, n)))
      agents_[id].traits.supporter = true;

    rng_ = root.split("dynamics");
  }

  World::World(const Graph& graph, const SimConfig& cfg, std::vector<Agent> agents)
    : graph_(&graph), cfg_(cfg), agents_(std::move(agents)), rng_(Rng(cfg.seed).split("dynamics"))
  {
    validate(cfg);
    if (agents_.size() != graph.node_count())
      throw ParamError("population size does not match the graph");
  }

  Agent& World::at(NodeId id)
  {
    if (id >= agents_.size()) throw std::out_of_range("unknown agent id " + std::to_string(id));
    return agents_[id];
  }

  const Agent& World::agent(NodeId id) const
  {
    if (id >= agents_.size()) throw std::out_of_range("unknown agent id " + std::to_string(id));
    return agents_[id];
  }

  void World::start_promoting(Agent& a)
  {
    if (cfg_.t_promote == 0) {
      a.expertise = Expertise::Knowledgeable;
      return;
    }
    a.expertise = Expertise::Proactive;
    a.promote_rounds_left = cfg_.t_promote;
  }

  void World::deliver_awareness(NodeId id, AwarenessCause cause)
  {
    Agent& a = at(id);
    if (a.is_aware()) return;
    a.first_awareness = cause;
    if (a.holds_expertise()) {
      a.awareness = Awareness::Aware;
      if (a.traits.supporter && a.expertise == Expertise::Knowledgeable) start_promoting(a);
    } else if (a.traits.curious) {
      a.awareness = Awareness::Seeking;
      auto nb = graph_->neighbors(id);
      a.unqueried_neighbors.assign(nb.begin(), nb.end());
      rng_.shuffle(std::span<NodeId>(a.unqueried_neighbors));
    } else {
      a.awareness = Awareness::Aware;
    }
  }

  void World::deliver_expertise(NodeId id)
  {
    at(id);
    // breadth-first through the gathering chain; each agent gains once
    chain_.assign(1, id);
    for (std::size_t head = 0; head < chain_.size(); ++head) {
      Agent& a = agents_[chain_[head]];
      if (a.holds_expertise()) continue;
      if (a.traits.enthusiastic) start_promoting(a);
      else a.expertise = Expertise::Knowledgeable;
      if (a.awareness == Awareness::Seeking) {
        a.awareness = Awareness::Aware;
        a.unqueried_neighbors.clear();
      }
      chain_.insert(chain_.end(), a.pending_requesters.begin(), a.pending_requesters.end());
      a.pending_requesters.clear();
    }
  }

  void World::act(NodeId id)
  {
    Agent& a = agents_[id];
    if (a.awareness == Awareness::Seeking) {
      if (a.unqueried_neighbors.empty()) {
        if (cfg_.seeker_gives_up) a.awareness = Awareness::Aware;
        return;
      }
      const NodeId target = a.unqueried_neighbors.back();
      a.unqueried_neighbors.pop_back();
      deliver_awareness(target, AwarenessCause::Query);
      if (agents_[target].holds_expertise()) deliver_expertise(id);
      else agents_[target].pending_requesters.push_back(id);
    } else if (a.expertise == Expertise::Proactive) {
      auto nb = graph_->neighbors(id);
      if (!nb.empty()) {
        const NodeId target = nb[rng_.uniform_index(nb.size())];
        deliver_awareness(target, AwarenessCause::Promotion);
        deliver_expertise(target);
      }
      if (--a.promote_rounds_left == 0) a.expertise = Expertise::Knowledgeable;
    }
  }

  void World::step()
  {
    ++round_;
    const auto n = static_cast<std::uint32_t>(agents_.size());
    if (round_ <= cfg_.ad_rounds)
      for (NodeId id : rng_.sample(n, share_count(cfg_.ad_share, n)))
        deliver_awareness(id, AwarenessCause::Advertisement);

    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0u);
    rng_.shuffle(std::span<NodeId>(order_));
    for (NodeId id : order_) act(id);
  }

  bool World::quiescent() const
  {
    if (round_ < cfg_.ad_rounds) return false;
    return std::none_of(agents_.begin(), agents_.end(), [&](const Agent& a) {
      if (a.expertise == Expertise::Proactive) return true;
      if (a.awareness != Awareness::Seeking) return false;
      return !a.unqueried_neighbors.empty() || cfg_.seeker_gives_up;
    });
  }

  StateCounts World::counts() const
  {
    StateCounts c{};
    for (const Agent& a : agents_) ++c[state_index(a.awareness, a.expertise)];
    return c;
  }

  double World::aware_fraction() const
  {
    if (agents_.empty()) return 0.0;
    auto k = std::count_if(agents_.begin(), agents_.end(), [](const Agent& a) { return a.is_aware(); });
    return static_cast<double>(k) / static_cast<double>(agents_.size());
  }

  double World::both_fraction() const
  {
    if (agents_.empty()) return 0.0;
    auto k = std::count_if(agents_.begin(), agents_.end(),
                           [](const Agent& a) { return a.is_aware() && a.holds_expertise(); });
    return static_cast<double>(k) / static_cast<double>(agents_.size());
  }

  SimResult run(const Graph& graph, const SimConfig& cfg)
  {
    World world(graph, cfg);
    SimResult r;
    r.time_series.push_back(world.counts());
    while (!world.quiescent() && world.round() < cfg.max_rounds) {
      world.step();
      r.time_series.push_back(world.counts());
    }
    r.rounds = world.round();
    r.hit_max_rounds = !world.quiescent();
    r.final_aware_fraction = world.aware_fraction();
    r.final_both_fraction = world.both_fraction();
    return r;
  }

} // namespace wom
