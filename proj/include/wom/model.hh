/*! \file model.hh
  \brief Word-of-mouth with information seeking (USA/IPK agent model).

  Every agent carries two knowledge dimensions. Awareness: Unaware, Seeking
  or Aware. Expertise: Ignorant, Proactive or Knowledgeable. Three fixed
  traits decide the transitions: curious agents seek expert knowledge once
  aware, enthusiastic agents promote expertise once they get it, and
  supporters (pre-seeded experts) promote once they become aware.
*/

#ifndef WOM_MODEL_HH
#define WOM_MODEL_HH

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wom/errors.hh"
#include "wom/graph.hh"
#include "wom/rng.hh"

namespace wom {

  enum class Awareness : std::uint8_t { Unaware = 0, Seeking = 1, Aware = 2 };
  enum class Expertise : std::uint8_t { Ignorant = 0, Proactive = 1, Knowledgeable = 2 };

  //! How an agent first learnt the innovation exists.
  enum class AwarenessCause : std::uint8_t { Advertisement, Query, Promotion, Direct };

  struct Traits {
    bool curious = false;
    bool enthusiastic = false;
    bool supporter = false;
    friend bool operator==(const Traits&, const Traits&) = default;
  };

  struct Agent {
    Awareness awareness = Awareness::Unaware;
    Expertise expertise = Expertise::Ignorant;
    Traits traits;
    //! Seekers that asked this agent while it lacked expertise.
    std::vector<NodeId> pending_requesters;
    //! Neighbours not yet queried in the current seeking episode (popped from the back).
    std::vector<NodeId> unqueried_neighbors;
    std::uint32_t promote_rounds_left = 0;
    std::optional<AwarenessCause> first_awareness;

    bool is_aware() const { return awareness != Awareness::Unaware; }
    bool holds_expertise() const { return expertise != Expertise::Ignorant; }

    friend bool operator==(const Agent&, const Agent&) = default;
  };

  struct SimConfig {
    double k = 0.01;                 //!< initial proportion of experts
    double p_curious = 0.0;
    double p_enthusiastic = 0.0;
    double p_supporter = 0.0;
    std::uint32_t ad_rounds = 100;   //!< rounds 1..ad_rounds carry advertisement
    double ad_share = 0.01;          //!< share of the population reached per ad round
    std::uint32_t t_promote = 50;    //!< rounds a Proactive agent keeps promoting
    bool seeker_gives_up = true;     //!< exhausted seekers become Aware
    std::uint32_t max_rounds = 1000;
    RngSeed seed;
  };

  //! Throws ParamError on out-of-range proportions.
  void validate(const SimConfig& cfg);

  //! round(share * n), half-up, clamped to n.
  std::uint32_t share_count(double share, std::size_t n);

  //! Per-state population counts, indexed by state_index().
  using StateCounts = std::array<std::uint32_t, 9>;

  constexpr std::size_t state_index(Awareness a, Expertise e)
  {
    return static_cast<std::size_t>(a) * 3 + static_cast<std::size_t>(e);
  }

  struct SimResult {
    double final_aware_fraction = 0.0;
    double final_both_fraction = 0.0;    //!< aware and holding expertise
    std::uint32_t rounds = 0;            //!< steps executed
    bool hit_max_rounds = false;
    std::vector<StateCounts> time_series;  //!< entry 0 is the initial state

    friend bool operator==(const SimResult&, const SimResult&) = default;
  };

  /*! \brief One population living on a graph.

    Agents act sequentially within a round and every change is visible to
    the agents acting after it. The graph must outlive the world.
  */
  class World {
  public:
    //! Initial population: everybody Unaware, round(k*N) experts, traits sampled.
    World(const Graph& graph, const SimConfig& cfg);

    //! Explicit population, for hand-built scenarios.
    World(const Graph& graph, const SimConfig& cfg, std::vector<Agent> agents);

    void deliver_awareness(NodeId id, AwarenessCause cause = AwarenessCause::Direct);
    void deliver_expertise(NodeId id);

    //! One synchronous round: advertisement, then every agent once in random order.
    void step();

    //! Nothing left to do: ads over, no Proactive, no Seeking agent able to act.
    bool quiescent() const;

    std::uint32_t round() const { return round_; }
    std::size_t size() const { return agents_.size(); }
    const Agent& agent(NodeId id) const;
    std::span<const Agent> agents() const { return agents_; }
    const Graph& graph() const { return *graph_; }
    const SimConfig& config() const { return cfg_; }

    StateCounts counts() const;
    double aware_fraction() const;
    double both_fraction() const;

  private:
    Agent& at(NodeId id);
    void act(NodeId id);
    void start_promoting(Agent& a);

    const Graph* graph_;
    SimConfig cfg_;
    std::vector<Agent> agents_;
    Rng rng_;
    std::uint32_t round_ = 0;
    std::vector<NodeId> order_;
    std::vector<NodeId> chain_;
  };

  //! Steps until quiescence or max_rounds.
  SimResult run(const Graph& graph, const SimConfig& cfg);

} // namespace wom

#endif
