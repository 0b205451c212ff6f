/*! \file generators.hh
  \brief Seeded random network generators: Watts-Strogatz, Forest Fire and
  Simple Interconnected Islands.
*/

#ifndef WOM_GENERATORS_HH
#define WOM_GENERATORS_HH

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "wom/errors.hh"
#include "wom/graph.hh"
#include "wom/rng.hh"

namespace wom {

  //! Raised by generate_validated when every attempt is disconnected.
  class GenerationFailed : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  //! Watts-Strogatz beta model.
  struct WsParams {
    std::uint32_t n = 1000;
    std::uint32_t nei = 5;       //!< lattice neighbours on each side
    double p_rewire = 0.055;
  };

  /*! Forest Fire growth (geometric burning counts).

    The fire spreads over a directed growth history: a new node links to
    `ambs` ambassadors, and from every node it reaches it burns a
    geometrically distributed number of not-yet-visited out-neighbours
    (mean fw/(1-fw)) and in-neighbours (mean b/(1-b) with b = fw*bw_factor).
    All created links point from the new node to older ones; the returned
    graph forgets the orientation.
  */
  struct FfParams {
    std::uint32_t n = 1000;
    double fw_prob = 0.37;
    double bw_factor = 0.9;
    std::uint32_t ambs = 1;
  };

  //! Erdos-Renyi islands joined pairwise by a fixed number of random links.
  struct SiiParams {
    std::uint32_t n_islands = 24;
    std::uint32_t island_size = 42;
    double p_in = 0.235;
    std::uint32_t n_inter = 1;
  };

  using NetworkParams = std::variant<WsParams, FfParams, SiiParams>;

  //! "ws", "ff" or "sii".
  std::string model_name(const NetworkParams& params);

  void validate(const WsParams& p);
  void validate(const FfParams& p);
  void validate(const SiiParams& p);
  void validate(const NetworkParams& p);

  /*! Ring lattice, then each lattice edge (i, i+j), visited for i = 0..n-1
      and j = 1..nei, has each of its two endpoints rewired independently
      with probability p_rewire: first i+j is replaced while i is kept, then
      i is replaced while the (possibly new) far end is kept. A replacement
      node is drawn uniformly, redrawn on self-loop or duplicate, and the
      edge is left unchanged after 100 failed draws. The edge count stays
      n*nei. */
  Graph generate_ws(const WsParams& params, RngSeed seed);

  Graph generate_ff(const FfParams& params, RngSeed seed);

  Graph generate_sii(const SiiParams& params, RngSeed seed);

  Graph generate(const NetworkParams& params, RngSeed seed);

  struct ValidatedNetwork {
    Graph graph;
    GraphMetrics metrics;
    std::uint32_t attempts = 0;
    RngSeed seed;                //!< seed of the accepted attempt
  };

  /*! Tries seed, seed+1, ... until a connected graph appears, at most
      max_retries times. Parameters are validated before the first attempt. */
  ValidatedNetwork generate_validated(const NetworkParams& params, RngSeed seed,
                                      std::uint32_t max_retries = 10);

} // namespace wom

#endif
