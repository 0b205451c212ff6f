/*! \file sweep.hh
  \brief Parameter-grid experiments: enumeration, parallel execution and
  per-cell aggregation.
*/

#ifndef WOM_SWEEP_HH
#define WOM_SWEEP_HH

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wom/generators.hh"
#include "wom/model.hh"

namespace wom {

  //! 0, step, 2*step, ..., 1 (computed as i/count to avoid drift).
  std::vector<double> unit_axis(unsigned steps = 20);

  struct SweepGrid {
    NetworkParams network = WsParams{};
    std::vector<double> k_values{0.01, 0.1, 0.5};
    std::vector<double> supporter_values{0.0, 0.1, 0.5};
    std::vector<double> curious_values = unit_axis();
    std::vector<double> enthusiastic_values = unit_axis();
    std::uint32_t replications = 10;
    std::uint64_t base_seed = 1;
    //! Model knobs; k, trait shares and seed are overwritten per run.
    SimConfig model;
    std::uint32_t max_retries = 10;
  };

  void validate(const SweepGrid& grid);

  //! XOR mask turning a network seed into the matching simulation seed.
  inline constexpr std::uint64_t kSimSeedMask = 0x5851f42d4c957f2dULL;

  struct RunSpec {
    std::size_t index = 0;     //!< flat run index
    std::size_t cell = 0;      //!< flat cell index (index / replications)
    std::uint32_t replicate = 0;
    double k = 0, supporters = 0, curious = 0, enthusiastic = 0;
    RngSeed network_seed;
    RngSeed sim_seed;
  };

  /*! Runs in lexicographic order of (k, supporters, curious, enthusiastic,
      replicate). network_seed = base_seed + index; sim_seed = network_seed
      XOR kSimSeedMask. */
  std::vector<RunSpec> enumerate_cells(const SweepGrid& grid);

  struct RunRecord {
    std::string network_model;
    std::uint64_t network_seed = 0;
    std::uint64_t sim_seed = 0;
    double k = 0, curious = 0, enthusiastic = 0, supporters = 0;
    double final_aware = 0, final_both = 0;
    std::uint32_t rounds = 0;
    bool hit_max_rounds = false;
    GraphMetrics metrics;
    bool failed = false;
    std::string error;
  };

  //! Generates a fresh network for the run and simulates on it.
  RunRecord execute(const SweepGrid& grid, const RunSpec& spec);

  using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

  /*! Executes every run on `workers` threads. The output follows
      enumerate_cells order whatever the scheduling; failed generations are
      flagged in their record and do not stop the sweep. */
  std::vector<RunRecord> run_sweep(const SweepGrid& grid, unsigned workers,
                                   const ProgressFn& progress = {});

  std::size_t failure_count(std::span<const RunRecord> records);

  struct CellSummary {
    std::string network_model;
    double k = 0, supporters = 0, curious = 0, enthusiastic = 0;
    double mean_final_both = 0;
    double sd_final_both = 0;     //!< sample sd, 0 when n == 1
    double mean_final_aware = 0;
    double mean_rounds = 0;
    std::size_t n = 0;
  };

  class AggregationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  /*! Groups successful records by (model, k, supporters, curious,
      enthusiastic), each value keyed at 6 decimals, in order of first
      appearance. Throws AggregationError when group sizes differ. */
  std::vector<CellSummary> aggregate(std::span<const RunRecord> records);

} // namespace wom

#endif
