/*! \file sweep.cc
  \brief Sweep harness.
*/

#include "wom/sweep.hh"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <thread>

namespace wom {

  std::vector<double> unit_axis(unsigned steps)
  {
    std::vector<double> v;
    for (unsigned i = 0; i <= steps; ++i) v.push_back(static_cast<double>(i) / steps);
    return v;
  }

  void validate(const SweepGrid& grid)
  {
    validate(grid.network);
    auto check = [](const std::vector<double>& axis, const char* name) {
      if (axis.empty()) throw ParamError(std::string(name) + " axis is empty");
      for (double x : axis)
        if (!(std::isfinite(x) && x >= 0.0 && x <= 1.0))
          throw ParamError(std::string(name) + " values must lie in [0,1]");
    };
    check(grid.k_values, "k");
    check(grid.supporter_values, "supporters");
    check(grid.curious_values, "curious");
    check(grid.enthusiastic_values, "enthusiastic");
    if (grid.replications < 1) throw ParamError("replications must be at least 1");
    if (grid.max_retries < 1) throw ParamError("max_retries must be at least 1");
    validate(grid.model);
  }

  std::vector<RunSpec> enumerate_cells(const SweepGrid& grid)
  {
    validate(grid);
    std::vector<RunSpec> runs;
    runs.reserve(grid.k_values.size() * grid.supporter_values.size() *
                 grid.curious_values.size() * grid.enthusiastic_values.size() *
                 grid.replications);
    std::size_t cell = 0;
    for (double k : grid.k_values)
      for (double s : grid.supporter_values)
        for (double c : grid.curious_values)
          for (double e : grid.enthusiastic_values) {
            for (std::uint32_t r = 0; r < grid.replications; ++r) {
              RunSpec spec;
              spec.index = runs.size();
              spec.cell = cell;
              spec.replicate = r;
              spec.k = k;
              spec.supporters = s;
              spec.curious = c;
              spec.enthusiastic = e;
              spec.network_seed = RngSeed{grid.base_seed + spec.index};
              spec.sim_seed = RngSeed{spec.network_seed.value ^ kSimSeedMask};
              runs.push_back(spec);
            }
            ++cell;
          }
    return runs;
  }

  RunRecord execute(const SweepGrid& grid, const RunSpec& spec)
  {
    RunRecord rec;
    rec.network_model = model_name(grid.network);
    rec.network_seed = spec.network_seed.value;
    rec.sim_seed = spec.sim_seed.value;
    rec.k = spec.k;
    rec.curious = spec.curious;
    rec.enthusiastic = spec.enthusiastic;
    rec.supporters = spec.supporters;

    ValidatedNetwork net;
    try {
      net = generate_validated(grid.network, spec.network_seed, grid.max_retries);
    } catch (const GenerationFailed& err) {
      rec.failed = true;
      rec.error = err.what();
      return rec;
    }
    rec.metrics = net.metrics;

    SimConfig cfg = grid.model;
    cfg.k = spec.k;
    cfg.p_curious = spec.curious;
    cfg.p_enthusiastic = spec.enthusiastic;
    cfg.p_supporter = spec.supporters;
    cfg.seed = spec.sim_seed;
    SimResult res = run(net.graph, cfg);
    rec.final_aware = res.final_aware_fraction;
    rec.final_both = res.final_both_fraction;
    rec.rounds = res.rounds;
    rec.hit_max_rounds = res.hit_max_rounds;
    return rec;
  }

  std::vector<RunRecord> run_sweep(const SweepGrid& grid, unsigned workers,
                                   const ProgressFn& progress)
  {
    if (workers < 1) throw ParamError("worker count must be at least 1");
    const std::vector<RunSpec> runs = enumerate_cells(grid);
    std::vector<RunRecord> records(runs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;

    auto worker = [&] {
      for (std::size_t i = next++; i < runs.size(); i = next++) {
        records[i] = execute(grid, runs[i]);
        const std::size_t d = ++done;
        if (progress) {
          std::lock_guard lock(progress_mutex);
          progress(d, runs.size());
        }
      }
    };

    const unsigned n = std::min<std::size_t>(workers, std::max<std::size_t>(runs.size(), 1));
    if (n == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(n);
      for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    return records;
  }

  std::size_t failure_count(std::span<const RunRecord> records)
  {
    std::size_t n = 0;
    for (const auto& r : records) n += r.failed ? 1 : 0;
    return n;
  }

  namespace {

    std::string cell_key(const RunRecord& r)
    {
      char buf[160];
      std::snprintf(buf, sizeof buf, "|%.6f|%.6f|%.6f|%.6f", r.k, r.supporters, r.curious,
                    r.enthusiastic);
      return r.network_model + buf;
    }

    struct Accumulator {
      CellSummary summary;
      std::vector<double> both;
      double aware = 0, rounds = 0;
    };

  } // namespace

  std::vector<CellSummary> aggregate(std::span<const RunRecord> records)
  {
    std::map<std::string, std::size_t> slot;
    std::vector<Accumulator> cells;
    for (const auto& r : records) {
      if (r.failed) continue;
      auto [it, inserted] = slot.try_emplace(cell_key(r), cells.size());
      if (inserted) {
        Accumulator acc;
        acc.summary.network_model = r.network_model;
        acc.summary.k = r.k;
        acc.summary.supporters = r.supporters;
        acc.summary.curious = r.curious;
        acc.summary.enthusiastic = r.enthusiastic;
        cells.push_back(std::move(acc));
      }
      Accumulator& acc = cells[it->second];
      acc.both.push_back(r.final_both);
      acc.aware += r.final_aware;
      acc.rounds += r.rounds;
    }

    std::vector<CellSummary> out;
    out.reserve(cells.size());
    for (auto& acc : cells) {
      const std::size_t n = acc.both.size();
      if (n != cells.front().both.size())
        throw AggregationError("ragged groups: cell " + acc.summary.network_model + " has " +
                               std::to_string(n) + " runs, expected " +
                               std::to_string(cells.front().both.size()));
      const double dn = static_cast<double>(n);
      double mean = 0;
      for (double x : acc.both) mean += x;
      mean /= dn;
      double ss = 0;
      for (double x : acc.both) ss += (x - mean) * (x - mean);
      CellSummary s = acc.summary;
      s.n = n;
      s.mean_final_both = mean;
      s.sd_final_both = n > 1 ? std::sqrt(ss / (dn - 1.0)) : 0.0;
      s.mean_final_aware = acc.aware / dn;
      s.mean_rounds = acc.rounds / dn;
      out.push_back(s);
    }
    return out;
  }

} // namespace wom
