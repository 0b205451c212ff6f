/*! \file womlab.cc
  \brief Command-line front end: generate, metrics, simulate, sweep, report.

  Exit codes: 0 success, 1 usage error, 2 runtime failure.
*/

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wom/generators.hh"
#include "wom/graphml.hh"
#include "wom/model.hh"
#include "wom/report.hh"
#include "wom/sweep.hh"

namespace {

  using namespace wom;

  constexpr int kUsage = 1;
  constexpr int kRuntime = 2;

  //! Flags for all three generators; the chosen model picks its own.
  struct NetworkFlags {
    std::string model = "ws";
    WsParams ws;
    FfParams ff;
    SiiParams sii;

    void attach(CLI::App& cmd, bool model_required)
    {
      auto* opt = cmd.add_option("--model", model, "network model")
                    ->check(CLI::IsMember({"ws", "ff", "sii"}))
                    ->capture_default_str();
      if (model_required) opt->required();
      cmd.add_option("--ws-n", ws.n, "ws: node count")->capture_default_str();
      cmd.add_option("--ws-nei", ws.nei, "ws: lattice neighbours per side")->capture_default_str();
      cmd.add_option("--ws-p", ws.p_rewire, "ws: rewiring probability")->capture_default_str();
      cmd.add_option("--ff-n", ff.n, "ff: node count")->capture_default_str();
      cmd.add_option("--ff-fw", ff.fw_prob, "ff: forward burning probability")
        ->capture_default_str();
      cmd.add_option("--ff-bw", ff.bw_factor, "ff: backward burning ratio")->capture_default_str();
      cmd.add_option("--ff-ambs", ff.ambs, "ff: ambassadors per new node")->capture_default_str();
      cmd.add_option("--sii-islands", sii.n_islands, "sii: number of islands")
        ->capture_default_str();
      cmd.add_option("--sii-size", sii.island_size, "sii: nodes per island")
        ->capture_default_str();
      cmd.add_option("--sii-p-in", sii.p_in, "sii: intra-island link probability")
        ->capture_default_str();
      cmd.add_option("--sii-inter", sii.n_inter, "sii: links between each pair of islands")
        ->capture_default_str();
    }

    NetworkParams params() const
    {
      if (model == "ff") return ff;
      if (model == "sii") return sii;
      return ws;
    }
  };

  //! Model knobs shared by simulate and sweep.
  struct ModelFlags {
    SimConfig cfg;
    bool no_give_up = false;

    void attach(CLI::App& cmd)
    {
      cmd.add_option("--ad-rounds", cfg.ad_rounds, "rounds carrying advertisement")
        ->capture_default_str();
      cmd.add_option("--ad-share", cfg.ad_share, "population share reached per ad round")
        ->capture_default_str();
      cmd.add_option("--t-promote", cfg.t_promote, "rounds a proactive agent keeps promoting")
        ->capture_default_str();
      cmd.add_option("--max-rounds", cfg.max_rounds, "round cap")->capture_default_str();
      cmd.add_flag("--no-give-up", no_give_up,
                   "seekers with no neighbour left stay seeking instead of turning aware");
    }

    SimConfig config() const
    {
      SimConfig c = cfg;
      c.seeker_gives_up = !no_give_up;
      return c;
    }
  };

  std::string join_fixed(const std::vector<double>& v)
  {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fixed6(v[i]);
    return s;
  }

  int cmd_generate(const NetworkFlags& net, std::uint64_t seed, const std::string& out)
  {
    ValidatedNetwork v = generate_validated(net.params(), RngSeed{seed});
    write_graphml(v.graph, std::filesystem::path(out));
    std::cout << metrics_row(v.metrics) << '\n';
    return 0;
  }

  int cmd_metrics(const std::string& in)
  {
    GraphmlDocument doc = read_graphml(std::filesystem::path(in));
    std::cout << kMetricsHeader << '\n' << metrics_row(compute_metrics(doc.graph)) << '\n';
    return 0;
  }

  std::string trace_csv(const SimResult& res)
  {
    static const char* const names[9] = {
      "unaware_ignorant", "unaware_proactive", "unaware_knowledgeable",
      "seeking_ignorant", "seeking_proactive", "seeking_knowledgeable",
      "aware_ignorant",   "aware_proactive",   "aware_knowledgeable"};
    std::string s = "round";
    for (const char* n : names) s += std::string(",") + n;
    s += '\n';
    for (std::size_t r = 0; r < res.time_series.size(); ++r) {
      s += std::to_string(r);
      for (std::uint32_t c : res.time_series[r]) s += "," + std::to_string(c);
      s += '\n';
    }
    return s;
  }

  int cmd_simulate(const std::string& network, const std::string& label, const SimConfig& cfg,
                   const std::string& trace)
  {
    GraphmlDocument doc = read_graphml(std::filesystem::path(network));
    SimResult res = run(doc.graph, cfg);
    RunRecord rec;
    rec.network_model = label;
    rec.network_seed = 0;
    rec.sim_seed = cfg.seed.value;
    rec.k = cfg.k;
    rec.curious = cfg.p_curious;
    rec.enthusiastic = cfg.p_enthusiastic;
    rec.supporters = cfg.p_supporter;
    rec.final_aware = res.final_aware_fraction;
    rec.final_both = res.final_both_fraction;
    rec.rounds = res.rounds;
    rec.hit_max_rounds = res.hit_max_rounds;
    rec.metrics = compute_metrics(doc.graph);
    if (!trace.empty()) write_text_file(trace, trace_csv(res));
    std::cout << kRecordsHeader << '\n' << record_row(rec) << '\n';
    return 0;
  }

  int cmd_sweep(const SweepGrid& grid, unsigned jobs, const std::string& out, bool progress)
  {
    ProgressFn report;
    if (progress)
      report = [](std::size_t done, std::size_t total) {
        if (done % 100 == 0 || done == total)
          std::fprintf(stderr, "\r%zu/%zu runs", done, total);
        if (done == total) std::fputc('\n', stderr);
      };
    std::vector<RunRecord> records = run_sweep(grid, jobs, report);
    std::ofstream file(out, std::ios::binary);
    if (!file) throw IoError("cannot open " + out + " for writing");
    std::vector<RunRecord> ok;
    for (const auto& r : records)
      if (!r.failed) ok.push_back(r);
    write_records_csv(ok, file);
    file.close();
    if (!file) throw IoError("failed writing " + out);

    const std::size_t failed = failure_count(records);
    std::cout << "runs " << records.size() << ", failures " << failed << '\n';
    for (const auto& r : records)
      if (r.failed) std::cerr << "network seed " << r.network_seed << ": " << r.error << '\n';
    return failed ? kRuntime : 0;
  }

  int cmd_report(const std::string& in, const std::string& out_dir, unsigned block)
  {
    std::ifstream file(in, std::ios::binary);
    if (!file) throw IoError("cannot open " + in);
    std::vector<RunRecord> records = read_records_csv(file);
    if (records.empty()) throw HeatmapError(in + " holds no records");
    std::vector<CellSummary> summaries = aggregate(records);
    if (summaries.empty()) throw HeatmapError(in + " holds only failed runs");

    std::vector<Heatmap> maps;
    for (const PanelKey& key : panels(summaries)) maps.push_back(build_heatmap(summaries, key));
    std::filesystem::create_directories(out_dir);
    for (const Heatmap& h : maps) {
      const std::filesystem::path base = std::filesystem::path(out_dir) / panel_basename(h.key);
      write_text_file(base.string() + ".csv", heatmap_csv(h));
      write_text_file(base.string() + ".ppm", heatmap_ppm(h, block));
      std::cout << base.string() << ".{csv,ppm} " << h.enthusiastic.size() << "x"
                << h.curious.size() << '\n';
    }
    return 0;
  }

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Word-of-mouth diffusion lab: networks, simulations and parameter sweeps"};
  app.require_subcommand(1, 1);
  app.failure_message(CLI::FailureMessage::help);

  // generate
  NetworkFlags gen_net;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "generate a connected network and write GraphML");
  gen_net.attach(*gen, true);
  gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "GraphML output path")->required();

  // metrics
  std::string met_in;
  auto* met = app.add_subcommand("metrics", "print structural metrics of a GraphML file");
  met->add_option("--in", met_in, "GraphML input path")->required();

  // simulate
  std::string sim_network, sim_trace, sim_label = "file";
  ModelFlags sim_model;
  std::uint64_t sim_seed = 1;
  auto* sim = app.add_subcommand("simulate", "run one diffusion on a GraphML network");
  sim->add_option("--network", sim_network, "GraphML network path")->required();
  sim->add_option("--k", sim_model.cfg.k, "initial expert proportion")->capture_default_str();
  sim->add_option("--curious", sim_model.cfg.p_curious, "curious proportion")
    ->capture_default_str();
  sim->add_option("--enthusiastic", sim_model.cfg.p_enthusiastic, "enthusiastic proportion")
    ->capture_default_str();
  sim->add_option("--supporters", sim_model.cfg.p_supporter, "supporter proportion")
    ->capture_default_str();
  sim->add_option("--seed", sim_seed, "simulation seed")->capture_default_str();
  sim->add_option("--label", sim_label, "network_model column of the output row")
    ->capture_default_str();
  sim->add_option("--trace", sim_trace, "write per-round state counts to this CSV");
  sim_model.attach(*sim);

  // sweep
  NetworkFlags sw_net;
  ModelFlags sw_model;
  SweepGrid sw_grid;
  unsigned sw_jobs = 1;
  std::string sw_out;
  bool sw_progress = false;
  auto* sw = app.add_subcommand("sweep", "run the parameter grid and write a records CSV");
  sw_net.attach(*sw, true);
  sw->add_option("--reps", sw_grid.replications, "replications per cell")->capture_default_str();
  sw->add_option("--base-seed", sw_grid.base_seed, "seed of run 0; run i uses base+i")
    ->capture_default_str();
  sw->add_option("--jobs", sw_jobs, "worker threads")->capture_default_str();
  sw->add_option("--out", sw_out, "records CSV output path")->required();
  sw->add_option("--k", sw_grid.k_values, "comma list of expert proportions")
    ->delimiter(',')
    ->default_str(join_fixed(sw_grid.k_values));
  sw->add_option("--supporters", sw_grid.supporter_values, "comma list of supporter proportions")
    ->delimiter(',')
    ->default_str(join_fixed(sw_grid.supporter_values));
  sw->add_option("--curious", sw_grid.curious_values, "comma list of curious proportions")
    ->delimiter(',')
    ->default_str("0 to 1 step 0.05");
  sw->add_option("--enthusiastic", sw_grid.enthusiastic_values,
                 "comma list of enthusiastic proportions")
    ->delimiter(',')
    ->default_str("0 to 1 step 0.05");
  sw->add_option("--max-retries", sw_grid.max_retries, "generation attempts per run")
    ->capture_default_str();
  sw->add_flag("--progress", sw_progress, "report progress on standard error");
  sw_model.attach(*sw);

  // report
  std::string rep_in, rep_out;
  unsigned rep_block = 8;
  auto* rep = app.add_subcommand("report", "render per-panel heatmaps from a records CSV");
  rep->add_option("--in", rep_in, "records CSV input path")->required();
  rep->add_option("--out-dir", rep_out, "output directory")->required();
  rep->add_option("--block", rep_block, "pixels per heatmap cell side")
    ->check(CLI::PositiveNumber)
    ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*gen) return cmd_generate(gen_net, gen_seed, gen_out);
    if (*met) return cmd_metrics(met_in);
    if (*sim) {
      SimConfig cfg = sim_model.config();
      cfg.seed = RngSeed{sim_seed};
      validate(cfg);
      return cmd_simulate(sim_network, sim_label, cfg, sim_trace);
    }
    if (*sw) {
      sw_grid.network = sw_net.params();
      sw_grid.model = sw_model.config();
      validate(sw_grid);
      if (sw_jobs < 1) throw ParamError("--jobs must be at least 1");
      return cmd_sweep(sw_grid, sw_jobs, sw_out, sw_progress);
    }
    if (*rep) return cmd_report(rep_in, rep_out, rep_block);
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}
