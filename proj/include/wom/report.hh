/*! \file report.hh
  \brief Records and summaries as CSV; heatmaps as CSV matrices and PPM images.
*/

#ifndef WOM_REPORT_HH
#define WOM_REPORT_HH

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wom/graphml.hh"
#include "wom/sweep.hh"

namespace wom {

  inline constexpr std::string_view kRecordsHeader =
    "network_model,network_seed,sim_seed,k,curious,enthusiastic,supporters,final_aware,"
    "final_both,rounds,hit_max_rounds,nodes,edges,density,avg_path_length,clustering,diameter";

  inline constexpr std::string_view kSummariesHeader =
    "network_model,k,supporters,curious,enthusiastic,mean_final_both,sd_final_both,"
    "mean_final_aware,mean_rounds,n";

  inline constexpr std::string_view kMetricsHeader =
    "nodes,edges,density,avg_path_length,clustering,diameter,connected";

  //! "%.6f".
  std::string fixed6(double x);

  //! One metrics row (no header), matching kMetricsHeader; undefined values print as NA.
  std::string metrics_row(const GraphMetrics& m);

  std::string record_row(const RunRecord& r);
  std::string summary_row(const CellSummary& s);

  std::size_t write_records_csv(std::span<const RunRecord> records, std::ostream& out);
  std::size_t write_summaries_csv(std::span<const CellSummary> summaries, std::ostream& out);

  //! Inverse of write_records_csv; reals come back rounded to 6 decimals.
  std::vector<RunRecord> read_records_csv(std::istream& in);
  std::vector<CellSummary> read_summaries_csv(std::istream& in);

  struct PanelKey {
    std::string network_model;
    double k = 0;
    double supporters = 0;
  };

  //! Panels present in the summaries, in order of first appearance.
  std::vector<PanelKey> panels(std::span<const CellSummary> summaries);

  //! "heatmap_<model>_k<k>_s<supporters>", numbers in shortest %g form.
  std::string panel_basename(const PanelKey& key);

  struct Heatmap {
    PanelKey key;
    std::vector<double> curious;       //!< columns, ascending
    std::vector<double> enthusiastic;  //!< rows, ascending
    std::vector<double> values;        //!< row-major, values[row * cols + col]

    double at(std::size_t row, std::size_t col) const { return values[row * curious.size() + col]; }
  };

  class HeatmapError : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  /*! Collects mean_final_both for one panel on the full curious x
      enthusiastic grid; throws HeatmapError listing the missing cells. */
  Heatmap build_heatmap(std::span<const CellSummary> summaries, const PanelKey& key);

  //! (round(255v), round(255v), round(64+191v)).
  std::array<std::uint8_t, 3> heat_color(double v);

  /*! First line "enthusiastic\curious,<curious values>", then one row per
      enthusiastic value, ascending. */
  std::string heatmap_csv(const Heatmap& h);

  /*! ASCII P3 image, `block` pixels per cell side, one pixel per line. The
      top row shows the largest enthusiastic value, so the vertical axis
      points up. */
  std::string heatmap_ppm(const Heatmap& h, unsigned block = 8);

  void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace wom

#endif
