/*! \file report.cc
  \brief CSV tables and heatmap rendering.
*/

#include "wom/report.hh"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

namespace wom {

  std::string fixed6(double x)
  {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
  }

  namespace {

    std::string shortest(double x)
    {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%g", x);
      return buf;
    }

    std::size_t put(std::ostream& out, const std::string& line)
    {
      out << line << '\n';
      if (!out) throw IoError("write failed");
      return line.size() + 1;
    }

    std::vector<std::string_view> split(std::string_view line)
    {
      std::vector<std::string_view> cells;
      std::size_t start = 0;
      for (;;) {
        const std::size_t comma = line.find(',', start);
        cells.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      return cells;
    }

    class Fields {
    public:
      Fields(std::string_view line, std::size_t lineno, std::size_t expected)
        : cells_(split(line)), line_(lineno)
      {
        if (cells_.size() != expected)
          throw ParseError(line_, "expected " + std::to_string(expected) + " fields, got " +
                                    std::to_string(cells_.size()));
      }

      std::string text(std::size_t i) const { return std::string(cells_[i]); }

      double real(std::size_t i) const
      {
        double v = 0;
        auto [p, ec] = std::from_chars(cells_[i].data(), cells_[i].data() + cells_[i].size(), v);
        if (ec != std::errc() || p != cells_[i].data() + cells_[i].size())
          throw ParseError(line_, "bad number \"" + text(i) + "\"");
        return v;
      }

      std::uint64_t integer(std::size_t i) const
      {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(cells_[i].data(), cells_[i].data() + cells_[i].size(), v);
        if (ec != std::errc() || p != cells_[i].data() + cells_[i].size())
          throw ParseError(line_, "bad integer \"" + text(i) + "\"");
        return v;
      }

      bool is_na(std::size_t i) const { return cells_[i] == "NA"; }

    private:
      std::vector<std::string_view> cells_;
      std::size_t line_;
    };

    //! Reads a header-checked table, calling row(fields) for each data line.
    template <typename RowFn>
    void read_table(std::istream& in, std::string_view header, RowFn row)
    {
      std::string line;
      std::size_t lineno = 1;
      if (!std::getline(in, line)) throw ParseError(1, "missing header");
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line != header) throw ParseError(1, "unexpected header");
      const std::size_t width = split(header).size();
      while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        row(Fields(line, lineno, width));
      }
    }

  } // namespace

  std::string metrics_row(const GraphMetrics& m)
  {
    std::string s = std::to_string(m.node_count) + "," + std::to_string(m.edge_count) + "," +
                    fixed6(m.density) + ",";
    s += m.avg_path_length ? fixed6(*m.avg_path_length) : "NA";
    s += "," + fixed6(m.global_clustering) + ",";
    s += m.diameter ? std::to_string(*m.diameter) : "NA";
    s += m.connected ? ",true" : ",false";
    return s;
  }

  std::string record_row(const RunRecord& r)
  {
    const GraphMetrics& m = r.metrics;
    std::string s = r.network_model + "," + std::to_string(r.network_seed) + "," +
                    std::to_string(r.sim_seed) + "," + fixed6(r.k) + "," + fixed6(r.curious) +
                    "," + fixed6(r.enthusiastic) + "," + fixed6(r.supporters) + "," +
                    fixed6(r.final_aware) + "," + fixed6(r.final_both) + "," +
                    std::to_string(r.rounds) + "," + (r.hit_max_rounds ? "1" : "0") + "," +
                    std::to_string(m.node_count) + "," + std::to_string(m.edge_count) + "," +
                    fixed6(m.density) + ",";
    s += m.avg_path_length ? fixed6(*m.avg_path_length) : "NA";
    s += "," + fixed6(m.global_clustering) + ",";
    s += m.diameter ? std::to_string(*m.diameter) : "NA";
    return s;
  }

  std::string summary_row(const CellSummary& c)
  {
    return c.network_model + "," + fixed6(c.k) + "," + fixed6(c.supporters) + "," +
           fixed6(c.curious) + "," + fixed6(c.enthusiastic) + "," + fixed6(c.mean_final_both) +
           "," + fixed6(c.sd_final_both) + "," + fixed6(c.mean_final_aware) + "," +
           fixed6(c.mean_rounds) + "," + std::to_string(c.n);
  }

  std::size_t write_records_csv(std::span<const RunRecord> records, std::ostream& out)
  {
    std::size_t bytes = put(out, std::string(kRecordsHeader));
    for (const auto& r : records) bytes += put(out, record_row(r));
    return bytes;
  }

  std::size_t write_summaries_csv(std::span<const CellSummary> summaries, std::ostream& out)
  {
    std::size_t bytes = put(out, std::string(kSummariesHeader));
    for (const auto& s : summaries) bytes += put(out, summary_row(s));
    return bytes;
  }

  std::vector<RunRecord> read_records_csv(std::istream& in)
  {
    std::vector<RunRecord> out;
    read_table(in, kRecordsHeader, [&](const Fields& f) {
      RunRecord r;
      r.network_model = f.text(0);
      r.network_seed = f.integer(1);
      r.sim_seed = f.integer(2);
      r.k = f.real(3);
      r.curious = f.real(4);
      r.enthusiastic = f.real(5);
      r.supporters = f.real(6);
      r.final_aware = f.real(7);
      r.final_both = f.real(8);
      r.rounds = static_cast<std::uint32_t>(f.integer(9));
      r.hit_max_rounds = f.integer(10) != 0;
      r.metrics.node_count = f.integer(11);
      r.metrics.edge_count = f.integer(12);
      r.metrics.density = f.real(13);
      if (!f.is_na(14)) r.metrics.avg_path_length = f.real(14);
      r.metrics.global_clustering = f.real(15);
      if (!f.is_na(16)) r.metrics.diameter = static_cast<std::uint32_t>(f.integer(16));
      r.metrics.connected = r.metrics.avg_path_length.has_value();
      out.push_back(std::move(r));
    });
    return out;
  }

  std::vector<CellSummary> read_summaries_csv(std::istream& in)
  {
    std::vector<CellSummary> out;
    read_table(in, kSummariesHeader, [&](const Fields& f) {
      CellSummary c;
      c.network_model = f.text(0);
      c.k = f.real(1);
      c.supporters = f.real(2);
      c.curious = f.real(3);
      c.enthusiastic = f.real(4);
      c.mean_final_both = f.real(5);
      c.sd_final_both = f.real(6);
      c.mean_final_aware = f.real(7);
      c.mean_rounds = f.real(8);
      c.n = f.integer(9);
      out.push_back(std::move(c));
    });
    return out;
  }

  namespace {

    std::string panel_id(const std::string& model, double k, double s)
    {
      return model + "|" + fixed6(k) + "|" + fixed6(s);
    }

  } // namespace

  std::vector<PanelKey> panels(std::span<const CellSummary> summaries)
  {
    std::vector<PanelKey> out;
    std::set<std::string> seen;
    for (const auto& c : summaries)
      if (seen.insert(panel_id(c.network_model, c.k, c.supporters)).second)
        out.push_back({c.network_model, c.k, c.supporters});
    return out;
  }

  std::string panel_basename(const PanelKey& key)
  {
    return "heatmap_" + key.network_model + "_k" + shortest(key.k) + "_s" + shortest(key.supporters);
  }

  Heatmap build_heatmap(std::span<const CellSummary> summaries, const PanelKey& key)
  {
    const std::string id = panel_id(key.network_model, key.k, key.supporters);
    // keyed by the 6-decimal text, ordered by value
    std::map<double, std::string> cur_axis, enth_axis;
    std::map<std::pair<std::string, std::string>, double> cells;
    for (const auto& c : summaries) {
      if (panel_id(c.network_model, c.k, c.supporters) != id) continue;
      const std::string cx = fixed6(c.curious), ey = fixed6(c.enthusiastic);
      cur_axis.emplace(std::stod(cx), cx);
      enth_axis.emplace(std::stod(ey), ey);
      if (!(c.mean_final_both >= 0.0 && c.mean_final_both <= 1.0))
        throw HeatmapError("value outside [0,1] at curious=" + cx + " enthusiastic=" + ey);
      if (!cells.emplace(std::make_pair(cx, ey), c.mean_final_both).second)
        throw HeatmapError("duplicate cell curious=" + cx + " enthusiastic=" + ey);
    }
    if (cells.empty()) throw HeatmapError("no cells for panel " + panel_basename(key));

    Heatmap h;
    h.key = key;
    std::string holes;
    for (const auto& [ev, et] : enth_axis) {
      h.enthusiastic.push_back(ev);
      for (const auto& [cv, ct] : cur_axis) {
        auto it = cells.find({ct, et});
        if (it == cells.end()) {
          holes += " (curious=" + ct + ", enthusiastic=" + et + ")";
          h.values.push_back(0.0);
        } else {
          h.values.push_back(it->second);
        }
      }
    }
    for (const auto& [cv, ct] : cur_axis) h.curious.push_back(cv);
    if (!holes.empty())
      throw HeatmapError("panel " + panel_basename(key) + " is missing cells:" + holes);
    return h;
  }

  std::array<std::uint8_t, 3> heat_color(double v)
  {
    v = std::clamp(v, 0.0, 1.0);
    auto q = [](double x) { return static_cast<std::uint8_t>(std::floor(x + 0.5)); };
    return {q(255.0 * v), q(255.0 * v), q(64.0 + 191.0 * v)};
  }

  std::string heatmap_csv(const Heatmap& h)
  {
    std::string out = "enthusiastic\\curious";
    for (double c : h.curious) out += "," + fixed6(c);
    out += '\n';
    for (std::size_t row = 0; row < h.enthusiastic.size(); ++row) {
      out += fixed6(h.enthusiastic[row]);
      for (std::size_t col = 0; col < h.curious.size(); ++col) out += "," + fixed6(h.at(row, col));
      out += '\n';
    }
    return out;
  }

  std::string heatmap_ppm(const Heatmap& h, unsigned block)
  {
    if (block < 1) throw HeatmapError("block size must be positive");
    const std::size_t width = h.curious.size() * block;
    const std::size_t height = h.enthusiastic.size() * block;
    std::string out = "P3\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    out.reserve(out.size() + width * height * 12);
    for (std::size_t y = 0; y < height; ++y) {
      const std::size_t row = h.enthusiastic.size() - 1 - y / block;
      for (std::size_t x = 0; x < width; ++x) {
        auto rgb = heat_color(h.at(row, x / block));
        out += std::to_string(rgb[0]) + " " + std::to_string(rgb[1]) + " " +
               std::to_string(rgb[2]) + "\n";
      }
    }
    return out;
  }

  void write_text_file(const std::filesystem::path& path, std::string_view text)
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("failed writing " + path.string());
  }

} // namespace wom
