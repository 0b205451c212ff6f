/*! \file graphml.hh
  \brief GraphML subset reader and writer.

  The writer emits one undirected graph with nodes n0..n{N-1} and edges
  sorted by (smaller, larger) endpoint. The reader accepts any GraphML
  document with a single undirected graph, ignores keys, data and foreign
  attributes, and maps node ids densely in document order.
*/

#ifndef WOM_GRAPHML_HH
#define WOM_GRAPHML_HH

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wom/graph.hh"

namespace wom {

  class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
  };

  class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  std::size_t write_graphml(const Graph& g, std::ostream& out);
  std::string to_graphml(const Graph& g);
  std::size_t write_graphml(const Graph& g, const std::filesystem::path& path);

  struct GraphmlDocument {
    Graph graph;
    std::vector<std::string> node_ids;  //!< original id of each dense node
    bool remapped = false;              //!< ids differ from n0..n{N-1}
  };

  GraphmlDocument parse_graphml(std::string_view text);
  GraphmlDocument read_graphml(std::istream& in);
  GraphmlDocument read_graphml(const std::filesystem::path& path);

} // namespace wom

#endif
