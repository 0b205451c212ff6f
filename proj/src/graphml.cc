/*! \file graphml.cc
  \brief GraphML serialization with a small line-tracking XML scanner.
*/

#include "wom/graphml.hh"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace wom {

  std::string to_graphml(const Graph& g)
  {
    std::string out;
    out.reserve(128 + g.node_count() * 20 + g.edge_count() * 40);
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    out += "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      out += "    <node id=\"n";
      out += std::to_string(i);
      out += "\"/>\n";
    }
    for (auto [u, v] : g.edges()) {
      out += "    <edge source=\"n";
      out += std::to_string(u);
      out += "\" target=\"n";
      out += std::to_string(v);
      out += "\"/>\n";
    }
    out += "  </graph>\n";
    out += "</graphml>\n";
    return out;
  }

  std::size_t write_graphml(const Graph& g, std::ostream& out)
  {
    const std::string doc = to_graphml(g);
    out.write(doc.data(), static_cast<std::streamsize>(doc.size()));
    if (!out) throw IoError("failed to write GraphML");
    return doc.size();
  }

  std::size_t write_graphml(const Graph& g, const std::filesystem::path& path)
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return write_graphml(g, out);
  }

  namespace {

    struct Tag {
      enum class Kind { Open, Close, Empty } kind;
      std::string name;  // local name, namespace prefix stripped
      std::vector<std::pair<std::string, std::string>> attrs;
      std::size_t line;

      const std::string* attr(std::string_view key) const
      {
        for (const auto& [k, v] : attrs)
          if (k == key) return &v;
        return nullptr;
      }
    };

    class Scanner {
    public:
      explicit Scanner(std::string_view text) : s_(text) {}

      //! Next tag; text, comments, declarations and CDATA are skipped.
      std::optional<Tag> next()
      {
        while (pos_ < s_.size()) {
          if (s_[pos_] != '<') {
            text_seen_ |= !is_space(s_[pos_]);
            advance(1);
            continue;
          }
          if (starts("<!--")) {
            skip_past("-->", "unterminated comment");
          } else if (starts("<![CDATA[")) {
            text_seen_ = true;
            skip_past("]]>", "unterminated CDATA section");
          } else if (starts("<?")) {
            skip_past("?>", "unterminated processing instruction");
          } else if (starts("<!")) {
            skip_past(">", "unterminated declaration");
          } else {
            return tag();
          }
        }
        return std::nullopt;
      }

      std::size_t line() const { return line_; }

      //! Whether non-blank character data appeared since the last call.
      bool take_text()
      {
        bool t = text_seen_;
        text_seen_ = false;
        return t;
      }

    private:
      static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
      static bool is_name(char c)
      {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
               c == ':' || static_cast<unsigned char>(c) >= 0x80;
      }

      bool starts(std::string_view p) const { return s_.substr(pos_, p.size()) == p; }

      void advance(std::size_t n)
      {
        for (std::size_t i = 0; i < n && pos_ < s_.size(); ++i)
          if (s_[pos_++] == '\n') ++line_;
      }

      void skip_past(std::string_view end, const char* err)
      {
        const std::size_t at = s_.find(end, pos_);
        if (at == std::string_view::npos) throw ParseError(line_, err);
        advance(at + end.size() - pos_);
      }

      void skip_space()
      {
        while (pos_ < s_.size() && is_space(s_[pos_])) advance(1);
      }

      std::string name()
      {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && is_name(s_[pos_])) ++pos_;
        if (pos_ == start) throw ParseError(line_, "expected a name");
        return std::string(s_.substr(start, pos_ - start));
      }

      static std::string local(std::string qname)
      {
        auto colon = qname.rfind(':');
        return colon == std::string::npos ? qname : qname.substr(colon + 1);
      }

      std::string decode(std::string_view raw, std::size_t line)
      {
        std::string out;
        for (std::size_t i = 0; i < raw.size(); ++i) {
          if (raw[i] == '<') throw ParseError(line, "'<' in attribute value");
          if (raw[i] != '&') {
            out += raw[i];
            continue;
          }
          const std::size_t semi = raw.find(';', i);
          if (semi == std::string_view::npos) throw ParseError(line, "unterminated entity");
          std::string_view ent = raw.substr(i + 1, semi - i - 1);
          if (ent == "amp") out += '&';
          else if (ent == "lt") out += '<';
          else if (ent == "gt") out += '>';
          else if (ent == "quot") out += '"';
          else if (ent == "apos") out += '\'';
          else if (!ent.empty() && ent[0] == '#') {
            unsigned long cp = 0;
            try {
              cp = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')
                     ? std::stoul(std::string(ent.substr(2)), nullptr, 16)
                     : std::stoul(std::string(ent.substr(1)));
            } catch (const std::exception&) {
              throw ParseError(line, "bad character reference &" + std::string(ent) + ";");
            }
            append_utf8(out, cp);
          } else {
            throw ParseError(line, "unknown entity &" + std::string(ent) + ";");
          }
          i = semi;
        }
        return out;
      }

      static void append_utf8(std::string& out, unsigned long cp)
      {
        if (cp < 0x80) {
          out += static_cast<char>(cp);
        } else if (cp < 0x800) {
          out += static_cast<char>(0xc0 | (cp >> 6));
          out += static_cast<char>(0x80 | (cp & 0x3f));
        } else if (cp < 0x10000) {
          out += static_cast<char>(0xe0 | (cp >> 12));
          out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
          out += static_cast<char>(0x80 | (cp & 0x3f));
        } else {
          out += static_cast<char>(0xf0 | (cp >> 18));
          out += static_cast<char>(0x80 | ((cp >> 12) & 0x3f));
          out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
          out += static_cast<char>(0x80 | (cp & 0x3f));
        }
      }

      Tag tag()
      {
        Tag t{Tag::Kind::Open, {}, {}, line_};
        advance(1);  // '<'
        if (pos_ < s_.size() && s_[pos_] == '/') {
          advance(1);
          t.kind = Tag::Kind::Close;
          t.name = local(name());
          skip_space();
          if (pos_ >= s_.size() || s_[pos_] != '>') throw ParseError(line_, "malformed closing tag");
          advance(1);
          return t;
        }
        t.name = local(name());
        for (;;) {
          skip_space();
          if (pos_ >= s_.size()) throw ParseError(t.line, "unterminated tag <" + t.name + ">");
          if (s_[pos_] == '>') {
            advance(1);
            return t;
          }
          if (starts("/>")) {
            advance(2);
            t.kind = Tag::Kind::Empty;
            return t;
          }
          std::string key = name();
          skip_space();
          if (pos_ >= s_.size() || s_[pos_] != '=')
            throw ParseError(line_, "attribute " + key + " has no value");
          advance(1);
          skip_space();
          if (pos_ >= s_.size() || (s_[pos_] != '"' && s_[pos_] != '\''))
            throw ParseError(line_, "attribute " + key + " value is not quoted");
          const char quote = s_[pos_];
          const std::size_t vline = line_;
          advance(1);
          const std::size_t end = s_.find(quote, pos_);
          if (end == std::string_view::npos) throw ParseError(vline, "unterminated attribute value");
          std::string value = decode(s_.substr(pos_, end - pos_), vline);
          advance(end + 1 - pos_);
          for (const auto& [k, v] : t.attrs)
            if (k == key) throw ParseError(vline, "duplicate attribute " + key);
          t.attrs.emplace_back(std::move(key), std::move(value));
        }
      }

      std::string_view s_;
      std::size_t pos_ = 0;
      std::size_t line_ = 1;
      bool text_seen_ = false;
    };

    struct PendingEdge {
      std::string source, target;
      std::size_t line;
    };

  } // namespace

  GraphmlDocument parse_graphml(std::string_view text)
  {
    Scanner sc(text);
    std::vector<std::string> stack;
    bool seen_root = false;
    bool seen_graph = false;
    std::size_t graph_depth = 0;  // stack depth of the open <graph>, 0 when closed

    GraphmlDocument doc;
    std::unordered_map<std::string, NodeId> index;
    std::vector<PendingEdge> pending;

    while (auto t = sc.next()) {
      if (sc.take_text() && stack.empty())
        throw ParseError(t->line, "character data outside the root element");
      if (t->kind == Tag::Kind::Close) {
        if (stack.empty() || stack.back() != t->name)
          throw ParseError(t->line, "unexpected closing tag </" + t->name + ">");
        if (graph_depth == stack.size()) graph_depth = 0;
        stack.pop_back();
        continue;
      }

      if (stack.empty()) {
        if (seen_root) throw ParseError(t->line, "more than one root element");
        if (t->name != "graphml") throw ParseError(t->line, "root element is not <graphml>");
        seen_root = true;
      } else if (t->name == "graph") {
        if (graph_depth != 0) throw ParseError(t->line, "nested graphs are not supported");
        if (seen_graph) throw ParseError(t->line, "more than one <graph> element");
        if (stack.size() != 1) throw ParseError(t->line, "<graph> must be a child of <graphml>");
        const std::string* dir = t->attr("edgedefault");
        if (dir && *dir == "directed") throw ParseError(t->line, "directed graphs are not supported");
        if (dir && *dir != "undirected")
          throw ParseError(t->line, "invalid edgedefault \"" + *dir + "\"");
        seen_graph = true;
      } else if (graph_depth != 0 && stack.size() == graph_depth) {
        if (t->name == "node") {
          const std::string* id = t->attr("id");
          if (!id) throw ParseError(t->line, "<node> without id");
          auto [it, fresh] = index.try_emplace(*id, static_cast<NodeId>(doc.node_ids.size()));
          if (!fresh) throw ParseError(t->line, "duplicate node id \"" + *id + "\"");
          doc.node_ids.push_back(*id);
        } else if (t->name == "edge") {
          const std::string* src = t->attr("source");
          const std::string* dst = t->attr("target");
          if (!src || !dst) throw ParseError(t->line, "<edge> needs source and target");
          if (const std::string* d = t->attr("directed"); d && *d == "true")
            throw ParseError(t->line, "directed edges are not supported");
          pending.push_back({*src, *dst, t->line});
        } else if (t->name == "hyperedge") {
          throw ParseError(t->line, "hyperedges are not supported");
        }
      }

      if (t->kind == Tag::Kind::Open) {
        stack.push_back(t->name);
        if (t->name == "graph" && graph_depth == 0 && stack.size() == 2) graph_depth = stack.size();
      }
    }
    if (!stack.empty()) throw ParseError(sc.line(), "unclosed element <" + stack.back() + ">");
    if (!seen_root) throw ParseError(sc.line(), "empty document");
    if (!seen_graph) throw ParseError(sc.line(), "no <graph> element");

    std::vector<Edge> edges;
    edges.reserve(pending.size());
    for (const auto& e : pending) {
      auto s = index.find(e.source);
      auto d = index.find(e.target);
      if (s == index.end()) throw ParseError(e.line, "edge source \"" + e.source + "\" is not a node");
      if (d == index.end()) throw ParseError(e.line, "edge target \"" + e.target + "\" is not a node");
      if (s->second == d->second) throw ParseError(e.line, "self-loop on \"" + e.source + "\"");
      edges.emplace_back(s->second, d->second);
    }
    doc.graph = Graph::from_edges(doc.node_ids.size(), edges);
    for (std::size_t i = 0; i < doc.node_ids.size() && !doc.remapped; ++i)
      doc.remapped = doc.node_ids[i] != "n" + std::to_string(i);
    return doc;
  }

  GraphmlDocument read_graphml(std::istream& in)
  {
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed to read GraphML");
    return parse_graphml(buf.str());
  }

  GraphmlDocument read_graphml(const std::filesystem::path& path)
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return read_graphml(in);
  }

} // namespace wom
