#include "chib/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace chib {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

} // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "dimacs" || name == "col") return GraphFormat::dimacs;
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  throw InvalidParameter("unknown graph format: " + std::string(name));
}

GraphFormat format_from_path(const std::filesystem::path &path) {
  const auto ext = path.extension().string();
  if (ext == ".col" || ext == ".dimacs") return GraphFormat::dimacs;
  if (ext == ".g6" || ext == ".graph6") return GraphFormat::graph6;
  throw InvalidParameter("cannot infer graph format from '" + path.string() +
                         "'; pass a format explicitly");
}

std::string to_graph6(const Graph &g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift : {12, 6, 0})
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift : {30, 24, 18, 12, 6, 0})
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = bits = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view line, std::size_t line_no) {
  const std::size_t header_len =
      line.starts_with(kGraph6Header) ? kGraph6Header.size() : 0;
  line.remove_prefix(header_len);
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size())
      throw ParseError("graph6 string truncated", line_no, header_len + pos + 1);
    const int c = static_cast<unsigned char>(line[pos]);
    if (c < kBias || c > 126)
      throw ParseError("byte outside the graph6 range 63..126", line_no,
                       header_len + pos + 1);
    ++pos;
    return c - kBias;
  };
  std::size_t n = 0;
  int first = next();
  if (first < 63) {
    n = static_cast<std::size_t>(first);
  } else {
    int width = 3;
    if (pos < line.size() && line[pos] == 126) {
      ++pos;
      width = 6;
    }
    for (int k = 0; k < width; ++k) n = (n << 6) | static_cast<std::size_t>(next());
  }
  Graph g(n);
  int chunk = 0;
  int left = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (left == 0) {
        chunk = next();
        left = 6;
      }
      --left;
      if (chunk >> left & 1)
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (left && (chunk & ((1 << left) - 1)))
    throw ParseError("nonzero graph6 padding bits", line_no, pos);
  if (pos != line.size())
    throw ParseError("trailing bytes after graph6 string", line_no, pos + 1);
  return g;
}

std::string to_dimacs(const Graph &g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges())
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

namespace {

struct Tokenizer {
  std::string_view line;
  std::size_t line_no;
  std::size_t pos = 0;

  bool at_end() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    return pos >= line.size();
  }
  std::string_view word() {
    at_end();
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    return line.substr(start, pos - start);
  }
  long long number(const char *what) {
    if (at_end()) throw ParseError(std::string("missing ") + what, line_no, pos + 1);
    const std::size_t start = pos;
    auto tok = word();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
      throw ParseError(std::string("invalid ") + what + " '" + std::string(tok) + "'",
                       line_no, start + 1);
    return value;
  }
};

} // namespace

Graph from_dimacs(std::string_view text) {
  Graph g;
  bool have_header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    Tokenizer tok{line, line_no};
    if (tok.at_end()) continue;
    const std::size_t kind_col = tok.pos + 1;
    const auto kind = tok.word();
    if (kind == "c") continue;
    if (kind == "p") {
      if (have_header) throw ParseError("duplicate problem line", line_no, kind_col);
      const auto fmt = tok.word();
      if (fmt != "edge" && fmt != "col")
        throw ParseError("expected 'p edge n m'", line_no, kind_col);
      const auto n = tok.number("vertex count");
      tok.number("edge count");
      g = Graph(static_cast<std::size_t>(n));
      have_header = true;
    } else if (kind == "e") {
      if (!have_header)
        throw ParseError("edge line before problem line", line_no, kind_col);
      const std::size_t ucol = tok.pos + 1;
      const auto u = tok.number("edge endpoint");
      const auto v = tok.number("edge endpoint");
      const auto n = static_cast<long long>(g.order());
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError("vertex id out of range 1.." + std::to_string(n), line_no,
                         ucol);
      if (u == v) throw ParseError("self-loop", line_no, ucol);
      g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError("unknown line type '" + std::string(kind) + "'", line_no,
                       kind_col);
    }
    if (!tok.at_end()) throw ParseError("unexpected trailing token", line_no, tok.pos + 1);
  }
  if (!have_header) throw ParseError("missing problem line", line_no + 1, 0);
  return g;
}

Graph read_graph(const std::filesystem::path &path, GraphFormat format) {
  const std::string text = read_file(path);
  if (format == GraphFormat::dimacs) return from_dimacs(text);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    return from_graph6(line, line_no);
  }
  throw ParseError("no graph6 line in file", line_no, 0);
}

void write_graph(const Graph &g, const std::filesystem::path &path,
                 GraphFormat format) {
  write_file(path, format == GraphFormat::dimacs ? to_dimacs(g) : to_graph6(g) + "\n");
}

void write_graph6_corpus(const std::filesystem::path &path,
                         const std::vector<std::string> &header,
                         const std::vector<Graph> &graphs) {
  std::string text;
  for (const auto &h : header) text += "# " + h + "\n";
  for (const auto &g : graphs) text += to_graph6(g) + "\n";
  write_file(path, text);
}

std::vector<Graph> read_graph6_corpus(const std::filesystem::path &path) {
  const std::string text = read_file(path);
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    out.push_back(from_graph6(line, line_no));
  }
  return out;
}

std::string to_coloring_text(const Coloring &c) {
  std::string out;
  for (std::size_t v = 0; v < c.colors.size(); ++v)
    out += std::to_string(v) + " " + std::to_string(c.colors[v]) + "\n";
  return out;
}

Coloring parse_coloring(std::string_view text, std::size_t order) {
  Coloring c{std::vector<int>(order, -1)};
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream toks(line);
    long long v = 0, color = 0;
    if (!(toks >> v)) {
      toks.clear();
      std::string rest;
      if (toks >> rest) throw ParseError("expected 'vertex color'", line_no, 0);
      continue;
    }
    std::string extra;
    if (!(toks >> color) || color < 0) throw ParseError("expected a color index", line_no, 0);
    if (toks >> extra) throw ParseError("unexpected trailing token", line_no, 0);
    if (v < 0 || static_cast<std::size_t>(v) >= order)
      throw ParseError("vertex " + std::to_string(v) + " out of range", line_no, 0);
    if (c.colors[v] >= 0)
      throw ParseError("vertex " + std::to_string(v) + " colored twice", line_no, 0);
    c.colors[v] = static_cast<int>(color);
  }
  return c;
}

} // namespace chib
