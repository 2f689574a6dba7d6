#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "chib/graph.hpp"

namespace chib {

enum class GraphFormat { dimacs, graph6 };

/// ".col"/".dimacs" select DIMACS, ".g6"/".graph6" select graph6.
GraphFormat format_from_path(const std::filesystem::path &path);
GraphFormat parse_format(std::string_view name);

/// Standard graph6 line without the trailing newline.
std::string to_graph6(const Graph &g);
/// Decodes one graph6 line. `line_no` is used for error positions.
Graph from_graph6(std::string_view line, std::size_t line_no = 1);

/// Canonical DIMACS text: "p edge n m", then "e u v" (1-based, u < v) in
/// lexicographic order. Reading ignores "c" lines and accepts "p col".
std::string to_dimacs(const Graph &g);
Graph from_dimacs(std::string_view text);

Graph read_graph(const std::filesystem::path &path, GraphFormat format);
inline Graph read_graph(const std::filesystem::path &path) {
  return read_graph(path, format_from_path(path));
}
void write_graph(const Graph &g, const std::filesystem::path &path,
                 GraphFormat format);
inline void write_graph(const Graph &g, const std::filesystem::path &path) {
  write_graph(g, path, format_from_path(path));
}

/// Sample corpus: "# " header lines, then one graph6 string per line.
void write_graph6_corpus(const std::filesystem::path &path,
                         const std::vector<std::string> &header,
                         const std::vector<Graph> &graphs);
std::vector<Graph> read_graph6_corpus(const std::filesystem::path &path);

/// Coloring files: one "vertex color" pair per line (0-based), '#' starts a
/// comment. Vertices missing from the file stay at -1.
std::string to_coloring_text(const Coloring &c);
Coloring parse_coloring(std::string_view text, std::size_t order);

} // namespace chib
