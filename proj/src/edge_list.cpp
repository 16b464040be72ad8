#include "zforce/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "zforce/errors.hpp"

namespace zforce {
namespace {

bool parse_id(std::string_view text, std::uint64_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

[[noreturn]] void bad_line(std::size_t line_no, std::string_view line) {
  throw IoError("edge list line " + std::to_string(line_no) + ": cannot parse '" +
                std::string(line) + "'");
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint64_t declared = 0;
  bool have_declared = false;
  bool seen_content = false;
  std::uint64_t max_id_plus_one = 0;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::string_view view(line);
    auto space = view.find(' ');
    if (space == std::string_view::npos) bad_line(line_no, line);
    std::string_view first = view.substr(0, space);
    std::string_view second = view.substr(space + 1);

    if (first == "N") {
      if (seen_content || !parse_id(second, declared)) bad_line(line_no, line);
      if (declared > kMaxVertices) throw IoError("declared vertex count too large");
      have_declared = true;
      seen_content = true;
      continue;
    }
    seen_content = true;
    std::uint64_t u = 0, v = 0;
    if (!parse_id(first, u) || !parse_id(second, v)) bad_line(line_no, line);
    if (u >= kMaxVertices || v >= kMaxVertices) bad_line(line_no, line);
    if (u == v) throw IoError("edge list line " + std::to_string(line_no) + ": self-loop");
    max_id_plus_one = std::max({max_id_plus_one, u + 1, v + 1});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (in.bad()) throw IoError("failed while reading edge list");

  std::uint64_t n = max_id_plus_one;
  if (have_declared) {
    if (declared < max_id_plus_one) throw IoError("edge list references ids beyond declared N");
    n = declared;
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "N " << g.capacity() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_edge_list(out, g);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace zforce
