#include "binedge/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "binedge/errors.hpp"

namespace binedge {

SimpleGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<SimpleGraph> graph;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long> numbers;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        const long v = std::stol(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        numbers.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
      }
    }
    if (numbers.empty()) continue;
    try {
      if (!graph) {
        if (numbers.size() != 1)
          throw ParseError("line " + std::to_string(line_no) + ": expected the vertex count");
        graph.emplace(static_cast<int>(numbers[0]));
      } else {
        if (numbers.size() != 2)
          throw ParseError("line " + std::to_string(line_no) + ": expected an edge 'i j'");
        graph->add_edge(static_cast<Vertex>(numbers[0]), static_cast<Vertex>(numbers[1]));
      }
    } catch (const InvalidArgument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!graph) throw ParseError("graph text has no vertex count");
  return *graph;
}

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
  return out.str();
}

}  // namespace binedge
