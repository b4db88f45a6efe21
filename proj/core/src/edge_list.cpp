#include <charconv>
#include <sstream>
#include <string>

#include "sdlab/error.hpp"
#include "sdlab/graph.hpp"
#include "sdlab/text_io.hpp"

namespace sdlab {

Graph load_edge_list(std::string_view text) {
  LineReader reader(text);
  auto header = reader.next_record();
  if (!header) {
    throw DomainError("edge list: missing header");
  }
  if (header->tokens.size() != 4 || header->tokens[0] != "p" || header->tokens[1] != "el") {
    throw DomainError(reader.where(*header) + "expected 'p el <n> <m>'");
  }
  const auto n = parse_count(*header, 2, reader);
  const auto m = parse_count(*header, 3, reader);

  std::vector<Edge> edges;
  edges.reserve(m);
  while (auto rec = reader.next_record()) {
    if (rec->tokens.size() != 3 || rec->tokens[0] != "e") {
      throw DomainError(reader.where(*rec) + "expected 'e <u> <v>'");
    }
    auto u = parse_count(*rec, 1, reader);
    auto v = parse_count(*rec, 2, reader);
    if (u == v) {
      throw DomainError(reader.where(*rec) + "self-loop at vertex " + std::to_string(u));
    }
    if (u >= n || v >= n) {
      throw DomainError(reader.where(*rec) + "endpoint out of range (n = " + std::to_string(n) + ")");
    }
    if (u > v) {
      throw DomainError(reader.where(*rec) + "endpoints must satisfy u < v");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.size() != m) {
    throw DomainError("edge list: header announces " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

std::string save_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p el " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) {
    out << "e " << u << ' ' << v << '\n';
  }
  return out.str();
}

} // namespace sdlab
