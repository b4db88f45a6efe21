#include <sstream>

#include "sdlab/error.hpp"
#include "sdlab/signed_tree_model.hpp"
#include "sdlab/text_io.hpp"

namespace sdlab {

std::string save_stm(const SignedTreeModel& model) {
  const SignedTreeModel m = canonicalize(model);
  std::ostringstream out;
  out << "p stm " << m.nodes.size() << ' ' << m.leaf_count();
  if (m.complete) {
    out << " complete 1";
  }
  out << '\n';
  auto field = [](std::uint32_t value, std::uint32_t none) {
    return value == none ? std::string("-1") : std::to_string(value);
  };
  for (NodeId x = 0; x < m.nodes.size(); ++x) {
    const auto& t = m.nodes[x];
    out << "t " << x << ' ' << field(t.parent, kNoNode) << ' ' << field(t.vertex, kNoVertex) << '\n';
  }
  for (const auto& p : m.green) {
    out << "g " << p.first << ' ' << p.second << '\n';
  }
  for (const auto& p : m.blue) {
    out << "b " << p.first << ' ' << p.second << '\n';
  }
  return out.str();
}

SignedTreeModel load_stm(std::string_view text) {
  LineReader reader(text);
  auto header = reader.next_record();
  if (!header || header->tokens.size() < 4 || header->tokens[0] != "p" || header->tokens[1] != "stm") {
    throw DomainError("expected header 'p stm <nodes> <leaves>'");
  }
  const std::size_t n = parse_count(*header, 2, reader);
  const std::size_t leaves = parse_count(*header, 3, reader);
  SignedTreeModel m;
  if (header->tokens.size() == 6 && header->tokens[4] == "complete") {
    m.complete = parse_int(*header, 5, reader) != 0;
  } else if (header->tokens.size() != 4) {
    throw DomainError(reader.where(*header) + "unexpected header fields");
  }
  if (n == 0 || n >= kNoNode) {
    throw DomainError("node count out of range");
  }
  m.nodes.resize(n);
  std::vector<bool> seen(n, false);
  std::size_t declared = 0;
  auto parse_node = [&](const LineReader::Record& rec, std::size_t i) {
    const std::size_t x = parse_count(rec, i, reader);
    if (x >= n) {
      throw DomainError(reader.where(rec) + "node id out of range");
    }
    return static_cast<NodeId>(x);
  };
  while (auto rec = reader.next_record()) {
    const auto kind = rec->tokens[0];
    if (rec->tokens.size() != 4 && kind == "t") {
      throw DomainError(reader.where(*rec) + "expected 't <node> <parent> <vertex>'");
    }
    if (kind == "t") {
      const NodeId x = parse_node(*rec, 1);
      if (seen[x]) {
        throw DomainError(reader.where(*rec) + "node listed twice");
      }
      seen[x] = true;
      ++declared;
      const auto parent = parse_int(*rec, 2, reader);
      const auto vertex = parse_int(*rec, 3, reader);
      if (parent < -1 || parent >= static_cast<std::int64_t>(n) || parent == x) {
        throw DomainError(reader.where(*rec) + "parent out of range");
      }
      if (vertex < -1 || vertex >= static_cast<std::int64_t>(kNoVertex)) {
        throw DomainError(reader.where(*rec) + "vertex out of range");
      }
      m.nodes[x].parent = parent < 0 ? kNoNode : static_cast<NodeId>(parent);
      m.nodes[x].vertex = vertex < 0 ? kNoVertex : static_cast<Vertex>(vertex);
    } else if (kind == "g" || kind == "b") {
      if (rec->tokens.size() != 3) {
        throw DomainError(reader.where(*rec) + "expected '" + std::string(kind) + " <a> <b>'");
      }
      const NodeId a = parse_node(*rec, 1);
      const NodeId b = parse_node(*rec, 2);
      if (a == b) {
        throw DomainError(reader.where(*rec) + "signed pair joins a node to itself");
      }
      auto& set = kind == "g" ? m.green : m.blue;
      if (!set.insert(NodePair::of(a, b)).second) {
        throw DomainError(reader.where(*rec) + "duplicate signed pair");
      }
    } else {
      throw DomainError(reader.where(*rec) + "unknown record '" + std::string(kind) + "'");
    }
  }
  if (declared != n) {
    throw DomainError("expected " + std::to_string(n) + " node records, found " + std::to_string(declared));
  }
  // Children in increasing id order: the first becomes the left child.
  for (NodeId x = 0; x < n; ++x) {
    const NodeId p = m.nodes[x].parent;
    if (p == kNoNode) {
      continue;
    }
    auto& t = m.nodes[p];
    if (t.left == kNoNode) {
      t.left = x;
    } else if (t.right == kNoNode) {
      t.right = x;
    } else {
      throw DomainError("node " + std::to_string(p) + " has more than two children");
    }
  }
  if (m.leaf_count() != leaves) {
    throw DomainError("header declares " + std::to_string(leaves) + " leaves, tree has " +
                      std::to_string(m.leaf_count()));
  }
  return m;
}

} // namespace sdlab
