#include "sdlab/labeling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sdlab/balance.hpp"
#include "sdlab/error.hpp"
#include "sdlab/text_io.hpp"

namespace sdlab {

void BitString::append(std::uint64_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) {
    throw std::logic_error("BitString::append: value does not fit in the field");
  }
  for (std::size_t i = width; i-- > 0;) {
    bits_.push_back(((value >> i) & 1U) != 0);
  }
}

std::string BitString::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  const std::size_t bytes = (bits_.size() + 7) / 8;
  std::string out;
  out.reserve(2 * bytes);
  for (std::size_t nibble = 0; nibble < 2 * bytes; ++nibble) {
    unsigned v = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t i = nibble * 4 + k;
      v = (v << 1) | (i < bits_.size() && bits_[i] ? 1U : 0U);
    }
    out.push_back(digits[v]);
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex) {
  BitString out;
  for (char c : hex) {
    unsigned v = 0;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw DomainError(std::string("invalid hex digit '") + c + "'");
    }
    out.append(v, 4);
  }
  return out;
}

std::uint64_t BitReader::read(std::size_t width) {
  if (width > bits_.size() - std::min(pos_, bits_.size())) {
    throw DomainError("label truncated: needed " + std::to_string(width) + " bits at offset " + std::to_string(pos_));
  }
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width; ++i) {
    v = (v << 1) | (bits_[pos_++] ? 1U : 0U);
  }
  return v;
}

std::size_t LabelScheme::count_bits() const { return static_cast<std::size_t>(std::bit_width(W)); }

std::size_t label_bit_bound(const LabelScheme& s, std::size_t h) {
  return kPreambleBits + kPathLengthBits + h * s.id_bits + h * s.count_bits() + h * s.W * (s.id_bits + 1);
}

namespace {

struct OwnedEntry {
  NodeId other;
  bool blue;
};

void write_preamble(BitString& bits, const LabelScheme& s) {
  bits.append(s.n, 24);
  bits.append(s.id_bits, 8);
  bits.append(s.W, 16);
}

struct ParsedLabel {
  LabelScheme scheme;
  std::vector<NodeId> path;
  std::vector<std::vector<OwnedEntry>> owned;
  std::size_t length = 0;  // bits consumed
};

ParsedLabel parse(const AdjacencyLabel& label) {
  BitReader r(label.bits);
  ParsedLabel p;
  p.scheme.n = r.read(24);
  p.scheme.id_bits = r.read(8);
  p.scheme.W = r.read(16);
  if (p.scheme.id_bits > 32) {
    throw DomainError("label declares node ids wider than 32 bits");
  }
  const std::size_t h = r.read(kPathLengthBits);
  if (h == 0) {
    throw DomainError("label has an empty root path");
  }
  p.path.reserve(h);
  for (std::size_t i = 0; i < h; ++i) {
    p.path.push_back(static_cast<NodeId>(r.read(p.scheme.id_bits)));
  }
  p.owned.resize(h);
  const std::size_t cb = p.scheme.count_bits();
  for (std::size_t i = 0; i < h; ++i) {
    const std::size_t c = r.read(cb);
    if (c > p.scheme.W) {
      throw DomainError("label owns more pairs at one node than the scheme allows");
    }
    for (std::size_t k = 0; k < c; ++k) {
      const auto other = static_cast<NodeId>(r.read(p.scheme.id_bits));
      const bool blue = r.read(1) != 0;
      p.owned[i].push_back({other, blue});
    }
  }
  p.length = r.position();
  return p;
}

std::size_t position_in(const std::vector<NodeId>& path, NodeId x) {
  auto it = std::find(path.begin(), path.end(), x);
  return it == path.end() ? 0 : static_cast<std::size_t>(it - path.begin()) + 1;
}

} // namespace

Labeling encode(const SignedTreeModel& m) {
  auto report = validate(m);
  if (!report.ok()) {
    throw DomainError("cannot encode an invalid model: " + report.problems.front());
  }
  if (!is_clean(m)) {
    throw DomainError("cannot encode a model that is not clean");
  }
  TreeIndex index(m);
  if (index.height() >= (std::size_t{1} << kPathLengthBits)) {
    throw DomainError("tree is too deep for the label layout (height " + std::to_string(index.height()) + ")");
  }
  const std::size_t nodes = m.nodes.size();
  const std::size_t n = index.leaves().size();
  if (n >= (std::size_t{1} << 24)) {
    throw DomainError("too many vertices for the label layout");
  }

  std::vector<NodePair> pairs;
  std::vector<bool> blue;
  for (const auto& p : m.green) {
    pairs.push_back(p);
    blue.push_back(false);
  }
  for (const auto& p : m.blue) {
    pairs.push_back(p);
    blue.push_back(true);
  }
  const auto orient = orient_low_outdegree(nodes, pairs);
  std::vector<std::vector<OwnedEntry>> owned(nodes);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const NodeId o = orient.owner[i];
    owned[o].push_back({o == pairs[i].first ? pairs[i].second : pairs[i].first, blue[i]});
  }
  for (auto& list : owned) {
    std::sort(list.begin(), list.end(), [](const OwnedEntry& a, const OwnedEntry& b) { return a.other < b.other; });
  }
  if (orient.max_owned >= (std::size_t{1} << 16)) {
    throw DomainError("scheme width does not fit the label layout");
  }

  Labeling out;
  out.scheme = LabelScheme{n, static_cast<std::size_t>(std::bit_width(nodes - 1)), orient.max_owned};
  out.height = index.height();
  out.labels.resize(n);
  const std::size_t cb = out.scheme.count_bits();
  for (Vertex v = 0; v < n; ++v) {
    const auto path = index.root_path(index.leaf_of(v));
    BitString bits;
    write_preamble(bits, out.scheme);
    bits.append(path.size(), kPathLengthBits);
    for (NodeId x : path) {
      bits.append(x, out.scheme.id_bits);
    }
    for (NodeId x : path) {
      bits.append(owned[x].size(), cb);
      for (const auto& e : owned[x]) {
        bits.append(e.other, out.scheme.id_bits);
        bits.append(e.blue ? 1 : 0, 1);
      }
    }
    if (bits.size() > label_bit_bound(out.scheme, out.height)) {
      throw std::logic_error("encode: label exceeds the layout bound");
    }
    out.labels[v].bits = std::move(bits);
  }
  return out;
}

std::vector<LabelCandidate> label_candidates(const AdjacencyLabel& a, const AdjacencyLabel& b) {
  const ParsedLabel pa = parse(a);
  const ParsedLabel pb = parse(b);
  if (!(pa.scheme == pb.scheme)) {
    throw DomainError("labels come from different encodings");
  }
  if (pa.path.back() == pb.path.back()) {
    throw DomainError("cannot decode a vertex against itself");
  }
  std::vector<LabelCandidate> out;
  auto scan = [&out](const ParsedLabel& self, const ParsedLabel& other, bool self_is_a) {
    for (std::size_t i = 0; i < self.path.size(); ++i) {
      const NodeId x = self.path[i];
      if (self.owned[i].empty() || position_in(other.path, x) != 0) {
        continue;
      }
      for (const auto& e : self.owned[i]) {
        const std::size_t j = position_in(other.path, e.other);
        if (j == 0 || position_in(self.path, e.other) != 0) {
          continue;
        }
        LabelCandidate c;
        c.blue = e.blue;
        if (self_is_a) {
          c.on_a = x;
          c.on_b = e.other;
          c.depth_a = i + 1;
          c.depth_b = j;
        } else {
          c.on_a = e.other;
          c.on_b = x;
          c.depth_a = j;
          c.depth_b = i + 1;
        }
        out.push_back(c);
      }
    }
  };
  scan(pa, pb, true);
  scan(pb, pa, false);
  std::sort(out.begin(), out.end(), [](const LabelCandidate& l, const LabelCandidate& r) {
    return l.depth_a + l.depth_b < r.depth_a + r.depth_b;
  });
  return out;
}

bool decode(const AdjacencyLabel& a, const AdjacencyLabel& b) {
  const auto cands = label_candidates(a, b);
  if (cands.empty()) {
    throw DomainError("labels share no signed pair; they are corrupt or the model was not clean");
  }
  return cands.back().blue;
}

LabelPipeline label_pipeline(const Graph& g, const SddWitness& w) {
  LabelPipeline out;
  out.model = make_clean(stm_from_witness(g, w));
  out.balanced = make_clean(shallowise(out.model, w.d + 1));
  out.labeling = encode(out.balanced);
  return out;
}

Labeling label_graph(const Graph& g, const SddWitness& w) { return label_pipeline(g, w).labeling; }

LabelStats label_stats(const Labeling& labeling, std::size_t d) {
  LabelStats s;
  if (labeling.labels.empty()) {
    return s;
  }
  std::size_t total = 0;
  for (const auto& l : labeling.labels) {
    s.max_bits = std::max(s.max_bits, l.bits.size());
    total += l.bits.size();
  }
  s.mean_bits = static_cast<double>(total) / static_cast<double>(labeling.labels.size());
  const auto n = static_cast<double>(labeling.labels.size());
  if (labeling.labels.size() >= 2) {
    const double lg = std::log2(n);
    s.reference = std::sqrt(static_cast<double>(d + 1) * n) * lg * lg * lg;
    s.ratio = static_cast<double>(s.max_bits) / s.reference;
  }
  return s;
}

std::size_t count_label_mismatches(const Graph& g, const std::vector<AdjacencyLabel>& labels) {
  if (labels.size() != g.order()) {
    throw DomainError("label count " + std::to_string(labels.size()) + " does not match graph order " +
                      std::to_string(g.order()));
  }
  std::size_t bad = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      bad += decode(labels[u], labels[v]) != g.adjacent(u, v) ? 1 : 0;
    }
  }
  return bad;
}

std::string save_labels(const Labeling& labeling) {
  std::ostringstream out;
  out << "p lbl " << labeling.scheme.n << ' ' << labeling.scheme.id_bits << ' ' << labeling.scheme.W << '\n';
  for (std::size_t v = 0; v < labeling.labels.size(); ++v) {
    out << "l " << v << ' ' << labeling.labels[v].bits.to_hex() << '\n';
  }
  return out.str();
}

Labeling load_labels(std::string_view text) {
  LineReader reader(text);
  auto header = reader.next_record();
  if (!header || header->tokens.size() != 5 || header->tokens[0] != "p" || header->tokens[1] != "lbl") {
    throw DomainError("expected header 'p lbl <n> <id_bits> <W>'");
  }
  Labeling out;
  out.scheme.n = parse_count(*header, 2, reader);
  out.scheme.id_bits = parse_count(*header, 3, reader);
  out.scheme.W = parse_count(*header, 4, reader);
  out.labels.resize(out.scheme.n);
  std::vector<bool> seen(out.scheme.n, false);
  while (auto rec = reader.next_record()) {
    if (rec->tokens.size() != 3 || rec->tokens[0] != "l") {
      throw DomainError(reader.where(*rec) + "expected 'l <vertex> <hex>'");
    }
    const std::size_t v = parse_count(*rec, 1, reader);
    if (v >= out.scheme.n || seen[v]) {
      throw DomainError(reader.where(*rec) + "vertex out of range or repeated");
    }
    seen[v] = true;
    out.labels[v].bits = BitString::from_hex(rec->tokens[2]);
    const ParsedLabel p = parse(out.labels[v]);
    if (!(p.scheme == out.scheme)) {
      throw DomainError(reader.where(*rec) + "label preamble disagrees with the header");
    }
    // Everything past the parsed layout is the zero padding of the last byte.
    const auto& bits = out.labels[v].bits;
    if (bits.size() - p.length >= 8) {
      throw DomainError(reader.where(*rec) + "label has trailing data");
    }
    for (std::size_t i = p.length; i < bits.size(); ++i) {
      if (bits[i]) {
        throw DomainError(reader.where(*rec) + "label padding is not zero");
      }
    }
    out.labels[v].bits.truncate(p.length);
    out.height = std::max(out.height, p.path.size());
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw DomainError("label dump is missing vertices");
  }
  return out;
}

} // namespace sdlab
