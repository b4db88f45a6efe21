#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdlab/graph.hpp"
#include "sdlab/signed_tree_model.hpp"
#include "sdlab/twin_metrics.hpp"

namespace sdlab {

// Append-only bit string; bits are stored most significant first.
class BitString {
public:
  void append(std::uint64_t value, std::size_t width);
  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  // Hex digits, most significant first, zero-padded to a whole number of bytes.
  std::string to_hex() const;
  static BitString from_hex(std::string_view hex);
  void truncate(std::size_t bits) { bits_.resize(std::min(bits, bits_.size())); }

  friend bool operator==(const BitString&, const BitString&) = default;

private:
  std::vector<bool> bits_;
};

// Sequential reader that throws DomainError on reading past the end.
class BitReader {
public:
  explicit BitReader(const BitString& bits) : bits_(bits) {}
  std::uint64_t read(std::size_t width);
  std::size_t position() const noexcept { return pos_; }

private:
  const BitString& bits_;
  std::size_t pos_ = 0;
};

// Constants shared by every label of one encoding. They are repeated in each
// label's preamble so that decode needs nothing but the two labels.
struct LabelScheme {
  std::size_t n = 0;        // vertices
  std::size_t id_bits = 0;  // bits per tree node id
  std::size_t W = 0;        // most pairs owned by one node
  std::size_t count_bits() const;
  friend bool operator==(const LabelScheme&, const LabelScheme&) = default;
};

inline constexpr std::size_t kPreambleBits = 48;  // n:24, id_bits:8, W:16
inline constexpr std::size_t kPathLengthBits = 8;

// Layout of the label of vertex v, whose leaf has root path x_1..x_h:
//   preamble | h (8 bits) | id(x_1) .. id(x_h) |
//   for each x_i: count c_i (count_bits) then c_i entries
//                 (id of the other endpoint, color bit: blue = 1)
// A pair is stored at its owner, the endpoint peeled first by
// orient_low_outdegree.
struct AdjacencyLabel {
  BitString bits;
  friend bool operator==(const AdjacencyLabel&, const AdjacencyLabel&) = default;
};

struct Labeling {
  LabelScheme scheme;
  std::size_t height = 0;  // nodes on the longest root-to-leaf path
  std::vector<AdjacencyLabel> labels;  // indexed by vertex
};

// Largest possible label for the scheme when every root path has h nodes.
std::size_t label_bit_bound(const LabelScheme& scheme, std::size_t h);

// Requires a valid, clean model of height <= 255.
Labeling encode(const SignedTreeModel& m);

// Adjacency of the two labelled vertices, from the labels alone. Throws
// DomainError on truncated or inconsistent labels and on identical leaves.
bool decode(const AdjacencyLabel& a, const AdjacencyLabel& b);

// A pair read from the two labels with one endpoint on each root path
// below their common part; depth_a and depth_b are 1-based path positions.
struct LabelCandidate {
  NodeId on_a = 0;
  NodeId on_b = 0;
  std::size_t depth_a = 0;
  std::size_t depth_b = 0;
  bool blue = false;
};
// All candidates, ordered by depth_a + depth_b. decode() answers with the
// color of the last one.
std::vector<LabelCandidate> label_candidates(const AdjacencyLabel& a, const AdjacencyLabel& b);

// Model pipeline: witness -> clean model -> shallow clean model -> labels.
struct LabelPipeline {
  SignedTreeModel model;
  SignedTreeModel balanced;
  Labeling labeling;
};
LabelPipeline label_pipeline(const Graph& g, const SddWitness& w);
Labeling label_graph(const Graph& g, const SddWitness& w);

struct LabelStats {
  std::size_t max_bits = 0;
  double mean_bits = 0.0;
  // sqrt((d + 1) n) * log2(n)^3; zero when n < 2.
  double reference = 0.0;
  // max_bits / reference; zero when reference is zero.
  double ratio = 0.0;
};
LabelStats label_stats(const Labeling& labeling, std::size_t d);

// Number of vertex pairs whose decoded adjacency disagrees with G.
std::size_t count_label_mismatches(const Graph& g, const std::vector<AdjacencyLabel>& labels);

// Label dump text format:
//   p lbl <n> <id_bits> <W>
//   l <vertex> <hex>          (one line per vertex)
std::string save_labels(const Labeling& labeling);
Labeling load_labels(std::string_view text);

} // namespace sdlab
