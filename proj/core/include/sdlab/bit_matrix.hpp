#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sdlab/graph.hpp"

namespace sdlab {

// Dense adjacency rows packed 64 vertices per word. Used by the symmetric
// difference kernels, where a pair's count is a popcount over row XORs.
class BitMatrix {
public:
  BitMatrix() = default;
  explicit BitMatrix(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  bool test(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
  }

  // |(N(u) xor N(v)) & alive| with u and v themselves excluded.
  std::size_t sd_within(Vertex u, Vertex v, std::span<const std::uint64_t> alive) const;

private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Vertex set over 0..n-1 in the same word layout as BitMatrix rows.
class VertexMask {
public:
  VertexMask() = default;
  explicit VertexMask(std::size_t n, bool full = false);

  std::size_t universe() const noexcept { return n_; }
  bool test(Vertex v) const { return (bits_[v / 64] >> (v % 64)) & 1U; }
  void set(Vertex v) { bits_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void reset(Vertex v) { bits_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  std::size_t count() const;
  std::span<const std::uint64_t> words() const { return bits_; }
  std::vector<Vertex> members() const;

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

} // namespace sdlab
