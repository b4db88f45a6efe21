#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sdlab {

// Runs one command line (without the program name). Exit codes: 0 on
// success, 1 on a domain error (bad input, failed check), 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchInstance {
  std::string family;  // twin | embed | gnp | rook
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
};

struct BenchRow {
  BenchInstance instance;
  std::size_t vertices = 0;
  std::size_t witness_d = 0;
  std::size_t model_width = 0;
  std::size_t balanced_width = 0;
  std::size_t max_label_bits = 0;
  double reference = 0.0;
  double ratio = 0.0;
  std::size_t mismatches = 0;
};

// twin: gen_twin_growth(n, d, seed) with its witness. embed: embed_sdd1 of
// G(n, 1/2) with the embedding witness. gnp: G(n, 1/2); rook: the n x n rook
// graph; both with the first greedy witness found from d upward.
BenchRow run_bench_instance(const BenchInstance& inst);

// Config lines 'family,n,d,seed'; blank lines, '#' comments and a header
// line starting with 'family' are skipped.
std::vector<BenchInstance> parse_bench_config(const std::string& text);
std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

} // namespace sdlab
