#include <cstdio>
#include <sstream>

#include "sdlab/balance.hpp"
#include "sdlab/cli.hpp"
#include "sdlab/error.hpp"
#include "sdlab/labeling.hpp"

namespace sdlab {

namespace {

SddWitness greedy_from(const Graph& g, std::size_t d) {
  const std::size_t cap = g.order() < 2 ? 0 : g.order() - 2;
  for (std::size_t k = std::min(d, cap);; ++k) {
    if (auto w = sdd_greedy(g, k)) {
      return *w;
    }
    if (k >= cap) {
      throw std::logic_error("greedy elimination failed at the trivial bound");
    }
  }
}

} // namespace

BenchRow run_bench_instance(const BenchInstance& inst) {
  Graph g;
  SddWitness w;
  if (inst.family == "twin") {
    auto grown = gen_twin_growth(inst.n, inst.d, inst.seed);
    g = std::move(grown.graph);
    w = std::move(grown.witness);
  } else if (inst.family == "embed") {
    auto e = embed_sdd1(gen_gnp(inst.n, 0.5, inst.seed));
    g = std::move(e.graph);
    w = std::move(e.witness);
  } else if (inst.family == "gnp") {
    g = gen_gnp(inst.n, 0.5, inst.seed);
    w = greedy_from(g, inst.d);
  } else if (inst.family == "rook") {
    g = gen_rook(inst.n, inst.n);
    w = greedy_from(g, inst.d);
  } else {
    throw DomainError("unknown bench family '" + inst.family + "'");
  }
  const auto pipe = label_pipeline(g, w);
  const auto stats = label_stats(pipe.labeling, w.d);
  BenchRow row;
  row.instance = inst;
  row.vertices = g.order();
  row.witness_d = w.d;
  row.model_width = width(pipe.model);
  row.balanced_width = width(pipe.balanced);
  row.max_label_bits = stats.max_bits;
  row.reference = stats.reference;
  row.ratio = stats.ratio;
  row.mismatches = count_label_mismatches(g, pipe.labeling.labels);
  return row;
}

std::vector<BenchInstance> parse_bench_config(const std::string& text) {
  std::vector<BenchInstance> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line.compare(first, 6, "family") == 0) {
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line.substr(first));
    std::string f;
    while (std::getline(ss, f, ',')) {
      const auto a = f.find_first_not_of(" \t\r");
      const auto b = f.find_last_not_of(" \t\r");
      fields.push_back(a == std::string::npos ? "" : f.substr(a, b - a + 1));
    }
    if (fields.size() != 4) {
      throw DomainError("bench config line " + std::to_string(lineno) + ": expected 'family,n,d,seed'");
    }
    BenchInstance inst;
    inst.family = fields[0];
    try {
      inst.n = std::stoull(fields[1]);
      inst.d = std::stoull(fields[2]);
      inst.seed = std::stoull(fields[3]);
    } catch (const std::exception&) {
      throw DomainError("bench config line " + std::to_string(lineno) + ": malformed number");
    }
    out.push_back(inst);
  }
  return out;
}

std::string bench_csv_header() {
  return "family,n,d,seed,vertices,witness_d,model_width,balanced_width,max_label_bits,bound,ratio,mismatches";
}

std::string bench_csv_row(const BenchRow& r) {
  char nums[64];
  std::ostringstream out;
  out << r.instance.family << ',' << r.instance.n << ',' << r.instance.d << ',' << r.instance.seed << ','
      << r.vertices << ',' << r.witness_d << ',' << r.model_width << ',' << r.balanced_width << ','
      << r.max_label_bits << ',';
  std::snprintf(nums, sizeof nums, "%.3f,%.6f", r.reference, r.ratio);
  out << nums << ',' << r.mismatches;
  return out.str();
}

} // namespace sdlab
