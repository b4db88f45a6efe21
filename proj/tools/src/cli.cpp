#include "sdlab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sdlab/balance.hpp"
#include "sdlab/cnf.hpp"
#include "sdlab/error.hpp"
#include "sdlab/graph.hpp"
#include "sdlab/labeling.hpp"
#include "sdlab/reductions.hpp"
#include "sdlab/signed_tree_model.hpp"
#include "sdlab/twin_metrics.hpp"

namespace sdlab {

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError("cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    throw DomainError("cannot write '" + path + "'");
  }
}

std::string format_set(std::size_t d, const std::vector<Vertex>& set) {
  std::ostringstream out;
  out << "s diverse " << d << ' ' << set.size() << '\n';
  for (Vertex v : set) {
    out << "v " << v << '\n';
  }
  return out.str();
}

struct Options {
  std::string kind;
  std::size_t a = 3;
  std::size_t b = 3;
  std::size_t n = 8;
  double p = 0.5;
  std::optional<std::size_t> d;
  std::uint64_t seed = 1;
  std::string mode = "greedy";
  std::string target;
  std::string output;
  std::string witness_out;
  std::string roles_out;
  std::string assignment;
  std::string assignment_file;
  bool exact = false;
  std::vector<std::string> inputs;
  std::string label_path;
  Vertex u = 0;
  Vertex v = 0;
};

Graph generate(const Options& o, SddWitness* witness) {
  const auto& k = o.kind;
  if (k == "rook") {
    return gen_rook(o.a, o.b);
  }
  if (k == "shift") {
    return gen_shift(o.n);
  }
  if (k == "gnp") {
    return gen_gnp(o.n, o.p, o.seed);
  }
  if (k == "embed") {
    auto e = embed_sdd1(gen_gnp(o.n, o.p, o.seed));
    *witness = e.witness;
    return e.graph;
  }
  if (k == "twin") {
    auto grown = gen_twin_growth(o.n, o.d.value_or(1), o.seed);
    *witness = grown.witness;
    return grown.graph;
  }
  if (k == "path") {
    return gen_path(o.n);
  }
  if (k == "cycle") {
    return gen_cycle(o.n);
  }
  if (k == "complete") {
    return gen_complete(o.n);
  }
  if (k == "tree") {
    return gen_random_tree(o.n, o.seed);
  }
  throw DomainError("unknown graph kind '" + k + "'");
}

void run_verb(const std::string& verb, const Options& o, std::ostream& out) {
  auto in = [&](std::size_t i) { return read_file(o.inputs.at(i)); };
  auto graph_in = [&](std::size_t i) { return load_edge_list(in(i)); };

  if (verb == "gen") {
    SddWitness w;
    Graph g = generate(o, &w);
    write_file(o.output, save_edge_list(g), out);
    if (!o.witness_out.empty()) {
      if (w.steps.empty() && g.order() > 1) {
        throw DomainError("--witness-out is only available for kinds embed and twin");
      }
      write_file(o.witness_out, save_witness(w), out);
    }
  } else if (verb == "order") {
    const Graph g = graph_in(0);
    SddWitness w;
    if (o.mode == "exact") {
      const auto r = sdd_exact(g);
      if (o.d && r.value > *o.d) {
        throw DomainError("sd-degeneracy is " + std::to_string(r.value) + ", above --d " + std::to_string(*o.d));
      }
      w = r.witness;
    } else if (o.mode == "greedy") {
      // Without --d, take the smallest threshold the greedy search meets.
      std::optional<SddWitness> found;
      if (o.d) {
        found = sdd_greedy(g, *o.d);
      } else {
        for (std::size_t d = 0; !found; ++d) {
          found = sdd_greedy(g, d);
        }
      }
      if (!found) {
        throw DomainError("greedy elimination found no witness with d = " + std::to_string(*o.d));
      }
      w = *found;
    } else {
      throw DomainError("unknown mode '" + o.mode + "'");
    }
    write_file(o.output, save_witness(w), out);
  } else if (verb == "model") {
    const Graph g = graph_in(0);
    const SddWitness w = load_witness(in(1));
    write_file(o.output, save_stm(stm_from_witness(g, w)), out);
  } else if (verb == "clean") {
    write_file(o.output, save_stm(make_clean(load_stm(in(0)))), out);
  } else if (verb == "balance") {
    const auto m = load_stm(in(0));
    std::size_t d = 0;
    if (o.d) {
      d = *o.d;
    } else {
      const auto s = sparsity(m);
      d = (s.num + s.den - 1) / s.den;
    }
    write_file(o.output, save_stm(shallowise(m, d)), out);
  } else if (verb == "label") {
    const Graph g = graph_in(0);
    const SddWitness w = load_witness(in(1));
    write_file(o.output, save_labels(label_graph(g, w)), out);
  } else if (verb == "decode") {
    const auto l = load_labels(read_file(o.label_path));
    if (o.u >= l.labels.size() || o.v >= l.labels.size()) {
      throw DomainError("vertex out of range");
    }
    out << (decode(l.labels[o.u], l.labels[o.v]) ? "adjacent" : "non-adjacent") << '\n';
  } else if (verb == "verify") {
    const Graph g = graph_in(0);
    const auto l = load_labels(in(1));
    const std::size_t bad = count_label_mismatches(g, l.labels);
    if (bad != 0) {
      throw DomainError("FAIL " + std::to_string(bad) + " mismatches");
    }
    out << "OK 0 mismatches\n";
  } else if (verb == "sd") {
    const Graph g = graph_in(0);
    if (o.exact || !o.d) {
      out << sd_exact(g) << '\n';
    } else if (auto set = find_diverse_subgraph(g, *o.d)) {
      out << "sd > " << *o.d << '\n' << format_set(*o.d, *set);
    } else {
      out << "sd <= " << *o.d << '\n';
    }
  } else if (verb == "sdd") {
    const Graph g = graph_in(0);
    if (o.exact || !o.d) {
      out << sdd_exact(g).value << '\n';
    } else if (sdd_greedy(g, *o.d)) {
      out << "sdd <= " << *o.d << '\n';
    } else {
      out << "greedy elimination found no witness with d = " << *o.d << '\n';
    }
  } else if (verb == "reduce" || verb == "witness") {
    const CnfFormula f = load_dimacs(in(0));
    if (o.target != "sd" && o.target != "sdd") {
      throw DomainError("--target must be sd or sdd");
    }
    if (verb == "reduce") {
      const ReductionMap map =
          o.target == "sd" ? build_sd_reduction(f, o.d.value_or(8)).map : build_sdd_reduction(f).map;
      write_file(o.output, save_edge_list(map.graph), out);
      if (!o.roles_out.empty()) {
        write_file(o.roles_out, save_roles(map), out);
      }
      return;
    }
    std::string text = o.assignment;
    if (!o.assignment_file.empty()) {
      text = read_file(o.assignment_file);
    }
    const Assignment a = parse_assignment(text, f.num_vars);
    if (o.target == "sd") {
      const std::size_t d = o.d.value_or(8);
      const auto r = build_sd_reduction(f, d);
      write_file(o.output, format_set(d, sd_witness_from_assignment(r, f, a)), out);
    } else {
      const auto r = build_sdd_reduction(f);
      write_file(o.output, save_witness(sdd_witness_from_assignment(r, f, a)), out);
    }
  } else if (verb == "bench") {
    const auto config = parse_bench_config(in(0));
    std::string csv = bench_csv_header() + "\n";
    for (const auto& inst : config) {
      csv += bench_csv_row(run_bench_instance(inst)) + "\n";
    }
    write_file(o.output, csv, out);
  }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric difference, signed tree models and adjacency labels", "sdlab"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* s) { s->add_option("-o,--output", o.output, "Output file (default stdout)"); };
  auto add_d = [&](CLI::App* s, const std::string& what) { s->add_option("--d", o.d, what); };

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--kind", o.kind, "rook|shift|gnp|embed|twin|path|cycle|complete|tree")->required();
  gen->add_option("--a", o.a, "Rook rows");
  gen->add_option("--b", o.b, "Rook columns");
  gen->add_option("--n", o.n, "Vertex count (shift: ground set size)");
  gen->add_option("--p", o.p, "Edge probability");
  gen->add_option("--seed", o.seed, "SplitMix64 seed");
  gen->add_option("--witness-out", o.witness_out, "Write the construction's witness (embed, twin)");
  add_d(gen, "Flip budget for twin");
  add_output(gen);

  auto* order = app.add_subcommand("order", "Compute an sd-degeneracy witness");
  order->add_option("graph", o.inputs, "Edge list")->required()->expected(1);
  order->add_option("--mode", o.mode, "greedy|exact");
  add_d(order, "Twin threshold");
  add_output(order);

  auto* model = app.add_subcommand("model", "Build a signed tree model from a witness");
  model->add_option("inputs", o.inputs, "Edge list and witness")->required()->expected(2);
  add_output(model);

  auto* clean = app.add_subcommand("clean", "Add green pairs between unlinked siblings");
  clean->add_option("model", o.inputs, "Signed tree model")->required()->expected(1);
  add_output(clean);

  auto* balance = app.add_subcommand("balance", "Re-embed a clean model on the complete binary tree");
  balance->add_option("model", o.inputs, "Signed tree model")->required()->expected(1);
  add_d(balance, "Declared sparsity (default: ceiling of the model's sparsity)");
  add_output(balance);

  auto* label = app.add_subcommand("label", "Adjacency labels from a graph and witness");
  label->add_option("inputs", o.inputs, "Edge list and witness")->required()->expected(2);
  add_output(label);

  auto* dec = app.add_subcommand("decode", "Decode one vertex pair from a label dump");
  dec->add_option("labels", o.label_path, "Label dump")->required();
  dec->add_option("u", o.u, "First vertex")->required();
  dec->add_option("v", o.v, "Second vertex")->required();

  auto* verify = app.add_subcommand("verify", "Decode every pair and compare with the graph");
  verify->add_option("inputs", o.inputs, "Edge list and label dump")->required()->expected(2);

  auto* sd = app.add_subcommand("sd", "Symmetric difference");
  sd->add_option("graph", o.inputs, "Edge list")->required()->expected(1);
  sd->add_flag("--exact", o.exact, "Print sd(G)");
  add_d(sd, "Search for a (d+1)-diverse induced subgraph");

  auto* sdd = app.add_subcommand("sdd", "sd-degeneracy");
  sdd->add_option("graph", o.inputs, "Edge list")->required()->expected(1);
  sdd->add_flag("--exact", o.exact, "Print sdd(G)");
  add_d(sdd, "Try greedy elimination with this threshold");

  auto* reduce = app.add_subcommand("reduce", "Hardness reduction graph from a CNF formula");
  reduce->add_option("cnf", o.inputs, "DIMACS CNF")->required()->expected(1);
  reduce->add_option("--target", o.target, "sd|sdd")->required();
  reduce->add_option("--roles", o.roles_out, "Write the role map");
  add_d(reduce, "Even d >= 8 for --target sd (default 8)");
  add_output(reduce);

  auto* witness = app.add_subcommand("witness", "Certificate from an assignment");
  witness->add_option("cnf", o.inputs, "DIMACS CNF")->required()->expected(1);
  witness->add_option("--target", o.target, "sd|sdd")->required();
  auto* asg = witness->add_option("--assignment", o.assignment, "Signed literals, e.g. \"1 -2 3\"");
  auto* asg_file = witness->add_option("--assignment-file", o.assignment_file, "File of signed literals");
  asg->excludes(asg_file);
  add_d(witness, "Even d >= 8 for --target sd (default 8)");
  add_output(witness);

  auto* bench = app.add_subcommand("bench", "Label statistics for a list of instances, as CSV");
  bench->add_option("config", o.inputs, "Lines 'family,n,d,seed'")->required()->expected(1);
  add_output(bench);

  std::vector<const char*> argv{"sdlab"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  try {
    for (auto* sub : app.get_subcommands()) {
      run_verb(sub->get_name(), o, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

} // namespace sdlab
