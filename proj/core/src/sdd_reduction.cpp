#include <algorithm>
#include <limits>

#include "sdlab/error.hpp"
#include "sdlab/reductions.hpp"

namespace sdlab {

namespace {

std::size_t var_of(Literal l) { return static_cast<std::size_t>(l > 0 ? l : -l); }

} // namespace

SddReduction build_sdd_reduction(const CnfFormula& f) {
  check_sdd_shape(f);
  const std::size_t n = f.num_vars;
  const std::size_t m = f.clauses.size();
  const auto occ = clause_occurrences(f);

  std::size_t total = 5 * m + 2;
  for (auto p : occ) {
    total += 2 * p + 1;
  }
  SddReduction r;
  r.map.roles.resize(total);
  auto& roles = r.map.roles;
  GraphBuilder gb(total);
  Vertex next = 0;
  r.transitions.resize(n);
  for (std::uint32_t v = 1; v <= n; ++v) {
    r.rep0.push_back(next);
    roles[next++] = Role{RoleKind::representative, v, 0, 0};
    for (std::uint32_t i = 1; i < 2 * occ[v - 1]; ++i) {
      r.transitions[v - 1].push_back(next);
      roles[next++] = Role{RoleKind::transition, v, i, 0};
    }
    r.rep1.push_back(next);
    roles[next++] = Role{RoleKind::representative, v, 1, 0};
  }
  for (std::uint32_t c = 1; c <= m; ++c) {
    std::array<Vertex, 5> gadget{};
    r.top.push_back(next);
    roles[next] = Role{RoleKind::clause_top, c, 0, 0};
    gadget[0] = next++;
    std::array<Vertex, 3> lits{};
    for (std::uint32_t i = 1; i <= 3; ++i) {
      roles[next] = Role{RoleKind::clause_literal, c, i, 0};
      lits[i - 1] = next;
      gadget[i] = next++;
    }
    r.lit.push_back(lits);
    r.bottom.push_back(next);
    roles[next] = Role{RoleKind::clause_bottom, c, 0, 0};
    gadget[4] = next++;
    gb.add_clique(gadget);
  }
  r.gamma = next;
  roles[next++] = Role{RoleKind::gamma, 0, 0, 0};
  r.iota = next;
  roles[next++] = Role{RoleKind::iota, 0, 0, 0};

  // x-lists (neighbors of v_0): tops then literal vertices; y-lists (v_1):
  // literal vertices then tops; each part in clause order.
  std::vector<std::vector<Vertex>> x_top(n), x_lit(n), y_top(n), y_lit(n);
  for (std::size_t c = 0; c < m; ++c) {
    gb.add_edge(r.bottom[c], r.gamma);
    for (std::size_t i = 0; i < 3; ++i) {
      const Literal l = f.clauses[c][i];
      const std::size_t v = var_of(l) - 1;
      const Vertex rep = l > 0 ? r.rep1[v] : r.rep0[v];
      gb.add_edge(rep, r.lit[c][i]);
      gb.add_edge(rep, r.top[c]);
      if (l > 0) {
        y_lit[v].push_back(r.lit[c][i]);
        y_top[v].push_back(r.top[c]);
      } else {
        x_top[v].push_back(r.top[c]);
        x_lit[v].push_back(r.lit[c][i]);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Vertex> x = x_top[v];
    x.insert(x.end(), x_lit[v].begin(), x_lit[v].end());
    std::vector<Vertex> y = y_lit[v];
    y.insert(y.end(), y_top[v].begin(), y_top[v].end());
    const auto& ts = r.transitions[v];
    std::vector<Vertex> current = x;
    std::size_t i = 0;
    for (std::size_t k = 0; k < y.size() && i < ts.size(); ++k, ++i) {
      current.push_back(y[k]);
      for (Vertex u : current) {
        gb.add_edge(ts[i], u);
      }
    }
    for (std::size_t k = 0; i < ts.size(); ++k, ++i) {
      current.erase(std::find(current.begin(), current.end(), x.at(k)));
      for (Vertex u : current) {
        gb.add_edge(ts[i], u);
      }
    }
  }
  r.map.graph = std::move(gb).build();
  return r;
}

SddWitness sdd_witness_from_assignment(const SddReduction& r, const CnfFormula& f, const Assignment& a) {
  const std::size_t unsat = count_unsatisfied(f, a);
  if (unsat > 1) {
    throw DomainError("assignment leaves " + std::to_string(unsat) + " clauses unsatisfied; at most one is allowed");
  }
  if (r.top.size() != f.clauses.size() || r.rep0.size() != f.num_vars) {
    throw DomainError("reduction does not belong to this formula");
  }
  SddWitness w;
  w.d = 1;
  auto step = [&w](Vertex v, Vertex u) { w.steps.push_back({v, u}); };
  std::vector<Vertex> survivors;
  for (std::size_t v = 0; v < f.num_vars; ++v) {
    std::vector<Vertex> path{r.rep0[v]};
    path.insert(path.end(), r.transitions[v].begin(), r.transitions[v].end());
    path.push_back(r.rep1[v]);
    if (a[v]) {
      for (std::size_t k = path.size() - 1; k > 0; --k) {
        step(path[k], path[k - 1]);
      }
      survivors.push_back(path.front());
    } else {
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        step(path[k], path[k + 1]);
      }
      survivors.push_back(path.back());
    }
  }
  std::optional<std::size_t> open;
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    std::size_t s = 3;
    for (std::size_t i = 0; i < 3; ++i) {
      if (literal_value(a, clause[i])) {
        s = i;
        break;
      }
    }
    if (s == 3) {
      open = c;
      continue;
    }
    const std::size_t o1 = s == 0 ? 1 : 0;
    const std::size_t o2 = 3 - s - o1;
    const auto& lit = r.lit[c];
    step(r.top[c], lit[o1]);
    step(lit[o1], lit[s]);
    step(lit[o2], lit[s]);
    step(lit[s], r.bottom[c]);
    step(r.bottom[c], r.iota);
  }
  step(r.gamma, r.iota);
  if (open) {
    for (Vertex l : r.lit[*open]) {
      step(l, r.bottom[*open]);
    }
    step(r.bottom[*open], r.iota);
  }
  for (Vertex v : survivors) {
    step(v, r.iota);
  }
  if (open) {
    step(r.top[*open], r.iota);
  }
  return w;
}

ExtractedAssignment extract_assignment(const SddReduction& r, const CnfFormula& f, const SddWitness& w) {
  const Graph& g = r.map.graph;
  if (auto why = witness_violation(g, w)) {
    throw DomainError("invalid elimination order: " + *why);
  }
  if (w.d > 1) {
    throw DomainError("elimination order must certify sd-degeneracy at most 1");
  }
  constexpr std::size_t kSurvivor = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> when(g.order(), kSurvivor);
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    when[w.steps[i].eliminated] = i;
  }
  ExtractedAssignment out;
  out.assignment.resize(f.num_vars);
  for (std::size_t v = 0; v < f.num_vars; ++v) {
    std::vector<Vertex> gadget{r.rep0[v]};
    gadget.insert(gadget.end(), r.transitions[v].begin(), r.transitions[v].end());
    gadget.push_back(r.rep1[v]);
    const Vertex last = *std::max_element(gadget.begin(), gadget.end(),
                                           [&](Vertex x, Vertex y) { return when[x] < when[y]; });
    const auto base = g.neighbors(r.rep0[v]);
    const auto mine = g.neighbors(last);
    out.assignment[v] = std::includes(mine.begin(), mine.end(), base.begin(), base.end());
  }
  out.unsatisfied = count_unsatisfied(f, out.assignment);
  return out;
}

} // namespace sdlab
