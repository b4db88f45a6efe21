#include <algorithm>
#include <map>

#include "sdlab/error.hpp"
#include "sdlab/reductions.hpp"

namespace sdlab {

namespace {

void check_d(std::size_t d) {
  if (d < 8 || d % 2 != 0) {
    throw DomainError("d must be an even integer >= 8, got " + std::to_string(d));
  }
}

std::size_t bubble_width(std::size_t d) { return d / 2 + 2; }

bool cell_present(std::size_t w, std::size_t row, std::size_t col) { return !(row == 0 && col + 2 >= w); }

bool is_port(std::size_t w, std::size_t row, std::size_t col) { return row == 0 || col == w - 1; }

} // namespace

Bubble build_bubble(std::size_t d) {
  check_d(d);
  Bubble b;
  b.w = bubble_width(d);
  for (std::size_t row = 0; row < b.w; ++row) {
    for (std::size_t col = 0; col < b.w; ++col) {
      if (cell_present(b.w, row, col)) {
        b.cells.emplace_back(row, col);
      }
    }
  }
  GraphBuilder gb(b.cells.size());
  for (Vertex u = 0; u < b.cells.size(); ++u) {
    for (Vertex v = u + 1; v < b.cells.size(); ++v) {
      if (b.cells[u].first == b.cells[v].first || b.cells[u].second == b.cells[v].second) {
        gb.add_edge(u, v);
      }
    }
  }
  b.graph = std::move(gb).build();
  for (Vertex v = 0; v < b.cells.size(); ++v) {
    if (b.cells[v].first == 0) {
      b.top_ports.push_back(v);
    }
  }
  for (Vertex v = 0; v < b.cells.size(); ++v) {
    if (b.cells[v].first > 0 && b.cells[v].second == b.w - 1) {
      b.column_ports.push_back(v);
    }
  }
  return b;
}

std::size_t sd_reduction_order(std::size_t vars, std::size_t clauses, std::size_t d) {
  const std::size_t t = d / 2 + 1;
  const std::size_t w = bubble_width(d);
  return 2 * vars + vars * t + 2 * clauses + (clauses + vars * t - 1) * (w * w - 2);
}

SdReduction build_sd_reduction(const CnfFormula& f, std::size_t d) {
  check_d(d);
  check_sd_shape(f);
  const std::size_t n = f.num_vars;
  const std::size_t m = f.clauses.size();
  const std::size_t t = d / 2 + 1;
  const std::size_t nt = n * t;
  if (m + 1 > nt) {
    throw DomainError("not enough shared neighbors to pick distinct vertices for every clause bubble");
  }
  const Bubble proto = build_bubble(d);
  const std::size_t cells = proto.cells.size();

  SdReduction r;
  r.d = d;
  r.t = t;
  r.bubble_count = m + nt - 1;
  const std::size_t total = sd_reduction_order(n, m, d);
  r.map.roles.resize(total);
  auto& roles = r.map.roles;
  GraphBuilder gb(total);

  Vertex next = 0;
  for (std::uint32_t v = 1; v <= n; ++v) {
    r.positive.push_back(next);
    roles[next++] = Role{RoleKind::literal, v, 1, 0};
    r.negative.push_back(next);
    roles[next++] = Role{RoleKind::literal, v, 0, 0};
  }
  for (std::uint32_t v = 1; v <= n; ++v) {
    for (std::uint32_t k = 1; k <= t; ++k) {
      r.y.push_back(next);
      roles[next] = Role{RoleKind::shared_neighbor, v, k, static_cast<std::uint32_t>(r.y.size())};
      gb.add_edge(r.positive[v - 1], next);
      gb.add_edge(r.negative[v - 1], next);
      ++next;
    }
  }
  for (std::uint32_t c = 1; c <= m; ++c) {
    r.clause_v.push_back(next);
    roles[next++] = Role{RoleKind::clause_v, c, 0, 0};
    r.clause_d.push_back(next);
    roles[next++] = Role{RoleKind::clause_d, c, 0, 0};
    gb.add_edge(r.clause_v.back(), r.clause_d.back());
    for (Literal l : f.clauses[c - 1]) {
      const auto var = static_cast<std::size_t>(l > 0 ? l : -l);
      gb.add_edge(r.clause_v.back(), l > 0 ? r.positive[var - 1] : r.negative[var - 1]);
    }
  }
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const std::vector<Vertex> left{r.clause_v[j], r.clause_d[j]};
    const std::vector<Vertex> right{r.clause_v[j + 1], r.clause_d[j + 1]};
    gb.add_biclique(left, right);
  }

  std::uint32_t bubble_id = 0;
  auto attach = [&](const std::vector<Vertex>& members, const std::vector<std::size_t>& tuple) {
    ++bubble_id;
    const Vertex base = next;
    for (std::size_t i = 0; i < cells; ++i) {
      roles[base + i] = Role{RoleKind::bubble_cell, bubble_id, static_cast<std::uint32_t>(proto.cells[i].first),
                             static_cast<std::uint32_t>(proto.cells[i].second)};
    }
    for (const auto& [u, v] : proto.graph.edges()) {
      gb.add_edge(base + u, base + v);
    }
    std::vector<Vertex> ports;
    for (Vertex p : proto.top_ports) {
      ports.push_back(base + p);
    }
    for (Vertex p : proto.column_ports) {
      ports.push_back(base + p);
    }
    std::size_t at = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t k = 0; k < tuple[i]; ++k) {
        gb.add_edge(members[i], ports.at(at++));
      }
    }
    if (at != ports.size()) {
      throw std::logic_error("attachment tuple does not use every port");
    }
    next = static_cast<Vertex>(next + cells);
  };

  const std::size_t lo = d / 4;
  const std::size_t hi = (d + 3) / 4;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    attach({r.y[j + 2], r.clause_v[j], r.clause_d[j], r.clause_v[j + 1], r.clause_d[j + 1]}, {1, lo, lo, hi, hi});
  }
  attach({r.clause_v[0], r.clause_d[0], r.y[0]}, {hi, hi, d + 1 - 2 * hi});
  attach({r.clause_v[m - 1], r.clause_d[m - 1], r.y[nt - 1]}, {lo, lo, d + 1 - 2 * lo});
  for (std::size_t i = 0; i + 2 < nt; ++i) {
    attach({r.y[i], r.y[i + 1], r.y[i + 2]}, {1, d / 2, d / 2});
  }

  const std::vector<Vertex> first(r.y.begin(), r.y.begin() + static_cast<std::ptrdiff_t>(hi));
  const std::vector<Vertex> second(r.y.begin() + static_cast<std::ptrdiff_t>(t),
                                   r.y.begin() + static_cast<std::ptrdiff_t>(t + hi));
  gb.add_clique(first);
  gb.add_biclique(first, second);

  if (next != total) {
    throw std::logic_error("sd reduction layout does not match its vertex count");
  }
  r.map.graph = std::move(gb).build();
  return r;
}

ReductionReport validate_sd_reduction(const ReductionMap& map, std::size_t d) {
  ReductionReport report;
  auto& problems = report.problems;
  const Graph& g = map.graph;
  if (map.roles.size() != g.order()) {
    problems.push_back("role map covers " + std::to_string(map.roles.size()) + " of " + std::to_string(g.order()) +
                       " vertices");
    return report;
  }
  if (d < 8 || d % 2 != 0) {
    problems.push_back("d must be an even integer >= 8");
    return report;
  }
  const std::size_t w = bubble_width(d);
  auto tag = [&](Vertex v) { return "vertex " + std::to_string(v) + " (" + role_tag(map.roles[v]) + ")"; };

  std::map<std::uint32_t, std::vector<Vertex>> bubbles;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (map.roles[v].kind == RoleKind::bubble_cell) {
      bubbles[map.roles[v].a].push_back(v);
    }
  }
  auto bubble_of = [&](Vertex v) {
    return map.roles[v].kind == RoleKind::bubble_cell ? map.roles[v].a : 0U;
  };

  for (const auto& [id, members] : bubbles) {
    const std::string where = "bubble " + std::to_string(id) + ": ";
    if (members.size() != w * w - 2) {
      problems.push_back(where + "has " + std::to_string(members.size()) + " cells, expected " +
                         std::to_string(w * w - 2));
      continue;
    }
    std::vector<std::vector<bool>> seen(w, std::vector<bool>(w, false));
    bool layout_ok = true;
    for (Vertex v : members) {
      const auto& r = map.roles[v];
      if (r.b >= w || r.c >= w || !cell_present(w, r.b, r.c) || seen[r.b][r.c]) {
        problems.push_back(where + tag(v) + " has an invalid or repeated cell position");
        layout_ok = false;
      } else {
        seen[r.b][r.c] = true;
      }
    }
    if (!layout_ok) {
      continue;
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto& a = map.roles[members[i]];
        const auto& b = map.roles[members[j]];
        const bool want = a.b == b.b || a.c == b.c;
        if (g.adjacent(members[i], members[j]) != want) {
          problems.push_back(where + "cells " + tag(members[i]) + " and " + tag(members[j]) +
                             (want ? " share a line but are not adjacent" : " are adjacent across lines"));
        }
      }
    }
    std::map<Vertex, std::pair<std::size_t, std::size_t>> attached; // outside vertex -> (top, column) counts
    for (Vertex v : members) {
      const auto& r = map.roles[v];
      std::size_t outside = 0;
      for (Vertex u : g.neighbors(v)) {
        if (bubble_of(u) == id) {
          continue;
        }
        ++outside;
        auto& cnt = attached[u];
        if (r.b == 0) {
          ++cnt.first;
        } else if (r.c == w - 1) {
          ++cnt.second;
        }
      }
      if (is_port(w, r.b, r.c)) {
        if (outside == 0) {
          problems.push_back(where + "port " + tag(v) + " lacks an outside neighbor");
        } else if (outside > 1) {
          problems.push_back(where + "port " + tag(v) + " has " + std::to_string(outside) + " outside neighbors");
        }
      } else if (outside > 0) {
        problems.push_back(where + "interior " + tag(v) + " has an outside neighbor");
      }
    }
    if (attached.size() < 3 || attached.size() > 5) {
      problems.push_back(where + "is attached to " + std::to_string(attached.size()) + " vertices, expected 3 to 5");
    }
    std::size_t both = 0;
    for (const auto& [u, cnt] : attached) {
      if (cnt.first > 0 && cnt.second > 0) {
        ++both;
      }
      if (cnt.first == 0 && cnt.second < 2) {
        problems.push_back(where + tag(u) + " has neither a top-row neighbor nor two column neighbors");
      }
    }
    if (both > 1) {
      problems.push_back(where + std::to_string(both) + " attached vertices reach both the top row and the column");
    }
  }

  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& r = map.roles[v];
    std::size_t in_bubbles = 0;
    for (Vertex u : g.neighbors(v)) {
      in_bubbles += map.roles[u].kind == RoleKind::bubble_cell ? 1 : 0;
    }
    if (r.kind == RoleKind::clause_v || r.kind == RoleKind::clause_d) {
      if (in_bubbles != d / 2) {
        problems.push_back(tag(v) + " has " + std::to_string(in_bubbles) + " bubble neighbors, expected " +
                           std::to_string(d / 2));
      }
    } else if (r.kind == RoleKind::shared_neighbor) {
      const std::size_t need = r.c >= 3 ? d : d / 2 + 1;
      if (in_bubbles < need) {
        problems.push_back(tag(v) + " has " + std::to_string(in_bubbles) + " bubble neighbors, expected at least " +
                           std::to_string(need));
      }
    }
  }
  return report;
}

std::vector<Vertex> sd_candidate_set(const SdReduction& r, const Assignment& a) {
  if (a.size() != r.positive.size()) {
    throw DomainError("assignment size does not match the formula");
  }
  std::vector<bool> drop(r.map.graph.order(), false);
  for (std::size_t v = 0; v < a.size(); ++v) {
    drop[a[v] ? r.negative[v] : r.positive[v]] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < drop.size(); ++v) {
    if (!drop[v]) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Vertex> sd_witness_from_assignment(const SdReduction& r, const CnfFormula& f, const Assignment& a) {
  const std::size_t unsat = count_unsatisfied(f, a);
  if (unsat != 0) {
    throw DomainError("assignment leaves " + std::to_string(unsat) + " clauses unsatisfied");
  }
  return sd_candidate_set(r, a);
}

} // namespace sdlab
