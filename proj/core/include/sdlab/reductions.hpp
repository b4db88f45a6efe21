#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdlab/cnf.hpp"
#include "sdlab/graph.hpp"
#include "sdlab/twin_metrics.hpp"

namespace sdlab {

enum class RoleKind : std::uint8_t {
  bubble_cell,     // a = bubble id, b = row, c = column (0-based)
  shared_neighbor, // a = variable, b = index within N_x, c = global y index (1-based)
  literal,         // a = variable, b = 1 for x, 0 for its negation
  clause_v,        // a = clause
  clause_d,        // a = clause
  representative,  // a = variable, b = 1 for v_1, 0 for v_0
  transition,      // a = variable, b = index i of t_i
  clause_top,      // a = clause
  clause_literal,  // a = clause, b = literal position 1..3
  clause_bottom,   // a = clause
  gamma,
  iota,
};

// Variables and clauses are 1-based in roles, as in DIMACS.
struct Role {
  RoleKind kind = RoleKind::iota;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  friend bool operator==(const Role&, const Role&) = default;
};

std::string role_tag(const Role& r);

struct ReductionMap {
  Graph graph;
  std::vector<Role> roles; // indexed by vertex
};

// Role map export: one line 'r <vertex> <tag>' per vertex.
std::string save_roles(const ReductionMap& map);

// --- symmetric difference ---------------------------------------------------

// (d/2 + 2)-wide rook graph without the two rightmost top-row cells. Cell
// (row, col) is present unless row == 0 and col >= w - 2; present cells are
// numbered in row-major order. Ports are the top-row cells (left to right)
// followed by the rightmost-column cells below the top row (top to bottom).
struct Bubble {
  std::size_t w = 0;
  Graph graph;
  std::vector<std::pair<std::size_t, std::size_t>> cells; // vertex -> (row, col)
  std::vector<Vertex> top_ports;
  std::vector<Vertex> column_ports;
};
Bubble build_bubble(std::size_t d);

// Layout: literal vertices x_v = 2(v-1), not-x_v = 2(v-1)+1; then the
// shared neighbors y_1..y_{nt} (N_{x_1} first); then v_c, d_c per clause;
// then the bubbles, each a block of w*w - 2 cells: S_1..S_{m-1}, the two
// terminal attachments, then S'_1..S'_{nt-2}. An attachment tuple lists how
// many consecutive ports each member of S receives. The shared neighbor of
// S_j is y_{j+2}.
struct SdReduction {
  ReductionMap map;
  std::size_t d = 0;
  std::size_t t = 0; // |N_x|
  std::vector<Vertex> positive;  // per variable
  std::vector<Vertex> negative;  // per variable
  std::vector<Vertex> y;         // y_1..y_{nt}
  std::vector<Vertex> clause_v;  // per clause
  std::vector<Vertex> clause_d;  // per clause
  std::size_t bubble_count = 0;
};
SdReduction build_sd_reduction(const CnfFormula& f, std::size_t d);

// 2n + nt + 2m + (m + nt - 1)(w^2 - 2).
std::size_t sd_reduction_order(std::size_t vars, std::size_t clauses, std::size_t d);

// Structural audit driven by the role map alone, so that it can judge a
// mutated graph: bubble interiors, neat attachment, |S| in 3..5, the
// shared-row/column condition, the attached-vertex condition, and the
// bubble-degree counts of clause and shared-neighbor vertices.
struct ReductionReport {
  std::vector<std::string> problems;
  bool ok() const noexcept { return problems.empty(); }
};
ReductionReport validate_sd_reduction(const ReductionMap& map, std::size_t d);

// All vertices except the false literal of each variable.
std::vector<Vertex> sd_candidate_set(const SdReduction& r, const Assignment& a);
// As sd_candidate_set, after checking that the assignment satisfies f.
std::vector<Vertex> sd_witness_from_assignment(const SdReduction& r, const CnfFormula& f, const Assignment& a);

// --- sd-degeneracy ----------------------------------------------------------

// Layout: per variable (in order) v_0, t_1..t_{2p-1}, v_1; then per clause
// c_top, c_l1, c_l2, c_l3, c_bottom; then gamma, then iota.
struct SddReduction {
  ReductionMap map;
  std::vector<Vertex> rep0;                      // per variable
  std::vector<Vertex> rep1;                      // per variable
  std::vector<std::vector<Vertex>> transitions;  // per variable, t_1 first
  std::vector<Vertex> top;                       // per clause
  std::vector<std::array<Vertex, 3>> lit;        // per clause
  std::vector<Vertex> bottom;                    // per clause
  Vertex gamma = 0;
  Vertex iota = 0;
};
SddReduction build_sdd_reduction(const CnfFormula& f);

// Elimination order of width 1 from an assignment leaving at most one clause
// unsatisfied. Throws DomainError when two or more clauses are unsatisfied.
SddWitness sdd_witness_from_assignment(const SddReduction& r, const CnfFormula& f, const Assignment& a);

// Variable v is true iff the last vertex of its gadget in the order (the
// survivor if none is left) has a neighborhood containing N(v_0).
struct ExtractedAssignment {
  Assignment assignment;
  std::size_t unsatisfied = 0;
};
ExtractedAssignment extract_assignment(const SddReduction& r, const CnfFormula& f, const SddWitness& w);

} // namespace sdlab
