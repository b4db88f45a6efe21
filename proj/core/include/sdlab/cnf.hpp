#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sdlab {

// DIMACS literal: +v or -v for variable v in 1..num_vars.
using Literal = std::int32_t;
using Clause = std::vector<Literal>;

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// assignment[v - 1] is the value of variable v.
using Assignment = std::vector<bool>;

inline constexpr std::size_t kSatOracleLimit = 24;

// DIMACS CNF: comment lines 'c ...', header 'p cnf <vars> <clauses>', then
// clauses as signed integers each terminated by 0 (may span lines).
CnfFormula load_dimacs(std::string_view text);
std::string save_dimacs(const CnfFormula& f);

bool literal_value(const Assignment& a, Literal l);
bool clause_satisfied(const Assignment& a, const Clause& c);
std::size_t count_unsatisfied(const CnfFormula& f, const Assignment& a);

// First assignment in increasing binary order (variable 1 is the least
// significant bit) with no unsatisfied clause, or with at most one when
// allow_one_unsat is set. Throws SizeLimitError above `limit` variables.
std::optional<Assignment> sat_oracle(const CnfFormula& f, bool allow_one_unsat,
                                     std::size_t limit = kSatOracleLimit);

// Number of clauses containing each variable (index v - 1), and the number
// of literal occurrences of each variable.
std::vector<std::size_t> clause_occurrences(const CnfFormula& f);

// Shape checks for the two reductions; they throw DomainError naming the
// first violation. Both reject a clause that mentions a variable twice.
// Symmetric-difference shape: >= 2 variables, each occurring 1..3 times,
// clauses of size 2 or 3, at least 3 clauses.
void check_sd_shape(const CnfFormula& f);
// sd-degeneracy shape: every clause has 3 literals and every variable
// occurs in 2 or 3 clauses.
void check_sdd_shape(const CnfFormula& f);

// f together with a copy of itself on variables num_vars+1..2*num_vars.
CnfFormula duplicate_disjoint(const CnfFormula& f);

// Random formula in the symmetric-difference shape on `vars` variables and
// `clauses` clauses, or std::nullopt when the sampler cannot place every
// variable. Deterministic in the seed.
std::optional<CnfFormula> random_sd_formula(std::size_t vars, std::size_t clauses, std::uint64_t seed);

// Random formula in the sd-degeneracy shape with `clauses` clauses.
// Variables are created so that each lands in 2 or 3 clauses.
std::optional<CnfFormula> random_sdd_formula(std::size_t clauses, std::uint64_t seed);

// Parses whitespace-separated signed literals, e.g. "1 -2 3"; every
// variable of 1..num_vars must appear exactly once.
Assignment parse_assignment(std::string_view text, std::size_t num_vars);
std::string format_assignment(const Assignment& a);

} // namespace sdlab
