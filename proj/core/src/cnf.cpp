#include "sdlab/cnf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

#include "sdlab/error.hpp"
#include "sdlab/rng.hpp"
#include "sdlab/text_io.hpp"

namespace sdlab {

namespace {

std::size_t var_of(Literal l) { return static_cast<std::size_t>(std::abs(l)); }

} // namespace

CnfFormula load_dimacs(std::string_view text) {
  LineReader reader(text);
  CnfFormula f;
  bool have_header = false;
  std::size_t declared = 0;
  Clause current;
  while (auto rec = reader.next_record()) {
    const auto first = rec->tokens.front();
    if (first.front() == 'c' || first == "%") {
      continue;
    }
    if (first == "p") {
      if (have_header || rec->tokens.size() != 4 || rec->tokens[1] != "cnf") {
        throw DomainError(reader.where(*rec) + "expected a single header 'p cnf <vars> <clauses>'");
      }
      f.num_vars = parse_count(*rec, 2, reader);
      declared = parse_count(*rec, 3, reader);
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw DomainError(reader.where(*rec) + "clause before the 'p cnf' header");
    }
    for (std::size_t i = 0; i < rec->tokens.size(); ++i) {
      const auto lit = parse_int(*rec, i, reader);
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::llabs(lit)) > f.num_vars) {
        throw DomainError(reader.where(*rec) + "literal " + std::to_string(lit) + " exceeds the variable count");
      }
      current.push_back(static_cast<Literal>(lit));
    }
  }
  if (!have_header) {
    throw DomainError("missing 'p cnf' header");
  }
  if (!current.empty()) {
    throw DomainError("last clause is not terminated by 0");
  }
  if (f.clauses.size() != declared) {
    throw DomainError("header declares " + std::to_string(declared) + " clauses, found " +
                      std::to_string(f.clauses.size()));
  }
  return f;
}

std::string save_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (Literal l : c) {
      out << l << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

bool literal_value(const Assignment& a, Literal l) {
  const bool v = a.at(var_of(l) - 1);
  return l > 0 ? v : !v;
}

bool clause_satisfied(const Assignment& a, const Clause& c) {
  return std::any_of(c.begin(), c.end(), [&](Literal l) { return literal_value(a, l); });
}

std::size_t count_unsatisfied(const CnfFormula& f, const Assignment& a) {
  if (a.size() != f.num_vars) {
    throw DomainError("assignment has " + std::to_string(a.size()) + " values for " + std::to_string(f.num_vars) +
                      " variables");
  }
  return static_cast<std::size_t>(
      std::count_if(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) { return !clause_satisfied(a, c); }));
}

std::optional<Assignment> sat_oracle(const CnfFormula& f, bool allow_one_unsat, std::size_t limit) {
  if (f.num_vars > limit || f.num_vars > 30) {
    throw SizeLimitError("sat_oracle supports at most " + std::to_string(std::min<std::size_t>(limit, 30)) +
                         " variables, got " + std::to_string(f.num_vars));
  }
  struct Masks {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
  };
  std::vector<Masks> masks;
  masks.reserve(f.clauses.size());
  for (const auto& c : f.clauses) {
    Masks m;
    for (Literal l : c) {
      (l > 0 ? m.pos : m.neg) |= std::uint32_t{1} << (var_of(l) - 1);
    }
    masks.push_back(m);
  }
  const std::size_t budget = allow_one_unsat ? 1 : 0;
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t x = 0; x < total; ++x) {
    const auto bits = static_cast<std::uint32_t>(x);
    std::size_t unsat = 0;
    for (const auto& m : masks) {
      if ((bits & m.pos) == 0 && (~bits & m.neg) == 0 && ++unsat > budget) {
        break;
      }
    }
    if (unsat <= budget) {
      Assignment a(f.num_vars);
      for (std::size_t v = 0; v < f.num_vars; ++v) {
        a[v] = ((bits >> v) & 1U) != 0;
      }
      return a;
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> clause_occurrences(const CnfFormula& f) {
  std::vector<std::size_t> occ(f.num_vars, 0);
  for (const auto& c : f.clauses) {
    std::set<std::size_t> vars;
    for (Literal l : c) {
      vars.insert(var_of(l));
    }
    for (auto v : vars) {
      ++occ[v - 1];
    }
  }
  return occ;
}

namespace {

void check_common(const CnfFormula& f) {
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    std::set<std::size_t> vars;
    for (Literal l : f.clauses[i]) {
      if (l == 0 || var_of(l) > f.num_vars) {
        throw DomainError("clause " + std::to_string(i + 1) + " has an invalid literal");
      }
      if (!vars.insert(var_of(l)).second) {
        throw DomainError("clause " + std::to_string(i + 1) + " mentions variable " + std::to_string(var_of(l)) +
                          " twice");
      }
    }
  }
}

} // namespace

void check_sd_shape(const CnfFormula& f) {
  check_common(f);
  if (f.num_vars < 2) {
    throw DomainError("the symmetric-difference reduction needs at least 2 variables");
  }
  if (f.clauses.size() < 3) {
    throw DomainError("the symmetric-difference reduction needs at least 3 clauses");
  }
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto k = f.clauses[i].size();
    if (k != 2 && k != 3) {
      throw DomainError("clause " + std::to_string(i + 1) + " has " + std::to_string(k) + " literals; expected 2 or 3");
    }
  }
  const auto occ = clause_occurrences(f);
  for (std::size_t v = 0; v < occ.size(); ++v) {
    if (occ[v] == 0 || occ[v] > 3) {
      throw DomainError("variable " + std::to_string(v + 1) + " occurs " + std::to_string(occ[v]) +
                        " times; expected 1 to 3");
    }
  }
}

void check_sdd_shape(const CnfFormula& f) {
  check_common(f);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (f.clauses[i].size() != 3) {
      throw DomainError("clause " + std::to_string(i + 1) + " has " + std::to_string(f.clauses[i].size()) +
                        " literals; expected 3");
    }
  }
  const auto occ = clause_occurrences(f);
  for (std::size_t v = 0; v < occ.size(); ++v) {
    if (occ[v] < 2 || occ[v] > 3) {
      throw DomainError("variable " + std::to_string(v + 1) + " occurs in " + std::to_string(occ[v]) +
                        " clauses; expected 2 or 3");
    }
  }
}

CnfFormula duplicate_disjoint(const CnfFormula& f) {
  CnfFormula out = f;
  out.num_vars = 2 * f.num_vars;
  const auto shift = static_cast<Literal>(f.num_vars);
  for (const auto& c : f.clauses) {
    Clause copy;
    for (Literal l : c) {
      copy.push_back(l > 0 ? l + shift : l - shift);
    }
    out.clauses.push_back(std::move(copy));
  }
  return out;
}

namespace {

// Splits a multiset of variables into clauses of the given sizes with
// distinct variables per clause, trying a bounded number of shuffles.
std::optional<std::vector<Clause>> deal(std::vector<std::size_t> pool, const std::vector<std::size_t>& sizes,
                                        SplitMix64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    for (std::size_t i = pool.size(); i > 1; --i) {
      std::swap(pool[i - 1], pool[rng.next_below(i)]);
    }
    std::vector<Clause> clauses;
    std::size_t at = 0;
    bool ok = true;
    for (std::size_t k : sizes) {
      Clause c;
      std::set<std::size_t> seen;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t v = pool[at++];
        ok = ok && seen.insert(v).second;
        c.push_back(static_cast<Literal>(v));
      }
      clauses.push_back(std::move(c));
    }
    if (ok) {
      for (auto& c : clauses) {
        for (auto& l : c) {
          if (rng.next_bool()) {
            l = -l;
          }
        }
      }
      return clauses;
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<CnfFormula> random_sd_formula(std::size_t vars, std::size_t clauses, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::size_t> sizes(clauses);
  std::size_t slots = 0;
  for (auto& k : sizes) {
    k = 2 + rng.next_below(2);
    slots += k;
  }
  if (slots < vars || slots > 3 * vars) {
    return std::nullopt;
  }
  std::vector<std::size_t> count(vars, 1);
  for (std::size_t extra = slots - vars; extra > 0; --extra) {
    std::size_t v = rng.next_below(vars);
    while (count[v] == 3) {
      v = (v + 1) % vars;
    }
    ++count[v];
  }
  std::vector<std::size_t> pool;
  for (std::size_t v = 0; v < vars; ++v) {
    pool.insert(pool.end(), count[v], v + 1);
  }
  auto dealt = deal(std::move(pool), sizes, rng);
  if (!dealt) {
    return std::nullopt;
  }
  return CnfFormula{vars, std::move(*dealt)};
}

std::optional<CnfFormula> random_sdd_formula(std::size_t clauses, std::uint64_t seed) {
  if (clauses < 2) {
    return std::nullopt;
  }
  SplitMix64 rng(seed);
  const std::size_t slots = 3 * clauses;
  const std::size_t lo = clauses;
  const std::size_t hi = slots / 2;
  const std::size_t vars = lo + rng.next_below(hi - lo + 1);
  std::vector<std::size_t> count(vars, 2);
  for (std::size_t extra = slots - 2 * vars; extra > 0; --extra) {
    std::size_t v = rng.next_below(vars);
    while (count[v] == 3) {
      v = (v + 1) % vars;
    }
    ++count[v];
  }
  std::vector<std::size_t> pool;
  for (std::size_t v = 0; v < vars; ++v) {
    pool.insert(pool.end(), count[v], v + 1);
  }
  auto dealt = deal(std::move(pool), std::vector<std::size_t>(clauses, 3), rng);
  if (!dealt) {
    return std::nullopt;
  }
  return CnfFormula{vars, std::move(*dealt)};
}

Assignment parse_assignment(std::string_view text, std::size_t num_vars) {
  Assignment a(num_vars, false);
  std::vector<bool> seen(num_vars, false);
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i == text.size()) {
      break;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    long long lit = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, lit);
    if (ec != std::errc{} || ptr != text.data() + j) {
      throw DomainError("assignment token '" + std::string(text.substr(i, j - i)) + "' is not an integer");
    }
    i = j;
    if (lit == 0) {
      continue;
    }
    const auto v = static_cast<std::size_t>(std::llabs(lit));
    if (v > num_vars || seen[v - 1]) {
      throw DomainError("assignment literal " + std::to_string(lit) + " is out of range or repeated");
    }
    seen[v - 1] = true;
    a[v - 1] = lit > 0;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw DomainError("assignment does not set every variable");
  }
  return a;
}

std::string format_assignment(const Assignment& a) {
  std::string out;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (v > 0) {
      out += ' ';
    }
    out += (a[v] ? "" : "-") + std::to_string(v + 1);
  }
  out += " 0";
  return out;
}

} // namespace sdlab
