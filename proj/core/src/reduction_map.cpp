#include <sstream>

#include "sdlab/reductions.hpp"

namespace sdlab {

std::string role_tag(const Role& r) {
  auto n = [](std::uint32_t x) { return std::to_string(x); };
  switch (r.kind) {
  case RoleKind::bubble_cell:
    return "bubble:" + n(r.a) + ":" + n(r.b) + ":" + n(r.c);
  case RoleKind::shared_neighbor:
    return "ny:" + n(r.a) + ":" + n(r.b) + ":y" + n(r.c);
  case RoleKind::literal:
    return std::string("lit:") + (r.b != 0 ? "+" : "-") + n(r.a);
  case RoleKind::clause_v:
    return "vc:" + n(r.a);
  case RoleKind::clause_d:
    return "dc:" + n(r.a);
  case RoleKind::representative:
    return "rep" + n(r.b) + ":" + n(r.a);
  case RoleKind::transition:
    return "trans:" + n(r.a) + ":" + n(r.b);
  case RoleKind::clause_top:
    return "ctop:" + n(r.a);
  case RoleKind::clause_literal:
    return "clit:" + n(r.a) + ":" + n(r.b);
  case RoleKind::clause_bottom:
    return "cbot:" + n(r.a);
  case RoleKind::gamma:
    return "gamma";
  case RoleKind::iota:
    return "iota";
  }
  return "unknown";
}

std::string save_roles(const ReductionMap& map) {
  std::ostringstream out;
  for (std::size_t v = 0; v < map.roles.size(); ++v) {
    out << "r " << v << ' ' << role_tag(map.roles[v]) << '\n';
  }
  return out.str();
}

} // namespace sdlab
