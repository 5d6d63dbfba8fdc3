#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "closys/canonical.hpp"
#include "closys/closure.hpp"
#include "closys/errors.hpp"
#include "closys/implication.hpp"
#include "closys/kbasis.hpp"
#include "closys/relation.hpp"
#include "closys/standard.hpp"

namespace closys {

/// Canonical basis with every non-binary premise replaced by its minimal
/// order generator; conclusions are left alone. Normalized.
inline ImplicationSet sigma_star_from_canonical(const ImplicationSet& canon, Tiebreak tiebreak = Tiebreak::First) {
  ClosureEngine engine(canon);
  const PhiOrder ord = phi_order(canon);
  ImplicationSet out(canon.ground());
  for (const auto& imp : canon) {
    if (imp.is_binary())
      out.push_back(imp);
    else
      out.add(minimal_order_generator(engine, ord, imp.premise(), tiebreak), imp.conclusion());
  }
  return out.normalized();
}

inline ImplicationSet sigma_star(const ImplicationSet& sigma, Tiebreak tiebreak = Tiebreak::First) {
  require_standard(sigma);
  return sigma_star_from_canonical(canonical_basis(sigma), tiebreak);
}

/// (a, b) for a in the premise and b in the conclusion of a non-binary
/// implication. Only defined for regular bases.
inline PairRelation delta(const ImplicationSet& sigma) {
  if (!is_regular(sigma)) throw NotRegularError("delta is defined for regular bases only");
  PairRelation rel(sigma.ground());
  for (const auto& imp : sigma) {
    if (imp.is_binary()) continue;
    imp.premise().for_each([&](std::size_t a) { imp.conclusion().for_each([&](std::size_t b) { rel.add(a, b); }); });
  }
  return rel;
}

/// A D-cycle x0 D x1 D ... D x0, if there is one. Derived from the dual
/// relation computed on the refined canonical basis.
inline std::optional<std::vector<std::size_t>> d_cycle(const ImplicationSet& sigma, Tiebreak tiebreak = Tiebreak::First) {
  auto cycle = find_cycle(delta(sigma_star(sigma, tiebreak)));
  if (!cycle) return std::nullopt;
  std::reverse(cycle->begin(), cycle->end());
  // Rotate so the walk starts at its smallest attribute.
  cycle->pop_back();
  auto low = std::min_element(cycle->begin(), cycle->end());
  std::rotate(cycle->begin(), low, cycle->end());
  cycle->push_back(cycle->front());
  return cycle;
}

inline bool is_d_cycle_free(const ImplicationSet& sigma, Tiebreak tiebreak = Tiebreak::First) {
  return !has_cycle(delta(sigma_star(sigma, tiebreak)));
}

/// "b→c→b" style rendering of a cycle.
inline std::string format_cycle(const GroundSet& g, const std::vector<std::size_t>& cycle) {
  std::string out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += "→";
    out += g.name(cycle[i]);
  }
  return out;
}

/// Throws DCycleError naming the cycle.
inline void require_d_cycle_free(const ImplicationSet& sigma) {
  if (auto cycle = d_cycle(sigma))
    throw DCycleError("D-cycle: " + format_cycle(sigma.ground(), *cycle), *cycle);
}

}  // namespace closys
