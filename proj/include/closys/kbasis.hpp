#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "closys/attr_set.hpp"
#include "closys/canonical.hpp"
#include "closys/closure.hpp"
#include "closys/errors.hpp"
#include "closys/implication.hpp"
#include "closys/standard.hpp"

namespace closys {

/// Which removable maximal element the greedy generator drops first.
enum class Tiebreak { First, Last };

inline Tiebreak parse_tiebreak(const std::string& s) {
  if (s == "first") return Tiebreak::First;
  if (s == "last") return Tiebreak::Last;
  throw Error("unknown tiebreak '" + s + "' (expected first or last)");
}

inline const char* to_string(Tiebreak t) { return t == Tiebreak::First ? "first" : "last"; }

namespace detail {

inline void require_ideal(const PhiOrder& ord, const AttrSet& c) {
  if (!ord.is_order_ideal(c))
    throw PreconditionError("{" + ord.ground.format(c, ",") + "} is not an order ideal of the phi-order");
}

}  // namespace detail

/// Greedy minimal order generator of the order ideal c: drop maximal
/// elements while the closure stays phi(c), then keep the maximal elements
/// of what is left.
inline AttrSet minimal_order_generator(const ClosureEngine& engine, const PhiOrder& ord, const AttrSet& c,
                                       Tiebreak tiebreak = Tiebreak::First) {
  detail::require_ideal(ord, c);
  const AttrSet target = engine.closure(c);
  AttrSet x = c;
  for (;;) {
    auto maxima = ord.max_elements(x).elements();
    if (tiebreak == Tiebreak::Last) std::reverse(maxima.begin(), maxima.end());
    bool removed = false;
    for (std::size_t m : maxima) {
      AttrSet y = x.without(m);
      if (engine.closure(y) == target) {
        x = std::move(y);
        removed = true;
        break;
      }
    }
    if (!removed) break;
  }
  return ord.max_elements(x);
}

inline AttrSet minimal_order_generator(const ImplicationSet& sigma, const AttrSet& c,
                                       Tiebreak tiebreak = Tiebreak::First) {
  return minimal_order_generator(ClosureEngine(sigma), phi_order(sigma), c, tiebreak);
}

/// Every minimal order generator of c, over all removal orders. Reached
/// ideals are memoized; more than `max_states` of them raises BoundExceeded.
inline std::vector<AttrSet> all_minimal_order_generators(const ClosureEngine& engine, const PhiOrder& ord,
                                                         const AttrSet& c, std::size_t max_states = 100000) {
  detail::require_ideal(ord, c);
  const AttrSet target = engine.closure(c);
  std::set<AttrSet> seen;
  std::set<AttrSet> results;
  std::vector<AttrSet> stack{c};
  seen.insert(c);
  while (!stack.empty()) {
    AttrSet x = std::move(stack.back());
    stack.pop_back();
    bool leaf = true;
    for (std::size_t m : ord.max_elements(x).elements()) {
      AttrSet y = x.without(m);
      if (engine.closure(y) != target) continue;
      leaf = false;
      if (seen.insert(y).second) {
        if (seen.size() > max_states) throw BoundExceeded("minimal order generator enumeration exceeds state bound");
        stack.push_back(std::move(y));
      }
    }
    if (leaf) results.insert(ord.max_elements(x));
  }
  return {results.begin(), results.end()};
}

/// C_K -> max(Y_C) for each C -> Y_C of the canonical basis. Normalized.
inline ImplicationSet k_basis_from_canonical(const ImplicationSet& canon, Tiebreak tiebreak = Tiebreak::First) {
  ClosureEngine engine(canon);
  const PhiOrder ord = phi_order(canon);
  ImplicationSet out(canon.ground());
  for (const auto& imp : canon) {
    const AttrSet premise =
        imp.is_binary() ? imp.premise() : minimal_order_generator(engine, ord, imp.premise(), tiebreak);
    out.add(premise, ord.max_elements(imp.conclusion()));
  }
  return out.normalized();
}

inline ImplicationSet k_basis(const ImplicationSet& sigma, Tiebreak tiebreak = Tiebreak::First) {
  require_standard(sigma);
  return k_basis_from_canonical(canonical_basis(sigma), tiebreak);
}

struct KBasisLimits {
  std::size_t max_states = 100000;  // per critical set
  std::size_t max_bases = 10000;
};

/// Every K-basis, each normalized, listed in sorted order.
inline std::vector<ImplicationSet> all_k_bases(const ImplicationSet& sigma, KBasisLimits limits = {}) {
  require_standard(sigma);
  const auto canon = canonical_basis(sigma);
  ClosureEngine engine(canon);
  const PhiOrder ord = phi_order(canon);

  std::vector<std::vector<AttrSet>> choices;
  std::size_t total = 1;
  for (const auto& imp : canon) {
    if (imp.is_binary())
      choices.push_back({imp.premise()});
    else
      choices.push_back(all_minimal_order_generators(engine, ord, imp.premise(), limits.max_states));
    total *= choices.back().size();
    if (total > limits.max_bases) throw BoundExceeded("more than " + std::to_string(limits.max_bases) + " K-bases");
  }

  std::vector<ImplicationSet> out;
  std::vector<std::size_t> pick(canon.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    ImplicationSet basis(canon.ground());
    for (std::size_t i = 0; i < canon.size(); ++i)
      basis.add(choices[i][pick[i]], ord.max_elements(canon[i].conclusion()));
    out.push_back(basis.normalized());
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
  }
  std::sort(out.begin(), out.end(), [](const ImplicationSet& a, const ImplicationSet& b) {
    return a.implications() < b.implications();
  });
  return out;
}

}  // namespace closys
