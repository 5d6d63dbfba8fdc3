#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "closys/closure.hpp"
#include "closys/errors.hpp"
#include "closys/implication.hpp"
#include "closys/relation.hpp"

namespace closys {

struct StandardReport {
  bool standard = true;
  bool empty_closed = true;
  /// Attributes i for which phi({i}) \ {i} is not closed.
  std::vector<std::size_t> violations;
};

inline StandardReport check_standard(const ImplicationSet& sigma) {
  StandardReport r;
  ClosureEngine engine(sigma);
  const std::size_t n = sigma.universe();
  r.empty_closed = engine.closure(AttrSet(n)).empty();
  for (std::size_t i = 0; i < n; ++i) {
    const AttrSet below = engine.closure(sigma.ground().singleton(i)).without(i);
    if (engine.closure(below) != below) r.violations.push_back(i);
  }
  r.standard = r.empty_closed && r.violations.empty();
  return r;
}

inline bool is_standard(const ImplicationSet& sigma) { return check_standard(sigma).standard; }

inline void require_standard(const ImplicationSet& sigma) {
  auto r = check_standard(sigma);
  if (r.standard) return;
  std::string msg = "closure system is not standard";
  if (!r.empty_closed) msg += "; the empty set is not closed";
  if (!r.violations.empty()) {
    msg += "; phi(x) \\ {x} is not closed for x in {";
    for (std::size_t k = 0; k < r.violations.size(); ++k)
      msg += (k ? ", " : "") + sigma.ground().name(r.violations[k]);
    msg += "}";
  }
  throw NotStandardError(msg, r.violations);
}

/// b <= a iff b is in phi({a}). On a standard system this is a partial order.
struct PhiOrder {
  GroundSet ground;
  /// below[a] = phi({a}), so below[a].test(b) means b <= a.
  std::vector<AttrSet> below;
  /// a covers b: (a, b) with b < a and nothing strictly between.
  PairRelation covers;

  bool leq(std::size_t b, std::size_t a) const { return below.at(a).test(b); }
  bool less(std::size_t b, std::size_t a) const { return a != b && leq(b, a); }

  /// Elements of x with nothing of x strictly above them.
  AttrSet max_elements(const AttrSet& x) const {
    AttrSet out = x;
    x.for_each([&](std::size_t a) {
      AttrSet strictly_below = below[a].without(a);
      out -= strictly_below;
    });
    return out;
  }

  /// Downward closed: every element below a member is a member.
  bool is_order_ideal(const AttrSet& x) const {
    bool ok = true;
    x.for_each([&](std::size_t a) {
      if (!below[a].is_subset_of(x)) ok = false;
    });
    return ok;
  }

  /// Down-set generated by x.
  AttrSet ideal_of(const AttrSet& x) const {
    AttrSet out(x.universe());
    x.for_each([&](std::size_t a) { out |= below[a]; });
    return out;
  }

  /// Y << X: every y in Y lies below some x in X.
  bool refines(const AttrSet& y, const AttrSet& x) const { return y.is_subset_of(ideal_of(x)); }
};

/// Throws NotStandardError when antisymmetry fails, or when the system is not
/// standard in any other way.
inline PhiOrder phi_order(const ImplicationSet& sigma) {
  const std::size_t n = sigma.universe();
  ClosureEngine engine(sigma);
  PhiOrder ord{sigma.ground(), {}, PairRelation(sigma.ground())};
  ord.below.reserve(n);
  for (std::size_t a = 0; a < n; ++a) ord.below.push_back(engine.closure(sigma.ground().singleton(a)));

  std::vector<std::size_t> twins;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (ord.leq(a, b) && ord.leq(b, a)) {
        twins.push_back(a);
        twins.push_back(b);
      }
  if (!twins.empty())
    throw NotStandardError("attributes " + sigma.ground().name(twins[0]) + " and " + sigma.ground().name(twins[1]) +
                               " generate each other; the system is not standard",
                           twins);
  require_standard(sigma);

  for (std::size_t a = 0; a < n; ++a) {
    const AttrSet lower = ord.below[a].without(a);
    ord.max_elements(lower).for_each([&](std::size_t b) { ord.covers.add(a, b); });
  }
  return ord;
}

}  // namespace closys
