#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "closys/attr_set.hpp"
#include "closys/canonical.hpp"
#include "closys/closure.hpp"
#include "closys/errors.hpp"
#include "closys/implication.hpp"

// Exact searches for optimum bases. All of these are exponential; the limits
// below turn runaway instances into BoundExceeded instead of hangs.

namespace closys {

struct SearchLimits {
  std::size_t max_attributes = 10;  // full optimum search only
  std::size_t max_subset_bits = 20;  // |C| for k_C, |phi(x)| for b_C, |phi(C) \ C| per conclusion
  std::size_t max_nodes = 5'000'000;
  std::size_t max_bases = 10'000;
};

struct Witness {
  std::size_t size = 0;
  AttrSet set;
};

namespace detail {

/// Calls f on every k-subset of pool in lexicographic index order until f
/// returns true. Returns whether it stopped early.
template <class F>
bool for_each_combination(const std::vector<std::size_t>& pool, std::size_t universe, std::size_t k, F&& f) {
  if (k > pool.size()) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    AttrSet s(universe);
    for (std::size_t i : idx) s.set(pool[i]);
    if (f(s)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void require_bits(std::size_t bits, const SearchLimits& limits, const char* what) {
  if (bits > limits.max_subset_bits)
    throw BoundExceeded(std::string(what) + ": " + std::to_string(bits) + " candidate elements exceed the limit of " +
                        std::to_string(limits.max_subset_bits));
}

/// All smallest subsets U of pool with phi(U) == target, in lexicographic
/// order. Empty if none exists.
inline std::vector<AttrSet> smallest_generators(const ClosureEngine& engine, const AttrSet& pool,
                                                const AttrSet& target) {
  const auto elems = pool.elements();
  std::vector<AttrSet> out;
  for (std::size_t k = 0; k <= elems.size() && out.empty(); ++k)
    for_each_combination(elems, pool.universe(), k, [&](const AttrSet& u) {
      if (engine.closure(u) == target) out.push_back(u);
      return false;
    });
  return out;
}

/// Naive closure over a small list of pairs. Used inside the optimum search
/// where the list changes at every leaf.
inline AttrSet small_closure(const std::vector<std::pair<AttrSet, AttrSet>>& imps, AttrSet x) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [p, c] : imps)
      if (p.is_subset_of(x) && !c.is_subset_of(x)) {
        x |= c;
        changed = true;
      }
  }
  return x;
}

inline std::size_t critical_index(const ImplicationSet& canon, const AttrSet& c) {
  for (std::size_t i = 0; i < canon.size(); ++i)
    if (canon[i].premise() == c) return i;
  throw PreconditionError("{" + canon.ground().format(c, ",") + "} is not a critical set");
}

}  // namespace detail

/// Smallest U inside the critical set C with phi(U) = phi(C); the
/// lexicographically first one is returned.
inline Witness k_c(const ImplicationSet& sigma, const AttrSet& c, const SearchLimits& limits = {}) {
  const auto canon = canonical_basis(sigma);
  const std::size_t i = detail::critical_index(canon, c);
  detail::require_bits(c.count(), limits, "k_C search");
  ClosureEngine engine(canon);
  const AttrSet target = c | canon[i].conclusion();
  const auto gens = detail::smallest_generators(engine, c, target);
  if (gens.empty()) throw InternalError("critical set does not generate its own closure");
  if (Saturator(canon)(gens.front()) != c) throw InternalError("k_C witness does not saturate to its critical set");
  return {gens.front().count(), gens.front()};
}

/// Smallest B inside phi({x}) \ {x} with phi(B) = phi({x}) \ {x}. Needs
/// phi({x}) \ {x} to be closed, as in a standard system.
inline Witness b_c(const ImplicationSet& sigma, std::size_t x, const SearchLimits& limits = {}) {
  ClosureEngine engine(sigma);
  const AttrSet lower = engine.closure(sigma.ground().singleton(x)).without(x);
  if (lower.empty()) throw PreconditionError("{" + sigma.ground().name(x) + "} is closed, so it is not critical");
  if (engine.closure(lower) != lower)
    throw PreconditionError("phi(" + sigma.ground().name(x) + ") minus itself is not closed");
  detail::require_bits(lower.count(), limits, "b_C search");
  const auto gens = detail::smallest_generators(engine, lower, lower);
  return {gens.front().count(), gens.front()};
}

/// Extreme points of a closed set x: the y in x with y outside phi(x \ y).
inline AttrSet extreme_points(const ClosureEngine& engine, const AttrSet& x) {
  AttrSet out(x.universe());
  x.for_each([&](std::size_t y) {
    if (!engine.closure(x.without(y)).test(y)) out.set(y);
  });
  return out;
}

/// Everything the optimum search learned about one system.
struct OptimumSearch {
  struct Critical {
    AttrSet set;
    AttrSet closure;
    std::vector<AttrSet> premises;  // all smallest generators inside the set
  };
  struct Group {
    std::vector<std::size_t> members;  // indices into `critical`
    std::size_t best = 0;              // minimal total conclusion size
    std::vector<std::vector<AttrSet>> tuples;  // optimal conclusions, one per member
    bool binary = false;
  };

  ImplicationSet canonical;
  std::vector<Critical> critical;
  std::vector<Group> groups;
  std::vector<ImplicationSet> bases;  // normalized, sorted

  std::size_t min_left_size() const {
    std::size_t s = 0;
    for (const auto& c : critical) s += c.premises.front().count();
    return s;
  }
  std::size_t min_right_size() const {
    std::size_t s = 0;
    for (const auto& g : groups) s += g.best;
    return s;
  }
  std::size_t min_nonbinary_right_size() const {
    std::size_t s = 0;
    for (const auto& g : groups)
      if (!g.binary) s += g.best;
    return s;
  }
};

namespace detail {

/// Branch and bound over conclusion tuples for critical sets sharing one
/// closure. `rest` is the canonical basis without the group.
class GroupSolver {
 public:
  GroupSolver(const std::vector<std::pair<AttrSet, AttrSet>>& rest, std::vector<AttrSet> sets, AttrSet closure,
              const SearchLimits& limits)
      : imps_(rest), sets_(std::move(sets)), closure_(std::move(closure)), limits_(limits) {
    const std::size_t r = sets_.size();
    for (const auto& c : sets_) {
      const AttrSet avail = closure_ - c;
      require_bits(avail.count(), limits_, "conclusion search");
      std::vector<AttrSet> opts;
      const auto elems = avail.elements();
      for (std::size_t k = 1; k <= elems.size(); ++k)
        for_each_combination(elems, c.universe(), k, [&](const AttrSet& v) {
          opts.push_back(v);
          return false;
        });
      options_.push_back(std::move(opts));
    }
    base_ = imps_.size();
    for (std::size_t i = 0; i < r; ++i) imps_.emplace_back(sets_[i], closure_ - sets_[i]);

    // With every other member at full conclusion, validity is monotone in
    // the member's own conclusion, so this is a lower bound per member.
    lower_.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (const auto& v : options_[i]) {
        imps_[base_ + i].second = v;
        if (valid()) {
          lower_[i] = v.count();
          break;
        }
      }
      imps_[base_ + i].second = closure_ - sets_[i];
    }
    suffix_.assign(r + 1, 0);
    for (std::size_t i = r; i-- > 0;) suffix_[i] = suffix_[i + 1] + lower_[i];
  }

  void solve() { dfs(0, 0); }

  std::size_t best() const { return best_; }
  const std::vector<std::vector<AttrSet>>& tuples() const { return tuples_; }

 private:
  bool valid() const {
    for (const auto& c : sets_)
      if (small_closure(imps_, c) != closure_) return false;
    return true;
  }

  void dfs(std::size_t i, std::size_t used) {
    if (++nodes_ > limits_.max_nodes) throw BoundExceeded("optimum search exceeds the node limit");
    if (i == sets_.size()) {
      if (!valid()) return;
      if (used < best_) {
        best_ = used;
        tuples_.clear();
      }
      std::vector<AttrSet> t;
      for (std::size_t j = 0; j < sets_.size(); ++j) t.push_back(imps_[base_ + j].second);
      tuples_.push_back(std::move(t));
      return;
    }
    const AttrSet full = closure_ - sets_[i];
    for (const auto& v : options_[i]) {
      if (used + v.count() + suffix_[i + 1] > best_) break;  // options grow in size
      imps_[base_ + i].second = v;
      dfs(i + 1, used + v.count());
    }
    imps_[base_ + i].second = full;
  }

  std::vector<std::pair<AttrSet, AttrSet>> imps_;
  std::vector<AttrSet> sets_;
  AttrSet closure_;
  const SearchLimits& limits_;
  std::vector<std::vector<AttrSet>> options_;
  std::size_t base_ = 0;
  std::vector<std::size_t> lower_, suffix_;
  std::size_t best_ = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<AttrSet>> tuples_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Every optimum basis: one implication per critical set C, with premise a
/// smallest generator inside C and conclusion inside phi(C) \ C. Critical
/// sets with different closures are solved independently; within a closure
/// class the conclusions are chosen jointly.
inline OptimumSearch optimum_search(const ImplicationSet& sigma, const SearchLimits& limits = {}) {
  if (sigma.universe() > limits.max_attributes)
    throw BoundExceeded("optimum search is limited to " + std::to_string(limits.max_attributes) +
                        " attributes because finding an optimum basis is NP-complete; got " + std::to_string(sigma.universe()));
  OptimumSearch out{canonical_basis(sigma), {}, {}, {}};
  const auto& canon = out.canonical;
  ClosureEngine engine(canon);

  std::map<AttrSet, std::vector<std::size_t>> by_closure;
  std::vector<AttrSet> group_order;
  for (std::size_t i = 0; i < canon.size(); ++i) {
    const AttrSet c = canon[i].premise();
    const AttrSet cl = c | canon[i].conclusion();
    detail::require_bits(c.count(), limits, "premise search");
    auto gens = detail::smallest_generators(engine, c, cl);
    if (gens.empty()) throw InternalError("critical set does not generate its own closure");
    out.critical.push_back({c, cl, std::move(gens)});
    auto& slot = by_closure[cl];
    if (slot.empty()) group_order.push_back(cl);
    slot.push_back(i);
  }

  std::size_t count = 1;
  for (const auto& c : out.critical) {
    count *= c.premises.size();
    if (count > limits.max_bases) throw BoundExceeded("more than " + std::to_string(limits.max_bases) + " optimum bases");
  }

  for (const auto& cl : group_order) {
    const auto& members = by_closure[cl];
    std::vector<std::pair<AttrSet, AttrSet>> rest;
    std::vector<AttrSet> sets;
    for (std::size_t i = 0; i < canon.size(); ++i)
      if (std::find(members.begin(), members.end(), i) == members.end())
        rest.emplace_back(canon[i].premise(), canon[i].conclusion());
    for (std::size_t i : members) sets.push_back(canon[i].premise());
    detail::GroupSolver solver(rest, sets, cl, limits);
    solver.solve();
    OptimumSearch::Group g;
    g.members = members;
    g.best = solver.best();
    g.tuples = solver.tuples();
    g.binary = sets.size() == 1 && sets.front().count() == 1;
    count *= g.tuples.size();
    if (count > limits.max_bases) throw BoundExceeded("more than " + std::to_string(limits.max_bases) + " optimum bases");
    out.groups.push_back(std::move(g));
  }

  // Mixed-radix walk over premise choices and group tuples.
  std::vector<std::size_t> radix;
  for (const auto& c : out.critical) radix.push_back(c.premises.size());
  for (const auto& g : out.groups) radix.push_back(g.tuples.size());
  std::vector<std::size_t> digit(radix.size(), 0);
  std::vector<AttrSet> conclusion(canon.size());
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t gi = 0; gi < out.groups.size(); ++gi) {
      const auto& g = out.groups[gi];
      const auto& t = g.tuples[digit[out.critical.size() + gi]];
      for (std::size_t j = 0; j < g.members.size(); ++j) conclusion[g.members[j]] = t[j];
    }
    ImplicationSet basis(canon.ground());
    for (std::size_t i = 0; i < canon.size(); ++i) basis.add(out.critical[i].premises[digit[i]], conclusion[i]);
    out.bases.push_back(basis.normalized());
    for (std::size_t d = 0; d < digit.size(); ++d) {
      if (++digit[d] < radix[d]) break;
      digit[d] = 0;
    }
  }
  std::sort(out.bases.begin(), out.bases.end(),
            [](const ImplicationSet& a, const ImplicationSet& b) { return a.implications() < b.implications(); });
  return out;
}

inline std::vector<ImplicationSet> optimum_bases(const ImplicationSet& sigma, const SearchLimits& limits = {}) {
  return optimum_search(sigma, limits).bases;
}

inline std::size_t min_right_size(const ImplicationSet& sigma, const SearchLimits& limits = {}) {
  return optimum_search(sigma, limits).min_right_size();
}

inline std::size_t min_nonbinary_right_size(const ImplicationSet& sigma, const SearchLimits& limits = {}) {
  return optimum_search(sigma, limits).min_nonbinary_right_size();
}

}  // namespace closys
