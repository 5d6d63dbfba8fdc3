#pragma once

#include <cstddef>
#include <vector>

#include "closys/attr_set.hpp"
#include "closys/implication.hpp"

namespace closys {

/// Forward-chaining closure with per-implication counters of unsatisfied
/// premise attributes (LinClosure). Building the index costs O(s(sigma));
/// each closure call is linear in s(sigma) as well.
class ClosureEngine {
 public:
  explicit ClosureEngine(const ImplicationSet& sigma)
      : n_(sigma.universe()), premise_size_(sigma.size()), watchers_(sigma.universe()) {
    conclusions_.reserve(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      const auto& imp = sigma[i];
      premise_size_[i] = imp.premise().count();
      conclusions_.push_back(imp.conclusion().elements());
      imp.premise().for_each([&](std::size_t a) { watchers_[a].push_back(i); });
    }
  }

  std::size_t universe() const noexcept { return n_; }
  std::size_t implication_count() const noexcept { return premise_size_.size(); }

  AttrSet closure(const AttrSet& x) const { return run(x, nullptr); }

  /// Closure using only the implications i with enabled[i] set.
  AttrSet closure(const AttrSet& x, const std::vector<bool>& enabled) const { return run(x, &enabled); }

 private:
  AttrSet run(const AttrSet& x, const std::vector<bool>* enabled) const {
    AttrSet result = x;
    std::vector<std::size_t> pending = premise_size_;
    std::vector<std::size_t> queue = x.elements();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t i : watchers_[queue[head]]) {
        if (enabled && !(*enabled)[i]) continue;
        if (--pending[i] != 0) continue;
        for (std::size_t c : conclusions_[i]) {
          if (result.test(c)) continue;
          result.set(c);
          queue.push_back(c);
        }
      }
    }
    return result;
  }

  std::size_t n_;
  std::vector<std::size_t> premise_size_;
  std::vector<std::vector<std::size_t>> conclusions_;
  std::vector<std::vector<std::size_t>> watchers_;
};

inline AttrSet closure(const ImplicationSet& sigma, const AttrSet& x) { return ClosureEngine(sigma).closure(x); }

/// Fire every applicable implication until nothing changes. Quadratic, kept
/// as the reference the counter-based engine is tested against.
inline AttrSet closure_naive(const ImplicationSet& sigma, const AttrSet& x) {
  AttrSet result = x;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& imp : sigma) {
      if (imp.premise().is_subset_of(result) && !imp.conclusion().is_subset_of(result)) {
        result |= imp.conclusion();
        changed = true;
      }
    }
  }
  return result;
}

inline bool follows(const ImplicationSet& sigma, const Implication& imp) {
  return imp.conclusion().is_subset_of(closure(sigma, imp.premise()));
}

inline bool follows_all(const ImplicationSet& sigma, const ImplicationSet& other) {
  ClosureEngine engine(sigma);
  for (const auto& imp : other)
    if (!imp.conclusion().is_subset_of(engine.closure(imp.premise()))) return false;
  return true;
}

/// Both sets define the same closure system.
inline bool equivalent(const ImplicationSet& a, const ImplicationSet& b) {
  if (a.universe() != b.universe()) return false;
  return follows_all(a, b) && follows_all(b, a);
}

/// No single implication can be dropped without changing the closure system.
inline bool is_nonredundant(const ImplicationSet& sigma) {
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (follows(sigma.without(i), sigma[i])) return false;
  return true;
}

}  // namespace closys
