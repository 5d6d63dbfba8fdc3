#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "closys/attr_set.hpp"
#include "closys/closure.hpp"
#include "closys/errors.hpp"
#include "closys/implication.hpp"

namespace closys {

/// Saturation operator of the closure system defined by a basis.
///
/// sigma(X) is the least fixpoint above X of firing those implications
/// A -> B whose premise closure is strictly below phi(X). Premise closures
/// are computed once, on construction.
class Saturator {
 public:
  explicit Saturator(const ImplicationSet& sigma) : sigma_(sigma), engine_(sigma) {
    premise_closure_.reserve(sigma.size());
    for (const auto& imp : sigma) premise_closure_.push_back(engine_.closure(imp.premise()));
  }

  AttrSet closure(const AttrSet& x) const { return engine_.closure(x); }
  const AttrSet& premise_closure(std::size_t i) const { return premise_closure_.at(i); }

  AttrSet operator()(const AttrSet& x) const { return saturate(x, engine_.closure(x)); }

  /// Same, when phi(x) is already known.
  AttrSet saturate(const AttrSet& x, const AttrSet& phi_x) const {
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < premise_closure_.size(); ++i)
      if (premise_closure_[i].is_proper_subset_of(phi_x)) usable.push_back(i);
    AttrSet result = x;
    std::vector<bool> fired(premise_closure_.size(), false);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i : usable) {
        if (fired[i] || !sigma_[i].premise().is_subset_of(result)) continue;
        fired[i] = true;
        // The whole premise closure is reachable through usable implications.
        result |= premise_closure_[i];
        changed = true;
      }
    }
    return result;
  }

 private:
  ImplicationSet sigma_;
  ClosureEngine engine_;
  std::vector<AttrSet> premise_closure_;
};

inline AttrSet saturation(const ImplicationSet& sigma, const AttrSet& x) { return Saturator(sigma)(x); }

/// Canonical basis by Day's procedure: map every A -> B to sigma(A) -> phi(A),
/// drop duplicates and trivial F -> F, and among implications with equal
/// closure keep only the containment-minimal premises. Output is normalized.
inline ImplicationSet canonical_basis(const ImplicationSet& sigma) {
  Saturator sat(sigma);
  std::vector<std::pair<AttrSet, AttrSet>> pairs;  // (sigma(A), phi(A))
  pairs.reserve(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const AttrSet& phi = sat.premise_closure(i);
    AttrSet s = sat.saturate(sigma[i].premise(), phi);
    if (s == phi) continue;
    pairs.emplace_back(std::move(s), phi);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  ImplicationSet out(sigma.ground());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < pairs.size() && keep; ++j)
      if (j != i && pairs[j].second == pairs[i].second && pairs[j].first.is_proper_subset_of(pairs[i].first))
        keep = false;
    if (keep) out.add(pairs[i].first, pairs[i].second - pairs[i].first);
  }
  return out.normalized();
}

/// Canonical basis of an arbitrary closure operator on the ground set, by
/// Ganter's NextClosure over pseudo-closed sets. Needs phi(empty) = empty.
/// Runs in time proportional to the number of closed sets.
inline ImplicationSet canonical_basis_from_closure(const GroundSet& ground,
                                                   const std::function<AttrSet(const AttrSet&)>& phi) {
  const std::size_t n = ground.size();
  ImplicationSet found(ground);
  std::vector<AttrSet> found_closure;

  // Fires P -> phi(P) for known pseudo-closed P strictly inside x.
  auto star = [&](AttrSet x) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < found.size(); ++i) {
        const auto& p = found[i].premise();
        if (p.is_proper_subset_of(x) && !found_closure[i].is_subset_of(x)) {
          x |= found_closure[i];
          changed = true;
        }
      }
    }
    return x;
  };

  AttrSet a(n);
  if (!phi(a).empty()) throw PreconditionError("closure of the empty set must be empty");
  const AttrSet full = AttrSet::full(n);
  for (;;) {
    const AttrSet closed = phi(a);
    if (closed != a) {
      found.add(a, closed - a);
      found_closure.push_back(closed);
    }
    if (a == full) break;
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (a.test(i)) continue;
      AttrSet prefix(n);
      a.for_each([&](std::size_t e) {
        if (e < i) prefix.set(e);
      });
      AttrSet next = star(prefix.with(i));
      bool ok = true;
      (next - a).for_each([&](std::size_t e) {
        if (e < i) ok = false;
      });
      if (ok) {
        a = std::move(next);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return found.normalized();
}

/// No non-binary A -> D has an a in A with A \ {a} inside phi({a}).
inline bool is_regular(const ImplicationSet& sigma) {
  ClosureEngine engine(sigma);
  std::vector<AttrSet> single;
  for (std::size_t a = 0; a < sigma.universe(); ++a) single.push_back(engine.closure(sigma.ground().singleton(a)));
  for (const auto& imp : sigma) {
    if (imp.is_binary()) continue;
    bool absorbed = false;
    imp.premise().for_each([&](std::size_t a) {
      if (imp.premise().without(a).is_subset_of(single[a])) absorbed = true;
    });
    if (absorbed) return false;
  }
  return true;
}

/// Regular equivalent basis, never larger in count, sL or sR.
///
/// Repeatedly takes the first non-binary {a} u F -> D with F inside phi({a})
/// (smallest such a), replaces it by F -> D n phi(F) and merges D \ phi(F)
/// into the implication with premise {a}. Each step lowers sL, so the loop
/// ends. The input is aggregated first.
inline ImplicationSet regularize(const ImplicationSet& sigma) {
  ClosureEngine engine(sigma);  // equivalence is preserved, so phi is fixed
  const std::size_t n = sigma.universe();
  std::vector<AttrSet> single;
  for (std::size_t a = 0; a < n; ++a) single.push_back(engine.closure(sigma.ground().singleton(a)));

  std::vector<std::pair<AttrSet, AttrSet>> imps;
  for (const auto& imp : aggregation(sigma)) imps.emplace_back(imp.premise(), imp.conclusion());

  auto merge_into = [&](const AttrSet& premise, const AttrSet& conclusion, std::size_t at) {
    for (auto& [p, c] : imps)
      if (p == premise) {
        c |= conclusion;
        return;
      }
    imps.insert(imps.begin() + static_cast<std::ptrdiff_t>(std::min(at, imps.size())), {premise, conclusion});
  };

  for (;;) {
    std::size_t pos = imps.size();
    std::size_t pivot = n;
    for (std::size_t k = 0; k < imps.size() && pos == imps.size(); ++k) {
      const auto& p = imps[k].first;
      if (p.count() < 2) continue;
      for (std::size_t a : p.elements())
        if (p.without(a).is_subset_of(single[a])) {
          pos = k;
          pivot = a;
          break;
        }
    }
    if (pos == imps.size()) break;

    auto [premise, d] = imps[pos];
    imps.erase(imps.begin() + static_cast<std::ptrdiff_t>(pos));
    const AttrSet f = premise.without(pivot);
    const AttrSet phi_f = engine.closure(f);
    const AttrSet upper = d - phi_f;
    const AttrSet lower = d & phi_f;
    if (lower.any()) merge_into(f, lower, pos);
    if (upper.any()) merge_into(sigma.ground().singleton(pivot), upper, pos);
  }

  ImplicationSet out(sigma.ground());
  for (auto& [p, c] : imps) out.add(p, c);
  return out;
}

/// Distinct critical sets have distinct closures.
inline bool is_uc_system(const ImplicationSet& sigma) {
  const auto canon = canonical_basis(sigma);
  ClosureEngine engine(canon);
  std::unordered_set<AttrSet, AttrSetHash> seen;
  for (const auto& imp : canon)
    if (!seen.insert(engine.closure(imp.premise())).second) return false;
  return true;
}

}  // namespace closys
