#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "closys/attr_set.hpp"
#include "closys/implication.hpp"

namespace closys {

/// Binary relation on a ground set, one successor row per attribute.
class PairRelation {
 public:
  PairRelation() = default;
  explicit PairRelation(GroundSet ground) : ground_(std::move(ground)), rows_(ground_.size(), AttrSet(ground_.size())) {}

  const GroundSet& ground() const noexcept { return ground_; }
  std::size_t universe() const noexcept { return ground_.size(); }

  void add(std::size_t a, std::size_t b) { rows_.at(a).set(b); }
  bool contains(std::size_t a, std::size_t b) const { return rows_.at(a).test(b); }
  const AttrSet& successors(std::size_t a) const { return rows_.at(a); }

  std::size_t size() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c;
  }

  bool empty() const { return size() == 0; }

  /// Pairs in lexicographic order of (first, second).
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < rows_.size(); ++a) rows_[a].for_each([&](std::size_t b) { out.emplace_back(a, b); });
    return out;
  }

  PairRelation dual() const {
    PairRelation out(ground_);
    for (auto [a, b] : pairs()) out.add(b, a);
    return out;
  }

  bool is_subset_of(const PairRelation& o) const {
    for (std::size_t a = 0; a < rows_.size(); ++a)
      if (!rows_[a].is_subset_of(o.rows_.at(a))) return false;
    return true;
  }

  friend bool operator==(const PairRelation& a, const PairRelation& b) {
    return a.ground_ == b.ground_ && a.rows_ == b.rows_;
  }

 private:
  GroundSet ground_;
  std::vector<AttrSet> rows_;
};

/// Warshall's algorithm over bit rows: O(n^3 / 64).
inline PairRelation transitive_closure(const PairRelation& rel) {
  const std::size_t n = rel.universe();
  std::vector<AttrSet> rows;
  rows.reserve(n);
  for (std::size_t a = 0; a < n; ++a) rows.push_back(rel.successors(a));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (rows[a].test(k)) rows[a] |= rows[k];
  PairRelation result(rel.ground());
  for (std::size_t a = 0; a < n; ++a) rows[a].for_each([&](std::size_t b) { result.add(a, b); });
  return result;
}

inline bool has_cycle(const PairRelation& rel) {
  const auto tr = transitive_closure(rel);
  for (std::size_t a = 0; a < rel.universe(); ++a)
    if (tr.contains(a, a)) return true;
  return false;
}

/// A shortest closed walk through the first attribute (in attribute order)
/// that lies on a cycle, written a0, a1, ..., a0.
inline std::optional<std::vector<std::size_t>> find_cycle(const PairRelation& rel) {
  const std::size_t n = rel.universe();
  const auto tr = transitive_closure(rel);
  for (std::size_t start = 0; start < n; ++start) {
    if (!tr.contains(start, start)) continue;
    // Breadth-first search back to start.
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> frontier{start};
    std::vector<bool> seen(n, false);
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t v : frontier) {
        for (std::size_t w : rel.successors(v).elements()) {
          if (w == start) {
            std::vector<std::size_t> path{start};
            for (std::size_t u = v; u != start; u = parent[u]) path.push_back(u);
            std::reverse(path.begin() + 1, path.end());
            path.push_back(start);
            return path;
          }
          if (seen[w]) continue;
          seen[w] = true;
          parent[w] = v;
          next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
  }
  return std::nullopt;
}

}  // namespace closys
