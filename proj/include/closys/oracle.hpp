#pragma once

// Exponential ground truth. Everything here works on bit masks over at most
// `bound` attributes and follows the set-theoretic definitions directly; the
// polynomial modules are tested against it.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "closys/attr_set.hpp"
#include "closys/closure.hpp"
#include "closys/errors.hpp"
#include "closys/implication.hpp"
#include "closys/relation.hpp"

namespace closys::oracle {

using Mask = std::uint64_t;

/// Hard ceiling: the closure table has 2^n entries.
inline constexpr std::size_t kMaxBound = 24;

/// CLOSYS_ORACLE_BOUND overrides the default of 14.
inline std::size_t default_bound() {
  if (const char* env = std::getenv("CLOSYS_ORACLE_BOUND")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(v, kMaxBound);
  }
  return 14;
}

struct OracleConfig {
  std::size_t bound = default_bound();
};

inline void check_bound(std::size_t n, std::size_t bound) {
  if (bound > kMaxBound) bound = kMaxBound;
  if (n > bound)
    throw BoundExceeded("ground set has " + std::to_string(n) + " attributes; the oracle bound is " +
                        std::to_string(bound));
}

inline Mask mask_of(const AttrSet& s) { return s.to_mask(); }
inline AttrSet set_of(std::size_t n, Mask m) { return AttrSet::from_mask(n, m); }
inline int popcount(Mask m) { return std::popcount(m); }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool proper_subset(Mask a, Mask b) { return subset(a, b) && a != b; }

/// Order used for every listing: cardinality, then lexicographic on elements.
inline bool listing_less(Mask a, Mask b) {
  const int ca = popcount(a), cb = popcount(b);
  if (ca != cb) return ca < cb;
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & diff & (~diff + 1)) != 0;
}

inline void sort_listing(std::vector<Mask>& v) { std::sort(v.begin(), v.end(), listing_less); }

/// An explicit family of subsets closed under intersection and containing the
/// full set: a closure lattice.
class ClosedFamily {
 public:
  ClosedFamily() = default;

  /// Validates that `members` is intersection-closed and contains the full set.
  ClosedFamily(GroundSet ground, std::vector<Mask> members) : ground_(std::move(ground)) {
    const std::size_t n = ground_.size();
    check_bound(n, kMaxBound);
    const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Mask m : members)
      if (!subset(m, full)) throw Error("closed family: member outside the ground set");
    if (!std::binary_search(members.begin(), members.end(), full))
      throw Error("closed family: the full set is missing");
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!std::binary_search(members.begin(), members.end(), members[i] & members[j]))
          throw Error("closed family: not closed under intersection");
    init(std::move(members));
  }

  /// Trusted constructor from a closure table (table[m] = closure of m).
  static ClosedFamily from_table(GroundSet ground, std::vector<Mask> table) {
    ClosedFamily f;
    f.ground_ = std::move(ground);
    std::vector<Mask> members;
    for (Mask m = 0; m < table.size(); ++m)
      if (table[m] == m) members.push_back(m);
    f.members_ = members;
    f.table_ = std::move(table);
    f.listing_ = std::move(members);
    sort_listing(f.listing_);
    return f;
  }

  const GroundSet& ground() const noexcept { return ground_; }
  std::size_t universe() const noexcept { return ground_.size(); }
  std::size_t size() const noexcept { return members_.size(); }

  /// Members in listing order (cardinality, then lexicographic).
  const std::vector<Mask>& masks() const noexcept { return listing_; }

  std::vector<AttrSet> members() const {
    std::vector<AttrSet> out;
    out.reserve(listing_.size());
    for (Mask m : listing_) out.push_back(set_of(universe(), m));
    return out;
  }

  bool contains(Mask m) const { return m < table_.size() && table_[m] == m; }
  Mask closure(Mask m) const { return table_.at(m); }
  Mask join(Mask a, Mask b) const { return table_.at(a | b); }
  static Mask meet(Mask a, Mask b) { return a & b; }

  friend bool operator==(const ClosedFamily& a, const ClosedFamily& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  void init(std::vector<Mask> members) {
    const std::size_t n = ground_.size();
    const Mask count = Mask{1} << n;
    // The closure of a non-member m is the intersection of the closures of
    // its one-element extensions; fill from the top down.
    table_.assign(count, 0);
    std::vector<bool> member(count, false);
    for (Mask m : members) member[m] = true;
    for (Mask m = count; m-- > 0;) {
      if (member[m]) {
        table_[m] = m;
        continue;
      }
      Mask acc = count - 1;
      for (std::size_t b = 0; b < n; ++b)
        if (!(m >> b & 1U)) acc &= table_[m | Mask{1} << b];
      table_[m] = acc;
    }
    members_ = members;
    listing_ = std::move(members);
    sort_listing(listing_);
  }

  GroundSet ground_;
  std::vector<Mask> members_;  // numeric order
  std::vector<Mask> listing_;
  std::vector<Mask> table_;
};

struct CriticalCatalog {
  std::vector<AttrSet> quasi_closed;
  std::vector<AttrSet> critical;
  /// Closures of critical sets, without duplicates.
  std::vector<AttrSet> essential;
};

/// Brute-force engine for one implication set. Tables are built on demand
/// and cached, so reuse one instance for many queries.
class Oracle {
 public:
  explicit Oracle(const ImplicationSet& sigma, OracleConfig cfg = {}) : sigma_(sigma), n_(sigma.universe()) {
    check_bound(n_, cfg.bound);
    ClosureEngine engine(sigma);
    const Mask count = Mask{1} << n_;
    table_.resize(count);
    for (Mask m = 0; m < count; ++m) table_[m] = mask_of(engine.closure(set_of(n_, m)));
    for (Mask m = 0; m < count; ++m)
      if (table_[m] == m) closed_.push_back(m);
  }

  const ImplicationSet& sigma() const noexcept { return sigma_; }
  const GroundSet& ground() const noexcept { return sigma_.ground(); }
  std::size_t universe() const noexcept { return n_; }
  Mask full() const noexcept { return (Mask{1} << n_) - 1; }

  Mask closure(Mask m) const { return table_[m]; }
  bool is_closed(Mask m) const { return table_[m] == m; }

  /// Closed sets in numeric mask order.
  const std::vector<Mask>& closed_masks() const noexcept { return closed_; }

  ClosedFamily closed_family() const { return ClosedFamily::from_table(ground(), table_); }

  /// phi(empty) = empty and phi({i}) \ {i} closed for every i.
  bool is_standard() const {
    if (table_[0] != 0) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (!is_closed(table_[Mask{1} << i] & ~(Mask{1} << i))) return false;
    return true;
  }

  void require_standard() const {
    if (is_standard()) return;
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < n_; ++i)
      if (!is_closed(table_[Mask{1} << i] & ~(Mask{1} << i))) bad.push_back(i);
    throw NotStandardError("closure system is not standard", bad);
  }

  /// Not closed, and meets every closed set not containing it in a closed set.
  bool is_quasi_closed_literal(Mask q) const {
    if (is_closed(q)) return false;
    for (Mask x : closed_)
      if (!subset(q, x) && !is_closed(q & x)) return false;
    return true;
  }

  bool is_quasi_closed(Mask q) const { return quasi_table()[q]; }

  bool is_critical(Mask c) const {
    const auto& cat = masks_catalog();
    return std::binary_search(cat.critical.begin(), cat.critical.end(), c);
  }

  CriticalCatalog catalog() const {
    const auto& cat = masks_catalog();
    CriticalCatalog out;
    for (Mask m : cat.quasi_listing) out.quasi_closed.push_back(set_of(n_, m));
    for (Mask m : cat.critical_listing) out.critical.push_back(set_of(n_, m));
    for (Mask m : cat.essential_listing) out.essential.push_back(set_of(n_, m));
    return out;
  }

  /// Critical sets in listing order.
  const std::vector<Mask>& critical_masks() const { return masks_catalog().critical_listing; }

  /// Smallest closed or quasi-closed superset.
  Mask saturation_by_family(Mask x) const {
    const auto& quasi = quasi_table();
    Mask acc = full();
    const Mask free = full() & ~x;
    // Enumerate supersets of x.
    for (Mask extra = free;; extra = (extra - 1) & free) {
      const Mask y = x | extra;
      if (table_[y] == y || quasi[y]) acc &= y;
      if (extra == 0) break;
    }
    if (!(table_[acc] == acc || quasi[acc]))
      throw InternalError("intersection of quasi-closed and closed sets is neither");
    return acc;
  }

  /// Fixpoint of q(X) = X u U{phi(Y) : Y subset of X, phi(Y) strictly below phi(X)}.
  Mask saturation_by_iteration(Mask x) const {
    for (;;) {
      const Mask cx = table_[x];
      Mask next = x;
      for (Mask y = x;; y = (y - 1) & x) {
        const Mask cy = table_[y];
        if (cy != cx) next |= cy;  // phi(Y) is a subset of phi(X) by isotony
        if (y == 0) break;
      }
      if (next == x) return x;
      x = next;
    }
  }

  /// Both definitions; disagreement is an internal error.
  Mask saturation(Mask x) const {
    const Mask a = saturation_by_family(x);
    const Mask b = saturation_by_iteration(x);
    if (a != b)
      throw InternalError("saturation definitions disagree on " + ground().format(set_of(n_, x)));
    return a;
  }

  /// Nontrivial covers of x whose elements cannot be deleted or replaced by
  /// strictly lower elements. Listing order.
  std::vector<Mask> minimal_covers(std::size_t x) const {
    require_standard();
    const Mask candidates = nontrivial_candidates(x);
    std::vector<Mask> out;
    for (Mask cover = candidates;; cover = (cover - 1) & candidates) {
      if (cover != 0 && covers(cover, x) && cannot_shrink(cover, x)) out.push_back(cover);
      if (cover == 0) break;
    }
    sort_listing(out);
    return out;
  }

  /// X such that every cover Y << X contains X. Enumerates all subsets of
  /// the down-set of X, so only usable on small inputs.
  std::vector<Mask> minimal_covers_literal(std::size_t x, std::size_t max_ideal = 16) const {
    require_standard();
    const Mask candidates = nontrivial_candidates(x);
    std::vector<Mask> out;
    for (Mask cover = candidates;; cover = (cover - 1) & candidates) {
      if (cover != 0 && covers(cover, x)) {
        Mask ideal = 0;
        for (std::size_t i = 0; i < n_; ++i)
          if (cover >> i & 1U) ideal |= table_[Mask{1} << i];
        if (static_cast<std::size_t>(popcount(ideal)) > max_ideal)
          throw BoundExceeded("literal minimal-cover test: down-set too large");
        bool minimal = true;
        for (Mask y = ideal;; y = (y - 1) & ideal) {
          if (covers(y, x) && !subset(cover, y)) {
            minimal = false;
            break;
          }
          if (y == 0) break;
        }
        if (minimal) out.push_back(cover);
      }
      if (cover == 0) break;
    }
    sort_listing(out);
    return out;
  }

  /// x D y iff y lies in some minimal cover of x.
  PairRelation d_relation() const {
    PairRelation rel(ground());
    for (std::size_t x = 0; x < n_; ++x)
      for (Mask cover : minimal_covers(x))
        for (std::size_t y = 0; y < n_; ++y)
          if (cover >> y & 1U) rel.add(x, y);
    return rel;
  }

  /// Unit form: a -> b for each cover pair a > b, then X -> x for each
  /// minimal cover X of x. Normalized order.
  ImplicationSet d_basis() const {
    require_standard();
    ImplicationSet out(ground());
    for (std::size_t a = 0; a < n_; ++a) {
      const Mask lower = table_[Mask{1} << a] & ~(Mask{1} << a);
      for (std::size_t b = 0; b < n_; ++b) {
        if (!(lower >> b & 1U)) continue;
        bool is_cover = true;
        for (std::size_t c = 0; c < n_ && is_cover; ++c)
          if (c != b && (lower >> c & 1U) && (table_[Mask{1} << c] >> b & 1U)) is_cover = false;
        if (is_cover) out.add(ground().singleton(a), ground().singleton(b));
      }
    }
    for (std::size_t x = 0; x < n_; ++x)
      for (Mask cover : minimal_covers(x)) out.add(set_of(n_, cover), ground().singleton(x));
    return out.normalized();
  }

  /// Elements of a closed set x not generated by the rest of x.
  Mask extreme_points(Mask x) const {
    if (!is_closed(x)) throw PreconditionError("extreme points are defined for closed sets only");
    Mask out = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const Mask bit = Mask{1} << i;
      if ((x & bit) && !(table_[x & ~bit] & bit)) out |= bit;
    }
    return out;
  }

  /// {C -> phi(C) \ C : C critical}, normalized order.
  ImplicationSet canonical_basis() const {
    ImplicationSet out(ground());
    for (Mask c : critical_masks()) out.add(set_of(n_, c), set_of(n_, table_[c] & ~c));
    return out.normalized();
  }

 private:
  struct MaskCatalog {
    std::vector<Mask> critical;  // numeric order, for lookup
    std::vector<Mask> quasi_listing;
    std::vector<Mask> critical_listing;
    std::vector<Mask> essential_listing;
  };

  /// Attributes y with x not below y.
  Mask nontrivial_candidates(std::size_t x) const {
    Mask out = 0;
    for (std::size_t y = 0; y < n_; ++y)
      if (!(table_[Mask{1} << y] >> x & 1U)) out |= Mask{1} << y;
    return out;
  }

  bool covers(Mask cover, std::size_t x) const { return table_[cover] >> x & 1U; }

  bool cannot_shrink(Mask cover, std::size_t x) const {
    for (std::size_t i = 0; i < n_; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(cover & bit)) continue;
      const Mask replaced = (cover & ~bit) | (table_[bit] & ~bit);
      if (covers(replaced, x)) return false;
    }
    return true;
  }

  const std::vector<bool>& quasi_table() const {
    if (quasi_.empty()) {
      quasi_.assign(table_.size(), false);
      for (Mask q = 0; q < table_.size(); ++q) quasi_[q] = is_quasi_closed_literal(q);
    }
    return quasi_;
  }

  const MaskCatalog& masks_catalog() const {
    if (!catalog_) {
      const auto& quasi = quasi_table();
      MaskCatalog cat;
      std::unordered_map<Mask, std::vector<Mask>> by_closure;
      for (Mask q = 0; q < quasi.size(); ++q)
        if (quasi[q]) {
          cat.quasi_listing.push_back(q);
          by_closure[table_[q]].push_back(q);
        }
      for (const auto& [cl, group] : by_closure) {
        for (Mask q : group) {
          bool minimal = true;
          for (Mask p : group)
            if (proper_subset(p, q)) minimal = false;
          if (minimal) cat.critical.push_back(q);
        }
        if (!group.empty()) cat.essential_listing.push_back(cl);
      }
      std::sort(cat.critical.begin(), cat.critical.end());
      cat.critical_listing = cat.critical;
      sort_listing(cat.quasi_listing);
      sort_listing(cat.critical_listing);
      sort_listing(cat.essential_listing);
      catalog_ = std::move(cat);
    }
    return *catalog_;
  }

  ImplicationSet sigma_;
  std::size_t n_;
  std::vector<Mask> table_;
  std::vector<Mask> closed_;
  mutable std::vector<bool> quasi_;
  mutable std::optional<MaskCatalog> catalog_;
};

// Free-function entry points. Each builds a fresh Oracle.

inline ClosedFamily enumerate_closed(const ImplicationSet& sigma, OracleConfig cfg = {}) {
  return Oracle(sigma, cfg).closed_family();
}

inline bool is_standard(const ImplicationSet& sigma, OracleConfig cfg = {}) { return Oracle(sigma, cfg).is_standard(); }

inline CriticalCatalog quasi_critical(const ImplicationSet& sigma, OracleConfig cfg = {}) {
  return Oracle(sigma, cfg).catalog();
}

inline AttrSet saturation_oracle(const ImplicationSet& sigma, const AttrSet& x, OracleConfig cfg = {}) {
  Oracle o(sigma, cfg);
  return set_of(o.universe(), o.saturation(mask_of(x)));
}

inline std::vector<AttrSet> minimal_covers(const ImplicationSet& sigma, std::size_t x, OracleConfig cfg = {}) {
  Oracle o(sigma, cfg);
  std::vector<AttrSet> out;
  for (Mask m : o.minimal_covers(x)) out.push_back(set_of(o.universe(), m));
  return out;
}

inline PairRelation d_relation(const ImplicationSet& sigma, OracleConfig cfg = {}) {
  return Oracle(sigma, cfg).d_relation();
}

inline ImplicationSet d_basis(const ImplicationSet& sigma, OracleConfig cfg = {}) { return Oracle(sigma, cfg).d_basis(); }

inline AttrSet extreme_points(const ImplicationSet& sigma, const AttrSet& x, OracleConfig cfg = {}) {
  Oracle o(sigma, cfg);
  return set_of(o.universe(), o.extreme_points(mask_of(x)));
}

inline ImplicationSet canonical_oracle(const ImplicationSet& sigma, OracleConfig cfg = {}) {
  return Oracle(sigma, cfg).canonical_basis();
}

/// x v y = x v z implies x v y = x v (y ^ z), over every triple of members.
/// Cubic in the lattice size.
inline bool is_join_semidistributive_triples(const ClosedFamily& lat) {
  const auto& m = lat.masks();
  for (Mask x : m)
    for (Mask y : m) {
      const Mask xy = lat.join(x, y);
      for (Mask z : m)
        if (lat.join(x, z) == xy && lat.join(x, y & z) != xy) return false;
    }
  return true;
}

/// The same law, checked per (x, x v y) group: the set of y with a given
/// x v y must contain the meet of the whole group. Quadratic.
inline bool is_join_semidistributive(const ClosedFamily& lat) {
  const auto& m = lat.masks();
  if (m.size() <= 64) return is_join_semidistributive_triples(lat);
  std::unordered_map<Mask, Mask> meet_of_group;
  for (Mask x : m) {
    meet_of_group.clear();
    for (Mask y : m) {
      const Mask v = lat.join(x, y);
      auto [it, fresh] = meet_of_group.emplace(v, y);
      if (!fresh) it->second &= y;
    }
    for (const auto& [v, low] : meet_of_group)
      if (lat.join(x, low) != v) return false;
  }
  return true;
}

}  // namespace closys::oracle
