#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "closys/attr_set.hpp"
#include "closys/canonical.hpp"
#include "closys/errors.hpp"
#include "closys/implication.hpp"
#include "closys/io.hpp"
#include "closys/standard.hpp"

namespace closys {

/// A finite lattice given as an intersection-closed family of subsets of
/// `ground` that contains the whole ground set. Up to 64 attributes.
struct FiniteLattice {
  using Mask = std::uint64_t;

  GroundSet ground;
  std::vector<Mask> members;  // sorted, distinct

  std::size_t size() const noexcept { return members.size(); }
  Mask top() const { return ground.size() == 64 ? ~Mask{0} : (Mask{1} << ground.size()) - 1; }
  bool contains(Mask m) const { return std::binary_search(members.begin(), members.end(), m); }

  /// Least member containing m.
  Mask smallest_containing(Mask m) const {
    Mask out = top();
    for (Mask x : members)
      if ((m & ~x) == 0) out &= x;
    return out;
  }

  /// Members that are not the join of the members strictly below them.
  std::vector<Mask> join_irreducibles() const {
    std::vector<Mask> out;
    for (Mask x : members) {
      Mask below = 0;
      bool any = false;
      for (Mask y : members)
        if (y != x && (y & ~x) == 0) {
          below |= y;
          any = true;
        }
      if (!any) continue;  // bottom
      if (smallest_containing(below) != x) out.push_back(x);
    }
    return out;
  }
};

/// Validates and sorts the family.
inline FiniteLattice lattice_of(GroundSet ground, std::vector<FiniteLattice::Mask> members) {
  if (ground.size() > 64) throw Error("lattice families are limited to 64 attributes");
  FiniteLattice lat{std::move(ground), std::move(members)};
  std::sort(lat.members.begin(), lat.members.end());
  lat.members.erase(std::unique(lat.members.begin(), lat.members.end()), lat.members.end());
  for (auto m : lat.members)
    if ((m & ~lat.top()) != 0) throw Error("lattice member outside the ground set");
  if (!lat.contains(lat.top())) throw Error("lattice family must contain the whole ground set");
  for (auto a : lat.members)
    for (auto b : lat.members)
      if (!lat.contains(a & b)) throw Error("lattice family is not closed under intersection");
  return lat;
}

/// 2^n on attributes named by `names`.
inline FiniteLattice boolean_lattice(const std::vector<std::string>& names) {
  if (names.size() > 20) throw BoundExceeded("boolean lattice too large to list");
  std::vector<FiniteLattice::Mask> members;
  for (FiniteLattice::Mask m = 0; m < (FiniteLattice::Mask{1} << names.size()); ++m) members.push_back(m);
  return lattice_of(GroundSet(names), std::move(members));
}

/// k-element chain: {}, {c1}, {c1,c2}, ...
inline FiniteLattice chain(std::size_t k) {
  if (k == 0) throw Error("a chain needs at least one element");
  std::vector<std::string> names;
  for (std::size_t i = 1; i < k; ++i) names.push_back("c" + std::to_string(i));
  std::vector<FiniteLattice::Mask> members;
  for (std::size_t i = 0; i < k; ++i) members.push_back((FiniteLattice::Mask{1} << i) - 1);
  return lattice_of(GroundSet(names), std::move(members));
}

/// Day's doubling of the member b: b becomes the interval [b, b+z] for a new
/// attribute z, and every member strictly above b also receives z.
inline FiniteLattice double_element(const FiniteLattice& lat, FiniteLattice::Mask b, const std::string& name) {
  if (!lat.contains(b)) throw Error("doubling: not a member of the lattice");
  if (lat.ground.size() >= 64) throw Error("lattice families are limited to 64 attributes");
  auto names = lat.ground.names();
  names.push_back(name);
  const FiniteLattice::Mask z = FiniteLattice::Mask{1} << lat.ground.size();
  std::vector<FiniteLattice::Mask> members;
  for (auto x : lat.members) {
    const bool above = (b & ~x) == 0;
    members.push_back(above && x != b ? x | z : x);
  }
  members.push_back(b | z);
  return lattice_of(GroundSet(std::move(names)), std::move(members));
}

/// Standard closure system on the join-irreducibles of the lattice,
/// returned as its canonical basis. A join-irreducible whose lower cover
/// misses exactly one attribute keeps that attribute's name; otherwise
/// labels j1, j2, ... are used for all of them.
inline ImplicationSet standard_system_from_lattice(const FiniteLattice& lat) {
  using Mask = FiniteLattice::Mask;
  const auto ji = lat.join_irreducibles();
  const std::size_t n = ji.size();

  // Attribute newly present in each join-irreducible, if it is unique.
  std::vector<std::pair<std::size_t, Mask>> keyed;
  bool named = true;
  for (Mask j : ji) {
    Mask below = 0;
    for (Mask y : lat.members)
      if (y != j && (y & ~j) == 0) below |= y;
    const Mask fresh = j & ~below;
    if (std::popcount(fresh) != 1) named = false;
    keyed.emplace_back(fresh ? static_cast<std::size_t>(std::countr_zero(fresh)) : 0, j);
  }
  std::vector<std::string> names;
  if (named) {
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i + 1 < keyed.size(); ++i)
      if (keyed[i].first == keyed[i + 1].first) named = false;
  }
  if (named) {
    for (const auto& [attr, j] : keyed) names.push_back(lat.ground.name(attr));
  } else {
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    for (std::size_t i = 0; i < n; ++i) names.push_back("j" + std::to_string(i + 1));
  }
  GroundSet ground(names);

  auto phi = [&](const AttrSet& x) {
    Mask joined = 0;
    x.for_each([&](std::size_t i) { joined |= keyed[i].second; });
    const Mask top = lat.smallest_containing(joined);
    AttrSet out(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((keyed[i].second & ~top) == 0) out.set(i);
    return out;
  };
  return canonical_basis_from_closure(ground, phi);
}

/// A set cover instance: a finite set Q and a family of subsets of Q
/// whose union is Q.
struct SetCoverInstance {
  GroundSet q;
  std::vector<AttrSet> family;

  void validate() const {
    AttrSet all(q.size());
    for (const auto& s : family) {
      if (s.universe() != q.size()) throw Error("set cover: subset over a different ground set");
      if (s.empty()) throw Error("set cover: empty subset");
      all |= s;
    }
    if (all != q.full_set()) throw Error("set cover: the family does not cover Q");
  }

  /// Q or some Q \ {q} is itself in the family; such instances are solved
  /// directly.
  bool is_trivial() const {
    for (const auto& s : family)
      if (s.count() + 1 >= q.size()) return true;
    return false;
  }

  /// The family with every singleton added, duplicates removed, in order.
  std::vector<AttrSet> extended_family() const {
    std::vector<AttrSet> out;
    for (std::size_t i = 0; i < q.size(); ++i) out.push_back(q.singleton(i));
    for (const auto& s : family)
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    return out;
  }

  /// Subsets of size > 1, duplicates removed, in family order.
  std::vector<AttrSet> large_subsets() const {
    std::vector<AttrSet> out;
    for (const auto& s : family)
      if (s.count() > 1 && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    return out;
  }
};

/// First non-comment line lists Q; each further line is one subset.
inline SetCoverInstance parse_setcover(const std::string& text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::size_t lineno = 0;
  for (const auto& raw : detail::split_lines(text)) {
    ++lineno;
    std::string_view body = raw;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    auto toks = detail::tokens(body);
    if (!toks.empty()) lines.emplace_back(lineno, std::move(toks));
  }
  if (lines.empty()) throw ParseError(0, "set cover file has no ground line");
  SetCoverInstance inst;
  try {
    inst.q = GroundSet(lines.front().second);
  } catch (const Error& e) {
    throw ParseError(lines.front().first, e.what());
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    AttrSet s(inst.q.size());
    for (const auto& name : lines[k].second) {
      auto i = inst.q.find(name);
      if (!i) throw ParseError(lines[k].first, "unknown element '" + name + "'");
      s.set(*i);
    }
    inst.family.push_back(s);
  }
  try {
    inst.validate();
  } catch (const Error& e) {
    throw ParseError(lines.back().first, e.what());
  }
  return inst;
}

inline std::string format_setcover(const SetCoverInstance& inst) {
  std::string out = inst.q.format(inst.q.full_set()) + "\n";
  for (const auto& s : inst.family) out += inst.q.format(s) + "\n";
  return out;
}

/// A system built from a set cover instance, with the reading of its
/// attributes as members of the extended family.
struct SetCoverReduction {
  SetCoverInstance instance;
  ImplicationSet system;
  AttrSet distinguished;  // the critical set (nb) or {w} (b)
  std::size_t w = 0;
  std::vector<AttrSet> meaning;  // per attribute of the system: a subset of Q, empty for w

  /// Subfamily of the extended family named by the attributes in u.
  std::vector<AttrSet> decode(const AttrSet& u) const {
    std::vector<AttrSet> out;
    u.for_each([&](std::size_t i) {
      if (i == w) throw Error("set cover decoder: w has no reading");
      out.push_back(meaning.at(i));
    });
    return out;
  }
};

namespace detail {

inline std::string fresh_name(const std::vector<std::string>& taken, std::string name) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name = "_" + name;
  return name;
}

inline SetCoverReduction finish_reduction(const SetCoverInstance& inst, const FiniteLattice& lat,
                                          const std::vector<AttrSet>& large) {
  SetCoverReduction r{inst, standard_system_from_lattice(lat), {}, 0, {}};
  if (!(r.system.ground() == lat.ground))
    throw InternalError("set cover reduction: the attributes are not all join-irreducible");
  const std::size_t nq = inst.q.size();
  r.w = lat.ground.size() - 1;
  for (std::size_t i = 0; i < nq; ++i) r.meaning.push_back(inst.q.singleton(i));
  for (const auto& s : large) r.meaning.push_back(s);
  r.meaning.push_back(AttrSet(nq));
  return r;
}

inline std::vector<std::string> reduction_names(const SetCoverInstance& inst, std::size_t k) {
  auto names = inst.q.names();
  for (std::size_t i = 0; i < k; ++i)
    names.push_back(fresh_name(names, k == 1 ? "z" : "z" + std::to_string(i + 1)));
  names.push_back(fresh_name(names, "w"));
  return names;
}

}  // namespace detail

/// Bounded lattice whose unique non-binary critical set Q u Z has minimal
/// generators that read as optimal covers. `omit` picks t = Q \ {omit};
/// the default is the first element of Q.
inline SetCoverReduction setcover_nonbinary(const SetCoverInstance& inst, std::size_t omit = 0) {
  inst.validate();
  if (inst.is_trivial()) throw PreconditionError("trivial set cover instance; it is solved directly");
  if (omit >= inst.q.size()) throw Error("set cover: omitted element out of range");
  const auto large = inst.large_subsets();
  const auto names = detail::reduction_names(inst, large.size());

  FiniteLattice lat = boolean_lattice(inst.q.names());
  for (std::size_t i = 0; i < large.size(); ++i)
    lat = double_element(lat, lat.smallest_containing(large[i].to_mask()), names[inst.q.size() + i]);
  const auto t = inst.q.full_set().without(omit).to_mask();
  lat = double_element(lat, lat.smallest_containing(t), names.back());

  auto r = detail::finish_reduction(inst, lat, large);
  r.distinguished = r.system.ground().full_set().without(r.w);
  return r;
}

/// Bounded lattice 2^Q plus a new top w, with each large subset doubled;
/// the smallest generators of phi(w) \ {w} read as optimal covers.
inline SetCoverReduction setcover_binary(const SetCoverInstance& inst) {
  inst.validate();
  if (inst.is_trivial()) throw PreconditionError("trivial set cover instance; it is solved directly");
  const auto large = inst.large_subsets();
  const auto names = detail::reduction_names(inst, large.size());
  const std::size_t nq = inst.q.size();

  // Doubling below a top commutes with adding it, so w goes on last and
  // keeps the last attribute slot.
  FiniteLattice lat = boolean_lattice(inst.q.names());
  for (std::size_t i = 0; i < large.size(); ++i)
    lat = double_element(lat, lat.smallest_containing(large[i].to_mask()), names[nq + i]);
  // New top: everything plus w.
  auto all = lat.ground.names();
  all.push_back(names.back());
  auto top = lat.members;
  top.push_back(lat.top() | (FiniteLattice::Mask{1} << lat.ground.size()));
  lat = lattice_of(GroundSet(all), std::move(top));

  auto r = detail::finish_reduction(inst, lat, large);
  r.distinguished = r.system.ground().singleton(r.w);
  return r;
}

/// Reproducible non-trivial instance with 3 <= |Q| <= 6 and at most 8
/// subsets, at least one of them with two or more elements.
inline SetCoverInstance random_setcover_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    const std::size_t n = 3 + rng() % 4;
    const std::size_t m = 2 + rng() % 7;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
    SetCoverInstance inst{GroundSet(names), {}};
    for (std::size_t k = 0; k < m; ++k) {
      AttrSet s(n);
      const std::size_t size = 1 + rng() % (n - 2);  // never Q or Q minus one element
      while (s.count() < size) s.set(rng() % n);
      inst.family.push_back(s);
    }
    AttrSet all(n);
    bool has_large = false;
    for (const auto& s : inst.family) {
      all |= s;
      has_large = has_large || s.count() > 1;
    }
    if (all == inst.q.full_set() && has_large) return inst;
  }
}

/// a..z, then a1..z1, a2..
inline std::string attribute_label(std::size_t i) {
  std::string s(1, static_cast<char>('a' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

/// Reproducible random standard system: round(density * n) implications
/// with premises of 1 to 3 and conclusions of 1 to 2 attributes.
/// Non-standard draws are discarded.
inline ImplicationSet random_system(std::size_t n, double density, std::uint64_t seed) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(attribute_label(i));
  GroundSet ground(names);
  const auto m = static_cast<std::size_t>(std::llround(std::max(0.0, density) * static_cast<double>(n)));
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < 1'000'000; ++attempt) {
    ImplicationSet sigma(ground);
    if (n >= 2)
      for (std::size_t k = 0; k < m; ++k) {
        AttrSet p(n), c(n);
        const std::size_t ps = 1 + rng() % std::min<std::size_t>(3, n - 1);
        while (p.count() < ps) p.set(rng() % n);
        const std::size_t cs = 1 + rng() % std::min<std::size_t>(2, n - ps);
        while (c.count() < cs) {
          const std::size_t x = rng() % n;
          if (!p.test(x)) c.set(x);
        }
        sigma.add(p, c);
      }
    if (is_standard(sigma)) return sigma;
  }
  throw BoundExceeded("no standard system found for these parameters");
}

namespace detail {

struct FixtureText {
  const char* name;
  const char* text;
};

inline const std::vector<FixtureText>& fixture_texts() {
  static const std::vector<FixtureText> texts = {
      {"2Kbases", "ground: x y z e d u\ny -> u\nz -> u\nd -> z u\ne -> d z u\nx y z d u -> e\nx u -> y\nz y u -> x\n"},
      {"A12",
       "ground: 1 2 3 4 5 6\n2 -> 1\n3 -> 1\n5 -> 4\n6 -> 1 3\n1 4 -> 3\n1 2 3 -> 6\n1 3 4 5 -> 6\n1 2 3 4 6 -> 5\n"},
      {"Co4", "ground: a b c d\na c -> b\nb d -> c\na d -> b c\n"},
      {"cover", "ground: a b c d y\na -> b c d\nb c d y -> a\nb c -> d\n"},
      {"EO", "ground: a b c d\nd -> c b\nc -> b\na b -> d c\n"},
      {"SD+fails", "ground: a b c d\na c -> b\nb d -> c\n"},
      {"ex66", "ground: a b c z\nz -> a\na b -> c z\na c -> b z\n"},
      {"2345", "ground: 2 3 4 5\n2 -> 5\n4 5 -> 2 3\n3 5 -> 2\n"},
  };
  return texts;
}

inline bool same_name(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i]))) return false;
  return true;
}

}  // namespace detail

/// The set cover instance behind the "B4double" fixture.
inline SetCoverInstance b4double_instance() {
  return parse_setcover("q1 q2 q3 q4\nq1\nq2\nq3\nq4\nq1 q2\n");
}

/// B4double uses t = {q1, q2, q3}.
inline SetCoverReduction b4double_reduction() { return setcover_nonbinary(b4double_instance(), 3); }

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : detail::fixture_texts()) out.emplace_back(f.name);
  out.emplace_back("B4double");
  return out;
}

/// Named example system. Names are matched case-insensitively.
inline ImplicationSet paper_fixture(const std::string& name) {
  for (const auto& f : detail::fixture_texts())
    if (detail::same_name(name, f.name)) return parse_text(f.text);
  if (detail::same_name(name, "B4double")) return b4double_reduction().system;
  throw Error("unknown fixture '" + name + "'");
}

}  // namespace closys
