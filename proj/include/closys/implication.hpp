#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "closys/attr_set.hpp"
#include "closys/errors.hpp"

namespace closys {

/// Ordered list of distinct attribute names. Declaration order is the
/// attribute order used for all tie-breaking. Copies share storage.
class GroundSet {
 public:
  GroundSet() : data_(std::make_shared<Data>()) {}

  explicit GroundSet(std::vector<std::string> names) {
    auto d = std::make_shared<Data>();
    d->names = std::move(names);
    for (std::size_t i = 0; i < d->names.size(); ++i) {
      if (d->names[i].empty()) throw Error("GroundSet: empty attribute name");
      if (!d->index.emplace(d->names[i], i).second) throw Error("GroundSet: duplicate attribute '" + d->names[i] + "'");
    }
    data_ = std::move(d);
  }

  std::size_t size() const noexcept { return data_->names.size(); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = data_->index.find(name);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(const std::string& name) const {
    if (auto i = find(name)) return *i;
    throw Error("unknown attribute '" + name + "'");
  }

  AttrSet empty_set() const { return AttrSet(size()); }
  AttrSet full_set() const { return AttrSet::full(size()); }
  AttrSet singleton(std::size_t i) const { return AttrSet(size()).set(i); }

  AttrSet set_of(const std::vector<std::string>& names) const {
    AttrSet s(size());
    for (const auto& n : names) s.set(index(n));
    return s;
  }

  std::vector<std::string> names_of(const AttrSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](std::size_t i) { out.push_back(name(i)); });
    return out;
  }

  /// Names joined by `sep`, in attribute order.
  std::string format(const AttrSet& s, const std::string& sep = " ") const {
    std::string out;
    s.for_each([&](std::size_t i) {
      if (!out.empty()) out += sep;
      out += name(i);
    });
    return out;
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.data_ == b.data_ || a.data_->names == b.data_->names;
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// X -> Y with X, Y non-empty and disjoint.
class Implication {
 public:
  Implication(AttrSet premise, AttrSet conclusion) : premise_(std::move(premise)), conclusion_(std::move(conclusion)) {
    if (premise_.universe() != conclusion_.universe())
      throw InvalidImplication("premise and conclusion range over different ground sets");
    if (premise_.empty()) throw InvalidImplication("empty premise");
    if (conclusion_.empty()) throw InvalidImplication("empty conclusion");
    if (premise_.intersects(conclusion_)) throw InvalidImplication("premise and conclusion overlap");
  }

  const AttrSet& premise() const noexcept { return premise_; }
  const AttrSet& conclusion() const noexcept { return conclusion_; }
  bool is_binary() const noexcept { return premise_.count() == 1; }
  std::size_t size() const noexcept { return premise_.count() + conclusion_.count(); }

  friend bool operator==(const Implication&, const Implication&) = default;
  friend auto operator<=>(const Implication& a, const Implication& b) {
    if (auto c = a.premise_ <=> b.premise_; c != 0) return c;
    return a.conclusion_ <=> b.conclusion_;
  }

 private:
  AttrSet premise_;
  AttrSet conclusion_;
};

/// Ordered list of implications over one ground set. Duplicates are kept
/// until `normalized()` is requested.
class ImplicationSet {
 public:
  ImplicationSet() = default;
  explicit ImplicationSet(GroundSet ground, std::vector<Implication> imps = {}) : ground_(std::move(ground)) {
    imps_.reserve(imps.size());
    for (auto& imp : imps) push_back(std::move(imp));
  }

  const GroundSet& ground() const noexcept { return ground_; }
  std::size_t universe() const noexcept { return ground_.size(); }
  std::size_t size() const noexcept { return imps_.size(); }
  bool empty() const noexcept { return imps_.empty(); }

  const Implication& operator[](std::size_t i) const { return imps_.at(i); }
  auto begin() const noexcept { return imps_.begin(); }
  auto end() const noexcept { return imps_.end(); }
  const std::vector<Implication>& implications() const noexcept { return imps_; }

  void push_back(Implication imp) {
    if (imp.premise().universe() != ground_.size())
      throw InvalidImplication("implication does not range over the ground set");
    imps_.push_back(std::move(imp));
  }

  void add(const AttrSet& premise, const AttrSet& conclusion) { push_back(Implication(premise, conclusion)); }

  /// Convenience for literals: `add({"a", "b"}, {"c"})`.
  void add(const std::vector<std::string>& premise, const std::vector<std::string>& conclusion) {
    push_back(Implication(ground_.set_of(premise), ground_.set_of(conclusion)));
  }

  ImplicationSet binary_part() const { return filtered([](const Implication& i) { return i.is_binary(); }); }
  ImplicationSet nonbinary_part() const { return filtered([](const Implication& i) { return !i.is_binary(); }); }

  template <class Pred>
  ImplicationSet filtered(Pred pred) const {
    ImplicationSet out(ground_);
    for (const auto& i : imps_)
      if (pred(i)) out.imps_.push_back(i);
    return out;
  }

  /// Sorted by premise then conclusion; exact duplicates removed.
  ImplicationSet normalized() const {
    ImplicationSet out = *this;
    std::sort(out.imps_.begin(), out.imps_.end());
    out.imps_.erase(std::unique(out.imps_.begin(), out.imps_.end()), out.imps_.end());
    return out;
  }

  ImplicationSet without(std::size_t index) const {
    ImplicationSet out(ground_);
    for (std::size_t i = 0; i < imps_.size(); ++i)
      if (i != index) out.imps_.push_back(imps_[i]);
    return out;
  }

  friend ImplicationSet operator+(ImplicationSet a, const ImplicationSet& b) {
    if (!(a.ground_ == b.ground_)) throw Error("cannot join implication sets over different ground sets");
    for (const auto& i : b) a.imps_.push_back(i);
    return a;
  }

  friend bool operator==(const ImplicationSet& a, const ImplicationSet& b) {
    return a.ground_ == b.ground_ && a.imps_ == b.imps_;
  }

 private:
  GroundSet ground_;
  std::vector<Implication> imps_;
};

/// Literal counts of a basis, overall and split into binary (|premise| = 1)
/// and non-binary parts.
struct SizeMetrics {
  struct Part {
    std::size_t count = 0;
    std::size_t s = 0;
    std::size_t sL = 0;
    std::size_t sR = 0;
    friend bool operator==(const Part&, const Part&) = default;
  };
  Part total;
  Part binary;
  Part nonbinary;
  friend bool operator==(const SizeMetrics&, const SizeMetrics&) = default;
};

inline SizeMetrics metrics(const ImplicationSet& sigma) {
  SizeMetrics m;
  for (const auto& imp : sigma) {
    auto& part = imp.is_binary() ? m.binary : m.nonbinary;
    for (auto* p : {&part, &m.total}) {
      p->count += 1;
      p->sL += imp.premise().count();
      p->sR += imp.conclusion().count();
      p->s += imp.size();
    }
  }
  return m;
}

/// X -> Y becomes {X -> y : y in Y}, in input order.
inline ImplicationSet unit_expansion(const ImplicationSet& sigma) {
  ImplicationSet out(sigma.ground());
  for (const auto& imp : sigma)
    imp.conclusion().for_each([&](std::size_t y) { out.add(imp.premise(), sigma.ground().singleton(y)); });
  return out;
}

/// Merges implications with equal premises, keeping first-appearance order.
inline ImplicationSet aggregation(const ImplicationSet& sigma) {
  std::vector<std::pair<AttrSet, AttrSet>> merged;
  std::unordered_map<AttrSet, std::size_t, AttrSetHash> where;
  for (const auto& imp : sigma) {
    auto [it, fresh] = where.emplace(imp.premise(), merged.size());
    if (fresh)
      merged.emplace_back(imp.premise(), imp.conclusion());
    else
      merged[it->second].second |= imp.conclusion();
  }
  ImplicationSet out(sigma.ground());
  for (auto& [p, c] : merged) out.add(p, c);
  return out;
}

}  // namespace closys
