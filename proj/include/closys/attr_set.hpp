#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <vector>

#include "closys/errors.hpp"

namespace closys {

/// Subset of a ground set {0, ..., n-1}, stored as a fixed-width bit vector.
///
/// Binary set operations require both operands to range over the same
/// universe. The ordering puts smaller sets first and breaks ties
/// lexicographically on the ascending element sequence, which is the
/// order used for every deterministic listing in the library.
class AttrSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  AttrSet() = default;
  explicit AttrSet(std::size_t universe) : n_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  AttrSet(std::size_t universe, std::initializer_list<std::size_t> elems) : AttrSet(universe) {
    for (auto e : elems) set(e);
  }

  static AttrSet full(std::size_t universe) {
    AttrSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  static AttrSet from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > kWordBits) throw Error("AttrSet::from_mask: universe exceeds 64 attributes");
    AttrSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  static AttrSet from_elements(std::size_t universe, const std::vector<std::size_t>& elems) {
    AttrSet s(universe);
    for (auto e : elems) s.set(e);
    return s;
  }

  std::size_t universe() const noexcept { return n_; }

  bool test(std::size_t i) const noexcept { return i < n_ && ((words_[i / kWordBits] >> (i % kWordBits)) & 1U); }

  AttrSet& set(std::size_t i) {
    check_index(i);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
    return *this;
  }

  AttrSet& reset(std::size_t i) {
    check_index(i);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
    return *this;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool any() const noexcept { return !empty(); }

  AttrSet& operator|=(const AttrSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  AttrSet& operator&=(const AttrSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  /// Set difference.
  AttrSet& operator-=(const AttrSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend AttrSet operator|(AttrSet a, const AttrSet& b) { return a |= b; }
  friend AttrSet operator&(AttrSet a, const AttrSet& b) { return a &= b; }
  friend AttrSet operator-(AttrSet a, const AttrSet& b) { return a -= b; }

  AttrSet complement() const { return full(n_) - *this; }

  AttrSet with(std::size_t i) const { return AttrSet(*this).set(i); }
  AttrSet without(std::size_t i) const { return AttrSet(*this).reset(i); }

  bool is_subset_of(const AttrSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool is_proper_subset_of(const AttrSet& o) const { return is_subset_of(o) && *this != o; }

  bool intersects(const AttrSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// Smallest element, if any.
  std::optional<std::size_t> first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::uint64_t to_mask() const {
    if (n_ > kWordBits) throw Error("AttrSet::to_mask: universe exceeds 64 attributes");
    return words_.empty() ? 0 : words_[0];
  }

  friend bool operator==(const AttrSet& a, const AttrSet& b) noexcept { return a.n_ == b.n_ && a.words_ == b.words_; }

  friend std::strong_ordering operator<=>(const AttrSet& a, const AttrSet& b) noexcept {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      const Word diff = a.words_[w] ^ b.words_[w];
      if (diff == 0) continue;
      // The set holding the lowest differing element comes first.
      const Word low = diff & (~diff + 1);
      return (a.words_[w] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(n_);
    for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= n_) throw Error("AttrSet: element " + std::to_string(i) + " outside universe of size " + std::to_string(n_));
  }

  void check_same(const AttrSet& o) const {
    if (n_ != o.n_) throw Error("AttrSet: operands range over different universes");
  }

  void trim() noexcept {
    if (n_ % kWordBits != 0 && !words_.empty()) words_.back() &= (Word{1} << (n_ % kWordBits)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<Word> words_;
};

struct AttrSetHash {
  std::size_t operator()(const AttrSet& s) const noexcept { return s.hash(); }
};

}  // namespace closys
