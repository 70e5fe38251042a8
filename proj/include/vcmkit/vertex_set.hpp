#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace vcmkit {

/// A finite set of vertex ids, stored as a bitmask.
///
/// Sets over at most 64 vertices live in a single inline machine word; larger
/// ones spill to the heap. The word vector never carries trailing zero words,
/// so equal sets always have equal representations.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  VertexSet(std::initializer_list<int> ids) {
    for (int id : ids) insert(id);
  }

  static VertexSet from_ids(const std::vector<int>& ids) {
    VertexSet s;
    for (int id : ids) s.insert(id);
    return s;
  }

  /// The set {0, 1, ..., count - 1}.
  static VertexSet range(int count) {
    VertexSet s;
    for (int id = 0; id < count; ++id) s.insert(id);
    return s;
  }

  /// Interprets the low bits of `mask` as a set (used by subset enumeration).
  static VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    if (mask != 0) s.words_.push_back(mask);
    return s;
  }

  void insert(int id) {
    const auto w = static_cast<std::size_t>(id / kWordBits);
    if (words_.size() <= w) words_.resize(w + 1, 0);
    words_[w] |= Word{1} << (id % kWordBits);
  }

  void erase(int id) {
    const auto w = static_cast<std::size_t>(id / kWordBits);
    if (w >= words_.size()) return;
    words_[w] &= ~(Word{1} << (id % kWordBits));
    trim();
  }

  [[nodiscard]] bool contains(int id) const {
    const auto w = static_cast<std::size_t>(id / kWordBits);
    return w < words_.size() && ((words_[w] >> (id % kWordBits)) & 1U) != 0;
  }

  [[nodiscard]] bool empty() const { return words_.empty(); }

  [[nodiscard]] int size() const {
    int n = 0;
    for (Word w : words_) n += std::popcount(w);
    return n;
  }

  [[nodiscard]] bool is_subset_of(const VertexSet& other) const {
    if (words_.size() > other.words_.size()) return false;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  [[nodiscard]] bool intersects(const VertexSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  [[nodiscard]] int intersection_size(const VertexSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) count += std::popcount(words_[i] & other.words_[i]);
    return count;
  }

  VertexSet& operator|=(const VertexSet& other) {
    if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& other) {
    if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    trim();
    return *this;
  }

  /// Set difference.
  VertexSet& operator-=(const VertexSet& other) {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
    trim();
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Ascending list of member ids.
  [[nodiscard]] std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int id) { out.push_back(id); });
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        fn(static_cast<int>(i) * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  /// Largest member, or -1 for the empty set.
  [[nodiscard]] int max_element() const {
    if (words_.empty()) return -1;
    const Word top = words_.back();
    return static_cast<int>(words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(top));
  }

  /// Low 64 bits; exact for sets over fewer than 64 vertices.
  [[nodiscard]] std::uint64_t low_mask() const { return words_.empty() ? 0 : words_.front(); }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.words_.size() == b.words_.size() &&
           std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
  }

  /// Canonical order: lexicographic on the ascending element lists.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    const std::size_t n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const Word wa = i < a.words_.size() ? a.words_[i] : 0;
      const Word wb = i < b.words_.size() ? b.words_[i] : 0;
      if (wa == wb) continue;
      // The lowest differing element decides: the set holding it has the
      // smaller element at that position, unless the other set has already
      // run out of elements.
      const Word diff = wa ^ wb;
      const Word low = diff & (~diff + 1);
      const bool a_has = (wa & low) != 0;
      const Word above = ~(low | (low - 1));
      const bool a_rest = (wa & above) != 0 || a.has_words_after(i);
      const bool b_rest = (wb & above) != 0 || b.has_words_after(i);
      if (a_has) {
        // b lacks this element: b's next element is larger or b ended.
        return b_rest ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      return a_rest ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Word w : words_) {
      h ^= std::hash<Word>{}(w);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  [[nodiscard]] bool has_words_after(std::size_t i) const { return words_.size() > i + 1; }

  boost::container::small_vector<Word, 1> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace vcmkit
