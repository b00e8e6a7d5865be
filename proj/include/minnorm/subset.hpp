#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace minnorm {

/// Subset of a ground set {0, ..., n-1}, stored as a packed bit vector.
///
/// Ground sets in this library are 0-indexed internally; user-facing
/// renderers print 1-based element lists.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static Subset empty_set(int n) { return Subset(n); }
  static Subset full_set(int n) {
    Subset s(n);
    for (int i = 0; i < n; ++i) s.add(i);
    return s;
  }
  static Subset of(int n, std::initializer_list<int> elems) {
    Subset s(n);
    for (int e : elems) s.add(e);
    return s;
  }
  /// Subset encoded by the low n bits of `mask` (requires n <= 64).
  static Subset from_mask(int n, std::uint64_t mask);

  int ground_size() const { return n_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void add(int i) {
    std::uint64_t& w = words_[i >> 6];
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (!(w & bit)) {
      w |= bit;
      ++count_;
    }
  }
  void remove(int i) {
    std::uint64_t& w = words_[i >> 6];
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  }

  std::vector<int> elements() const;
  std::uint64_t to_mask() const;  // requires n <= 64

  Subset complement() const;

  bool operator==(const Subset& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }
  bool operator!=(const Subset& other) const { return !(*this == other); }

  /// "{}" or "{1,3,4}" with 1-based elements.
  std::string to_string() const;

 private:
  int n_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace minnorm
