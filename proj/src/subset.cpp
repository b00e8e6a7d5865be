#include "minnorm/subset.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace minnorm {

Subset Subset::from_mask(int n, std::uint64_t mask) {
  if (n > 64) throw std::invalid_argument("Subset::from_mask requires n <= 64");
  Subset s(n);
  if (n > 0) {
    std::uint64_t keep = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    s.words_[0] = mask & keep;
    s.count_ = std::popcount(s.words_[0]);
  }
  return s;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int i = 0; i < n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::uint64_t Subset::to_mask() const {
  if (n_ > 64) throw std::invalid_argument("Subset::to_mask requires n <= 64");
  return words_.empty() ? 0 : words_[0];
}

Subset Subset::complement() const {
  Subset s(n_);
  for (int i = 0; i < n_; ++i)
    if (!contains(i)) s.add(i);
  return s;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    if (!contains(i)) continue;
    if (!first) os << ',';
    os << (i + 1);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace minnorm
