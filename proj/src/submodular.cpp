#include "minnorm/submodular.hpp"

#include <cmath>
#include <stdexcept>

namespace minnorm {

double SubmodularOracle::counted_raw(const Subset& s) const {
  eo_calls_.fetch_add(1, std::memory_order_relaxed);
  double v = evaluate_raw(s);
  if (!std::isfinite(v)) throw std::runtime_error("oracle returned a non-finite value");
  return v;
}

double SubmodularOracle::normalization_offset() const {
  std::call_once(offset_once_, [&] { offset_ = counted_raw(Subset::empty_set(n_)); });
  return offset_;
}

double SubmodularOracle::operator()(const Subset& s) const {
  if (s.ground_size() != n_)
    throw std::invalid_argument("subset ground size does not match oracle");
  if (s.empty()) return 0.0;
  if (s.size() == n_) return full_value();
  return counted_raw(s) - normalization_offset();
}

double SubmodularOracle::full_value() const {
  std::call_once(full_once_, [&] {
    full_value_ = counted_raw(Subset::full_set(n_)) - normalization_offset();
  });
  return full_value_;
}

double SubmodularOracle::marginal_bound() const {
  std::call_once(bound_once_, [&] {
    double best = 0.0;
    const double fn = full_value();
    for (int i = 0; i < n_; ++i) {
      Subset singleton = Subset::empty_set(n_);
      singleton.add(i);
      Subset all_but = Subset::full_set(n_);
      all_but.remove(i);
      best = std::max(best, std::abs((*this)(singleton)));
      best = std::max(best, std::abs(fn - (*this)(all_but)));
    }
    marginal_bound_ = best;
  });
  return marginal_bound_;
}

}  // namespace minnorm
