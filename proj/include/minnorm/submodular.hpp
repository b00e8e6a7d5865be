#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>

#include "minnorm/subset.hpp"

namespace minnorm {

/// Evaluation-oracle interface for a submodular set function.
///
/// Derived classes implement `evaluate_raw`. Every public evaluation is
/// shifted by f(empty) so that callers always see a normalized function
/// with f(empty) == 0; translation does not change minimizers.
///
/// Call accounting: `eo_count()` increases by exactly one per raw
/// evaluation. Three values are memoized after their first computation
/// (the empty-set offset, f(ground set), and the marginal bound F), so
/// repeated queries of those do not inflate the count. No other caching
/// is performed; counts otherwise reflect algorithmic cost.
///
/// Thread safety: evaluation is const and may run concurrently; the call
/// counter is atomic and memo initialization is once-guarded.
class SubmodularOracle {
 public:
  explicit SubmodularOracle(int n) : n_(n) {}
  virtual ~SubmodularOracle() = default;

  SubmodularOracle(const SubmodularOracle&) = delete;
  SubmodularOracle& operator=(const SubmodularOracle&) = delete;

  int ground_size() const { return n_; }

  /// Normalized evaluation f(S) - f(empty).
  double operator()(const Subset& s) const;

  /// Marginal bound F = max_i max(|f({i})|, |f(V) - f(V \ {i})|),
  /// computed on the normalized function and memoized.
  double marginal_bound() const;

  /// Normalized value of the full ground set (memoized).
  double full_value() const;

  /// True when the normalized function is integer-valued, which enables
  /// the exact-minimization epsilon default.
  virtual bool integer_valued() const { return false; }

  virtual std::string family() const { return "custom"; }

  std::int64_t eo_count() const { return eo_calls_.load(std::memory_order_relaxed); }
  void reset_eo_count() { eo_calls_.store(0, std::memory_order_relaxed); }

  /// Raw offset f(empty) of the wrapped function.
  double normalization_offset() const;

 protected:
  virtual double evaluate_raw(const Subset& s) const = 0;

 private:
  double counted_raw(const Subset& s) const;

  int n_;
  mutable std::atomic<std::int64_t> eo_calls_{0};
  mutable std::once_flag offset_once_, full_once_, bound_once_;
  mutable double offset_ = 0.0;
  mutable double full_value_ = 0.0;
  mutable double marginal_bound_ = 0.0;
};

using OraclePtr = std::shared_ptr<SubmodularOracle>;

/// Oracle backed by an arbitrary callable; the workhorse for fixtures.
class FunctionOracle : public SubmodularOracle {
 public:
  using Fn = std::function<double(const Subset&)>;
  FunctionOracle(int n, Fn fn, bool integer_valued = false, std::string family = "custom")
      : SubmodularOracle(n),
        fn_(std::move(fn)),
        integer_(integer_valued),
        family_(std::move(family)) {}

  bool integer_valued() const override { return integer_; }
  std::string family() const override { return family_; }

 protected:
  double evaluate_raw(const Subset& s) const override { return fn_(s); }

 private:
  Fn fn_;
  bool integer_;
  std::string family_;
};

}  // namespace minnorm
