#pragma once

#include <vector>

#include "pcsp/rational.hpp"

namespace pcsp {

/// The set of achievable subset sums of a list of rational weights, kept
/// as a sorted deduplicated vector. Structured weight families (powers of
/// two, equal weights) collapse to far fewer than 2^n values; a size cap
/// guards the genuinely exponential case.
class SubsetSums {
public:
  static constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

  explicit SubsetSums(const std::vector<Rational>& weights,
                      std::size_t cap = kDefaultCap);

  /// Weights restricted to indices (0-based) not listed in `excluded`.
  SubsetSums(const std::vector<Rational>& weights,
             const std::vector<int>& excluded_zero_based,
             std::size_t cap = kDefaultCap);

  bool contains(const Rational& value) const;

  /// Any achievable sum in the half-open interval (low, high]?
  bool any_in(const Rational& low, const Rational& high) const;

  const Rational& min() const { return sums_.front(); }
  const Rational& max() const { return sums_.back(); }
  std::size_t size() const { return sums_.size(); }

  /// Smallest achievable sum strictly above `value`, if any.
  const Rational* smallest_above(const Rational& value) const;

private:
  void build(const std::vector<Rational>& weights, std::size_t cap);
  std::vector<Rational> sums_;
};

} // namespace pcsp
