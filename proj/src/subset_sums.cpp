#include "pcsp/subset_sums.hpp"

#include <algorithm>

namespace pcsp {

SubsetSums::SubsetSums(const std::vector<Rational>& weights, std::size_t cap) {
  build(weights, cap);
}

SubsetSums::SubsetSums(const std::vector<Rational>& weights,
                       const std::vector<int>& excluded, std::size_t cap) {
  std::vector<Rational> kept;
  kept.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (std::find(excluded.begin(), excluded.end(), static_cast<int>(i)) ==
        excluded.end())
      kept.push_back(weights[i]);
  build(kept, cap);
}

void SubsetSums::build(const std::vector<Rational>& weights, std::size_t cap) {
  sums_ = {Rational(0)};
  std::vector<Rational> shifted;
  std::vector<Rational> merged;
  for (const auto& w : weights) {
    if (w == 0)
      continue;
    shifted.clear();
    shifted.reserve(sums_.size());
    for (const auto& s : sums_)
      shifted.push_back(s + w);
    merged.clear();
    merged.reserve(sums_.size() + shifted.size());
    std::merge(sums_.begin(), sums_.end(), shifted.begin(), shifted.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    sums_.swap(merged);
    if (sums_.size() > cap)
      throw CapacityError("subset-sum set exceeded its cap");
  }
}

bool SubsetSums::contains(const Rational& value) const {
  return std::binary_search(sums_.begin(), sums_.end(), value);
}

bool SubsetSums::any_in(const Rational& low, const Rational& high) const {
  if (!(low < high))
    return false;
  auto it = std::upper_bound(sums_.begin(), sums_.end(), low);
  return it != sums_.end() && *it <= high;
}

const Rational* SubsetSums::smallest_above(const Rational& value) const {
  auto it = std::upper_bound(sums_.begin(), sums_.end(), value);
  return it == sums_.end() ? nullptr : &*it;
}

} // namespace pcsp
