#include "pcsp/minor_map.hpp"

#include <algorithm>
#include <string>

namespace pcsp {

MinorMap::MinorMap(int from, int to, std::vector<int> values)
    : from_arity(from), to_arity(to), map(std::move(values)) {
  if (from_arity <= 0 || to_arity <= 0)
    throw ParameterError("minor map arities must be positive");
  if (static_cast<int>(map.size()) != from_arity)
    throw ParameterError("minor map must be total on [from_arity]");
  for (int v : map)
    if (v < 1 || v > to_arity)
      throw ParameterError("minor map value " + std::to_string(v) +
                           " outside [1, " + std::to_string(to_arity) + "]");
}

MinorMap MinorMap::identity(int arity) {
  std::vector<int> values(arity);
  for (int i = 0; i < arity; ++i)
    values[i] = i + 1;
  return MinorMap(arity, arity, std::move(values));
}

MinorMap MinorMap::then(const MinorMap& other) const {
  if (to_arity != other.from_arity)
    throw ParameterError("minor map composition arity mismatch");
  std::vector<int> values(from_arity);
  for (int i = 1; i <= from_arity; ++i)
    values[i - 1] = other((*this)(i));
  return MinorMap(from_arity, other.to_arity, std::move(values));
}

bool MinorMap::injective_on(const std::vector<int>& coords) const {
  std::vector<int> img = image(coords);
  std::vector<int> distinct(coords);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  return img.size() == distinct.size();
}

std::vector<int> MinorMap::image(const std::vector<int>& coords) const {
  std::vector<int> img;
  img.reserve(coords.size());
  for (int c : coords) {
    if (c < 1 || c > from_arity)
      throw ParameterError("coordinate outside the map's domain");
    img.push_back((*this)(c));
  }
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

int MinorMap::preimage_count(int target) const {
  int count = 0;
  for (int v : map)
    if (v == target)
      ++count;
  return count;
}

} // namespace pcsp
