#pragma once

#include <vector>

#include "pcsp/errors.hpp"

namespace pcsp {

/// A coordinate map pi : [n] -> [m] describing a minor
/// g(x_1,...,x_m) = f(x_{pi(1)},...,x_{pi(n)}). Values are 1-based and
/// surjectivity is not required (non-surjective maps introduce dummy
/// coordinates in the minor).
struct MinorMap {
  int from_arity = 0;
  int to_arity = 0;
  std::vector<int> map; // map[i-1] = pi(i), in [1, to_arity]

  MinorMap() = default;
  MinorMap(int from_arity, int to_arity, std::vector<int> map);

  static MinorMap identity(int arity);

  int operator()(int i) const { return map[i - 1]; }

  /// Composition along a chain: (other ∘ this), i.e. first apply this map,
  /// then `other`. Requires to_arity == other.from_arity.
  MinorMap then(const MinorMap& other) const;

  /// |pi(I)| == |I| for a 1-based coordinate set I.
  bool injective_on(const std::vector<int>& coords) const;

  std::vector<int> image(const std::vector<int>& coords) const;

  int preimage_count(int target) const;

  bool operator==(const MinorMap&) const = default;
};

} // namespace pcsp
