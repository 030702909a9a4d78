#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "media/set_family.hpp"

namespace media {

// Isometry of the cube on a ground of `ground_size` elements: S -> pi(S delta A).
struct CubeIsometry {
  std::size_t ground_size = 0;
  ElementSet translation;                // A
  std::vector<ElementIndex> permutation;  // pi, a permutation of 0..ground_size-1

  static CubeIsometry identity(std::size_t ground_size);
  ElementSet apply(const ElementSet& s) const;
  friend bool operator==(const CubeIsometry&, const CubeIsometry&) = default;
};

// first after second: S -> first(second(S)). Throws InputError on a ground mismatch.
CubeIsometry compose(const CubeIsometry& first, const CubeIsometry& second);
CubeIsometry invert(const CubeIsometry& s);
// Throws InputError unless the permutation is a bijection and A lies in the ground.
void validate(const CubeIsometry& s);

// r(x) = least size of a member containing x; strata[k] = elements of rank k.
struct RankTable {
  std::vector<std::optional<std::size_t>> rank;      // per ground element
  std::vector<std::optional<std::size_t>> witness;   // a least member containing x
  std::vector<std::vector<ElementIndex>> strata;     // strata[0] is always empty
};

// Needs the empty set as a member (InputError otherwise).
RankTable rank_table(const SetFamily& f);

// Extends alpha (member i of f1 -> member alpha[i] of f2) to an isometry of the cube.
// f1 and f2 must be well graded over the same ground set (names may be listed in a
// different order; the result uses the order of f1). Throws InputError when alpha
// is not a distance-preserving bijection, and DefectError if the construction fails.
CubeIsometry extend_isometry(const SetFamily& f1, const SetFamily& f2,
                             std::span<const std::size_t> alpha);

}  // namespace media
