#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "media/token_system.hpp"

namespace media {

using ElementIndex = std::uint32_t;

// A finite set of ground-element indices, kept sorted and duplicate free.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<ElementIndex> elems);
  explicit ElementSet(std::vector<ElementIndex> elems);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(ElementIndex x) const;
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<ElementIndex>& elements() const { return elems_; }

  ElementSet with(ElementIndex x) const;
  ElementSet without(ElementIndex x) const;
  ElementSet toggled(ElementIndex x) const;

  friend ElementSet symmetric_difference(const ElementSet& a, const ElementSet& b);
  friend ElementSet set_union(const ElementSet& a, const ElementSet& b);
  friend ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
  friend bool is_subset(const ElementSet& a, const ElementSet& b);

  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<ElementIndex> elems_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept;
};

// |p delta q|.
std::size_t distance(const ElementSet& p, const ElementSet& q);

// p ∩ q ⊆ r ⊆ p ∪ q.
bool between(const ElementSet& p, const ElementSet& r, const ElementSet& q);
// d(p, r) + d(r, q) == d(p, q). Always agrees with between().
bool between_by_metric(const ElementSet& p, const ElementSet& r, const ElementSet& q);

// A ground set of named elements and a list of distinct finite subsets of it.
class SetFamily {
 public:
  SetFamily(std::vector<std::string> ground, std::vector<ElementSet> sets);

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  const ElementSet& operator[](std::size_t i) const { return sets_.at(i); }

  std::optional<std::size_t> find(const ElementSet& s) const;
  bool contains(const ElementSet& s) const { return find(s).has_value(); }
  std::optional<ElementIndex> find_element(const std::string& name) const;
  ElementIndex element_index(const std::string& name) const;

  // Bitmask form of every set when the ground has at most 64 elements.
  const std::optional<std::vector<std::uint64_t>>& masks() const { return masks_; }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.ground_ == b.ground_ && a.sets_ == b.sets_;
  }

 private:
  std::vector<std::string> ground_;
  std::vector<ElementSet> sets_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
  std::unordered_map<std::string, ElementIndex> element_lookup_;
  std::optional<std::vector<std::uint64_t>> masks_;
};

// "{a,b}" with elements in ground order; "{}" for the empty set.
std::string format_set(const std::vector<std::string>& ground, const ElementSet& s);

ElementSet make_set(const SetFamily& f, std::span<const std::string> names);

struct WellGradedness {
  bool well_graded = true;
  // Ordered pair (p, q) of family indices with no line segment from p to q.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// For every ordered pair (P, Q) of distinct members there must be a member one
// unit step from P towards Q. Uses the bitmask path when available.
WellGradedness is_well_graded(const SetFamily& f);

namespace detail {
WellGradedness well_graded_sorted(const SetFamily& f);
WellGradedness well_graded_bits(const SetFamily& f);
}  // namespace detail

// A unit-step geodesic from f[p] to f[q] inside f, as family indices; ties break
// by ground order of the toggled element. nullopt when none exists.
std::optional<std::vector<std::size_t>> line_segment(const SetFamily& f, std::size_t p,
                                                     std::size_t q);
std::optional<std::vector<std::size_t>> line_segment(const SetFamily& f, const ElementSet& p,
                                                     const ElementSet& q);

struct NormalizedFamily {
  SetFamily family;
  std::vector<std::string> removed_common;  // members of every set
  std::vector<std::string> removed_unused;  // members of no set
};

// Enforces ∩F = ∅ and ∪F = X by deleting common and unused elements.
NormalizedFamily normalize(const SetFamily& f);

struct FamilyToken {
  ElementIndex element;
  bool add;
};

// The reduction of the add/remove tokens of P(X) to f: tokens "+x" and "-x" per
// ground element, identity reductions dropped, "+x" paired with "-x". States are
// named by format_set() unless names are supplied (one per set).
TokenSystem family_to_medium(const SetFamily& f,
                             std::optional<std::vector<std::string>> state_names = std::nullopt);

// Decodes a token name produced by family_to_medium.
std::optional<FamilyToken> parse_family_token(const SetFamily& f, const std::string& name);
std::string family_token_name(const SetFamily& f, FamilyToken t);

// For every member S and ground element x, S delta {x} is a member.
bool is_complete(const SetFamily& f);

// S -> S delta a, set by set. The ground is kept.
SetFamily translate(const SetFamily& f, const ElementSet& a);

}  // namespace media
