#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "media/set_family.hpp"
#include "media/token_system.hpp"

namespace media {

// Elements of Z are 1..n; the reference order L0 is 1 < 2 < ... < n.
// n is limited to 9 so that pair names stay unambiguous ("12" = the pair 1 < 2).
inline constexpr int max_linear_elements = 9;

// A linear order given by its sequence, first element least.
class LinearOrder {
 public:
  explicit LinearOrder(std::vector<int> sequence);
  static LinearOrder reference(int n);

  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& sequence() const { return seq_; }
  int position(int x) const;                 // 0-based index of x in the sequence
  bool precedes(int x, int y) const { return position(x) < position(y); }
  std::string name() const;                  // "213"

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
  friend auto operator<=>(const LinearOrder&, const LinearOrder&) = default;

 private:
  std::vector<int> seq_;
  std::vector<int> pos_;  // pos_[x - 1]
};

// tau_xy: makes x precede y when x covers y.
struct LinToken {
  int x = 0;
  int y = 0;
  std::string name() const;  // "t:x<y"
  LinToken reversed() const { return {y, x}; }
  friend bool operator==(const LinToken&, const LinToken&) = default;
};

// y immediately precedes x in l. Throws InputError on unknown elements.
bool covers(const LinearOrder& l, int x, int y);

// (L \ yx) + xy when x covers y, l otherwise.
LinearOrder apply_token(const LinearOrder& l, LinToken t);

// Pairs ij of L0 (i < j) in lexicographic order, named "ij".
std::vector<std::string> pair_ground(int n);
std::size_t pair_index(int n, int i, int j);  // i < j

// L -> L ∩ L0, as a subset of pair_ground(n).
ElementSet encode(const LinearOrder& l);

struct LinearMedium {
  TokenSystem medium;             // states named by order, lexicographic
  SetFamily family;               // encode image of every state, same order
  std::vector<LinearOrder> orders;
  std::vector<LinToken> tokens;   // per token of `medium`
};

// All n! orders with tokens t:i<j and t:j<i per pair of L0. Throws InputError when
// n < 2 or n > min(cap, max_linear_elements).
LinearMedium linear_medium(int n, int cap = 7);

// p ⊆ L0 is L0 ∩ L' for a linear order L' iff p and L0 \ p are both transitive.
bool is_alpha_image(const ElementSet& p, int n);

}  // namespace media
