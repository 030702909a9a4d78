#include "media/linear_orders.hpp"

#include <algorithm>
#include <numeric>

#include "media/error.hpp"

namespace media {

LinearOrder::LinearOrder(std::vector<int> sequence) : seq_(std::move(sequence)) {
  const int n = size();
  if (n < 1 || n > max_linear_elements) throw InputError("linear order size out of range");
  pos_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int x = seq_[i];
    if (x < 1 || x > n || pos_[x - 1] != -1) throw InputError("sequence is not a permutation of 1..n");
    pos_[x - 1] = i;
  }
}

LinearOrder LinearOrder::reference(int n) {
  std::vector<int> seq(std::max(n, 0));
  std::iota(seq.begin(), seq.end(), 1);
  return LinearOrder(std::move(seq));
}

int LinearOrder::position(int x) const {
  if (x < 1 || x > size()) throw InputError("element " + std::to_string(x) + " is not in the order");
  return pos_[x - 1];
}

std::string LinearOrder::name() const {
  std::string out;
  for (int x : seq_) out += static_cast<char>('0' + x);
  return out;
}

std::string LinToken::name() const { return "t:" + std::to_string(x) + "<" + std::to_string(y); }

bool covers(const LinearOrder& l, int x, int y) { return l.position(y) + 1 == l.position(x); }

LinearOrder apply_token(const LinearOrder& l, LinToken t) {
  if (t.x == t.y) throw InputError("token needs two distinct elements");
  if (!covers(l, t.x, t.y)) return l;
  std::vector<int> seq = l.sequence();
  std::swap(seq[l.position(t.x)], seq[l.position(t.y)]);
  return LinearOrder(std::move(seq));
}

std::vector<std::string> pair_ground(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(std::to_string(i) + std::to_string(j));
  }
  return out;
}

std::size_t pair_index(int n, int i, int j) {
  if (i < 1 || j > n || i >= j) throw InputError("pair is not in the reference order");
  // Pairs before row i: sum over r < i of (n - r).
  std::size_t before = static_cast<std::size_t>((i - 1) * n - (i - 1) * i / 2);
  return before + static_cast<std::size_t>(j - i - 1);
}

ElementSet encode(const LinearOrder& l) {
  const int n = l.size();
  std::vector<ElementIndex> elems;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (l.precedes(i, j)) elems.push_back(static_cast<ElementIndex>(pair_index(n, i, j)));
    }
  }
  return ElementSet(std::move(elems));
}

LinearMedium linear_medium(int n, int cap) {
  if (n < 2 || n > std::min(cap, max_linear_elements)) {
    throw InputError("n must lie in 2.." + std::to_string(std::min(cap, max_linear_elements)));
  }
  std::vector<LinearOrder> orders;
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 1);
  do {
    orders.emplace_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));

  std::vector<LinToken> tokens;
  std::vector<TokenIndex> reverse;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      reverse.push_back(tokens.size() + 1);
      reverse.push_back(tokens.size());
      tokens.push_back({i, j});
      tokens.push_back({j, i});
    }
  }

  // Orders are generated in lexicographic order, so the rank lookup is a binary search.
  auto rank = [&](const LinearOrder& l) {
    return static_cast<StateIndex>(std::lower_bound(orders.begin(), orders.end(), l) - orders.begin());
  };
  std::vector<std::string> state_names, token_names;
  std::vector<ElementSet> sets;
  for (const auto& l : orders) {
    state_names.push_back(l.name());
    sets.push_back(encode(l));
  }
  std::vector<std::vector<StateIndex>> action(tokens.size(), std::vector<StateIndex>(orders.size()));
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    token_names.push_back(tokens[t].name());
    for (std::size_t s = 0; s < orders.size(); ++s) action[t][s] = rank(apply_token(orders[s], tokens[t]));
  }
  return LinearMedium{TokenSystem(std::move(state_names), std::move(token_names), std::move(action),
                                  std::move(reverse)),
                      SetFamily(pair_ground(n), std::move(sets)), std::move(orders), std::move(tokens)};
}

bool is_alpha_image(const ElementSet& p, int n) {
  if (n < 1 || n > max_linear_elements) throw InputError("n out of range");
  const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  for (ElementIndex x : p) {
    if (x >= pairs) throw InputError("set is not a subset of the reference order");
  }
  auto transitive = [&](bool inside) {
    auto has = [&](int i, int j) { return p.contains(static_cast<ElementIndex>(pair_index(n, i, j))) == inside; };
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (!has(i, j)) continue;
        for (int k = j + 1; k <= n; ++k) {
          if (has(j, k) && !has(i, k)) return false;
        }
      }
    }
    return true;
  };
  return transitive(true) && transitive(false);
}

}  // namespace media
