#include "media/axioms.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <span>
#include <unordered_map>

#include "media/error.hpp"

namespace media {

namespace {

using Key = std::vector<std::uint64_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : k) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Search tree shared by the breadth-first searches below.
struct Node {
  StateIndex start;
  StateIndex state;
  std::size_t parent;  // npos for roots
  TokenIndex via;
  std::size_t depth;
  Key key;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

class SearchTree {
 public:
  explicit SearchTree(std::size_t max_nodes) : max_nodes_(max_nodes) {}

  // Returns the new node index, or npos when the key was already present.
  std::size_t add(Node n) {
    auto [it, inserted] = index_.emplace(n.key, nodes_.size());
    if (!inserted) return npos;
    if (nodes_.size() >= max_nodes_) {
      throw CapError("message search exceeded " + std::to_string(max_nodes_) + " nodes");
    }
    nodes_.push_back(std::move(n));
    return it->second;
  }

  const Node& operator[](std::size_t i) const { return nodes_[i]; }
  std::size_t size() const { return nodes_.size(); }

  Message path_to(std::size_t i) const {
    Message m;
    for (; nodes_[i].parent != npos; i = nodes_[i].parent) m.tokens.push_back(nodes_[i].via);
    std::reverse(m.tokens.begin(), m.tokens.end());
    return m;
  }

 private:
  std::size_t max_nodes_;
  std::vector<Node> nodes_;
  std::unordered_map<Key, std::size_t, KeyHash> index_;
};

std::size_t mask_words(const TokenSystem& ts) { return (ts.token_count() + 63) / 64; }

bool mask_has(const Key& key, TokenIndex t) {
  return (key[1 + t / 64] >> (t % 64)) & 1u;
}

Key mask_key(StateIndex state, const Key* from, TokenIndex add, std::size_t words) {
  Key k(1 + words, 0);
  if (from) std::copy(from->begin() + 1, from->end(), k.begin() + 1);
  k[0] = state;
  if (add != npos) k[1 + add / 64] |= std::uint64_t{1} << (add % 64);
  return k;
}

// Breadth-first search over straight messages from the given sources. Nodes are
// (state, set of used tokens); `visit` sees every node once and may return false
// to stop the search.
template <typename Visit>
void straight_search(const TokenSystem& ts, std::span<const TokenIndex> rev,
                     std::span<const StateIndex> sources, std::size_t max_depth,
                     SearchTree& tree, Visit&& visit) {
  const std::size_t words = mask_words(ts);
  std::deque<std::size_t> queue;
  for (StateIndex s : sources) {
    std::size_t id = tree.add({s, s, npos, 0, 0, mask_key(s, nullptr, npos, words)});
    if (id != npos) queue.push_back(id);
  }
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    if (!visit(id)) return;
    if (tree[id].depth >= max_depth) continue;
    for (TokenIndex t = 0; t < ts.token_count(); ++t) {
      const Node& cur = tree[id];
      if (mask_has(cur.key, rev[t])) continue;
      StateIndex next = ts.act(t, cur.state);
      if (next == cur.state) continue;
      Node child{cur.start, next, id, t, cur.depth + 1, mask_key(next, &cur.key, t, words)};
      std::size_t cid = tree.add(std::move(child));
      if (cid != npos) queue.push_back(cid);
    }
  }
}

std::vector<TokenIndex> checked_reverse(const TokenSystem& ts) {
  if (!ts.has_reverse()) throw ConfigError("token system has no reverse pairing");
  return *ts.reverse_table();
}

AxiomResult check_m1(const TokenSystem& ts, std::optional<std::vector<TokenIndex>>& pairing) {
  AxiomResult r{Axiom::M1, Verdict::holds, std::nullopt};
  if (!ts.has_reverse()) {
    r.verdict = Verdict::fails;
    for (TokenIndex t = 0; t < ts.token_count(); ++t) {
      std::vector<TokenIndex> found;
      for (TokenIndex u = 0; u < ts.token_count(); ++u) {
        if (is_reverse_of(ts, t, u)) found.push_back(u);
      }
      if (found.size() == 1 && found[0] != t) continue;
      Witness w;
      w.message.tokens = {t};
      if (found.empty()) {
        w.description = "token '" + ts.token_name(t) + "' has no reverse";
      } else if (found.size() == 1) {
        w.description = "token '" + ts.token_name(t) + "' is its own reverse";
        w.other_message.tokens = {t};
      } else {
        w.description = "token '" + ts.token_name(t) + "' has more than one reverse";
        w.other_message.tokens = {found[0] == t ? found[1] : found[0]};
      }
      r.witness = std::move(w);
      return r;
    }
    Witness w;
    w.description = "no reverse pairing is declared";
    r.witness = std::move(w);
    return r;
  }

  pairing = ts.reverse_table();
  const auto& rev = *pairing;
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    for (StateIndex s = 0; s < ts.state_count(); ++s) {
      StateIndex v = ts.act(t, s);
      if (v != s && ts.act(rev[t], v) != s) {
        Witness w;
        w.description = "step by '" + ts.token_name(t) + "' is not undone by its reverse '" +
                        ts.token_name(rev[t]) + "'";
        w.state = s;
        w.message.tokens = {t};
        w.target = v;
        r.verdict = Verdict::fails;
        r.witness = std::move(w);
        return r;
      }
    }
  }
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    for (TokenIndex u = 0; u < ts.token_count(); ++u) {
      if (u == rev[t] || !is_reverse_of(ts, t, u)) continue;
      Witness w;
      w.description = "token '" + ts.token_name(t) + "' has a second reverse '" +
                      ts.token_name(u) + "'";
      w.message.tokens = {t};
      w.other_message.tokens = {u};
      r.verdict = Verdict::fails;
      r.witness = std::move(w);
      return r;
    }
  }
  return r;
}

AxiomResult check_m2(const TokenSystem& ts, std::span<const TokenIndex> rev,
                     const SearchLimits& limits) {
  AxiomResult r{Axiom::M2, Verdict::holds, std::nullopt};
  for (StateIndex s = 0; s < ts.state_count(); ++s) {
    std::vector<bool> reached(ts.state_count(), false);
    std::size_t remaining = ts.state_count();
    SearchTree tree(limits.max_nodes);
    const StateIndex source[] = {s};
    straight_search(ts, rev, source, npos, tree, [&](std::size_t id) {
      StateIndex v = tree[id].state;
      if (!reached[v]) {
        reached[v] = true;
        --remaining;
      }
      return remaining > 0;
    });
    for (StateIndex v = 0; v < ts.state_count(); ++v) {
      if (reached[v]) continue;
      Witness w;
      w.description = "no straight message from '" + ts.state_name(s) + "' to '" +
                      ts.state_name(v) + "'";
      w.state = s;
      w.target = v;
      r.verdict = Verdict::fails;
      r.witness = std::move(w);
      return r;
    }
  }
  return r;
}

// Stepwise-effective messages from each start, deduplicated on (state, net count of
// every token pair). Continuations of a node depend only on that key, and so does
// the ineffective/vacuous test, so the first occurrence of a key is the shortest.
AxiomResult check_m3(const TokenSystem& ts, std::span<const TokenIndex> rev, std::size_t bound,
                     const SearchLimits& limits) {
  AxiomResult r{Axiom::M3, Verdict::holds_up_to_bound, std::nullopt};
  const std::size_t n_tokens = ts.token_count();
  std::vector<std::size_t> pair_of(n_tokens);
  std::vector<int> sign(n_tokens);
  std::size_t pairs = 0;
  for (TokenIndex t = 0; t < n_tokens; ++t) {
    if (t < rev[t]) {
      pair_of[t] = pair_of[rev[t]] = pairs++;
      sign[t] = 1;
      sign[rev[t]] = -1;
    }
  }
  const std::uint64_t offset = bound + 1;

  for (StateIndex s = 0; s < ts.state_count(); ++s) {
    SearchTree tree(limits.max_nodes);
    Key root(1 + pairs, offset);
    root[0] = s;
    std::deque<std::size_t> queue{tree.add({s, s, npos, 0, 0, root})};
    while (!queue.empty()) {
      std::size_t id = queue.front();
      queue.pop_front();
      if (tree[id].depth > 0) {
        const Key& k = tree[id].key;
        bool ineffective = tree[id].state == s;
        bool vacuous = std::all_of(k.begin() + 1, k.end(),
                                   [&](std::uint64_t c) { return c == offset; });
        if (ineffective != vacuous) {
          Witness w;
          w.description = ineffective
                              ? "stepwise effective message returns to its state but is not vacuous"
                              : "stepwise effective vacuous message is effective";
          w.state = s;
          w.message = tree.path_to(id);
          r.verdict = Verdict::fails;
          r.witness = std::move(w);
          return r;
        }
      }
      if (tree[id].depth >= bound) continue;
      for (TokenIndex t = 0; t < n_tokens; ++t) {
        const Node& cur = tree[id];
        StateIndex next = ts.act(t, cur.state);
        if (next == cur.state) continue;
        Key k = cur.key;
        k[0] = next;
        k[1 + pair_of[t]] += sign[t];
        std::size_t cid = tree.add({s, next, id, t, cur.depth + 1, std::move(k)});
        if (cid != npos) queue.push_back(cid);
      }
    }
  }
  return r;
}

AxiomResult check_m4(const TokenSystem& ts, std::span<const TokenIndex> rev, std::size_t bound,
                     const SearchLimits& limits) {
  AxiomResult r{Axiom::M4, Verdict::holds_up_to_bound, std::nullopt};
  std::vector<StateIndex> sources(ts.state_count());
  for (StateIndex s = 0; s < ts.state_count(); ++s) sources[s] = s;
  SearchTree tree(limits.max_nodes);
  straight_search(ts, rev, sources, bound, tree, [](std::size_t) { return true; });

  // first[state][token]: a node ending at `state` whose content holds `token`.
  std::vector<std::vector<std::size_t>> first(ts.state_count(),
                                              std::vector<std::size_t>(ts.token_count(), npos));
  for (std::size_t id = 0; id < tree.size(); ++id) {
    const Node& n = tree[id];
    for (TokenIndex t = 0; t < ts.token_count(); ++t) {
      if (mask_has(n.key, t) && first[n.state][t] == npos) first[n.state][t] = id;
    }
  }
  for (StateIndex v = 0; v < ts.state_count(); ++v) {
    for (TokenIndex t = 0; t < ts.token_count(); ++t) {
      std::size_t a = first[v][t];
      std::size_t b = first[v][rev[t]];
      if (a == npos || b == npos) continue;
      Witness w;
      w.description = "two straight messages producing '" + ts.state_name(v) +
                      "' are not jointly consistent";
      w.state = tree[a].start;
      w.message = tree.path_to(a);
      w.target = v;
      w.other_state = tree[b].start;
      w.other_message = tree.path_to(b);
      r.verdict = Verdict::fails;
      r.witness = std::move(w);
      return r;
    }
  }
  return r;
}

}  // namespace

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::M1: return "M1";
    case Axiom::M2: return "M2";
    case Axiom::M3: return "M3";
    case Axiom::M4: return "M4";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::holds_up_to_bound: return "holds-up-to-bound";
    case Verdict::fails: return "fails";
    case Verdict::not_evaluated: return "not-evaluated";
  }
  return "?";
}

bool AxiomReport::all_hold() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) {
    return r.verdict == Verdict::holds || r.verdict == Verdict::holds_up_to_bound;
  });
}

std::size_t default_axiom_bound(const TokenSystem& ts) {
  return std::max<std::size_t>(1, 2 * ts.token_count());
}

std::optional<Message> straight_message(const TokenSystem& ts, StateIndex s, StateIndex v,
                                        SearchLimits limits) {
  if (s >= ts.state_count() || v >= ts.state_count()) {
    throw InputError("state index out of range");
  }
  if (s == v) throw InputError("straight_message needs two distinct states");
  const auto rev = checked_reverse(ts);
  SearchTree tree(limits.max_nodes);
  std::size_t hit = npos;
  const StateIndex source[] = {s};
  straight_search(ts, rev, source, npos, tree, [&](std::size_t id) {
    if (tree[id].state != v) return true;
    hit = id;
    return false;
  });
  if (hit == npos) return std::nullopt;
  return tree.path_to(hit);
}

AxiomResult check_reverse_axiom(const TokenSystem& ts) {
  std::optional<std::vector<TokenIndex>> pairing;
  return check_m1(ts, pairing);
}

AxiomReport check_axioms(const TokenSystem& ts, std::size_t bound, SearchLimits limits) {
  if (bound < 1) throw InputError("axiom bound must be at least 1");
  AxiomReport report;
  report.bound = bound;
  std::optional<std::vector<TokenIndex>> pairing;
  report.results[0] = check_m1(ts, pairing);
  if (!pairing) {
    report.results[1] = {Axiom::M2, Verdict::not_evaluated, std::nullopt};
    report.results[2] = {Axiom::M3, Verdict::not_evaluated, std::nullopt};
    report.results[3] = {Axiom::M4, Verdict::not_evaluated, std::nullopt};
    return report;
  }
  report.results[1] = check_m2(ts, *pairing, limits);
  report.results[2] = check_m3(ts, *pairing, bound, limits);
  report.results[3] = check_m4(ts, *pairing, bound, limits);
  return report;
}

}  // namespace media
