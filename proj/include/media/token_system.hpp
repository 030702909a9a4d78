#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace media {

using StateIndex = std::size_t;
using TokenIndex = std::size_t;

// A finite sequence of tokens, stored by index into the owning TokenSystem.
struct Message {
  std::vector<TokenIndex> tokens;

  std::size_t length() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  friend bool operator==(const Message&, const Message&) = default;
};

// A finite set of states together with a finite set of transformations
// (tokens) of those states. The action table is total; the optional reverse
// table pairs each token with its reverse.
//
// Construction enforces:
//   - more than one state, unique state and token names;
//   - every action entry names a valid state;
//   - no token acts as the identity on every state;
//   - the reverse table, when present, is an involution without fixed points.
class TokenSystem {
 public:
  TokenSystem(std::vector<std::string> states, std::vector<std::string> tokens,
              std::vector<std::vector<StateIndex>> action,
              std::optional<std::vector<TokenIndex>> reverse = std::nullopt);

  std::size_t state_count() const { return states_.size(); }
  std::size_t token_count() const { return tokens_.size(); }

  const std::vector<std::string>& state_names() const { return states_; }
  const std::vector<std::string>& token_names() const { return tokens_; }
  const std::string& state_name(StateIndex s) const { return states_.at(s); }
  const std::string& token_name(TokenIndex t) const { return tokens_.at(t); }

  std::optional<StateIndex> find_state(std::string_view name) const;
  std::optional<TokenIndex> find_token(std::string_view name) const;
  // Throwing lookups (InputError on unknown names).
  StateIndex state_index(std::string_view name) const;
  TokenIndex token_index(std::string_view name) const;

  // S tau. Bounds-checked.
  StateIndex act(TokenIndex t, StateIndex s) const;
  const std::vector<std::vector<StateIndex>>& action() const { return action_; }

  bool has_reverse() const { return reverse_.has_value(); }
  // Throws ConfigError when no reverse pairing is attached.
  TokenIndex reverse(TokenIndex t) const;
  const std::optional<std::vector<TokenIndex>>& reverse_table() const { return reverse_; }

  // Same states and action, with a different (or no) reverse pairing.
  TokenSystem with_reverse(std::optional<std::vector<TokenIndex>> reverse) const;

  friend bool operator==(const TokenSystem&, const TokenSystem&) = default;

 private:
  std::vector<std::string> states_;
  std::vector<std::string> tokens_;
  std::vector<std::vector<StateIndex>> action_;  // [token][state]
  std::optional<std::vector<TokenIndex>> reverse_;
  std::unordered_map<std::string, StateIndex> state_lookup_;
  std::unordered_map<std::string, TokenIndex> token_lookup_;
};

Message make_message(const TokenSystem& ts, std::span<const std::string> names);

// Left-to-right composition; the empty message returns `s`.
StateIndex apply(const TokenSystem& ts, StateIndex s, const Message& m);

// Distinct tokens of `m`, ascending by index.
std::vector<TokenIndex> content(const Message& m);

// Every prefix application changes the state.
bool is_stepwise_effective(const TokenSystem& ts, StateIndex s, const Message& m);

// No token occurs together with its reverse. Needs a reverse pairing.
bool is_consistent(const TokenSystem& ts, const Message& m);

// Occurrences pair off into mutually reverse tokens. Needs a reverse pairing.
bool is_vacuous(const TokenSystem& ts, const Message& m);

// Is `candidate` a reverse of `t`: for all distinct S, V, S t = V <=> V candidate = S.
bool is_reverse_of(const TokenSystem& ts, TokenIndex t, TokenIndex candidate);

// The pairing in which every token has exactly one reverse, distinct from itself;
// nullopt when such a pairing does not exist.
std::optional<std::vector<TokenIndex>> infer_reverse(const TokenSystem& ts);

// Reduction to the state subset `q` (at least two distinct states). Token reductions
// that act as the identity are discarded, equal reductions are merged (the first
// token name wins), and the reverse pairing is recomputed from the reduced action.
TokenSystem reduce(const TokenSystem& ts, std::span<const StateIndex> q);

}  // namespace media
