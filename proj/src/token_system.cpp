#include "media/token_system.hpp"

#include <algorithm>
#include <map>

#include "media/error.hpp"

namespace media {

namespace {

template <typename Map>
void index_names(const std::vector<std::string>& names, Map& lookup, const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!lookup.emplace(names[i], i).second) {
      throw InputError(std::string("duplicate ") + what + " id '" + names[i] + "'");
    }
  }
}

}  // namespace

TokenSystem::TokenSystem(std::vector<std::string> states, std::vector<std::string> tokens,
                         std::vector<std::vector<StateIndex>> action,
                         std::optional<std::vector<TokenIndex>> reverse)
    : states_(std::move(states)),
      tokens_(std::move(tokens)),
      action_(std::move(action)),
      reverse_(std::move(reverse)) {
  if (states_.size() < 2) {
    throw InputError("a token system needs more than one state");
  }
  index_names(states_, state_lookup_, "state");
  index_names(tokens_, token_lookup_, "token");
  if (action_.size() != tokens_.size()) {
    throw InputError("action table has " + std::to_string(action_.size()) + " rows for " +
                     std::to_string(tokens_.size()) + " tokens");
  }
  for (TokenIndex t = 0; t < action_.size(); ++t) {
    const auto& row = action_[t];
    if (row.size() != states_.size()) {
      throw InputError("action of token '" + tokens_[t] + "' is not total");
    }
    bool identity = true;
    for (StateIndex s = 0; s < row.size(); ++s) {
      if (row[s] >= states_.size()) {
        throw InputError("action of token '" + tokens_[t] + "' leaves the state set");
      }
      identity = identity && row[s] == s;
    }
    if (identity) {
      throw InputError("token '" + tokens_[t] + "' acts as the identity");
    }
  }
  if (reverse_) {
    const auto& rev = *reverse_;
    if (rev.size() != tokens_.size()) {
      throw InputError("reverse table size does not match the token count");
    }
    for (TokenIndex t = 0; t < rev.size(); ++t) {
      if (rev[t] >= tokens_.size()) {
        throw InputError("reverse of token '" + tokens_[t] + "' is not a token");
      }
      if (rev[t] == t) {
        throw InputError("token '" + tokens_[t] + "' is declared its own reverse");
      }
      if (rev[rev[t]] != t) {
        throw InputError("reverse pairing of token '" + tokens_[t] + "' is not symmetric");
      }
    }
  }
}

std::optional<StateIndex> TokenSystem::find_state(std::string_view name) const {
  auto it = state_lookup_.find(std::string(name));
  if (it == state_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<TokenIndex> TokenSystem::find_token(std::string_view name) const {
  auto it = token_lookup_.find(std::string(name));
  if (it == token_lookup_.end()) return std::nullopt;
  return it->second;
}

StateIndex TokenSystem::state_index(std::string_view name) const {
  if (auto s = find_state(name)) return *s;
  throw InputError("unknown state '" + std::string(name) + "'");
}

TokenIndex TokenSystem::token_index(std::string_view name) const {
  if (auto t = find_token(name)) return *t;
  throw InputError("unknown token '" + std::string(name) + "'");
}

StateIndex TokenSystem::act(TokenIndex t, StateIndex s) const {
  if (t >= tokens_.size()) throw InputError("token index out of range");
  if (s >= states_.size()) throw InputError("state index out of range");
  return action_[t][s];
}

TokenIndex TokenSystem::reverse(TokenIndex t) const {
  if (!reverse_) throw ConfigError("token system has no reverse pairing");
  if (t >= tokens_.size()) throw InputError("token index out of range");
  return (*reverse_)[t];
}

TokenSystem TokenSystem::with_reverse(std::optional<std::vector<TokenIndex>> reverse) const {
  return TokenSystem(states_, tokens_, action_, std::move(reverse));
}

Message make_message(const TokenSystem& ts, std::span<const std::string> names) {
  Message m;
  m.tokens.reserve(names.size());
  for (const auto& n : names) m.tokens.push_back(ts.token_index(n));
  return m;
}

StateIndex apply(const TokenSystem& ts, StateIndex s, const Message& m) {
  if (s >= ts.state_count()) throw InputError("state index out of range");
  for (TokenIndex t : m.tokens) s = ts.act(t, s);
  return s;
}

std::vector<TokenIndex> content(const Message& m) {
  std::vector<TokenIndex> c = m.tokens;
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

bool is_stepwise_effective(const TokenSystem& ts, StateIndex s, const Message& m) {
  if (s >= ts.state_count()) throw InputError("state index out of range");
  for (TokenIndex t : m.tokens) {
    StateIndex next = ts.act(t, s);
    if (next == s) return false;
    s = next;
  }
  return true;
}

bool is_consistent(const TokenSystem& ts, const Message& m) {
  if (!ts.has_reverse()) throw ConfigError("token system has no reverse pairing");
  std::vector<bool> used(ts.token_count(), false);
  for (TokenIndex t : m.tokens) {
    if (t >= ts.token_count()) throw InputError("token index out of range");
    used[t] = true;
  }
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    if (used[t] && used[ts.reverse(t)]) return false;
  }
  return true;
}

bool is_vacuous(const TokenSystem& ts, const Message& m) {
  if (!ts.has_reverse()) throw ConfigError("token system has no reverse pairing");
  std::vector<long> count(ts.token_count(), 0);
  for (TokenIndex t : m.tokens) {
    if (t >= ts.token_count()) throw InputError("token index out of range");
    ++count[t];
  }
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    if (count[t] != count[ts.reverse(t)]) return false;
  }
  return true;
}

bool is_reverse_of(const TokenSystem& ts, TokenIndex t, TokenIndex candidate) {
  for (StateIndex s = 0; s < ts.state_count(); ++s) {
    StateIndex v = ts.act(t, s);
    if (v != s && ts.act(candidate, v) != s) return false;
    StateIndex w = ts.act(candidate, s);
    if (w != s && ts.act(t, w) != s) return false;
  }
  return true;
}

std::optional<std::vector<TokenIndex>> infer_reverse(const TokenSystem& ts) {
  std::vector<TokenIndex> rev(ts.token_count());
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    std::size_t found = 0;
    for (TokenIndex u = 0; u < ts.token_count(); ++u) {
      if (is_reverse_of(ts, t, u)) {
        rev[t] = u;
        ++found;
      }
    }
    if (found != 1 || rev[t] == t) return std::nullopt;
  }
  return rev;
}

TokenSystem reduce(const TokenSystem& ts, std::span<const StateIndex> q) {
  std::vector<StateIndex> sub(q.begin(), q.end());
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  if (sub.size() < 2) throw InputError("a reduction needs at least two states");
  if (sub.back() >= ts.state_count()) throw InputError("state index out of range");

  std::vector<std::size_t> local(ts.state_count(), sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) local[sub[i]] = i;

  std::vector<std::string> states;
  states.reserve(sub.size());
  for (StateIndex s : sub) states.push_back(ts.state_name(s));

  std::vector<std::string> tokens;
  std::vector<std::vector<StateIndex>> action;
  std::map<std::vector<StateIndex>, std::size_t> seen;
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    std::vector<StateIndex> row(sub.size());
    bool identity = true;
    for (std::size_t i = 0; i < sub.size(); ++i) {
      StateIndex image = ts.act(t, sub[i]);
      row[i] = local[image] < sub.size() ? local[image] : i;
      identity = identity && row[i] == i;
    }
    if (identity || !seen.emplace(row, tokens.size()).second) continue;
    tokens.push_back(ts.token_name(t));
    action.push_back(std::move(row));
  }

  TokenSystem reduced(std::move(states), std::move(tokens), std::move(action));
  auto rev = infer_reverse(reduced);
  return rev ? reduced.with_reverse(std::move(rev)) : reduced;
}

}  // namespace media
