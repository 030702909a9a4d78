#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "media/token_system.hpp"

namespace media {

enum class Axiom { M1, M2, M3, M4 };

enum class Verdict {
  holds,              // decided exactly
  holds_up_to_bound,  // no counterexample among messages up to the bound
  fails,              // exact; a witness is attached
  not_evaluated,      // needs a reverse pairing that does not exist
};

const char* to_string(Axiom a);
const char* to_string(Verdict v);

// A replayable counterexample.
//   M1: state --[message[0]]--> target is not undone by the reverse token, or
//       other_message[0] is a second reverse of message[0].
//   M2: no straight message from state to target.
//   M3: message is stepwise effective for state, and exactly one of
//       "ineffective" / "vacuous" holds.
//   M4: message (from state) and other_message (from other_state) are straight,
//       produce the same state, and are not jointly consistent.
struct Witness {
  std::string description;
  StateIndex state = 0;
  Message message;
  std::optional<StateIndex> target;
  std::optional<StateIndex> other_state;
  Message other_message;
};

struct AxiomResult {
  Axiom axiom = Axiom::M1;
  Verdict verdict = Verdict::not_evaluated;
  std::optional<Witness> witness;
};

struct AxiomReport {
  std::array<AxiomResult, 4> results;
  std::size_t bound = 0;
  // True when no axiom fails and all were evaluated.
  bool all_hold() const;
  const AxiomResult& operator[](Axiom a) const { return results[static_cast<std::size_t>(a)]; }
};

struct SearchLimits {
  std::size_t max_nodes = 4'000'000;
};

// Shortest straight (consistent, stepwise effective) message from s to v, by
// breadth-first search over (state, used tokens) nodes; tokens are tried in index
// order. Requires s != v and a reverse pairing.
std::optional<Message> straight_message(const TokenSystem& ts, StateIndex s, StateIndex v,
                                        SearchLimits limits = {});

// Bounded falsifier for the four axioms. M1 and M2 are decided exactly; M3 and M4
// are searched over all stepwise-effective messages of length <= bound, so a
// `fails` verdict is exact while success is `holds_up_to_bound`.
//
// Without a declared pairing M1 fails (the witness names a token lacking a unique
// reverse when there is one) and M2..M4 are not evaluated.
AxiomReport check_axioms(const TokenSystem& ts, std::size_t bound, SearchLimits limits = {});

// M1 alone, decided exactly.
AxiomResult check_reverse_axiom(const TokenSystem& ts);

// Default bound: twice the number of tokens (at least 1).
std::size_t default_axiom_bound(const TokenSystem& ts);

}  // namespace media
