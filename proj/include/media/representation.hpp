#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "media/axioms.hpp"
#include "media/graph.hpp"
#include "media/set_family.hpp"
#include "media/token_system.hpp"

namespace media {

// A partition of the tokens, closed under reversal: t positive <=> reverse(t) negative.
struct Orientation {
  std::vector<TokenIndex> positive;  // ascending
  std::vector<TokenIndex> negative;  // ascending
  bool is_positive(TokenIndex t) const;
};

// Content of every state of a medium, as ascending token lists.
struct ContentTable {
  std::vector<std::vector<TokenIndex>> content;

  const std::vector<TokenIndex>& operator[](StateIndex s) const { return content.at(s); }
  std::vector<TokenIndex> positive(StateIndex s, const Orientation& o) const;
  std::vector<TokenIndex> negative(StateIndex s, const Orientation& o) const;
};

// Contents from one breadth-first tree rooted at state 0: the content of V is
// that of state 0 with the reverses of the path tokens to V swapped for the path
// tokens themselves. Needs a reverse pairing; throws InputError when the result
// breaks the one-of-each-pair rule or separates fewer states than it should.
ContentTable contents(const TokenSystem& ts);

// T- is the content of s0, T+ its complement.
Orientation orient_from_state(const TokenSystem& ts, StateIndex s0);
Orientation orient_from_state(const TokenSystem& ts, const ContentTable& table, StateIndex s0);

// Family of positive contents with the maps of the isomorphism onto its medium.
// Ground elements are the positive tokens in index order, named after them.
struct Representation {
  SetFamily family;                // family[s] is the image of state s
  std::vector<FamilyToken> beta;   // per token: add element, or remove element
};

// Throws InputError if the orientation is invalid or the isomorphism property fails.
Representation positive_content_family(const TokenSystem& ts, const Orientation& o);

struct MediumDecision {
  bool is_medium = false;
  std::optional<Representation> representation;  // equals the family oriented from state 0
  std::string reason;                            // on "no"
  std::optional<Axiom> axiom;                    // violated axiom, when one is identified
  std::optional<Witness> witness;
  std::optional<PartialCubeResult> pcube;        // rejection of the graph, when that is the cause
};

// Exact: reverse axiom, connectivity, partial-cube test of the graph, then every
// token is matched against the add/remove reduction it labels, fixed points included.
// Throws CapError above limits.max_vertices.
MediumDecision decide_medium(const TokenSystem& ts, GraphLimits limits = {});

struct EmbeddingReport {
  bool is_embedding = false;
  // (state, token) of ts1 where S tau = T and alpha(S) beta(tau) = alpha(T) disagree.
  std::optional<std::pair<StateIndex, TokenIndex>> counterexample;
  // The reduction of ts2 to the image of alpha is isomorphic to ts1 under alpha and
  // the reductions of beta.
  bool reduction_isomorphic = false;
};

// Throws InputError when a map has the wrong size, leaves its range, or is not injective.
EmbeddingReport verify_embedding(const TokenSystem& ts1, const TokenSystem& ts2,
                                 const std::vector<StateIndex>& alpha,
                                 const std::vector<TokenIndex>& beta);

}  // namespace media
