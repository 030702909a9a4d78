#include "media/representation.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "media/error.hpp"

namespace media {

bool Orientation::is_positive(TokenIndex t) const {
  return std::binary_search(positive.begin(), positive.end(), t);
}

std::vector<TokenIndex> ContentTable::positive(StateIndex s, const Orientation& o) const {
  std::vector<TokenIndex> out;
  for (TokenIndex t : content.at(s)) {
    if (o.is_positive(t)) out.push_back(t);
  }
  return out;
}

std::vector<TokenIndex> ContentTable::negative(StateIndex s, const Orientation& o) const {
  std::vector<TokenIndex> out;
  for (TokenIndex t : content.at(s)) {
    if (!o.is_positive(t)) out.push_back(t);
  }
  return out;
}

ContentTable contents(const TokenSystem& ts) {
  if (!ts.has_reverse()) throw ConfigError("contents need a reverse pairing");
  const std::size_t n = ts.state_count(), k = ts.token_count();

  // path[v][t]: token t occurs on the tree path from state 0 to v.
  std::vector<std::vector<char>> path(n);
  path[0].assign(k, 0);
  std::deque<StateIndex> queue{0};
  while (!queue.empty()) {
    StateIndex s = queue.front();
    queue.pop_front();
    for (TokenIndex t = 0; t < k; ++t) {
      StateIndex v = ts.act(t, s);
      if (v == s || !path[v].empty()) continue;
      if (path[s][t] || path[s][ts.reverse(t)]) {
        throw InputError("shortest message to '" + ts.state_name(v) + "' is not straight");
      }
      path[v] = path[s];
      path[v][t] = 1;
      queue.push_back(v);
    }
  }

  std::vector<char> used(k, 0);
  for (StateIndex v = 0; v < n; ++v) {
    if (path[v].empty()) throw InputError("state '" + ts.state_name(v) + "' is unreachable");
    for (TokenIndex t = 0; t < k; ++t) used[t] |= path[v][t];
  }
  std::vector<char> base(k, 0);
  for (TokenIndex t = 0; t < k; ++t) {
    TokenIndex r = ts.reverse(t);
    if (used[t] && used[r]) {
      throw InputError("tokens '" + ts.token_name(t) + "' and '" + ts.token_name(r) +
                       "' both lead away from '" + ts.state_name(0) + "'");
    }
    if (!used[t] && !used[r]) {
      throw InputError("token '" + ts.token_name(t) + "' never occurs on a shortest path");
    }
    base[t] = used[r];
  }

  ContentTable table;
  table.content.resize(n);
  std::map<std::vector<TokenIndex>, StateIndex> seen;
  for (StateIndex v = 0; v < n; ++v) {
    auto& c = table.content[v];
    for (TokenIndex t = 0; t < k; ++t) {
      if (path[v][t] || (base[t] && !path[v][ts.reverse(t)])) c.push_back(t);
    }
    if (auto [it, fresh] = seen.emplace(c, v); !fresh) {
      throw InputError("states '" + ts.state_name(it->second) + "' and '" + ts.state_name(v) +
                       "' have the same content");
    }
  }
  return table;
}

Orientation orient_from_state(const TokenSystem& ts, const ContentTable& table, StateIndex s0) {
  if (s0 >= ts.state_count()) throw InputError("state index out of range");
  Orientation o;
  const auto& neg = table[s0];
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    (std::binary_search(neg.begin(), neg.end(), t) ? o.negative : o.positive).push_back(t);
  }
  return o;
}

Orientation orient_from_state(const TokenSystem& ts, StateIndex s0) {
  return orient_from_state(ts, contents(ts), s0);
}

namespace {

void check_orientation(const TokenSystem& ts, const Orientation& o) {
  if (!ts.has_reverse()) throw ConfigError("an orientation needs a reverse pairing");
  if (o.positive.size() + o.negative.size() != ts.token_count()) {
    throw InputError("orientation does not partition the tokens");
  }
  std::vector<int> side(ts.token_count(), 0);
  for (TokenIndex t : o.positive) {
    if (t >= side.size() || side[t]) throw InputError("orientation does not partition the tokens");
    side[t] = 1;
  }
  for (TokenIndex t : o.negative) {
    if (t >= side.size() || side[t]) throw InputError("orientation does not partition the tokens");
    side[t] = -1;
  }
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    if (side[t] == side[ts.reverse(t)]) {
      throw InputError("token '" + ts.token_name(t) + "' and its reverse share a side");
    }
  }
  if (!std::is_sorted(o.positive.begin(), o.positive.end()) ||
      !std::is_sorted(o.negative.begin(), o.negative.end())) {
    throw InputError("orientation lists must be ascending");
  }
}

// Image of state s under the set token b, or s itself when the image is not a member.
StateIndex act_on_family(const SetFamily& f, StateIndex s, FamilyToken b) {
  const ElementSet& set = f[s];
  bool has = set.contains(b.element);
  if (has == b.add) return s;
  auto image = f.find(set.toggled(b.element));
  return image ? *image : s;
}

}  // namespace

Representation positive_content_family(const TokenSystem& ts, const Orientation& o) {
  check_orientation(ts, o);
  ContentTable table = contents(ts);

  std::vector<ElementIndex> element(ts.token_count(), 0);
  std::vector<std::string> ground;
  for (TokenIndex t : o.positive) {
    element[t] = static_cast<ElementIndex>(ground.size());
    ground.push_back(ts.token_name(t));
  }
  std::vector<ElementSet> sets;
  sets.reserve(ts.state_count());
  for (StateIndex s = 0; s < ts.state_count(); ++s) {
    std::vector<ElementIndex> elems;
    for (TokenIndex t : table.positive(s, o)) elems.push_back(element[t]);
    sets.emplace_back(std::move(elems));
  }
  Representation rep{SetFamily(std::move(ground), std::move(sets)), {}};
  rep.beta.reserve(ts.token_count());
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    if (o.is_positive(t)) {
      rep.beta.push_back({element[t], true});
    } else {
      rep.beta.push_back({element[ts.reverse(t)], false});
    }
  }
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    for (StateIndex s = 0; s < ts.state_count(); ++s) {
      if (act_on_family(rep.family, s, rep.beta[t]) != ts.act(t, s)) {
        throw InputError("token '" + ts.token_name(t) + "' on state '" + ts.state_name(s) +
                         "' disagrees with its positive-content image");
      }
    }
  }
  return rep;
}

MediumDecision decide_medium(const TokenSystem& ts, GraphLimits limits) {
  MediumDecision d;
  AxiomResult m1 = check_reverse_axiom(ts);
  if (m1.verdict == Verdict::fails) {
    d.reason = "[M1] " + m1.witness->description;
    d.axiom = Axiom::M1;
    d.witness = std::move(m1.witness);
    return d;
  }
  if (ts.state_count() > limits.max_vertices) {
    throw CapError("token system has " + std::to_string(ts.state_count()) + " states, cap is " +
                   std::to_string(limits.max_vertices));
  }

  LabeledGraph g = medium_graph(ts);
  {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexIndex> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      VertexIndex v = stack.back();
      stack.pop_back();
      for (VertexIndex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (StateIndex v = 1; v < ts.state_count(); ++v) {
      if (seen[v]) continue;
      Witness w;
      w.description = "no straight message from '" + ts.state_name(0) + "' to '" +
                      ts.state_name(v) + "'";
      w.state = 0;
      w.target = v;
      d.reason = "[M2] " + w.description;
      d.axiom = Axiom::M2;
      d.witness = std::move(w);
      return d;
    }
  }

  PartialCubeResult cube = is_partial_cube(g, limits);
  if (!cube.accepted) {
    if (cube.rejection == CubeRejection::odd_cycle) {
      // An odd closed walk of effective steps: stepwise effective, ineffective, never vacuous.
      Witness w;
      const auto& cyc = cube.odd_cycle;
      w.state = cyc.front();
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        StateIndex from = cyc[i], to = cyc[(i + 1) % cyc.size()];
        TokenIndex t = 0;
        while (ts.act(t, from) != to) ++t;
        w.message.tokens.push_back(t);
      }
      w.target = w.state;
      w.description = "odd closed walk of length " + std::to_string(cyc.size()) +
                      " is ineffective but not vacuous";
      d.reason = "[M3] " + w.description;
      d.axiom = Axiom::M3;
      d.witness = std::move(w);
    } else {
      d.reason = std::string("graph is not a partial cube (") + to_string(cube.rejection) + ")";
    }
    d.pcube = std::move(cube);
    return d;
  }

  const SetFamily& labels = *cube.labeling;
  const std::size_t k = ts.token_count();
  std::vector<FamilyToken> beta(k);
  std::map<std::pair<ElementIndex, bool>, TokenIndex> owner;
  for (TokenIndex t = 0; t < k; ++t) {
    StateIndex s = 0;
    while (ts.act(t, s) == s) ++s;
    StateIndex v = ts.act(t, s);
    ElementSet diff = symmetric_difference(labels[s], labels[v]);
    if (diff.size() != 1) throw DefectError("an edge of a partial cube changes more than one coordinate");
    ElementIndex c = *diff.begin();
    beta[t] = {c, labels[v].contains(c)};
    if (auto [it, fresh] = owner.emplace(std::make_pair(c, beta[t].add), t); !fresh) {
      Witness w;
      w.description = "tokens '" + ts.token_name(it->second) + "' and '" + ts.token_name(t) +
                      "' label the same coordinate step";
      w.message.tokens = {it->second};
      w.other_message.tokens = {t};
      d.reason = w.description;
      d.witness = std::move(w);
      return d;
    }
  }
  for (TokenIndex t = 0; t < k; ++t) {
    const FamilyToken& b = beta[t];
    const FamilyToken& r = beta[ts.reverse(t)];
    if (r.element != b.element || r.add == b.add) {
      Witness w;
      w.description = "reverse tokens '" + ts.token_name(t) + "' and '" +
                      ts.token_name(ts.reverse(t)) + "' do not undo one coordinate";
      w.message.tokens = {t, ts.reverse(t)};
      d.reason = w.description;
      d.witness = std::move(w);
      return d;
    }
    for (StateIndex s = 0; s < ts.state_count(); ++s) {
      StateIndex expected = act_on_family(labels, s, b);
      if (ts.act(t, s) == expected) continue;
      Witness w;
      w.description = "token '" + ts.token_name(t) + "' on state '" + ts.state_name(s) +
                      "' does not act as the coordinate step it labels";
      w.state = s;
      w.message.tokens = {t};
      w.target = ts.act(t, s);
      d.reason = w.description;
      d.witness = std::move(w);
      return d;
    }
  }

  // Rename coordinates after their adding tokens, in token order.
  std::vector<std::pair<TokenIndex, ElementIndex>> adders;
  for (const auto& [key, t] : owner) {
    if (key.second) adders.emplace_back(t, key.first);
  }
  std::sort(adders.begin(), adders.end());
  std::vector<ElementIndex> rename(labels.ground().size(), 0);
  std::vector<std::string> ground;
  for (auto [t, c] : adders) {
    rename[c] = static_cast<ElementIndex>(ground.size());
    ground.push_back(ts.token_name(t));
  }
  std::vector<ElementSet> sets;
  sets.reserve(labels.size());
  for (const ElementSet& s : labels.sets()) {
    std::vector<ElementIndex> elems;
    for (ElementIndex c : s) elems.push_back(rename[c]);
    std::sort(elems.begin(), elems.end());
    sets.emplace_back(std::move(elems));
  }
  for (FamilyToken& b : beta) b.element = rename[b.element];

  d.is_medium = true;
  d.representation = Representation{SetFamily(std::move(ground), std::move(sets)), std::move(beta)};
  return d;
}

EmbeddingReport verify_embedding(const TokenSystem& ts1, const TokenSystem& ts2,
                                 const std::vector<StateIndex>& alpha,
                                 const std::vector<TokenIndex>& beta) {
  if (alpha.size() != ts1.state_count()) throw InputError("state map must cover every state");
  if (beta.size() != ts1.token_count()) throw InputError("token map must cover every token");
  std::vector<char> hit(ts2.state_count(), 0);
  for (StateIndex s : alpha) {
    if (s >= ts2.state_count()) throw InputError("state map leaves the target");
    if (hit[s]) throw InputError("state map is not one-to-one");
    hit[s] = 1;
  }
  hit.assign(ts2.token_count(), 0);
  for (TokenIndex t : beta) {
    if (t >= ts2.token_count()) throw InputError("token map leaves the target");
    if (hit[t]) throw InputError("token map is not one-to-one");
    hit[t] = 1;
  }

  EmbeddingReport report;
  report.is_embedding = true;
  for (TokenIndex t = 0; t < ts1.token_count() && report.is_embedding; ++t) {
    for (StateIndex s = 0; s < ts1.state_count(); ++s) {
      if (alpha[ts1.act(t, s)] != ts2.act(beta[t], alpha[s])) {
        report.is_embedding = false;
        report.counterexample = std::make_pair(s, t);
        break;
      }
    }
  }

  TokenSystem reduced = reduce(ts2, alpha);
  std::vector<StateIndex> image(alpha);
  std::sort(image.begin(), image.end());
  std::vector<StateIndex> local(ts2.state_count(), 0);
  for (std::size_t i = 0; i < image.size(); ++i) local[image[i]] = i;

  MediaIsomorphism iso;
  for (StateIndex s : alpha) iso.alpha.push_back(local[s]);
  for (TokenIndex t = 0; t < ts1.token_count(); ++t) {
    std::vector<StateIndex> row(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
      StateIndex v = ts2.act(beta[t], image[i]);
      row[i] = std::binary_search(image.begin(), image.end(), v) ? local[v] : i;
    }
    const auto& rows = reduced.action();
    auto it = std::find(rows.begin(), rows.end(), row);
    if (it == rows.end()) return report;
    iso.beta.push_back(static_cast<TokenIndex>(it - rows.begin()));
  }
  report.reduction_isomorphic = is_isomorphism(ts1, reduced, iso);
  return report;
}

}  // namespace media
