#include "media/json_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "media/error.hpp"

namespace media {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where, what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> names_at(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_at(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json names(const TokenSystem& ts, const Message& m) {
  Json out = Json::array();
  for (TokenIndex t : m.tokens) out.push_back(ts.token_name(t));
  return out;
}

Json set_json(const std::vector<std::string>& ground, const ElementSet& s) {
  Json out = Json::array();
  for (ElementIndex x : s) out.push_back(ground[x]);
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
    fail(source + ":" + std::to_string(line) + ":" + std::to_string(column), what);
  }
}

// ---- token systems ----

TokenSystem token_system_from_json(const Json& doc) {
  const Json& j = doc.is_object() && doc.contains("medium") ? doc["medium"] : doc;
  const std::string root = doc.is_object() && doc.contains("medium") ? "medium" : "$";
  std::vector<std::string> states = names_at(member(j, "states", root), root + ".states");

  const Json& tokens_j = member(j, "tokens", root);
  if (!tokens_j.is_array()) fail(root + ".tokens", "expected an array");
  std::vector<std::string> tokens;
  std::vector<std::optional<std::string>> reverse_names;
  for (std::size_t i = 0; i < tokens_j.size(); ++i) {
    std::string where = root + ".tokens[" + std::to_string(i) + "]";
    const Json& t = tokens_j[i];
    tokens.push_back(string_at(member(t, "id", where), where + ".id"));
    if (t.contains("reverse")) {
      reverse_names.push_back(string_at(t["reverse"], where + ".reverse"));
    } else {
      reverse_names.push_back(std::nullopt);
    }
  }

  std::map<std::string, std::size_t> state_of, token_of;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!state_of.emplace(states[i], i).second) fail(root + ".states", "duplicate state \"" + states[i] + "\"");
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!token_of.emplace(tokens[i], i).second) fail(root + ".tokens", "duplicate token \"" + tokens[i] + "\"");
  }

  std::optional<std::vector<TokenIndex>> reverse;
  std::size_t declared = std::count_if(reverse_names.begin(), reverse_names.end(),
                                       [](const auto& r) { return r.has_value(); });
  if (declared != 0 && declared != tokens.size()) {
    fail(root + ".tokens", "reverse must be given for every token or for none");
  }
  // With no tokens the pairing is vacuously complete.
  if (declared != 0 || tokens.empty()) {
    reverse.emplace();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      auto it = token_of.find(*reverse_names[i]);
      if (it == token_of.end()) {
        fail(root + ".tokens[" + std::to_string(i) + "].reverse", "unknown token \"" + *reverse_names[i] + "\"");
      }
      reverse->push_back(it->second);
    }
  }

  const Json& action_j = member(j, "action", root);
  if (!action_j.is_object()) fail(root + ".action", "expected an object");
  for (const auto& [key, value] : action_j.items()) {
    if (!token_of.count(key)) fail(root + ".action", "unknown token \"" + key + "\"");
  }
  std::vector<std::vector<StateIndex>> action(tokens.size(), std::vector<StateIndex>(states.size()));
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    std::string where = root + ".action." + tokens[t];
    auto row = action_j.find(tokens[t]);
    if (row == action_j.end()) fail(root + ".action", "no action for token \"" + tokens[t] + "\"");
    if (!row->is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : row->items()) {
      if (!state_of.count(key)) fail(where, "unknown state \"" + key + "\"");
    }
    for (std::size_t s = 0; s < states.size(); ++s) {
      auto cell = row->find(states[s]);
      if (cell == row->end()) fail(where, "missing entry for state \"" + states[s] + "\"");
      std::string target = string_at(*cell, where + "." + states[s]);
      auto it = state_of.find(target);
      if (it == state_of.end()) fail(where + "." + states[s], "unknown state \"" + target + "\"");
      action[t][s] = it->second;
    }
  }
  try {
    return TokenSystem(std::move(states), std::move(tokens), std::move(action), std::move(reverse));
  } catch (const InputError& e) {
    fail(root, e.what());
  }
}

Json to_json(const TokenSystem& ts) {
  Json out;
  out["states"] = ts.state_names();
  Json tokens = Json::array();
  Json action = Json::object();
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    Json tok = {{"id", ts.token_name(t)}};
    if (ts.has_reverse()) tok["reverse"] = ts.token_name(ts.reverse(t));
    tokens.push_back(std::move(tok));
    Json row = Json::object();
    for (StateIndex s = 0; s < ts.state_count(); ++s) row[ts.state_name(s)] = ts.state_name(ts.act(t, s));
    action[ts.token_name(t)] = std::move(row);
  }
  out["tokens"] = std::move(tokens);
  out["action"] = std::move(action);
  return out;
}

// ---- set families ----

SetFamily set_family_from_json(const Json& j) {
  std::vector<std::string> ground = names_at(member(j, "ground", "$"), "$.ground");
  std::map<std::string, ElementIndex> index;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (!index.emplace(ground[i], static_cast<ElementIndex>(i)).second) {
      fail("$.ground", "duplicate element \"" + ground[i] + "\"");
    }
  }
  const Json& sets_j = member(j, "sets", "$");
  if (!sets_j.is_array()) fail("$.sets", "expected an array");
  std::vector<ElementSet> sets;
  std::map<ElementSet, std::size_t> seen;
  for (std::size_t i = 0; i < sets_j.size(); ++i) {
    std::string where = "$.sets[" + std::to_string(i) + "]";
    std::vector<ElementIndex> elems;
    for (const std::string& name : names_at(sets_j[i], where)) {
      auto it = index.find(name);
      if (it == index.end()) fail(where, "element \"" + name + "\" is not in the ground");
      elems.push_back(it->second);
    }
    ElementSet s(std::move(elems));
    if (auto [it, fresh] = seen.emplace(s, i); !fresh) {
      fail(where, "repeats set " + std::to_string(it->second));
    }
    sets.push_back(std::move(s));
  }
  return SetFamily(std::move(ground), std::move(sets));
}

Json to_json(const SetFamily& f) {
  Json sets = Json::array();
  for (const ElementSet& s : f.sets()) sets.push_back(set_json(f.ground(), s));
  return {{"ground", f.ground()}, {"sets", std::move(sets)}};
}

// ---- reports ----

Json to_json(const TokenSystem& ts, const Witness& w) {
  Json out = {{"description", w.description}, {"state", ts.state_name(w.state)}, {"message", names(ts, w.message)}};
  if (w.target) out["target"] = ts.state_name(*w.target);
  if (w.other_state) out["other_state"] = ts.state_name(*w.other_state);
  if (!w.other_message.empty()) out["other_message"] = names(ts, w.other_message);
  return out;
}

Json to_json(const TokenSystem& ts, const AxiomReport& report) {
  Json axioms = Json::object();
  for (const AxiomResult& r : report.results) {
    Json entry = {{"verdict", to_string(r.verdict)}};
    if (r.witness) entry["witness"] = to_json(ts, *r.witness);
    axioms[to_string(r.axiom)] = std::move(entry);
  }
  return {{"bound", report.bound}, {"axioms", std::move(axioms)}, {"all_hold", report.all_hold()}};
}

Json to_json(const TokenSystem& ts, const Representation& rep) {
  const auto& ground = rep.family.ground();
  Json alpha = Json::object();
  for (StateIndex s = 0; s < ts.state_count(); ++s) alpha[ts.state_name(s)] = set_json(ground, rep.family[s]);
  Json beta = Json::object();
  for (TokenIndex t = 0; t < ts.token_count(); ++t) {
    beta[ts.token_name(t)] = {{"element", ground[rep.beta[t].element]},
                              {"polarity", rep.beta[t].add ? "add" : "remove"}};
  }
  return {{"family", to_json(rep.family)}, {"alpha", std::move(alpha)}, {"beta", std::move(beta)}};
}

Json to_json(const TokenSystem& ts, const Orientation& o) {
  Json pos = Json::array(), neg = Json::array();
  for (TokenIndex t : o.positive) pos.push_back(ts.token_name(t));
  for (TokenIndex t : o.negative) neg.push_back(ts.token_name(t));
  return {{"positive", std::move(pos)}, {"negative", std::move(neg)}};
}

Json to_json(const TokenSystem& ts, const MediumDecision& d) {
  Json out = {{"medium", d.is_medium}};
  if (d.representation) out.update(to_json(ts, *d.representation));
  if (!d.is_medium) out["reason"] = d.reason;
  if (d.axiom) out["axiom"] = to_string(*d.axiom);
  if (d.witness) out["witness"] = to_json(ts, *d.witness);
  if (d.pcube) out["partial_cube"] = to_json(medium_graph(ts), *d.pcube);
  return out;
}

// ---- graphs ----

LabeledGraph graph_from_json(const Json& j) {
  std::vector<std::string> vertices = names_at(member(j, "vertices", "$"), "$.vertices");
  std::map<std::string, VertexIndex> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], i).second) fail("$.vertices", "duplicate vertex \"" + vertices[i] + "\"");
  }
  const Json& edges_j = member(j, "edges", "$");
  if (!edges_j.is_array()) fail("$.edges", "expected an array");
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (std::size_t i = 0; i < edges_j.size(); ++i) {
    std::string where = "$.edges[" + std::to_string(i) + "]";
    auto ends = names_at(edges_j[i], where);
    if (ends.size() != 2) fail(where, "an edge has two ends");
    auto a = index.find(ends[0]), b = index.find(ends[1]);
    if (a == index.end() || b == index.end()) fail(where, "unknown vertex");
    edges.emplace_back(a->second, b->second);
  }
  try {
    return LabeledGraph(std::move(vertices), std::move(edges));
  } catch (const InputError& e) {
    fail("$.edges", e.what());
  }
}

LabeledGraph graph_from_text(const std::string& text, const std::string& source) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(parse_json_text(text, source));

  std::vector<std::string> vertices;
  std::map<std::string, VertexIndex> index;
  auto vertex = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, vertices.size());
    if (fresh) vertices.push_back(name);
    return it->second;
  };
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  std::istringstream in(text);
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> words;
    for (std::string w; fields >> w;) words.push_back(w);
    std::string where = source + ":" + std::to_string(number);
    if (words.size() > 2) fail(where, "expected \"u v\" or a single vertex");
    if (words.size() == 1) vertex(words[0]);
    if (words.size() == 2) {
      if (words[0] == words[1]) fail(where, "loop at \"" + words[0] + "\"");
      VertexIndex a = vertex(words[0]);
      edges.emplace_back(a, vertex(words[1]));
    }
  }
  try {
    return LabeledGraph(std::move(vertices), std::move(edges));
  } catch (const InputError& e) {
    fail(source, e.what());
  }
}

Json to_json(const LabeledGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.vertex_name(e.u), g.vertex_name(e.v)});
  Json out = {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
  if (g.edge_labels()) {
    Json tokens = Json::array();
    for (const EdgeLabel& l : *g.edge_labels()) tokens.push_back({l.forward, l.backward});
    out["tokens"] = std::move(tokens);
  }
  if (g.vertex_labels()) {
    const SetFamily& f = *g.vertex_labels();
    Json labels = Json::object();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) labels[g.vertex_name(v)] = set_json(f.ground(), f[v]);
    out["ground"] = f.ground();
    out["labels"] = std::move(labels);
  }
  return out;
}

Json to_json(const LabeledGraph& g, const PartialCubeResult& r) {
  Json out = to_json(g);
  out["partial_cube"] = r.accepted;
  if (r.accepted) {
    const SetFamily& f = *r.labeling;
    Json labels = Json::object();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) labels[g.vertex_name(v)] = set_json(f.ground(), f[v]);
    out["ground"] = f.ground();
    out["labels"] = std::move(labels);
    return out;
  }
  out["rejection"] = to_string(r.rejection);
  auto edge = [&](std::size_t e) {
    return Json::array({g.vertex_name(g.edges()[e].u), g.vertex_name(g.edges()[e].v)});
  };
  if (!r.odd_cycle.empty()) {
    Json cyc = Json::array();
    for (VertexIndex v : r.odd_cycle) cyc.push_back(g.vertex_name(v));
    out["odd_cycle"] = std::move(cyc);
  }
  if (!r.theta_edges.empty()) {
    Json te = Json::array();
    for (std::size_t e : r.theta_edges) te.push_back(edge(e));
    out["theta_edges"] = std::move(te);
  }
  if (r.isometry_pair) {
    out["isometry_pair"] = {g.vertex_name(r.isometry_pair->first), g.vertex_name(r.isometry_pair->second)};
  }
  return out;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const LabeledGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << dot_quote(name) << " {\n";
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << dot_quote(g.vertex_name(v));
    if (g.vertex_labels()) {
      out << " [tooltip=" << dot_quote(format_set(g.vertex_labels()->ground(), (*g.vertex_labels())[v])) << "]";
    }
    out << ";\n";
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    out << "  " << dot_quote(g.vertex_name(e.u)) << " -- " << dot_quote(g.vertex_name(e.v));
    if (g.edge_labels()) {
      const EdgeLabel& l = (*g.edge_labels())[i];
      out << " [label=" << dot_quote(l.forward + " / " + l.backward) << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json to_json(const TokenSystem& a, const TokenSystem& b, const MediaIsomorphism& iso) {
  Json alpha = Json::object(), beta = Json::object();
  for (StateIndex s = 0; s < a.state_count(); ++s) alpha[a.state_name(s)] = b.state_name(iso.alpha[s]);
  for (TokenIndex t = 0; t < a.token_count(); ++t) beta[a.token_name(t)] = b.token_name(iso.beta[t]);
  return {{"isomorphic", true}, {"alpha", std::move(alpha)}, {"beta", std::move(beta)}};
}

// ---- arrangements ----

Rational parse_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational \"p/q\"");
  std::string s = j.get<std::string>();
  auto digits = [](const std::string& t, bool sign) {
    std::size_t i = sign && !t.empty() && (t[0] == '-' || t[0] == '+') ? 1 : 0;
    return i < t.size() && std::all_of(t.begin() + i, t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) fail(where, "malformed rational \"" + s + "\"");
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) fail(where, "zero denominator in \"" + s + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Arrangement arrangement_from_json(const Json& j) {
  const Json& lines_j = member(j, "lines", "$");
  if (!lines_j.is_array()) fail("$.lines", "expected an array");
  std::vector<Line> lines;
  for (std::size_t i = 0; i < lines_j.size(); ++i) {
    std::string where = "$.lines[" + std::to_string(i) + "]";
    const Json& l = lines_j[i];
    lines.push_back({parse_rational(member(l, "a", where), where + ".a"),
                     parse_rational(member(l, "b", where), where + ".b"),
                     parse_rational(member(l, "c", where), where + ".c")});
  }
  try {
    return Arrangement(std::move(lines));
  } catch (const InputError& e) {
    fail("$.lines", e.what());
  }
}

Json to_json(const Arrangement& arr) {
  Json lines = Json::array();
  for (const Line& l : arr.lines()) {
    lines.push_back({{"a", format_rational(l.a)}, {"b", format_rational(l.b)}, {"c", format_rational(l.c)}});
  }
  return {{"lines", std::move(lines)}};
}

Json to_json(const Arrangement& arr, const std::vector<Region>& regions) {
  const auto names = arr.line_names();
  Json out = Json::array();
  for (const Region& r : regions) {
    std::string signs;
    for (bool p : r.positive) signs += p ? '+' : '-';
    out.push_back({{"positive", set_json(names, r.positive_set())},
                   {"signs", signs},
                   {"witness", {{"x", format_rational(r.witness.x)}, {"y", format_rational(r.witness.y)}}}});
  }
  return out;
}

}  // namespace media
