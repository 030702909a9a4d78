#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "media/arrangement.hpp"
#include "media/axioms.hpp"
#include "media/graph.hpp"
#include "media/representation.hpp"
#include "media/set_family.hpp"
#include "media/token_system.hpp"

namespace media {

using Json = nlohmann::json;

// Syntax errors become ParseError("<source>:<line>:<column>", ...).
Json parse_json_text(const std::string& text, const std::string& source);

// {"states":[...],"tokens":[{"id":..,"reverse":..}],"action":{token:{state:state}}}.
// A document carrying a "medium" member is read through it. The reverse field is
// optional but must be given for all tokens or for none.
TokenSystem token_system_from_json(const Json& j);
Json to_json(const TokenSystem& ts);

// {"ground":[...],"sets":[[...],...]}.
SetFamily set_family_from_json(const Json& j);
Json to_json(const SetFamily& f);

Json to_json(const TokenSystem& ts, const Witness& w);
Json to_json(const TokenSystem& ts, const AxiomReport& report);

Json to_json(const TokenSystem& ts, const Representation& rep);
Json to_json(const TokenSystem& ts, const Orientation& o);
Json to_json(const TokenSystem& ts, const MediumDecision& d);

// JSON graph document or whitespace-separated edge list ("u v" per line, a lone
// name declares a vertex, '#' starts a comment).
LabeledGraph graph_from_text(const std::string& text, const std::string& source);
LabeledGraph graph_from_json(const Json& j);
// {"vertices","edges"} plus "tokens" (edge labels) and "ground"/"labels" when present.
Json to_json(const LabeledGraph& g);
Json to_json(const LabeledGraph& g, const PartialCubeResult& r);
// Undirected DOT; vertex tooltips show coordinate sets, edge labels show token pairs.
std::string to_dot(const LabeledGraph& g, const std::string& name = "G");

Json to_json(const TokenSystem& a, const TokenSystem& b, const MediaIsomorphism& iso);

// Rationals are "p", "p/q" (q > 0) or JSON integers.
Rational parse_rational(const Json& j, const std::string& where);
std::string format_rational(const Rational& q);
Arrangement arrangement_from_json(const Json& j);
Json to_json(const Arrangement& arr);
Json to_json(const Arrangement& arr, const std::vector<Region>& regions);

}  // namespace media
