#pragma once

#include <string>

#include <json.hpp>

#include "hlc/derivation.hpp"
#include "hlc/grammars.hpp"

// JSON interchange and DOT rendering. Readers throw Error(ParseError) naming the
// JSON path of the offending field.
namespace hlc::io {

using nlohmann::json;

json to_json(const Label& l);
json to_json(const Graph& g);
json to_json(const Type& t);
json to_json(const TypedGraph& g);
json to_json(const Sequent& s);
json to_json(const Derivation& d);
json to_json(const Hlg& g);
json to_json(const Hrg& g);

Label label_from_json(const json& j, const std::string& path = "");
Graph graph_from_json(const json& j, const std::string& path = "");
Type type_from_json(const json& j, const std::string& path = "");
TypedGraph typed_graph_from_json(const json& j, const std::string& path = "");
Sequent sequent_from_json(const json& j, const std::string& path = "");
DerivationPtr tree_from_json(const json& j, const std::string& path = "");
Hlg hlg_from_json(const json& j, const std::string& path = "");
Hrg hrg_from_json(const json& j, const std::string& path = "");

json parse(const std::string& text);
json read_file(const std::string& file);
void write_file(const std::string& file, const std::string& text);

// Nodes and edges renumbered in canonical order, so isomorphic graphs print alike.
Graph canonical_graph(const Graph& g);

std::string to_dot(const Graph& g);
std::string to_dot(const TypedGraph& g);
std::string to_dot(const Derivation& d);

}  // namespace hlc::io
