#pragma once

#include "bpoly/digraph.hpp"
#include "bpoly/embedding.hpp"
#include "bpoly/poly.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace bpoly {

using Input = std::variant<Digraph, MixedGraph, Graph>;

// Text formats. Lines may also be separated by ';'. Blank lines and
// '#' comments are ignored.
//   digraph n / u v
//   mixed n   / u -> v, u -- v   (a "digraph" header with such lines also works)
//   graph n   / u v
Input parse_input(const std::string& text);
Digraph parse_digraph(const std::string& text);
MixedGraph parse_mixed(const std::string& text);
Graph parse_graph(const std::string& text);

std::string render(const Digraph& d);
std::string render(const MixedGraph& m);
std::string render(const Graph& g);
// One-line forms with "; " separators, used as report keys.
std::string render_inline(const Digraph& d);
std::string render_inline(const MixedGraph& m);
std::string render_inline(const Graph& g);

nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Digraph& d);
nlohmann::json to_json(const RotationSystem& r);
RotationSystem rotation_from_json(const nlohmann::json& j);
std::string render_inline(const RotationSystem& r);

}  // namespace bpoly
