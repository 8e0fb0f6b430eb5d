#pragma once

#include "mextremal/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

namespace mextremal {

// Text format:
//   n <N>
//   r <R>
//   e <u> <v> <c>     (0 <= u < v < N, 1 <= c <= R), zero or more
// '#' starts a comment. Duplicate (u,v,c) lines are rejected.
//
// JSON format: {"n": N, "r": R, "edges": [[u, v, c], ...]}

auto parse_text(std::string_view text) -> ColoredMultigraph;
auto serialize_text(const ColoredMultigraph & g) -> std::string;

auto parse_json(std::string_view text) -> ColoredMultigraph;
auto graph_from_json(const nlohmann::json & j) -> ColoredMultigraph;
auto graph_to_json(const ColoredMultigraph & g) -> nlohmann::json;
auto serialize_json(const ColoredMultigraph & g) -> std::string;

/// Chooses the JSON reader for a ".json" extension, text otherwise.
auto read_graph_file(const std::filesystem::path & path) -> ColoredMultigraph;
void write_graph_file(const std::filesystem::path & path, const ColoredMultigraph & g);

}
