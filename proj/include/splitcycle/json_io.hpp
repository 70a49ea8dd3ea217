#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "splitcycle/axioms.hpp"
#include "splitcycle/ballots.hpp"
#include "splitcycle/graphs.hpp"
#include "splitcycle/methods.hpp"

namespace splitcycle {

using Json = nlohmann::ordered_json;

// {"method", "candidates", "margins": [[i, j, m], ...], "defeats": [{"from", "to"}], "winners"}
// with i, j indices into "candidates" over every ordered pair i != j.
Json defeat_json(std::string_view method, const Profile& profile, const DefeatRelation& defeat);

// {"nodes": [...], "edges": [{"from", "to", "weight"}]}, sorted.
Json graph_json(const MarginGraph& graph);
MarginGraph parse_graph_json(std::string_view text);

Json instance_json(const Instance& instance);
Instance parse_instance_json(const Json& j);

Json verdict_json(const AxiomVerdict& verdict);

// {"pairs": [{"first": "<vote text>", "second": "<vote text>"}, ...]}
std::vector<std::pair<Profile, Profile>> parse_pairs_json(std::string_view text);

// Parses JSON text, reporting syntax errors as Error.
Json parse_json(std::string_view text);

}  // namespace splitcycle
