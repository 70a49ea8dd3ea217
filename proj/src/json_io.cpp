#include "splitcycle/json_io.hpp"

#include "splitcycle/errors.hpp"

namespace splitcycle {

namespace {

template <typename T>
T field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw Error(std::string(what) + " needs a \"" + key + "\" field");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(std::string(what) + ": field \"" + key + "\" has the wrong type");
    }
}

std::vector<Candidate> optional_list(const Json& j, const char* key) {
    if (!j.contains(key)) return {};
    try {
        return j.at(key).get<std::vector<Candidate>>();
    } catch (const nlohmann::json::exception&) {
        throw Error(std::string("field \"") + key + "\" must be a list of candidate tokens");
    }
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

Json defeat_json(std::string_view method, const Profile& profile, const DefeatRelation& defeat) {
    const auto m = margins(profile);
    const auto n = profile.num_candidates();
    Json out;
    out["method"] = method;
    out["candidates"] = profile.candidates();
    Json ms = Json::array();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y) ms.push_back(Json::array({x, y, m(x, y)}));
    out["margins"] = std::move(ms);
    Json ds = Json::array();
    for (const auto& [from, to] : defeat.pairs()) ds.push_back(Json{{"from", from}, {"to", to}});
    out["defeats"] = std::move(ds);
    out["winners"] = defeat.undefeated();
    return out;
}

Json graph_json(const MarginGraph& graph) {
    Json out;
    out["nodes"] = graph.nodes();
    Json es = Json::array();
    for (const auto& e : graph.edges()) es.push_back(Json{{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
    out["edges"] = std::move(es);
    return out;
}

MarginGraph parse_graph_json(std::string_view text) {
    const auto j = parse_json(text);
    const auto nodes = field<std::vector<Candidate>>(j, "nodes", "margin graph");
    const auto edges = field<Json>(j, "edges", "margin graph");
    if (!edges.is_array()) throw Error("margin graph: \"edges\" must be a list");
    std::vector<WeightedEdge> es;
    for (const auto& e : edges)
        es.push_back({field<Candidate>(e, "from", "edge"), field<Candidate>(e, "to", "edge"), field<int>(e, "weight", "edge")});
    return MarginGraph(nodes, es);
}

Json instance_json(const Instance& w) {
    Json out;
    Json ps = Json::array();
    for (const auto& p : w.profiles) ps.push_back(to_vote_text(p));
    out["profiles"] = std::move(ps);
    out["candidates"] = w.candidates;
    if (!w.outer_set.empty()) out["outer_set"] = w.outer_set;
    if (!w.inner_set.empty()) out["inner_set"] = w.inner_set;
    if (!w.note.empty()) out["note"] = w.note;
    return out;
}

Instance parse_instance_json(const Json& j) {
    Instance w;
    for (const auto& text : field<std::vector<std::string>>(j, "profiles", "instance")) w.profiles.push_back(parse_profile(text));
    w.candidates = optional_list(j, "candidates");
    w.outer_set = optional_list(j, "outer_set");
    w.inner_set = optional_list(j, "inner_set");
    if (j.contains("note")) w.note = field<std::string>(j, "note", "instance");
    return w;
}

Json verdict_json(const AxiomVerdict& v) {
    Json out;
    out["axiom"] = axiom_name(v.axiom);
    out["method"] = v.method;
    out["domain"] = v.domain;
    out["status"] = status_name(v.status);
    out["profiles"] = v.profiles;
    out["instances"] = v.instances;
    if (v.witness) out["witness"] = instance_json(*v.witness);
    if (!v.message.empty()) out["message"] = v.message;
    return out;
}

std::vector<std::pair<Profile, Profile>> parse_pairs_json(std::string_view text) {
    const auto j = parse_json(text);
    const auto pairs = field<Json>(j, "pairs", "pairs file");
    if (!pairs.is_array()) throw Error("pairs file: \"pairs\" must be a list");
    std::vector<std::pair<Profile, Profile>> out;
    for (const auto& p : pairs)
        out.emplace_back(parse_profile(field<std::string>(p, "first", "pair")),
                         parse_profile(field<std::string>(p, "second", "pair")));
    return out;
}

}  // namespace splitcycle
