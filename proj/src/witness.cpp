#include "splitcycle/witness.hpp"

#include <algorithm>
#include <cstdlib>

#include "splitcycle/errors.hpp"

namespace splitcycle {

namespace {

struct Builtin {
    const char* name;
    const char* json;
};

const Builtin kBuiltins[] = {
    {"iia_context", R"({
  "name": "iia_context",
  "description": "Equal restrictions to {a,b}, yet a coherent profile and a perfect cycle: a defeats b only in the first",
  "method": "split_cycle",
  "profiles": {
    "P": "candidates: a b c\n1: a > b > c\n1: b > a > c\n1: c > a > b\n",
    "P2": "candidates: a b c\n1: a > b > c\n1: b > c > a\n1: c > a > b\n"
  },
  "expectations": [
    {"kind": "defeat_relation", "profile": "P", "pairs": [["a", "b"], ["a", "c"], ["b", "c"]]},
    {"kind": "defeat_relation", "profile": "P2", "pairs": []},
    {"kind": "related", "relation": "coherent_iia", "profiles": ["P", "P2"], "candidates": ["a", "b"], "expect": false},
    {"kind": "violates", "axiom": "fiia", "profiles": ["P", "P2"], "candidates": ["a", "b"]}
  ]
})"},
    {"borda_coherent_iia", R"({
  "name": "borda_coherent_iia",
  "description": "Borda reverses x against y after edges not touching x and y are deleted",
  "method": "borda",
  "profiles": {
    "P": "candidates: a b c x y\n1: x > a > b > c > y\n1: y > x > a > b > c\n2: y > x > c > b > a\n",
    "P2": "candidates: a b c x y\n1: a > b > c > x > y\n1: y > a > b > c > x\n2: y > x > c > b > a\n"
  },
  "expectations": [
    {"kind": "scores", "profile": "P", "expect": {"a": 5, "b": 5, "c": 5, "x": 13, "y": 12}},
    {"kind": "defeats", "profile": "P", "from": "x", "to": "y"},
    {"kind": "defeats", "profile": "P2", "from": "y", "to": "x"},
    {"kind": "related", "relation": "coherent_iia", "profiles": ["P", "P2"], "candidates": ["x", "y"], "expect": true},
    {"kind": "violates", "axiom": "coherent_iia", "profiles": ["P", "P2"], "candidates": ["x", "y"]},
    {"kind": "defeats", "method": "split_cycle", "profile": "P", "from": "y", "to": "x"}
  ]
})"},
    {"borda_spoiler", R"({
  "name": "borda_spoiler",
  "description": "Adding the losing clone b of c flips Borda from a over c to c over a",
  "method": "borda",
  "profiles": {
    "P_minus_b": "candidates: a c\n2: c > a\n3: a > c\n",
    "P": "candidates: a b c\n2: c > b > a\n3: a > c > b\n"
  },
  "expectations": [
    {"kind": "defeats", "profile": "P_minus_b", "from": "a", "to": "c"},
    {"kind": "defeats", "profile": "P", "from": "c", "to": "a"},
    {"kind": "defeats", "profile": "P", "from": "a", "to": "b"},
    {"kind": "defeats", "profile": "P", "from": "c", "to": "b"},
    {"kind": "clones", "profile": "P", "candidates": ["b", "c"], "expect": true},
    {"kind": "violates", "axiom": "immunity_to_spoilers", "profiles": ["P", "P_minus_b"], "candidates": ["a", "b"]},
    {"kind": "violates", "axiom": "immunity_to_spoilers", "method": "split_cycle", "profiles": ["P", "P_minus_b"], "candidates": ["a", "b"], "expect": false}
  ]
})"},
    {"modified_iia_cycle", R"({
  "name": "modified_iia_cycle",
  "description": "Same between-sets for a and b on every ballot, yet only the coherent profile has a defeating b",
  "method": "split_cycle",
  "profiles": {
    "P": "candidates: a b c d\n1: a > b > c > d\n1: b > c > d > a\n1: a > b > c > d\n1: a > b > d > c\n",
    "P2": "candidates: a b c d\n1: a > b > c > d\n1: b > c > d > a\n1: c > d > a > b\n1: d > a > b > c\n"
  },
  "expectations": [
    {"kind": "defeats", "profile": "P", "from": "a", "to": "b"},
    {"kind": "defeat_relation", "profile": "P2", "pairs": []},
    {"kind": "related", "relation": "modified_iia", "profiles": ["P", "P2"], "candidates": ["a", "b"], "expect": true},
    {"kind": "related", "relation": "intensity_iia", "profiles": ["P", "P2"], "candidates": ["a", "b"], "expect": true},
    {"kind": "violates", "axiom": "modified_iia", "profiles": ["P", "P2"], "candidates": ["a", "b"]},
    {"kind": "violates", "axiom": "intensity_iia", "profiles": ["P", "P2"], "candidates": ["a", "b"]}
  ]
})"},
    {"local_alpha_cycle", R"({
  "name": "local_alpha_cycle",
  "description": "On a majority cycle no rule has local alpha, availability and binary majoritarianism together",
  "method": "split_cycle",
  "profiles": {
    "P": "candidates: a b c\n1: a > b > c\n1: b > c > a\n1: c > a > b\n"
  },
  "expectations": [
    {"kind": "impossibility_local_alpha", "profile": "P"},
    {"kind": "undefeated", "profile": "P", "expect": ["a", "b", "c"]},
    {"kind": "local_choice", "profile": "P", "set": ["a", "b"], "expect": ["a"]},
    {"kind": "violates", "axiom": "local_alpha", "profiles": ["P"], "candidates": ["b"], "outer_set": ["a", "b", "c"], "inner_set": ["a", "b"]}
  ]
})"},
    {"borda_global_local", R"({
  "name": "borda_global_local",
  "description": "Borda picks x from the full field; deleting y leaves x globally but ties x and z locally",
  "method": "borda",
  "profiles": {
    "P": "candidates: w x y z\n2: x > y > z > w\n1: z > w > x > y\n",
    "P_xzw": "candidates: w x z\n2: x > z > w\n1: z > w > x\n"
  },
  "expectations": [
    {"kind": "global_choice", "profile": "P", "set": ["w", "x", "y", "z"], "expect": ["x"]},
    {"kind": "local_choice", "profile": "P", "set": ["w", "x", "z"], "expect": ["x", "z"]},
    {"kind": "global_choice", "profile": "P", "set": ["w", "x", "z"], "expect": ["x"]},
    {"kind": "violates", "axiom": "viia", "profiles": ["P", "P_xzw"], "candidates": ["x", "z"]},
    {"kind": "violates", "axiom": "local_alpha", "profiles": ["P"], "candidates": ["z"], "outer_set": ["w", "x", "y", "z"], "inner_set": ["w", "x", "z"], "expect": false}
  ]
})"},
    {"unanimity_separation_fiia", R"({
  "name": "unanimity_separation_fiia",
  "description": "Unanimity plus a separating third candidate: local alpha holds, fixed-candidate IIA fails",
  "method": "unanimity_separation",
  "profiles": {
    "P": "candidates: x y z\n3: x > z > y\n",
    "P2": "candidates: x y z\n3: x > y > z\n"
  },
  "expectations": [
    {"kind": "defeats", "profile": "P", "from": "x", "to": "y"},
    {"kind": "defeats", "profile": "P2", "from": "x", "to": "y", "expect": false},
    {"kind": "violates", "axiom": "fiia", "profiles": ["P", "P2"], "candidates": ["x", "y"]},
    {"kind": "verdict", "axiom": "local_alpha", "domain": {"candidates": ["x", "y", "z"], "voters": "1..3", "mode": "exhaustive-multiset"}, "expect": "holds_on_domain"},
    {"kind": "verdict", "axiom": "acyclicity", "domain": {"candidates": ["x", "y", "z"], "voters": "1..3", "mode": "exhaustive-multiset"}, "expect": "holds_on_domain"}
  ]
})"},
};

template <typename T>
T get(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw Error(where + ": missing \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(where + ": \"" + key + "\" has the wrong type");
    }
}

template <typename T>
T get_or(const Json& j, const char* key, T fallback, const std::string& where) {
    return j.contains(key) ? get<T>(j, key, where) : fallback;
}

std::string join(const std::vector<Candidate>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + "}";
}

std::vector<Candidate> sorted(std::vector<Candidate> v) {
    std::sort(v.begin(), v.end());
    return v;
}

class Checker {
public:
    explicit Checker(const WitnessCase& w) : w_(w) {}

    ExpectationResult run(const Json& e, std::size_t index) {
        const std::string where = "expectation " + std::to_string(index + 1);
        const auto kind = get<std::string>(e, "kind", where);
        ExpectationResult r;
        r.label = kind;
        try {
            evaluate(kind, e, where, r);
        } catch (const Error& err) {
            r.pass = false;
            r.detail = err.what();
        }
        return r;
    }

private:
    const Profile& profile(const std::string& name, const std::string& where) const {
        auto it = w_.profiles.find(name);
        if (it == w_.profiles.end()) throw Error(where + ": unknown profile '" + name + "'");
        return it->second;
    }

    Vccr rule(const Json& e, const std::string& where) const {
        const auto name = get_or<std::string>(e, "method", w_.method, where);
        auto f = find_vccr(name);
        if (!f) throw Error(where + ": unknown method '" + name + "'");
        return *f;
    }

    void evaluate(const std::string& kind, const Json& e, const std::string& where, ExpectationResult& r) {
        if (kind == "defeats") {
            const auto f = rule(e, where);
            const auto pname = get<std::string>(e, "profile", where);
            const auto from = get<std::string>(e, "from", where), to = get<std::string>(e, "to", where);
            const bool expect = get_or<bool>(e, "expect", true, where);
            const bool got = f.evaluate(profile(pname, where)).defeats(from, to);
            r.label = f.name + ": " + from + (expect ? " defeats " : " does not defeat ") + to + " in " + pname;
            r.pass = got == expect;
            if (!r.pass) r.detail = std::string("observed ") + (got ? "a defeat" : "no defeat");
        } else if (kind == "defeat_relation") {
            const auto f = rule(e, where);
            const auto pname = get<std::string>(e, "profile", where);
            auto want = get<std::vector<std::pair<Candidate, Candidate>>>(e, "pairs", where);
            std::sort(want.begin(), want.end());
            const auto got = f.evaluate(profile(pname, where)).pairs();
            r.label = f.name + ": defeat relation in " + pname + " has " + std::to_string(want.size()) + " pair(s)";
            r.pass = got == want;
            if (!r.pass) r.detail = "observed " + std::to_string(got.size()) + " pair(s)";
        } else if (kind == "undefeated") {
            const auto f = rule(e, where);
            const auto pname = get<std::string>(e, "profile", where);
            const auto want = sorted(get<std::vector<Candidate>>(e, "expect", where));
            const auto got = f.evaluate(profile(pname, where)).undefeated();
            r.label = f.name + ": undefeated in " + pname + " is " + join(want);
            r.pass = got == want;
            if (!r.pass) r.detail = "observed " + join(got);
        } else if (kind == "scores") {
            const auto name = get_or<std::string>(e, "method", w_.method, where);
            const auto pname = get<std::string>(e, "profile", where);
            const auto& p = profile(pname, where);
            const auto want = get<std::map<Candidate, int>>(e, "expect", where);
            std::vector<int> s;
            switch (parse_method(name)) {
                case MethodId::copeland: s = copeland_scores(p); break;
                case MethodId::borda: s = borda_scores(p); break;
                case MethodId::plurality: s = plurality_scores(p); break;
                case MethodId::hare: s = hare_scores(p); break;
                case MethodId::positive_negative: s = positive_negative_scores(p); break;
                case MethodId::minimax: s = minimax_losses(p); break;
                default: throw Error(where + ": " + name + " has no scores");
            }
            r.label = name + ": scores in " + pname;
            r.pass = true;
            for (const auto& [c, v] : want)
                if (s.at(static_cast<std::size_t>(p.index_of(c))) != v) {
                    r.pass = false;
                    r.detail += c + " scored " + std::to_string(s[p.index_of(c)]) + " ";
                }
        } else if (kind == "global_choice" || kind == "local_choice") {
            const auto f = rule(e, where);
            const auto pname = get<std::string>(e, "profile", where);
            const auto set = get<std::vector<Candidate>>(e, "set", where);
            const auto want = sorted(get<std::vector<Candidate>>(e, "expect", where));
            const auto& p = profile(pname, where);
            const auto got = kind == "global_choice" ? global_choice(f, p, set) : local_choice(f, p, set);
            r.label = f.name + ": " + (kind == "global_choice" ? "global" : "local") + " choice from " + join(sorted(set)) +
                      " in " + pname + " is " + join(want);
            r.pass = got == want;
            if (!r.pass) r.detail = "observed " + join(got);
        } else if (kind == "related") {
            const auto relation = get<std::string>(e, "relation", where);
            const auto names = get<std::vector<std::string>>(e, "profiles", where);
            const auto cs = get<std::vector<Candidate>>(e, "candidates", where);
            if (names.size() != 2 || cs.size() != 2) throw Error(where + ": needs two profiles and two candidates");
            const auto& p = profile(names[0], where);
            const auto& q = profile(names[1], where);
            bool got = false;
            if (relation == "coherent_iia")
                got = coherent_iia_related(p, q, cs[0], cs[1]);
            else if (relation == "modified_iia")
                got = modified_iia_related(p, q, cs[0], cs[1], BetweenMode::modified);
            else if (relation == "intensity_iia")
                got = modified_iia_related(p, q, cs[0], cs[1], BetweenMode::intensity);
            else
                throw Error(where + ": unknown relation '" + relation + "'");
            const bool expect = get_or<bool>(e, "expect", true, where);
            r.label = names[0] + " and " + names[1] + (expect ? " are " : " are not ") + relation + "-related for " +
                      cs[0] + ", " + cs[1];
            r.pass = got == expect;
        } else if (kind == "clones") {
            const auto pname = get<std::string>(e, "profile", where);
            const auto cs = get<std::vector<Candidate>>(e, "candidates", where);
            if (cs.size() != 2) throw Error(where + ": clones needs two candidates");
            const auto& p = profile(pname, where);
            const int b = p.index_of(cs[0]), c = p.index_of(cs[1]);
            bool got = true;
            for (const auto& rk : p.rankings()) {
                const auto ib = std::find(rk.begin(), rk.end(), b) - rk.begin();
                const auto ic = std::find(rk.begin(), rk.end(), c) - rk.begin();
                if (std::abs(ib - ic) != 1) got = false;
            }
            const bool expect = get_or<bool>(e, "expect", true, where);
            r.label = cs[0] + (expect ? " is " : " is not ") + "a clone of " + cs[1] + " in " + pname;
            r.pass = got == expect;
        } else if (kind == "violates") {
            const auto f = rule(e, where);
            const auto axiom = parse_axiom(get<std::string>(e, "axiom", where));
            Instance inst;
            for (const auto& n : get<std::vector<std::string>>(e, "profiles", where)) inst.profiles.push_back(profile(n, where));
            inst.candidates = get_or<std::vector<Candidate>>(e, "candidates", {}, where);
            inst.outer_set = get_or<std::vector<Candidate>>(e, "outer_set", {}, where);
            inst.inner_set = get_or<std::vector<Candidate>>(e, "inner_set", {}, where);
            const bool expect = get_or<bool>(e, "expect", true, where);
            const bool got = instance_violates(axiom, f, inst);
            r.label = f.name + (expect ? " violates " : " does not violate ") + std::string(axiom_name(axiom)) + " at " +
                      join(inst.candidates);
            r.pass = got == expect;
        } else if (kind == "verdict") {
            const auto f = rule(e, where);
            const auto axiom = parse_axiom(get<std::string>(e, "axiom", where));
            const auto dj = get<Json>(e, "domain", where);
            ProfileDomain d;
            d.candidates = get<std::vector<Candidate>>(dj, "candidates", where + " domain");
            std::tie(d.min_voters, d.max_voters) = parse_voter_range(get_or<std::string>(dj, "voters", "1..1", where));
            d.mode = parse_mode(get_or<std::string>(dj, "mode", "exhaustive-multiset", where));
            d.samples = get_or<std::uint64_t>(dj, "samples", 0, where);
            d.seed = get_or<std::uint64_t>(dj, "seed", 0, where);
            const auto want = get<std::string>(e, "expect", where);
            const auto v = check_axiom(axiom, f, d);
            r.label = f.name + ": " + std::string(axiom_name(axiom)) + " is " + want + " on " + d.summary();
            r.pass = status_name(v.status) == want;
            if (!r.pass) r.detail = "observed " + std::string(status_name(v.status));
        } else if (kind == "impossibility_local_alpha") {
            const auto pname = get<std::string>(e, "profile", where);
            impossibility(profile(pname, where), pname, r);
        } else {
            throw Error(where + ": unknown expectation kind '" + kind + "'");
        }
    }

    static std::optional<Instance> local_alpha_witness(const Vccr& f, const Profile& p) {
        const auto all = subsets(p.candidates(), 1);
        for (const auto& y : all)
            for (const auto& z : all)
                for (const auto& c : z) {
                    Instance inst{{p}, {c}, y, z, ""};
                    if (z != y && instance_violates(AxiomId::local_alpha, f, inst)) return inst;
                }
        return std::nullopt;
    }

    static void impossibility(const Profile& p, const std::string& pname, ExpectationResult& r) {
        r.label = "every binary-majoritarian, available registry rule breaks local alpha on " + pname;
        std::vector<std::string> qualifying;
        r.pass = true;
        for (auto id : all_methods()) {
            const auto f = vccr(id);
            bool binary = true, available = !f.evaluate(p).undefeated().empty();
            for (const auto& s : subsets(p.candidates(), 2)) {
                if (s.size() != 2) continue;
                const auto q = restrict_to(p, s);
                const auto d = f.evaluate(q);
                available = available && !d.undefeated().empty();
                binary = binary && d.defeats(0, 1) == (margin(q, s[0], s[1]) > 0) &&
                         d.defeats(1, 0) == (margin(q, s[1], s[0]) > 0);
            }
            if (!binary || !available) continue;
            qualifying.push_back(f.name);
            if (!local_alpha_witness(f, p)) {
                r.pass = false;
                r.detail += f.name + " keeps local alpha; ";
            }
        }
        if (qualifying.empty()) {
            r.pass = false;
            r.detail = "no registry rule qualifies";
        } else if (r.pass) {
            std::string names;
            for (const auto& n : qualifying) names += (names.empty() ? "" : ", ") + n;
            r.detail = "checked " + names;
        }
    }

    const WitnessCase& w_;
};

}  // namespace

namespace {

const std::string_view kKinds[] = {"defeats",       "defeat_relation", "undefeated", "scores",
                                   "global_choice", "local_choice",    "related",    "clones",
                                   "violates",      "verdict",         "impossibility_local_alpha"};

}  // namespace

WitnessCase parse_witness(std::string_view json_text) {
    const auto j = parse_json(json_text);
    const std::string where = "witness case";
    WitnessCase w;
    w.name = get<std::string>(j, "name", where);
    w.description = get_or<std::string>(j, "description", "", where);
    w.method = get_or<std::string>(j, "method", "split_cycle", where);
    const auto ps = get<Json>(j, "profiles", where);
    if (!ps.is_object()) throw Error(where + ": \"profiles\" must map names to vote text");
    for (const auto& [name, text] : ps.items()) {
        if (!text.is_string()) throw Error(where + ": profile '" + name + "' must be vote text");
        try {
            w.profiles.emplace(name, parse_profile(text.get<std::string>()));
        } catch (const Error& e) {
            throw Error(where + ": profile '" + name + "': " + e.what());
        }
    }
    const auto es = get<Json>(j, "expectations", where);
    if (!es.is_array() || es.empty()) throw Error(where + ": \"expectations\" must be a non-empty list");
    for (const auto& e : es) {
        if (!e.is_object() || !e.contains("kind") || !e["kind"].is_string())
            throw Error(where + ": every expectation needs a \"kind\"");
        const auto kind = e["kind"].get<std::string>();
        if (std::find(std::begin(kKinds), std::end(kKinds), kind) == std::end(kKinds))
            throw Error(where + ": unknown expectation kind '" + kind + "'");
        w.expectations.push_back(e);
    }
    return w;
}

const std::vector<std::string>& builtin_witness_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& b : kBuiltins) v.emplace_back(b.name);
        return v;
    }();
    return names;
}

WitnessCase builtin_witness(std::string_view name) {
    for (const auto& b : kBuiltins)
        if (name == b.name) return parse_witness(b.json);
    throw Error("unknown witness case '" + std::string(name) + "'");
}

WitnessReport verify_witness(const WitnessCase& w) {
    WitnessReport report;
    report.name = w.name;
    report.pass = true;
    Checker checker(w);
    for (std::size_t i = 0; i < w.expectations.size(); ++i) {
        report.results.push_back(checker.run(w.expectations[i], i));
        report.pass = report.pass && report.results.back().pass;
    }
    return report;
}

Json report_json(const WitnessReport& report) {
    Json out;
    out["name"] = report.name;
    out["status"] = report.pass ? "pass" : "fail";
    Json rs = Json::array();
    for (const auto& r : report.results) {
        Json e;
        e["expectation"] = r.label;
        e["status"] = r.pass ? "pass" : "fail";
        if (!r.detail.empty()) e["detail"] = r.detail;
        rs.push_back(std::move(e));
    }
    out["results"] = std::move(rs);
    return out;
}

}  // namespace splitcycle
