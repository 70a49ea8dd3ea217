#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "splitcycle/json_io.hpp"

namespace splitcycle {

// A self-contained, replayable scenario: named profiles plus expectations
// about them. File format (JSON):
//
//   {"name": "...", "description": "...", "method": "<default rule>",
//    "profiles": {"P": "<vote text>", ...},
//    "expectations": [{"kind": "...", ...}, ...]}
//
// Expectation kinds and their fields ("method" may override the default):
//   defeats          profile, from, to, expect (bool, default true)
//   defeat_relation  profile, pairs [[from, to], ...] (exact)
//   undefeated       profile, expect [...]
//   scores           profile, expect {candidate: score}  (score-based rules)
//   global_choice    profile, set, expect [...]
//   local_choice     profile, set, expect [...]
//   related          relation (coherent_iia|modified_iia|intensity_iia),
//                    profiles [P, P'], candidates [x, y], expect (bool)
//   clones           profile, candidates [b, c], expect (bool)
//   violates         axiom, profiles, candidates, outer_set, inner_set,
//                    expect (bool, default true)
//   verdict          axiom, domain {candidates, voters "lo..hi", mode,
//                    samples, seed}, expect (status name)
//   impossibility_local_alpha
//                    profile: every registry rule that is binary-majoritarian
//                    and available on the profile's restrictions breaks
//                    local alpha on the profile
struct WitnessCase {
    std::string name;
    std::string description;
    std::string method;
    std::map<std::string, Profile> profiles;
    std::vector<Json> expectations;
};

WitnessCase parse_witness(std::string_view json_text);

const std::vector<std::string>& builtin_witness_names();
WitnessCase builtin_witness(std::string_view name);  // throws Error on unknown names

struct ExpectationResult {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct WitnessReport {
    std::string name;
    bool pass = false;
    std::vector<ExpectationResult> results;
};

WitnessReport verify_witness(const WitnessCase& w);

Json report_json(const WitnessReport& report);

}  // namespace splitcycle
