#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitcycle/ballots.hpp"
#include "splitcycle/domain.hpp"
#include "splitcycle/methods.hpp"

namespace splitcycle {

enum class AxiomId {
    anonymity,
    neutrality,
    availability,
    upward_homogeneity,
    monotonicity,
    monotonicity_two_candidate,
    neutral_reversal_up,
    neutral_reversal_down,
    coherent_iia,
    weak_iia,
    fiia,
    viia,
    modified_iia,
    intensity_iia,
    pareto,
    majority_defeat,
    condorcet_consistency,
    binary_majoritarianism,
    immunity_to_spoilers,
    strong_stability,
    local_alpha,
    global_alpha,
    alpha_bar,
    acyclicity,
};

const std::vector<AxiomId>& all_axioms();
std::string_view axiom_name(AxiomId id);
std::optional<AxiomId> find_axiom(std::string_view name);
AxiomId parse_axiom(std::string_view name);  // throws Error on unknown names

// Axioms relating a profile to a second, independently chosen profile.
bool is_pair_axiom(AxiomId id);

// One concrete situation an axiom speaks about. What each field means
// depends on the axiom:
//   profiles    [P] or [P, P'] (P' the transformed or related profile)
//   candidates  distinguished candidates, e.g. [x, y] for "x defeats y";
//               neutrality uses [x, y, u, v] (x, y swapped; u vs v compared);
//               acyclicity lists a defeat cycle
//   outer_set   Y for the alpha family
//   inner_set   Z for the alpha family
struct Instance {
    std::vector<Profile> profiles;
    std::vector<Candidate> candidates;
    std::vector<Candidate> outer_set;
    std::vector<Candidate> inner_set;
    std::string note;
};

// True iff the instance is well formed for the axiom (its premises hold,
// including relatedness of P and P') and the rule breaks the axiom on it.
// Evaluates the rule from scratch, so a witness can be replayed alone.
bool instance_violates(AxiomId axiom, const Vccr& f, const Instance& instance);

// Coherent IIA relatedness: same voters, x, y in X(P') within X(P), equal
// restrictions to {x, y}, and no positive margin of P' other than between x
// and y exceeds the corresponding margin of P.
bool coherent_iia_related(const Profile& p, const Profile& q, const Candidate& x, const Candidate& y);

enum class BetweenMode { modified, intensity };

// Same voters, per-voter x-vs-y order agrees, and per voter the set
// (modified) or number (intensity) of candidates ranked between x and y
// agrees.
bool modified_iia_related(const Profile& p, const Profile& q, const Candidate& x, const Candidate& y, BetweenMode mode);

enum class VerdictStatus { holds_on_domain, counterexample, budget_exceeded };

std::string_view status_name(VerdictStatus s);

struct AxiomVerdict {
    AxiomId axiom = AxiomId::availability;
    std::string method;
    std::string domain;
    VerdictStatus status = VerdictStatus::holds_on_domain;
    std::optional<Instance> witness;
    std::uint64_t profiles = 0;   // profiles materialized
    std::uint64_t instances = 0;  // instances examined
    std::string message;          // budget diagnostics
};

// Scans the domain in deterministic order and reports the first violating
// instance. Never throws BudgetExceeded; reports it as a status instead.
AxiomVerdict check_axiom(AxiomId axiom, const Vccr& f, const ProfileDomain& domain);
AxiomVerdict check_axiom(AxiomId axiom, MethodId method, const ProfileDomain& domain);

// Checks a pair axiom on explicitly supplied (P, P') pairs, trying every
// ordered candidate pair of each.
AxiomVerdict check_pairs(AxiomId axiom, const Vccr& f, const std::vector<std::pair<Profile, Profile>>& pairs);

}  // namespace splitcycle
