#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitcycle/ballots.hpp"
#include "splitcycle/domain.hpp"
#include "splitcycle/relation.hpp"

namespace splitcycle {

enum class MethodId {
    simple_majority,
    left_covering,
    right_covering,
    fishburn,
    copeland,
    borda,
    plurality,
    hare,
    weighted_covering,
    beat_path,
    split_cycle,
    pareto,
    positive_negative,
    minimax,
    null,
    global_split,
};

const std::vector<MethodId>& all_methods();
std::string_view method_name(MethodId id);
std::optional<MethodId> find_method(std::string_view name);
MethodId parse_method(std::string_view name);  // throws Error on unknown names

struct VccrDescriptor {
    MethodId id;
    bool margin_based;
    bool qualitative_margin_based;
    bool acyclic_claimed;
};

const VccrDescriptor& descriptor(MethodId id);

enum class Formulation { threshold, all_cycles, edge_cycles, widest_path };

const std::vector<Formulation>& all_formulations();
std::string_view formulation_name(Formulation f);

DefeatRelation split_cycle(const Profile& profile, Formulation formulation = Formulation::widest_path);

DefeatRelation defeat(MethodId id, const Profile& profile);

// Per-candidate scores in candidate order.
std::vector<int> copeland_scores(const Profile& profile);
std::vector<int> borda_scores(const Profile& profile);
std::vector<int> plurality_scores(const Profile& profile);
std::vector<int> hare_scores(const Profile& profile);
std::vector<int> positive_negative_scores(const Profile& profile);
std::vector<int> minimax_losses(const Profile& profile);

// x defeats y iff x is unanimously preferred to y and some z has x -> z but
// not y -> z. Acyclic and satisfies local alpha without fixed-candidate IIA.
DefeatRelation unanimity_separation(const Profile& profile);

// A named collective choice rule. Registry methods plus unanimity_separation.
struct Vccr {
    std::string name;
    std::function<DefeatRelation(const Profile&)> evaluate;
};

Vccr vccr(MethodId id);
std::optional<Vccr> find_vccr(std::string_view name);
std::vector<std::string> vccr_names();

// Members of Y undefeated by members of Y under the rule applied to the whole
// profile.
std::vector<Candidate> global_choice(const Vccr& f, const Profile& profile, const std::vector<Candidate>& y);
std::vector<Candidate> global_choice(MethodId id, const Profile& profile, const std::vector<Candidate>& y);

// Undefeated members of Y under the rule applied to the profile restricted to Y.
std::vector<Candidate> local_choice(const Vccr& f, const Profile& profile, const std::vector<Candidate>& y);
std::vector<Candidate> local_choice(MethodId id, const Profile& profile, const std::vector<Candidate>& y);

enum class Resoluteness { equal, g_at_least_f, f_at_least_g, incomparable };

std::string_view resoluteness_name(Resoluteness r);

struct ResolutenessWitness {
    Profile profile;
    Candidate from;
    Candidate to;
};

struct ResolutenessReport {
    Resoluteness verdict = Resoluteness::equal;
    std::optional<ResolutenessWitness> only_f;  // f defeats, g does not
    std::optional<ResolutenessWitness> only_g;  // g defeats, f does not
    std::uint64_t profiles = 0;
};

// "g at least as resolute as f" means f's defeats are always among g's.
// Throws BudgetExceeded before scanning an oversized domain.
ResolutenessReport compare_resoluteness(MethodId f, MethodId g, const ProfileDomain& domain);

}  // namespace splitcycle
