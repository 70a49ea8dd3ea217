#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitcycle/ballots.hpp"

namespace splitcycle {

enum class DomainMode { exhaustive_multiset, exhaustive_sequence, random };

std::string_view mode_name(DomainMode mode);
DomainMode parse_mode(std::string_view name);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// A finite family of profiles standing in for "every profile" in a check.
struct ProfileDomain {
    std::vector<Candidate> candidates;
    std::size_t min_voters = 1;
    std::size_t max_voters = 1;
    DomainMode mode = DomainMode::exhaustive_multiset;
    std::uint64_t samples = 0;  // random mode only
    std::uint64_t seed = 0;     // random mode only
    std::uint64_t budget = kDefaultBudget;

    void validate() const;
    std::string summary() const;
};

// Number of profiles the domain yields, saturating at UINT64_MAX.
std::uint64_t count_profiles(const ProfileDomain& domain);

// Throws BudgetExceeded when count_profiles exceeds the budget.
void require_within_budget(const ProfileDomain& domain);

// Visits the domain in its deterministic order; the visitor returns false to
// stop early. Multiset mode yields one representative per ballot-count
// vector with ballots in lexicographic order of rankings.
void for_each_profile(const ProfileDomain& domain, const std::function<bool(const Profile&)>& visit);

std::vector<Profile> enumerate_profiles(const ProfileDomain& domain);

// "<min>..<max>" or a single count. Throws Error on malformed text.
std::pair<std::size_t, std::size_t> parse_voter_range(std::string_view text);

// The same domain over a subset of its candidates.
ProfileDomain with_candidates(ProfileDomain domain, std::vector<Candidate> candidates);

// Every subset of `items` with at least `min_size` elements, in order of
// increasing size then lexicographic.
std::vector<std::vector<Candidate>> subsets(const std::vector<Candidate>& items, std::size_t min_size);

}  // namespace splitcycle
