#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace splitcycle {

// Candidates are short tokens over [A-Za-z0-9_]. Candidate sets are kept as
// lexicographically sorted vectors so that index i always names the same
// candidate for every structure built from one profile.
using Candidate = std::string;

// A strict linear order as candidate indices, highest first.
using Ranking = std::vector<int>;

bool is_valid_token(std::string_view token);

// Antisymmetric n x n matrix of pairwise margins.
class MarginMatrix {
public:
    MarginMatrix() = default;
    explicit MarginMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

    std::size_t size() const noexcept { return n_; }
    int operator()(std::size_t x, std::size_t y) const { return cells_[x * n_ + y]; }
    int& at(std::size_t x, std::size_t y) { return cells_[x * n_ + y]; }

    bool operator==(const MarginMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<int> cells_;
};

// An election: a non-empty sorted candidate set and a non-empty sequence of
// voters, voter i holding rankings()[i]. Voters are identified by index.
class Profile {
public:
    // Ballots given as candidate tokens; candidates may be listed in any order.
    Profile(std::vector<Candidate> candidates, const std::vector<std::vector<Candidate>>& ballots);

    // Ballots given as indices into `candidates`, which must already be sorted.
    Profile(std::vector<Candidate> candidates, std::vector<Ranking> rankings);

    const std::vector<Candidate>& candidates() const noexcept { return candidates_; }
    std::size_t num_candidates() const noexcept { return candidates_.size(); }
    std::size_t num_voters() const noexcept { return rankings_.size(); }

    const Ranking& ranking(std::size_t voter) const { return rankings_.at(voter); }
    const std::vector<Ranking>& rankings() const noexcept { return rankings_; }
    std::vector<Candidate> ballot(std::size_t voter) const;

    std::optional<int> find(std::string_view candidate) const;
    int index_of(std::string_view candidate) const;  // throws Error when absent
    bool contains(std::string_view candidate) const { return find(candidate).has_value(); }

    bool operator==(const Profile&) const = default;

private:
    void validate() const;

    std::vector<Candidate> candidates_;
    std::vector<Ranking> rankings_;
};

// ".vote" text: a `candidates:` header followed by `<count>: c1 > c2 > ...`
// lines; `#` starts a comment. Voters are numbered in file order.
Profile parse_profile(std::string_view text);

// Inverse of parse_profile. Consecutive identical ballots share one line, so
// parse_profile(to_vote_text(p)) == p.
std::string to_vote_text(const Profile& profile);

// Anonymized form: distinct ballots with their counts, in order of first
// appearance.
std::vector<std::pair<std::size_t, Ranking>> anonymized(const Profile& profile);

Profile restrict_to(const Profile& profile, const std::vector<Candidate>& subset);
Profile without(const Profile& profile, const Candidate& removed);
Profile replicate(const Profile& profile, std::size_t copies);
Profile add_reversed_pair(const Profile& profile, const std::vector<Candidate>& ballot);

// Voter i of the input becomes voter targets[i] of the result.
Profile permute_voters(const Profile& profile, std::span<const std::size_t> targets);

// Relabels candidates so that margin(result, x, y) == margin(profile, s(x), s(y)).
Profile permute_candidates(const Profile& profile, const std::map<Candidate, Candidate>& sigma);

// Exchanges two candidates on every ballot.
Profile swap_candidates(const Profile& profile, const Candidate& x, const Candidate& y);

MarginMatrix margins(const Profile& profile);
int margin(const Profile& profile, std::string_view x, std::string_view y);

std::optional<Candidate> condorcet_winner(const Profile& profile);
std::optional<int> condorcet_winner(const MarginMatrix& m);

// Every permutation of 0..n-1 in lexicographic order.
std::vector<Ranking> all_rankings(std::size_t n);

Ranking reversed(Ranking ranking);

}  // namespace splitcycle
