#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "splitcycle/ballots.hpp"

namespace splitcycle {

// Asymmetric binary relation over a sorted candidate universe; the output of
// every collective choice rule.
class DefeatRelation {
public:
    DefeatRelation() = default;
    explicit DefeatRelation(std::vector<Candidate> universe);

    const std::vector<Candidate>& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return universe_.size(); }

    bool defeats(std::size_t x, std::size_t y) const { return cells_[x * universe_.size() + y] != 0; }
    bool defeats(std::string_view x, std::string_view y) const;

    // Throws Error if adding the pair would break asymmetry.
    void add(std::size_t x, std::size_t y);

    // Sorted lexicographically by (from, to).
    std::vector<std::pair<Candidate, Candidate>> pairs() const;
    std::size_t pair_count() const;
    bool empty() const { return pair_count() == 0; }

    bool is_acyclic() const;
    bool subset_of(const DefeatRelation& other) const;

    // Candidates nobody defeats, in universe order.
    std::vector<Candidate> undefeated() const;
    std::vector<int> undefeated_indices() const;

    bool operator==(const DefeatRelation&) const = default;

private:
    std::size_t index(std::string_view c) const;

    std::vector<Candidate> universe_;
    std::vector<unsigned char> cells_;
};

std::vector<Candidate> undefeated(const DefeatRelation& relation);

}  // namespace splitcycle
