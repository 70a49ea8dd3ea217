#include "splitcycle/relation.hpp"

#include <algorithm>

#include "splitcycle/errors.hpp"

namespace splitcycle {

DefeatRelation::DefeatRelation(std::vector<Candidate> universe)
    : universe_(std::move(universe)), cells_(universe_.size() * universe_.size(), 0) {
    if (!std::is_sorted(universe_.begin(), universe_.end())) throw Error("relation universe must be sorted");
}

std::size_t DefeatRelation::index(std::string_view c) const {
    const auto it = std::lower_bound(universe_.begin(), universe_.end(), c);
    if (it == universe_.end() || *it != c) throw Error("unknown candidate '" + std::string(c) + "'");
    return static_cast<std::size_t>(it - universe_.begin());
}

bool DefeatRelation::defeats(std::string_view x, std::string_view y) const { return defeats(index(x), index(y)); }

void DefeatRelation::add(std::size_t x, std::size_t y) {
    const auto n = universe_.size();
    if (x == y) throw Error("a candidate cannot defeat itself");
    if (cells_[y * n + x]) throw Error("defeat relation must be asymmetric");
    cells_[x * n + y] = 1;
}

std::vector<std::pair<Candidate, Candidate>> DefeatRelation::pairs() const {
    std::vector<std::pair<Candidate, Candidate>> out;
    const auto n = universe_.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (defeats(x, y)) out.emplace_back(universe_[x], universe_[y]);
    return out;
}

std::size_t DefeatRelation::pair_count() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

bool DefeatRelation::is_acyclic() const {
    // Repeatedly strip candidates with no remaining defeaters.
    const auto n = universe_.size();
    std::vector<char> removed(n, 0);
    for (std::size_t round = 0; round < n; ++round) {
        bool progress = false;
        for (std::size_t y = 0; y < n; ++y) {
            if (removed[y]) continue;
            bool beaten = false;
            for (std::size_t x = 0; x < n && !beaten; ++x)
                if (!removed[x] && defeats(x, y)) beaten = true;
            if (!beaten) {
                removed[y] = 1;
                progress = true;
            }
        }
        if (!progress) break;
    }
    return std::all_of(removed.begin(), removed.end(), [](char r) { return r != 0; });
}

bool DefeatRelation::subset_of(const DefeatRelation& other) const {
    if (universe_ != other.universe_) return false;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i] && !other.cells_[i]) return false;
    return true;
}

std::vector<int> DefeatRelation::undefeated_indices() const {
    const auto n = universe_.size();
    std::vector<int> out;
    for (std::size_t y = 0; y < n; ++y) {
        bool beaten = false;
        for (std::size_t x = 0; x < n && !beaten; ++x) beaten = defeats(x, y);
        if (!beaten) out.push_back(static_cast<int>(y));
    }
    return out;
}

std::vector<Candidate> DefeatRelation::undefeated() const {
    std::vector<Candidate> out;
    for (int i : undefeated_indices()) out.push_back(universe_[i]);
    return out;
}

std::vector<Candidate> undefeated(const DefeatRelation& relation) { return relation.undefeated(); }

}  // namespace splitcycle
