#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitcycle/ballots.hpp"
#include "splitcycle/relation.hpp"

namespace splitcycle {

struct WeightedEdge {
    Candidate from;
    Candidate to;
    int weight = 0;

    bool operator==(const WeightedEdge&) const = default;
};

// Weighted majority tournament: an edge x -> y of weight margin(x, y) for
// every pair with a positive margin.
class MarginGraph {
public:
    MarginGraph() = default;

    // Throws Error on self loops, unknown endpoints, non-positive weights,
    // duplicate edges or both directions of one pair.
    MarginGraph(std::vector<Candidate> nodes, const std::vector<WeightedEdge>& edges);

    const std::vector<Candidate>& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    int index_of(std::string_view node) const;

    // 0 when there is no edge.
    int weight(std::size_t x, std::size_t y) const { return weights_[x * nodes_.size() + y]; }
    int weight(std::string_view x, std::string_view y) const;
    bool has_edge(std::size_t x, std::size_t y) const { return weight(x, y) > 0; }

    // Sorted by (from, to).
    std::vector<WeightedEdge> edges() const;

    // Antisymmetric margins implied by the edges.
    MarginMatrix margins() const;

    // 0 or 1 when every weight shares that parity; nullopt when mixed or there
    // are no edges.
    std::optional<int> parity() const;

    bool operator==(const MarginGraph&) const = default;

private:
    friend MarginGraph margin_graph(const Profile& profile);

    std::vector<Candidate> nodes_;
    std::vector<int> weights_;
};

class MajorityGraph {
public:
    MajorityGraph() = default;
    MajorityGraph(std::vector<Candidate> nodes, const std::vector<std::pair<Candidate, Candidate>>& edges);

    const std::vector<Candidate>& nodes() const noexcept { return nodes_; }
    bool has_edge(std::size_t x, std::size_t y) const { return cells_[x * nodes_.size() + y] != 0; }
    std::vector<std::pair<Candidate, Candidate>> edges() const;

    bool operator==(const MajorityGraph&) const = default;

private:
    std::vector<Candidate> nodes_;
    std::vector<unsigned char> cells_;
};

// Majority graph plus the ranking of its edges by weight. Tier 0 holds the
// heaviest edges; each tier is sorted.
struct QualitativeMarginGraph {
    MajorityGraph majority;
    std::vector<std::vector<std::pair<Candidate, Candidate>>> tiers;

    bool operator==(const QualitativeMarginGraph&) const = default;
};

// Closed walk x1, ..., xn, x1 through distinct nodes.
struct Cycle {
    std::vector<Candidate> nodes;  // first node repeated at the end

    bool contains(std::string_view c) const;
    bool operator==(const Cycle&) const = default;
    bool operator<(const Cycle& other) const { return nodes < other.nodes; }
};

MarginGraph margin_graph(const Profile& profile);
MarginGraph margin_graph(const std::vector<Candidate>& nodes, const MarginMatrix& margins);
MajorityGraph majority_graph(const Profile& profile);
MajorityGraph majority_graph(const MarginGraph& graph);
QualitativeMarginGraph qualitative_view(const MarginGraph& graph);

// Every simple cycle of a directed graph on nodes 0..n-1 given by `edge`,
// each once, starting at its least node; sorted lexicographically. The first
// node is not repeated at the end.
std::vector<std::vector<int>> simple_cycle_indices(std::size_t n, const std::vector<unsigned char>& edge);

std::vector<Cycle> simple_cycles(const MarginGraph& graph);

// Smallest weight along the cycle. Throws Error if it is not a cycle of graph.
int splitting_number(const MarginGraph& graph, const Cycle& cycle);

// result(x, y) = strength of the widest path x ~> y, 0 when none and on the
// diagonal.
MarginMatrix widest_paths(const MarginGraph& graph);
MarginMatrix widest_paths(const MarginMatrix& margins);
int widest_path_strength(const MarginGraph& graph, std::string_view x, std::string_view y);

// Profile whose margin graph is exactly `graph`. Requires even weights and at
// least two nodes.
Profile mcgarvey(const MarginGraph& graph);

// Like mcgarvey but also accepts uniformly odd weights, by adding one voter
// with the lexicographic ballot and realizing the (even) remainder.
Profile realize_margin_graph(const MarginGraph& graph);

std::string to_dot(const MarginGraph& graph, const std::optional<DefeatRelation>& defeat = std::nullopt);

}  // namespace splitcycle
