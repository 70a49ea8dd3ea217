#pragma once

// Generators and brute-force oracles shared by the test binaries. The oracles
// follow the definitions directly and avoid the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "splitcycle/ballots.hpp"
#include "splitcycle/graphs.hpp"
#include "splitcycle/relation.hpp"
#include "splitcycle/rng.hpp"

namespace testing {

using namespace splitcycle;

inline std::vector<Candidate> letters(std::size_t n) {
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

inline Profile random_profile(Rng& rng, std::size_t candidates, std::size_t voters) {
    std::vector<Ranking> rankings;
    for (std::size_t v = 0; v < voters; ++v) {
        Ranking r(candidates);
        for (std::size_t i = 0; i < candidates; ++i) r[i] = static_cast<int>(i);
        rng.shuffle(r);
        rankings.push_back(std::move(r));
    }
    return Profile(letters(candidates), std::move(rankings));
}

// Each pair gets an edge in a random direction (or none) with an even weight.
inline MarginGraph random_even_graph(Rng& rng, std::size_t n, int max_half_weight) {
    const auto nodes = letters(n);
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto dir = rng.below(3);
            if (dir == 0) continue;
            const int w = 2 * static_cast<int>(rng.between(1, static_cast<std::uint64_t>(max_half_weight)));
            if (dir == 1) edges.push_back({nodes[i], nodes[j], w});
            else edges.push_back({nodes[j], nodes[i], w});
        }
    }
    return MarginGraph(nodes, edges);
}

inline std::vector<unsigned char> random_digraph(Rng& rng, std::size_t n, unsigned percent) {
    std::vector<unsigned char> edge(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && rng.below(100) < percent) edge[i * n + j] = 1;
    return edge;
}

// Every node subset, least node first, every order of the rest: keep the
// orders that close into a walk.
inline std::vector<std::vector<int>> brute_force_cycles(std::size_t n, const std::vector<unsigned char>& edge) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) members.push_back(static_cast<int>(i));
        if (members.size() < 2) continue;
        std::vector<int> rest(members.begin() + 1, members.end());
        do {
            std::vector<int> cyc{members[0]};
            cyc.insert(cyc.end(), rest.begin(), rest.end());
            bool ok = true;
            for (std::size_t k = 0; k < cyc.size() && ok; ++k)
                ok = edge[static_cast<std::size_t>(cyc[k]) * n + static_cast<std::size_t>(cyc[(k + 1) % cyc.size()])];
            if (ok) out.push_back(cyc);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<unsigned char> edge_matrix(const MarginGraph& g) {
    const auto n = g.size();
    std::vector<unsigned char> edge(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) edge[i * n + j] = g.has_edge(i, j) ? 1 : 0;
    return edge;
}

// Strength of the strongest simple path x ~> y by enumerating every path.
inline int enumerated_widest(const MarginGraph& g, std::size_t x, std::size_t y) {
    int best = 0;
    std::vector<bool> seen(g.size(), false);
    std::function<void(std::size_t, int)> walk = [&](std::size_t at, int strength) {
        if (at == y) {
            best = std::max(best, strength);
            return;
        }
        seen[at] = true;
        for (std::size_t next = 0; next < g.size(); ++next)
            if (!seen[next] && g.has_edge(at, next)) walk(next, std::min(strength, g.weight(at, next)));
        seen[at] = false;
    };
    walk(x, INT32_MAX);
    return best;
}

// x defeats y iff margin(x, y) > 0 and exceeds the splitting number of every
// majority cycle through both, cycles found by brute force.
inline DefeatRelation split_cycle_oracle(const Profile& p) {
    const auto g = margin_graph(p);
    const auto n = g.size();
    const auto cycles = brute_force_cycles(n, edge_matrix(g));
    DefeatRelation d(p.candidates());
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (!g.has_edge(x, y)) continue;
            bool beats = true;
            for (const auto& c : cycles) {
                const bool has_x = std::find(c.begin(), c.end(), static_cast<int>(x)) != c.end();
                const bool has_y = std::find(c.begin(), c.end(), static_cast<int>(y)) != c.end();
                if (!has_x || !has_y) continue;
                int split = INT32_MAX;
                for (std::size_t k = 0; k < c.size(); ++k)
                    split = std::min(split, g.weight(static_cast<std::size_t>(c[k]),
                                                     static_cast<std::size_t>(c[(k + 1) % c.size()])));
                if (g.weight(x, y) <= split) beats = false;
            }
            if (beats) d.add(x, y);
        }
    }
    return d;
}

inline std::vector<std::pair<Candidate, Candidate>> pairs_of(
    std::initializer_list<std::pair<const char*, const char*>> items) {
    std::vector<std::pair<Candidate, Candidate>> out;
    for (const auto& [a, b] : items) out.emplace_back(a, b);
    std::sort(out.begin(), out.end());
    return out;
}

inline const char* kQ = "candidates: a b c\n4: a > b > c\n2: b > c > a\n3: c > a > b\n";
inline const char* kBordaPairP = "candidates: a b c x y\n1: x > a > b > c > y\n1: y > x > a > b > c\n2: y > x > c > b > a\n";
inline const char* kBordaPairQ = "candidates: a b c x y\n1: a > b > c > x > y\n1: y > a > b > c > x\n2: y > x > c > b > a\n";
inline const char* kSpoilerP = "candidates: a b c\n2: c > b > a\n3: a > c > b\n";
inline const char* kGlobalLocal = "candidates: w x y z\n2: x > y > z > w\n1: z > w > x > y\n";
inline const char* kCycle3 = "candidates: a b c\n1: a > b > c\n1: b > c > a\n1: c > a > b\n";

inline MarginGraph abcd_graph() {
    return MarginGraph({"a", "b", "c", "d"}, {{"a", "b", 5}, {"b", "c", 7}, {"c", "a", 3},
                                              {"c", "d", 3}, {"b", "d", 3}, {"a", "d", 3}});
}

}  // namespace testing
