#include "splitcycle/graphs.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "splitcycle/errors.hpp"

namespace splitcycle {

namespace {

int find_index(const std::vector<Candidate>& nodes, std::string_view c) {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
    if (it == nodes.end() || *it != c) throw Error("unknown node '" + std::string(c) + "'");
    return static_cast<int>(it - nodes.begin());
}

void check_nodes(const std::vector<Candidate>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!is_valid_token(nodes[i])) throw Error("invalid node token '" + nodes[i] + "'");
        if (i > 0 && nodes[i] == nodes[i - 1]) throw Error("duplicate node '" + nodes[i] + "'");
    }
}

class Johnson {
public:
    Johnson(std::size_t n, const std::vector<unsigned char>& edge) : n_(n), edge_(edge), blocked_(n), b_(n) {}

    std::vector<std::vector<int>> run() {
        for (std::size_t s = 0; s < n_; ++s) {
            start_ = s;
            for (std::size_t v = s; v < n_; ++v) {
                blocked_[v] = 0;
                b_[v].clear();
            }
            circuit(s);
        }
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    bool circuit(std::size_t v) {
        bool closed = false;
        stack_.push_back(static_cast<int>(v));
        blocked_[v] = 1;
        for (std::size_t w = start_; w < n_; ++w) {
            if (!edge_[v * n_ + w]) continue;
            if (w == start_) {
                found_.push_back(stack_);
                closed = true;
            } else if (!blocked_[w] && circuit(w)) {
                closed = true;
            }
        }
        if (closed) {
            unblock(v);
        } else {
            for (std::size_t w = start_; w < n_; ++w) {
                if (!edge_[v * n_ + w]) continue;
                auto& list = b_[w];
                if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
            }
        }
        stack_.pop_back();
        return closed;
    }

    void unblock(std::size_t u) {
        blocked_[u] = 0;
        auto pending = std::move(b_[u]);
        b_[u].clear();
        for (auto w : pending)
            if (blocked_[w]) unblock(w);
    }

    std::size_t n_;
    const std::vector<unsigned char>& edge_;
    std::size_t start_ = 0;
    std::vector<char> blocked_;
    std::vector<std::vector<std::size_t>> b_;
    std::vector<int> stack_;
    std::vector<std::vector<int>> found_;
};

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

MarginGraph::MarginGraph(std::vector<Candidate> nodes, const std::vector<WeightedEdge>& edges)
    : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    check_nodes(nodes_);
    const auto n = nodes_.size();
    weights_.assign(n * n, 0);
    for (const auto& e : edges) {
        const auto x = static_cast<std::size_t>(find_index(nodes_, e.from));
        const auto y = static_cast<std::size_t>(find_index(nodes_, e.to));
        if (x == y) throw Error("self loop on '" + e.from + "'");
        if (e.weight <= 0) throw Error("edge " + e.from + " -> " + e.to + " needs a positive weight");
        if (weights_[x * n + y]) throw Error("duplicate edge " + e.from + " -> " + e.to);
        if (weights_[y * n + x]) throw Error("edges " + e.from + " -> " + e.to + " and back are both present");
        weights_[x * n + y] = e.weight;
    }
}

int MarginGraph::index_of(std::string_view node) const { return find_index(nodes_, node); }

int MarginGraph::weight(std::string_view x, std::string_view y) const {
    return weight(static_cast<std::size_t>(index_of(x)), static_cast<std::size_t>(index_of(y)));
}

std::vector<WeightedEdge> MarginGraph::edges() const {
    std::vector<WeightedEdge> out;
    const auto n = nodes_.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (has_edge(x, y)) out.push_back({nodes_[x], nodes_[y], weight(x, y)});
    return out;
}

MarginMatrix MarginGraph::margins() const {
    const auto n = nodes_.size();
    MarginMatrix m(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) m.at(x, y) = weight(x, y) - weight(y, x);
    return m;
}

std::optional<int> MarginGraph::parity() const {
    std::optional<int> seen;
    for (int w : weights_) {
        if (w == 0) continue;
        if (seen && *seen != w % 2) return std::nullopt;
        seen = w % 2;
    }
    return seen;
}

MajorityGraph::MajorityGraph(std::vector<Candidate> nodes, const std::vector<std::pair<Candidate, Candidate>>& edges)
    : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    check_nodes(nodes_);
    const auto n = nodes_.size();
    cells_.assign(n * n, 0);
    for (const auto& [from, to] : edges) {
        const auto x = static_cast<std::size_t>(find_index(nodes_, from));
        const auto y = static_cast<std::size_t>(find_index(nodes_, to));
        if (x == y) throw Error("self loop on '" + from + "'");
        if (cells_[y * n + x]) throw Error("majority graph must be asymmetric");
        cells_[x * n + y] = 1;
    }
}

std::vector<std::pair<Candidate, Candidate>> MajorityGraph::edges() const {
    std::vector<std::pair<Candidate, Candidate>> out;
    const auto n = nodes_.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (has_edge(x, y)) out.emplace_back(nodes_[x], nodes_[y]);
    return out;
}

bool Cycle::contains(std::string_view c) const { return std::find(nodes.begin(), nodes.end(), c) != nodes.end(); }

MarginGraph margin_graph(const std::vector<Candidate>& nodes, const MarginMatrix& m) {
    std::vector<WeightedEdge> edges;
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = 0; y < m.size(); ++y)
            if (m(x, y) > 0) edges.push_back({nodes[x], nodes[y], m(x, y)});
    return MarginGraph(nodes, edges);
}

MarginGraph margin_graph(const Profile& profile) { return margin_graph(profile.candidates(), margins(profile)); }

MajorityGraph majority_graph(const MarginGraph& graph) {
    std::vector<std::pair<Candidate, Candidate>> edges;
    for (const auto& e : graph.edges()) edges.emplace_back(e.from, e.to);
    return MajorityGraph(graph.nodes(), edges);
}

MajorityGraph majority_graph(const Profile& profile) { return majority_graph(margin_graph(profile)); }

QualitativeMarginGraph qualitative_view(const MarginGraph& graph) {
    std::map<int, std::vector<std::pair<Candidate, Candidate>>, std::greater<>> by_weight;
    for (const auto& e : graph.edges()) by_weight[e.weight].emplace_back(e.from, e.to);
    QualitativeMarginGraph q{majority_graph(graph), {}};
    for (auto& [w, tier] : by_weight) q.tiers.push_back(std::move(tier));
    return q;
}

std::vector<std::vector<int>> simple_cycle_indices(std::size_t n, const std::vector<unsigned char>& edge) {
    return Johnson(n, edge).run();
}

std::vector<Cycle> simple_cycles(const MarginGraph& graph) {
    const auto n = graph.size();
    std::vector<unsigned char> edge(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) edge[x * n + y] = graph.has_edge(x, y) ? 1 : 0;
    std::vector<Cycle> out;
    for (const auto& c : simple_cycle_indices(n, edge)) {
        Cycle cycle;
        for (int i : c) cycle.nodes.push_back(graph.nodes()[i]);
        cycle.nodes.push_back(cycle.nodes.front());
        out.push_back(std::move(cycle));
    }
    return out;
}

int splitting_number(const MarginGraph& graph, const Cycle& cycle) {
    const auto& ns = cycle.nodes;
    if (ns.size() < 4 || ns.front() != ns.back()) throw Error("not a cycle: needs at least three distinct nodes");
    auto inner = std::vector<Candidate>(ns.begin(), ns.end() - 1);
    std::sort(inner.begin(), inner.end());
    if (std::adjacent_find(inner.begin(), inner.end()) != inner.end()) throw Error("not a cycle: repeated node");
    int smallest = 0;
    for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
        const int w = graph.weight(ns[i], ns[i + 1]);
        if (w <= 0) throw Error("not a cycle of the graph: no edge " + ns[i] + " -> " + ns[i + 1]);
        smallest = i == 0 ? w : std::min(smallest, w);
    }
    return smallest;
}

MarginMatrix widest_paths(const MarginMatrix& margins) {
    const auto n = margins.size();
    MarginMatrix w(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) w.at(x, y) = x != y && margins(x, y) > 0 ? margins(x, y) : 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (x != y) w.at(x, y) = std::max(w(x, y), std::min(w(x, k), w(k, y)));
    return w;
}

MarginMatrix widest_paths(const MarginGraph& graph) { return widest_paths(graph.margins()); }

int widest_path_strength(const MarginGraph& graph, std::string_view x, std::string_view y) {
    const auto i = graph.index_of(x);
    const auto j = graph.index_of(y);
    if (i == j) throw Error("widest path needs two distinct nodes");
    return widest_paths(graph)(i, j);
}

Profile mcgarvey(const MarginGraph& graph) {
    const auto n = graph.size();
    if (n < 2) throw Error("McGarvey construction needs at least two nodes");
    std::vector<Ranking> rankings;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const int w = graph.weight(a, b);
            if (w == 0) continue;
            if (w % 2 != 0)
                throw Error("McGarvey construction needs even weights; edge " + graph.nodes()[a] + " -> " +
                            graph.nodes()[b] + " has weight " + std::to_string(w));
            Ranking rest;
            for (std::size_t c = 0; c < n; ++c)
                if (c != a && c != b) rest.push_back(static_cast<int>(c));
            Ranking first{static_cast<int>(a), static_cast<int>(b)};
            first.insert(first.end(), rest.begin(), rest.end());
            Ranking second = reversed(rest);
            second.push_back(static_cast<int>(a));
            second.push_back(static_cast<int>(b));
            for (int k = 0; k < w / 2; ++k) {
                rankings.push_back(first);
                rankings.push_back(second);
            }
        }
    }
    if (rankings.empty()) {
        // No edges: every margin is zero, realized by one ballot and its reverse.
        Ranking lex(n);
        for (std::size_t i = 0; i < n; ++i) lex[i] = static_cast<int>(i);
        rankings.push_back(lex);
        rankings.push_back(reversed(lex));
    }
    return Profile(graph.nodes(), std::move(rankings));
}

Profile realize_margin_graph(const MarginGraph& graph) {
    const auto parity = graph.parity();
    if (!parity || *parity == 0) return mcgarvey(graph);
    const auto n = graph.size();
    const auto target = graph.margins();
    std::vector<WeightedEdge> residual;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            if (x < y && target(x, y) == 0)
                throw Error("odd weights need an edge between every pair; " + graph.nodes()[x] + " and " +
                            graph.nodes()[y] + " are unconnected");
            // The lexicographic voter contributes +1 to x over y when x < y.
            const int r = target(x, y) - (x < y ? 1 : -1);
            if (r > 0) residual.push_back({graph.nodes()[x], graph.nodes()[y], r});
        }
    }
    Ranking lex(n);
    for (std::size_t i = 0; i < n; ++i) lex[i] = static_cast<int>(i);
    std::vector<Ranking> rankings{lex};
    if (!residual.empty()) {
        const auto rest = mcgarvey(MarginGraph(graph.nodes(), residual));
        rankings.insert(rankings.end(), rest.rankings().begin(), rest.rankings().end());
    }
    return Profile(graph.nodes(), std::move(rankings));
}

std::string to_dot(const MarginGraph& graph, const std::optional<DefeatRelation>& defeat) {
    if (defeat && defeat->universe() != graph.nodes()) throw Error("defeat relation is over different candidates");
    std::ostringstream out;
    out << "digraph margins {\n";
    out << "  node [shape=circle];\n";
    for (const auto& c : graph.nodes()) out << "  " << quoted(c) << ";\n";
    const auto n = graph.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const bool edge = graph.has_edge(x, y);
            const bool beats = defeat && defeat->defeats(x, y);
            if (!edge && !beats) continue;
            out << "  " << quoted(graph.nodes()[x]) << " -> " << quoted(graph.nodes()[y]) << " [";
            if (edge) out << "label=\"" << graph.weight(x, y) << "\"";
            if (beats) out << (edge ? ", " : "") << "color=red, penwidth=2" << (edge ? "" : ", style=dashed");
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace splitcycle
