#include "splitcycle/methods.hpp"

#include <algorithm>
#include <array>

#include "splitcycle/errors.hpp"
#include "splitcycle/graphs.hpp"

namespace splitcycle {

namespace {

struct Entry {
    MethodId id;
    std::string_view name;
    VccrDescriptor info;
};

constexpr std::array<Entry, 16> kRegistry{{
    {MethodId::simple_majority, "simple_majority", {MethodId::simple_majority, true, true, false}},
    {MethodId::left_covering, "left_covering", {MethodId::left_covering, true, true, true}},
    {MethodId::right_covering, "right_covering", {MethodId::right_covering, true, true, true}},
    {MethodId::fishburn, "fishburn", {MethodId::fishburn, true, true, true}},
    {MethodId::copeland, "copeland", {MethodId::copeland, true, true, true}},
    {MethodId::borda, "borda", {MethodId::borda, true, false, true}},
    {MethodId::plurality, "plurality", {MethodId::plurality, false, false, true}},
    {MethodId::hare, "hare", {MethodId::hare, false, false, true}},
    {MethodId::weighted_covering, "weighted_covering", {MethodId::weighted_covering, true, true, true}},
    {MethodId::beat_path, "beat_path", {MethodId::beat_path, true, true, true}},
    {MethodId::split_cycle, "split_cycle", {MethodId::split_cycle, true, true, true}},
    {MethodId::pareto, "pareto", {MethodId::pareto, false, false, true}},
    {MethodId::positive_negative, "positive_negative", {MethodId::positive_negative, false, false, true}},
    {MethodId::minimax, "minimax", {MethodId::minimax, true, true, true}},
    {MethodId::null, "null", {MethodId::null, true, true, true}},
    {MethodId::global_split, "global_split", {MethodId::global_split, true, true, true}},
}};

const Entry& entry(MethodId id) {
    for (const auto& e : kRegistry)
        if (e.id == id) return e;
    throw Error("unregistered method");
}

std::size_t count(const Profile& p) { return p.num_candidates(); }

template <typename Pred>
DefeatRelation relation_from(const Profile& p, Pred defeats) {
    DefeatRelation d(p.candidates());
    const auto n = count(p);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && defeats(x, y)) d.add(x, y);
    return d;
}

DefeatRelation by_score(const Profile& p, const std::vector<int>& score) {
    return relation_from(p, [&](std::size_t x, std::size_t y) { return score[x] > score[y]; });
}

std::vector<unsigned char> majority_edges(const MarginMatrix& m) {
    const auto n = m.size();
    std::vector<unsigned char> e(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) e[x * n + y] = m(x, y) > 0 ? 1 : 0;
    return e;
}

// Is there a simple cycle through both x and y using edges with margin > floor?
class CycleThrough {
public:
    CycleThrough(const MarginMatrix& m, int floor) : m_(m), floor_(floor), n_(m.size()), on_path_(n_, 0) {}

    bool operator()(std::size_t x, std::size_t y) {
        x_ = x;
        y_ = y;
        std::fill(on_path_.begin(), on_path_.end(), 0);
        on_path_[x] = 1;
        return extend(x);
    }

private:
    bool edge(std::size_t a, std::size_t b) const { return m_(a, b) > floor_; }

    // Grow a simple path x ~> cur; once it reaches y, look for a way back.
    bool extend(std::size_t cur) {
        if (cur == y_) return back_to_x();
        for (std::size_t w = 0; w < n_; ++w) {
            if (on_path_[w] || !edge(cur, w)) continue;
            on_path_[w] = 1;
            const bool found = extend(w);
            on_path_[w] = 0;
            if (found) return true;
        }
        return false;
    }

    bool back_to_x() const {
        std::vector<char> seen(on_path_.begin(), on_path_.end());
        seen[x_] = 0;
        std::vector<std::size_t> frontier{y_};
        while (!frontier.empty()) {
            const auto u = frontier.back();
            frontier.pop_back();
            for (std::size_t w = 0; w < n_; ++w) {
                if (!edge(u, w)) continue;
                if (w == x_) return true;
                if (seen[w]) continue;
                seen[w] = 1;
                frontier.push_back(w);
            }
        }
        return false;
    }

    const MarginMatrix& m_;
    int floor_;
    std::size_t n_;
    std::vector<char> on_path_;
    std::size_t x_ = 0;
    std::size_t y_ = 0;
};

DefeatRelation split_threshold(const Profile& p, const MarginMatrix& m) {
    int top = 0;
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = 0; y < m.size(); ++y) top = std::max(top, m(x, y));
    return relation_from(p, [&](std::size_t x, std::size_t y) {
        // Smallest n with no cycle through x and y in the "wins by more than n" graph.
        int n = 0;
        while (n < top && CycleThrough(m, n)(x, y)) ++n;
        return m(x, y) > n;
    });
}

DefeatRelation split_all_cycles(const Profile& p, const MarginMatrix& m) {
    const auto n = m.size();
    const auto cycles = simple_cycle_indices(n, majority_edges(m));
    std::vector<int> split(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const auto& c = cycles[i];
        int s = m(c.back(), c.front());
        for (std::size_t k = 0; k + 1 < c.size(); ++k) s = std::min(s, m(c[k], c[k + 1]));
        split[i] = s;
    }
    return relation_from(p, [&](std::size_t x, std::size_t y) {
        if (m(x, y) <= 0) return false;
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            const auto& c = cycles[i];
            const bool has_x = std::find(c.begin(), c.end(), static_cast<int>(x)) != c.end();
            const bool has_y = std::find(c.begin(), c.end(), static_cast<int>(y)) != c.end();
            if (has_x && has_y && m(x, y) <= split[i]) return false;
        }
        return true;
    });
}

// Strength of the strongest simple path from ~> to, by enumerating paths.
int strongest_return(const MarginMatrix& m, std::size_t from, std::size_t to, std::vector<char>& used, int sofar) {
    if (from == to) return sofar;
    int best = 0;
    for (std::size_t w = 0; w < m.size(); ++w) {
        if (used[w] || m(from, w) <= 0) continue;
        used[w] = 1;
        best = std::max(best, strongest_return(m, w, to, used, std::min(sofar, m(from, w))));
        used[w] = 0;
    }
    return best;
}

DefeatRelation split_edge_cycles(const Profile& p, const MarginMatrix& m) {
    return relation_from(p, [&](std::size_t x, std::size_t y) {
        if (m(x, y) <= 0) return false;
        // Cycles x -> y -> ... -> x: the edge plus every simple path y ~> x.
        std::vector<char> used(m.size(), 0);
        used[y] = 1;
        const int path = strongest_return(m, y, x, used, m(x, y));
        return path < m(x, y);
    });
}

DefeatRelation split_widest(const Profile& p, const MarginMatrix& m) {
    const auto w = widest_paths(m);
    return relation_from(p, [&](std::size_t x, std::size_t y) { return m(x, y) > 0 && w(y, x) < m(x, y); });
}

bool left_covers(const MarginMatrix& m, std::size_t x, std::size_t y) {
    for (std::size_t z = 0; z < m.size(); ++z)
        if (m(z, x) > 0 && m(z, y) <= 0) return false;
    return true;
}

bool right_covers(const MarginMatrix& m, std::size_t x, std::size_t y) {
    for (std::size_t z = 0; z < m.size(); ++z)
        if (m(y, z) > 0 && m(x, z) <= 0) return false;
    return true;
}

DefeatRelation global_split(const Profile& p, const MarginMatrix& m) {
    const auto cycles = simple_cycle_indices(m.size(), majority_edges(m));
    int worst = 0;
    for (const auto& c : cycles) {
        int s = m(c.back(), c.front());
        for (std::size_t k = 0; k + 1 < c.size(); ++k) s = std::min(s, m(c[k], c[k + 1]));
        worst = std::max(worst, s);
    }
    return relation_from(p, [&](std::size_t x, std::size_t y) { return m(x, y) > 0 && m(x, y) > worst; });
}

bool unanimous(const Profile& p, std::size_t x, std::size_t y) {
    for (const auto& r : p.rankings()) {
        for (int c : r) {
            if (c == static_cast<int>(x)) break;
            if (c == static_cast<int>(y)) return false;
        }
    }
    return true;
}

std::vector<Candidate> sorted_set(const Profile& p, const std::vector<Candidate>& y) {
    if (y.empty()) throw Error("choice set needs a non-empty candidate set");
    auto s = y;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (const auto& c : s) p.index_of(c);
    return s;
}

}  // namespace

const std::vector<MethodId>& all_methods() {
    static const std::vector<MethodId> ids = [] {
        std::vector<MethodId> v;
        for (const auto& e : kRegistry) v.push_back(e.id);
        return v;
    }();
    return ids;
}

std::string_view method_name(MethodId id) { return entry(id).name; }

std::optional<MethodId> find_method(std::string_view name) {
    for (const auto& e : kRegistry)
        if (e.name == name) return e.id;
    return std::nullopt;
}

MethodId parse_method(std::string_view name) {
    if (auto id = find_method(name)) return *id;
    throw Error("unknown method '" + std::string(name) + "'");
}

const VccrDescriptor& descriptor(MethodId id) { return entry(id).info; }

const std::vector<Formulation>& all_formulations() {
    static const std::vector<Formulation> all{Formulation::threshold, Formulation::all_cycles,
                                              Formulation::edge_cycles, Formulation::widest_path};
    return all;
}

std::string_view formulation_name(Formulation f) {
    switch (f) {
        case Formulation::threshold: return "threshold";
        case Formulation::all_cycles: return "all_cycles";
        case Formulation::edge_cycles: return "edge_cycles";
        case Formulation::widest_path: return "widest_path";
    }
    return "?";
}

DefeatRelation split_cycle(const Profile& profile, Formulation formulation) {
    const auto m = margins(profile);
    switch (formulation) {
        case Formulation::threshold: return split_threshold(profile, m);
        case Formulation::all_cycles: return split_all_cycles(profile, m);
        case Formulation::edge_cycles: return split_edge_cycles(profile, m);
        case Formulation::widest_path: return split_widest(profile, m);
    }
    throw Error("unknown formulation");
}

std::vector<int> copeland_scores(const Profile& p) {
    const auto m = margins(p);
    std::vector<int> s(count(p), 0);
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t z = 0; z < s.size(); ++z) s[x] += (m(x, z) > 0) - (m(z, x) > 0);
    return s;
}

std::vector<int> borda_scores(const Profile& p) {
    const auto n = static_cast<int>(count(p));
    std::vector<int> s(count(p), 0);
    for (const auto& r : p.rankings())
        for (int k = 0; k < n; ++k) s[r[k]] += n - 1 - k;
    return s;
}

std::vector<int> plurality_scores(const Profile& p) {
    std::vector<int> s(count(p), 0);
    for (const auto& r : p.rankings()) ++s[r.front()];
    return s;
}

std::vector<int> hare_scores(const Profile& p) {
    const auto n = count(p);
    std::vector<int> score(n, 0);
    std::vector<char> alive(n, 1);
    while (true) {
        std::vector<int> firsts(n, 0);
        for (const auto& r : p.rankings())
            for (int c : r)
                if (alive[c]) {
                    ++firsts[c];
                    break;
                }
        int low = -1;
        int high = -1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!alive[c]) continue;
            low = low < 0 ? firsts[c] : std::min(low, firsts[c]);
            high = std::max(high, firsts[c]);
        }
        if (low == high) break;
        // Survivors of this round are those above the lowest score.
        for (std::size_t c = 0; c < n; ++c) {
            if (!alive[c]) continue;
            if (firsts[c] == low)
                alive[c] = 0;
            else
                ++score[c];
        }
    }
    return score;
}

std::vector<int> positive_negative_scores(const Profile& p) {
    std::vector<int> s(count(p), 0);
    for (const auto& r : p.rankings()) {
        ++s[r.front()];
        --s[r.back()];
    }
    return s;
}

std::vector<int> minimax_losses(const Profile& p) {
    const auto m = margins(p);
    std::vector<int> loss(count(p), 0);
    for (std::size_t x = 0; x < loss.size(); ++x)
        for (std::size_t z = 0; z < loss.size(); ++z) loss[x] = std::max(loss[x], m(z, x));
    return loss;
}

DefeatRelation unanimity_separation(const Profile& p) {
    const auto m = margins(p);
    const auto n = count(p);
    return relation_from(p, [&](std::size_t x, std::size_t y) {
        if (!unanimous(p, x, y)) return false;
        for (std::size_t z = 0; z < n; ++z)
            if (z != x && z != y && m(x, z) > 0 && m(y, z) <= 0) return true;
        return false;
    });
}

DefeatRelation defeat(MethodId id, const Profile& p) {
    switch (id) {
        case MethodId::simple_majority: {
            const auto m = margins(p);
            return relation_from(p, [&](std::size_t x, std::size_t y) { return m(x, y) > 0; });
        }
        case MethodId::left_covering: {
            const auto m = margins(p);
            return relation_from(p, [&](std::size_t x, std::size_t y) { return m(x, y) > 0 && left_covers(m, x, y); });
        }
        case MethodId::right_covering: {
            const auto m = margins(p);
            return relation_from(p, [&](std::size_t x, std::size_t y) { return m(x, y) > 0 && right_covers(m, x, y); });
        }
        case MethodId::fishburn: {
            const auto m = margins(p);
            return relation_from(p, [&](std::size_t x, std::size_t y) {
                return left_covers(m, x, y) && !left_covers(m, y, x);
            });
        }
        case MethodId::copeland: return by_score(p, copeland_scores(p));
        case MethodId::borda: return by_score(p, borda_scores(p));
        case MethodId::plurality: return by_score(p, plurality_scores(p));
        case MethodId::hare: return by_score(p, hare_scores(p));
        case MethodId::weighted_covering: {
            const auto m = margins(p);
            return relation_from(p, [&](std::size_t x, std::size_t y) {
                if (m(x, y) <= 0) return false;
                for (std::size_t z = 0; z < m.size(); ++z)
                    if (m(x, z) < m(y, z)) return false;
                return true;
            });
        }
        case MethodId::beat_path: {
            const auto w = widest_paths(margins(p));
            return relation_from(p, [&](std::size_t x, std::size_t y) { return w(x, y) > w(y, x); });
        }
        case MethodId::split_cycle: return split_cycle(p);
        case MethodId::pareto:
            return relation_from(p, [&](std::size_t x, std::size_t y) { return unanimous(p, x, y); });
        case MethodId::positive_negative: return by_score(p, positive_negative_scores(p));
        case MethodId::minimax: {
            const auto loss = minimax_losses(p);
            return relation_from(p, [&](std::size_t x, std::size_t y) { return loss[x] < loss[y]; });
        }
        case MethodId::null: return DefeatRelation(p.candidates());
        case MethodId::global_split: return global_split(p, margins(p));
    }
    throw Error("unknown method");
}

Vccr vccr(MethodId id) {
    return {std::string(method_name(id)), [id](const Profile& p) { return defeat(id, p); }};
}

std::optional<Vccr> find_vccr(std::string_view name) {
    if (auto id = find_method(name)) return vccr(*id);
    if (name == "unanimity_separation") return Vccr{"unanimity_separation", unanimity_separation};
    return std::nullopt;
}

std::vector<std::string> vccr_names() {
    std::vector<std::string> names;
    for (auto id : all_methods()) names.emplace_back(method_name(id));
    names.emplace_back("unanimity_separation");
    return names;
}

std::vector<Candidate> global_choice(const Vccr& f, const Profile& profile, const std::vector<Candidate>& y) {
    const auto set = sorted_set(profile, y);
    const auto d = f.evaluate(profile);
    std::vector<Candidate> out;
    for (const auto& c : set) {
        bool beaten = false;
        for (const auto& z : set)
            if (z != c && d.defeats(z, c)) beaten = true;
        if (!beaten) out.push_back(c);
    }
    if (out.empty()) throw Error(f.name + " leaves no undefeated candidate in the given set");
    return out;
}

std::vector<Candidate> global_choice(MethodId id, const Profile& profile, const std::vector<Candidate>& y) {
    return global_choice(vccr(id), profile, y);
}

std::vector<Candidate> local_choice(const Vccr& f, const Profile& profile, const std::vector<Candidate>& y) {
    const auto set = sorted_set(profile, y);
    auto out = f.evaluate(restrict_to(profile, set)).undefeated();
    if (out.empty()) throw Error(f.name + " leaves no undefeated candidate in the given set");
    return out;
}

std::vector<Candidate> local_choice(MethodId id, const Profile& profile, const std::vector<Candidate>& y) {
    return local_choice(vccr(id), profile, y);
}

std::string_view resoluteness_name(Resoluteness r) {
    switch (r) {
        case Resoluteness::equal: return "equal";
        case Resoluteness::g_at_least_f: return "g_at_least_f";
        case Resoluteness::f_at_least_g: return "f_at_least_g";
        case Resoluteness::incomparable: return "incomparable";
    }
    return "?";
}

ResolutenessReport compare_resoluteness(MethodId f, MethodId g, const ProfileDomain& domain) {
    ResolutenessReport report;
    for_each_profile(domain, [&](const Profile& p) {
        ++report.profiles;
        const auto df = defeat(f, p);
        const auto dg = defeat(g, p);
        const auto n = p.num_candidates();
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (df.defeats(x, y) && !dg.defeats(x, y) && !report.only_f)
                    report.only_f = ResolutenessWitness{p, p.candidates()[x], p.candidates()[y]};
                if (dg.defeats(x, y) && !df.defeats(x, y) && !report.only_g)
                    report.only_g = ResolutenessWitness{p, p.candidates()[x], p.candidates()[y]};
            }
        }
        return !(report.only_f && report.only_g);
    });
    if (report.only_f && report.only_g)
        report.verdict = Resoluteness::incomparable;
    else if (report.only_g)
        report.verdict = Resoluteness::g_at_least_f;
    else if (report.only_f)
        report.verdict = Resoluteness::f_at_least_g;
    return report;
}

}  // namespace splitcycle
