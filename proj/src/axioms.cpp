#include "splitcycle/axioms.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "splitcycle/errors.hpp"
#include "splitcycle/graphs.hpp"
#include "splitcycle/rng.hpp"

namespace splitcycle {

namespace {

constexpr std::array<std::pair<AxiomId, std::string_view>, 24> kNames{{
    {AxiomId::anonymity, "anonymity"},
    {AxiomId::neutrality, "neutrality"},
    {AxiomId::availability, "availability"},
    {AxiomId::upward_homogeneity, "upward_homogeneity"},
    {AxiomId::monotonicity, "monotonicity"},
    {AxiomId::monotonicity_two_candidate, "monotonicity_two_candidate"},
    {AxiomId::neutral_reversal_up, "neutral_reversal_up"},
    {AxiomId::neutral_reversal_down, "neutral_reversal_down"},
    {AxiomId::coherent_iia, "coherent_iia"},
    {AxiomId::weak_iia, "weak_iia"},
    {AxiomId::fiia, "fiia"},
    {AxiomId::viia, "viia"},
    {AxiomId::modified_iia, "modified_iia"},
    {AxiomId::intensity_iia, "intensity_iia"},
    {AxiomId::pareto, "pareto"},
    {AxiomId::majority_defeat, "majority_defeat"},
    {AxiomId::condorcet_consistency, "condorcet_consistency"},
    {AxiomId::binary_majoritarianism, "binary_majoritarianism"},
    {AxiomId::immunity_to_spoilers, "immunity_to_spoilers"},
    {AxiomId::strong_stability, "strong_stability"},
    {AxiomId::local_alpha, "local_alpha"},
    {AxiomId::global_alpha, "global_alpha"},
    {AxiomId::alpha_bar, "alpha_bar"},
    {AxiomId::acyclicity, "acyclicity"},
}};

// Random pair mode: partners drawn per profile and candidate pair.
constexpr std::size_t kRandomPartners = 8;

// ---- small helpers shared by predicates and scanners ----

bool ranks_above(const Ranking& r, int x, int y) {
    for (int c : r) {
        if (c == x) return true;
        if (c == y) return false;
    }
    return false;
}

std::vector<Candidate> between(const Profile& p, std::size_t voter, int x, int y) {
    const auto& r = p.ranking(voter);
    std::vector<Candidate> out;
    bool inside = false;
    for (int c : r) {
        if (c == x || c == y) {
            if (inside) break;
            inside = true;
            continue;
        }
        if (inside) out.push_back(p.candidates()[c]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool same_pair_restriction(const Profile& p, const Profile& q, const Candidate& x, const Candidate& y) {
    if (p.num_voters() != q.num_voters()) return false;
    const auto px = p.find(x), py = p.find(y), qx = q.find(x), qy = q.find(y);
    if (!px || !py || !qx || !qy) return false;
    for (std::size_t i = 0; i < p.num_voters(); ++i)
        if (ranks_above(p.ranking(i), *px, *py) != ranks_above(q.ranking(i), *qx, *qy)) return false;
    return true;
}

bool subset_of(const std::vector<Candidate>& small, const std::vector<Candidate>& big) {
    return std::all_of(small.begin(), small.end(),
                       [&](const Candidate& c) { return std::find(big.begin(), big.end(), c) != big.end(); });
}

bool contains(const std::vector<Candidate>& set, const Candidate& c) {
    return std::find(set.begin(), set.end(), c) != set.end();
}

bool defeated(const DefeatRelation& d, const Candidate& c) {
    for (const auto& z : d.universe())
        if (z != c && d.defeats(z, c)) return true;
    return false;
}

// Undefeated members of `set` under d, tolerating an empty result.
std::vector<Candidate> unbeaten_within(const DefeatRelation& d, const std::vector<Candidate>& set) {
    std::vector<Candidate> out;
    for (const auto& c : set) {
        bool beaten = false;
        for (const auto& z : set)
            if (z != c && d.defeats(z, c)) beaten = true;
        if (!beaten) out.push_back(c);
    }
    return out;
}

std::vector<Candidate> sorted_copy(std::vector<Candidate> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool valid_subset(const std::vector<Candidate>& set, const Profile& p) {
    if (set.empty()) return false;
    auto s = sorted_copy(set);
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    return std::all_of(s.begin(), s.end(), [&](const Candidate& c) { return p.contains(c); });
}

// Does q arise from p by one voter moving x one place up?
bool is_single_lift(const Profile& p, const Profile& q, const Candidate& x) {
    if (p.candidates() != q.candidates() || p.num_voters() != q.num_voters()) return false;
    const auto xi = p.find(x);
    if (!xi) return false;
    std::size_t changed = 0;
    for (std::size_t i = 0; i < p.num_voters(); ++i) {
        const auto& r = p.ranking(i);
        if (r == q.ranking(i)) continue;
        if (++changed > 1) return false;
        const auto at = std::find(r.begin(), r.end(), *xi) - r.begin();
        if (at == 0) return false;
        auto lifted = r;
        std::swap(lifted[at - 1], lifted[at]);
        if (lifted != q.ranking(i)) return false;
    }
    return changed == 1;
}

bool is_voter_swap(const Profile& p, const Profile& q) {
    if (p.candidates() != q.candidates() || p.num_voters() != q.num_voters()) return false;
    std::vector<std::size_t> diff;
    for (std::size_t i = 0; i < p.num_voters(); ++i)
        if (p.ranking(i) != q.ranking(i)) diff.push_back(i);
    if (diff.empty()) return true;
    return diff.size() == 2 && p.ranking(diff[0]) == q.ranking(diff[1]) && p.ranking(diff[1]) == q.ranking(diff[0]);
}

bool is_reversed_extension(const Profile& p, const Profile& q) {
    if (p.candidates() != q.candidates() || q.num_voters() != p.num_voters() + 2) return false;
    for (std::size_t i = 0; i < p.num_voters(); ++i)
        if (p.ranking(i) != q.ranking(i)) return false;
    return q.ranking(p.num_voters() + 1) == reversed(q.ranking(p.num_voters()));
}

std::optional<std::vector<int>> find_cycle(const DefeatRelation& d) {
    const auto n = d.size();
    std::vector<unsigned char> edge(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) edge[x * n + y] = d.defeats(x, y) ? 1 : 0;
    auto cycles = simple_cycle_indices(n, edge);
    if (cycles.empty()) return std::nullopt;
    return cycles.front();
}

std::string voter_label(std::size_t i) { return "voter " + std::to_string(i + 1); }

}  // namespace

const std::vector<AxiomId>& all_axioms() {
    static const std::vector<AxiomId> ids = [] {
        std::vector<AxiomId> v;
        for (const auto& [id, name] : kNames) v.push_back(id);
        return v;
    }();
    return ids;
}

std::string_view axiom_name(AxiomId id) {
    for (const auto& [aid, name] : kNames)
        if (aid == id) return name;
    return "?";
}

std::optional<AxiomId> find_axiom(std::string_view name) {
    for (const auto& [id, n] : kNames)
        if (n == name) return id;
    return std::nullopt;
}

AxiomId parse_axiom(std::string_view name) {
    if (auto id = find_axiom(name)) return *id;
    throw Error("unknown axiom '" + std::string(name) + "'");
}

bool is_pair_axiom(AxiomId id) {
    switch (id) {
        case AxiomId::coherent_iia:
        case AxiomId::weak_iia:
        case AxiomId::fiia:
        case AxiomId::viia:
        case AxiomId::modified_iia:
        case AxiomId::intensity_iia: return true;
        default: return false;
    }
}

std::string_view status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::holds_on_domain: return "holds_on_domain";
        case VerdictStatus::counterexample: return "counterexample";
        case VerdictStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

bool coherent_iia_related(const Profile& p, const Profile& q, const Candidate& x, const Candidate& y) {
    if (x == y) throw Error("coherent IIA relatedness needs two distinct candidates");
    if (p.num_voters() != q.num_voters()) return false;
    if (!q.contains(x) || !q.contains(y) || !subset_of(q.candidates(), p.candidates())) return false;
    if (!same_pair_restriction(p, q, x, y)) return false;
    const auto mp = margins(p);
    const auto mq = margins(q);
    const auto& qc = q.candidates();
    for (std::size_t u = 0; u < qc.size(); ++u) {
        for (std::size_t v = 0; v < qc.size(); ++v) {
            if (u == v || mq(u, v) <= 0) continue;
            if ((qc[u] == x && qc[v] == y) || (qc[u] == y && qc[v] == x)) continue;
            if (mp(*p.find(qc[u]), *p.find(qc[v])) < mq(u, v)) return false;
        }
    }
    return true;
}

bool modified_iia_related(const Profile& p, const Profile& q, const Candidate& x, const Candidate& y,
                          BetweenMode mode) {
    if (x == y) throw Error("between-set relatedness needs two distinct candidates");
    if (!same_pair_restriction(p, q, x, y)) return false;
    const int px = *p.find(x), py = *p.find(y), qx = *q.find(x), qy = *q.find(y);
    for (std::size_t i = 0; i < p.num_voters(); ++i) {
        const auto a = between(p, i, px, py);
        const auto b = between(q, i, qx, qy);
        if (mode == BetweenMode::modified ? a != b : a.size() != b.size()) return false;
    }
    return true;
}

bool instance_violates(AxiomId axiom, const Vccr& f, const Instance& w) {
    const auto& ps = w.profiles;
    const auto& cs = w.candidates;
    auto need = [&](std::size_t profiles, std::size_t candidates) {
        return ps.size() == profiles && cs.size() == candidates;
    };
    auto pair_ok = [&](std::size_t k) {
        // Distinct x, y present in every listed profile, up to profile k.
        if (cs.size() < 2 || cs[0] == cs[1]) return false;
        for (std::size_t i = 0; i < k && i < ps.size(); ++i)
            if (!ps[i].contains(cs[0]) || !ps[i].contains(cs[1])) return false;
        return true;
    };

    switch (axiom) {
        case AxiomId::anonymity: {
            if (!need(2, 2) || !pair_ok(2) || !is_voter_swap(ps[0], ps[1])) return false;
            return f.evaluate(ps[0]).defeats(cs[0], cs[1]) && !f.evaluate(ps[1]).defeats(cs[0], cs[1]);
        }
        case AxiomId::neutrality: {
            if (!need(2, 4) || !pair_ok(2)) return false;
            if (!ps[0].contains(cs[2]) || !ps[0].contains(cs[3]) || cs[2] == cs[3]) return false;
            if (swap_candidates(ps[0], cs[0], cs[1]) != ps[1]) return false;
            auto sigma = [&](const Candidate& c) { return c == cs[0] ? cs[1] : c == cs[1] ? cs[0] : c; };
            return f.evaluate(ps[0]).defeats(cs[2], cs[3]) != f.evaluate(ps[1]).defeats(sigma(cs[2]), sigma(cs[3]));
        }
        case AxiomId::availability: {
            if (ps.size() != 1) return false;
            return f.evaluate(ps[0]).undefeated().empty();
        }
        case AxiomId::upward_homogeneity: {
            if (!need(2, 2) || !pair_ok(2) || replicate(ps[0], 2) != ps[1]) return false;
            return f.evaluate(ps[0]).defeats(cs[0], cs[1]) && !f.evaluate(ps[1]).defeats(cs[0], cs[1]);
        }
        case AxiomId::monotonicity:
        case AxiomId::monotonicity_two_candidate: {
            if (!need(2, 2) || !pair_ok(2) || !is_single_lift(ps[0], ps[1], cs[0])) return false;
            if (axiom == AxiomId::monotonicity_two_candidate && ps[0].num_candidates() != 2) return false;
            return f.evaluate(ps[0]).defeats(cs[0], cs[1]) && !f.evaluate(ps[1]).defeats(cs[0], cs[1]);
        }
        case AxiomId::neutral_reversal_up:
        case AxiomId::neutral_reversal_down: {
            if (!need(2, 2) || !pair_ok(2) || !is_reversed_extension(ps[0], ps[1])) return false;
            const bool before = f.evaluate(ps[0]).defeats(cs[0], cs[1]);
            const bool after = f.evaluate(ps[1]).defeats(cs[0], cs[1]);
            return axiom == AxiomId::neutral_reversal_up ? before && !after : after && !before;
        }
        case AxiomId::coherent_iia: {
            if (!need(2, 2) || !pair_ok(2) || !coherent_iia_related(ps[0], ps[1], cs[0], cs[1])) return false;
            return f.evaluate(ps[0]).defeats(cs[0], cs[1]) && !f.evaluate(ps[1]).defeats(cs[0], cs[1]);
        }
        case AxiomId::weak_iia: {
            if (!need(2, 2) || !pair_ok(2) || ps[0].candidates() != ps[1].candidates()) return false;
            if (!same_pair_restriction(ps[0], ps[1], cs[0], cs[1])) return false;
            return f.evaluate(ps[1]).defeats(cs[0], cs[1]) && f.evaluate(ps[0]).defeats(cs[1], cs[0]);
        }
        case AxiomId::fiia:
        case AxiomId::viia: {
            if (!need(2, 2) || !pair_ok(2)) return false;
            if (axiom == AxiomId::fiia && ps[0].candidates() != ps[1].candidates()) return false;
            if (!same_pair_restriction(ps[0], ps[1], cs[0], cs[1])) return false;
            return f.evaluate(ps[0]).defeats(cs[0], cs[1]) != f.evaluate(ps[1]).defeats(cs[0], cs[1]);
        }
        case AxiomId::modified_iia:
        case AxiomId::intensity_iia: {
            if (!need(2, 2) || !pair_ok(2)) return false;
            const auto mode = axiom == AxiomId::modified_iia ? BetweenMode::modified : BetweenMode::intensity;
            if (!modified_iia_related(ps[0], ps[1], cs[0], cs[1], mode)) return false;
            return f.evaluate(ps[0]).defeats(cs[0], cs[1]) != f.evaluate(ps[1]).defeats(cs[0], cs[1]);
        }
        case AxiomId::pareto: {
            if (!need(1, 2) || !pair_ok(1)) return false;
            const int x = ps[0].index_of(cs[0]), y = ps[0].index_of(cs[1]);
            for (const auto& r : ps[0].rankings())
                if (!ranks_above(r, x, y)) return false;
            return !f.evaluate(ps[0]).defeats(cs[0], cs[1]);
        }
        case AxiomId::majority_defeat: {
            if (!need(1, 2) || !pair_ok(1)) return false;
            return f.evaluate(ps[0]).defeats(cs[0], cs[1]) && margin(ps[0], cs[0], cs[1]) <= 0;
        }
        case AxiomId::condorcet_consistency: {
            if (!need(1, 1) || condorcet_winner(ps[0]) != cs[0]) return false;
            return f.evaluate(ps[0]).undefeated() != std::vector<Candidate>{cs[0]};
        }
        case AxiomId::binary_majoritarianism: {
            if (!need(1, 2) || !pair_ok(1) || ps[0].num_candidates() != 2) return false;
            return f.evaluate(ps[0]).defeats(cs[0], cs[1]) != (margin(ps[0], cs[0], cs[1]) > 0);
        }
        case AxiomId::immunity_to_spoilers:
        case AxiomId::strong_stability: {
            // candidates [a, b]; profiles [P, P without b]
            if (!need(2, 2) || !pair_ok(1) || without(ps[0], cs[1]) != ps[1]) return false;
            const auto& a = cs[0];
            const auto& b = cs[1];
            const auto full = f.evaluate(ps[0]);
            if (defeated(f.evaluate(ps[1]), a) || !defeated(full, a)) return false;
            const int m = margin(ps[0], a, b);
            if (axiom == AxiomId::immunity_to_spoilers) return m > 0 && defeated(full, b);
            return m >= 0;
        }
        case AxiomId::local_alpha:
        case AxiomId::global_alpha:
        case AxiomId::alpha_bar: {
            if (!need(1, 1)) return false;
            const auto& p = ps[0];
            const auto z = sorted_copy(w.inner_set);
            const auto y = axiom == AxiomId::alpha_bar ? p.candidates() : sorted_copy(w.outer_set);
            if (!valid_subset(z, p) || !valid_subset(y, p) || !subset_of(z, y) || !contains(z, cs[0])) return false;
            std::vector<Candidate> big, small;
            if (axiom == AxiomId::global_alpha) {
                const auto d = f.evaluate(p);
                big = unbeaten_within(d, y);
                small = unbeaten_within(d, z);
            } else {
                big = f.evaluate(restrict_to(p, y)).undefeated();
                small = f.evaluate(restrict_to(p, z)).undefeated();
            }
            return contains(big, cs[0]) && !contains(small, cs[0]);
        }
        case AxiomId::acyclicity: {
            if (ps.size() != 1 || cs.size() < 2) return false;
            const auto d = f.evaluate(ps[0]);
            auto sorted = sorted_copy(cs);
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
            for (std::size_t i = 0; i < cs.size(); ++i)
                if (!ps[0].contains(cs[i]) || !d.defeats(cs[i], cs[(i + 1) % cs.size()])) return false;
            return true;
        }
    }
    return false;
}

namespace {

struct ProfileLess {
    bool operator()(const Profile& a, const Profile& b) const {
        if (a.candidates() != b.candidates()) return a.candidates() < b.candidates();
        return a.rankings() < b.rankings();
    }
};

// Every profile with a fixed candidate set and voter count, with defeats.
struct Space {
    std::vector<Profile> profiles;
    std::vector<DefeatRelation> defeats;
};

class Scanner {
public:
    Scanner(AxiomId axiom, const Vccr& f, const ProfileDomain& domain) : axiom_(axiom), f_(f), domain_(domain) {
        verdict_.axiom = axiom;
        verdict_.method = f.name;
        verdict_.domain = domain.summary();
    }

    AxiomVerdict run() {
        try {
            domain_.validate();
            dispatch();
        } catch (const BudgetExceeded& e) {
            verdict_.status = VerdictStatus::budget_exceeded;
            verdict_.witness.reset();
            verdict_.message = e.what();
        }
        return verdict_;
    }

private:
    // Records a violation after confirming it with the standalone predicate.
    bool found(Instance instance) {
        if (!instance_violates(axiom_, f_, instance))
            throw std::logic_error("scanner reported an instance the predicate rejects for " +
                                   std::string(axiom_name(axiom_)));
        verdict_.status = VerdictStatus::counterexample;
        verdict_.witness = std::move(instance);
        return false;
    }

    bool visit(const ProfileDomain& d, const std::function<bool(const Profile&, const DefeatRelation&)>& fn) {
        bool go = true;
        for_each_profile(d, [&](const Profile& p) {
            ++verdict_.profiles;
            go = fn(p, f_.evaluate(p));
            return go;
        });
        return go;
    }

    void charge(std::uint64_t extra) {
        std::uint64_t total = count_profiles(domain_);
        total = total > UINT64_MAX - extra ? UINT64_MAX : total + extra;
        if (total > domain_.budget)
            throw BudgetExceeded("scan of " + std::string(axiom_name(axiom_)) + " over " + domain_.summary() +
                                 " needs " + (total == UINT64_MAX ? std::string("more than 2^64") : std::to_string(total)) +
                                 " profiles, over the budget of " + std::to_string(domain_.budget));
    }

    std::vector<ProfileDomain> two_candidate_domains() const {
        std::vector<ProfileDomain> out;
        for (const auto& s : subsets(domain_.candidates, 2))
            if (s.size() == 2) out.push_back(with_candidates(domain_, s));
        return out;
    }

    void dispatch() {
        switch (axiom_) {
            case AxiomId::anonymity: return scan_anonymity();
            case AxiomId::neutrality: return scan_neutrality();
            case AxiomId::availability:
            case AxiomId::pareto:
            case AxiomId::majority_defeat:
            case AxiomId::condorcet_consistency:
            case AxiomId::acyclicity: return scan_single();
            case AxiomId::upward_homogeneity: return scan_homogeneity();
            case AxiomId::monotonicity: scan_monotonicity(domain_); return;
            case AxiomId::monotonicity_two_candidate: {
                for (const auto& d : two_candidate_domains())
                    if (!scan_monotonicity(d)) return;
                return;
            }
            case AxiomId::binary_majoritarianism: {
                for (const auto& d : two_candidate_domains())
                    if (!visit(d, [&](const Profile& p, const DefeatRelation& dp) { return single(p, dp); })) return;
                return;
            }
            case AxiomId::neutral_reversal_up:
            case AxiomId::neutral_reversal_down: return scan_reversal();
            case AxiomId::immunity_to_spoilers:
            case AxiomId::strong_stability: return scan_spoilers();
            case AxiomId::local_alpha:
            case AxiomId::global_alpha:
            case AxiomId::alpha_bar: return scan_alpha();
            case AxiomId::coherent_iia:
            case AxiomId::weak_iia:
            case AxiomId::fiia:
            case AxiomId::viia:
            case AxiomId::modified_iia:
            case AxiomId::intensity_iia:
                if (domain_.mode == DomainMode::random)
                    scan_pairs_random();
                else
                    scan_pairs_exhaustive();
                return;
        }
    }

    // ---- single-profile axioms ----

    bool single(const Profile& p, const DefeatRelation& d) {
        const auto& c = p.candidates();
        const auto n = c.size();
        switch (axiom_) {
            case AxiomId::availability:
                ++verdict_.instances;
                if (d.undefeated().empty()) return found({{p}, {}, {}, {}, "no undefeated candidate"});
                return true;
            case AxiomId::condorcet_consistency: {
                ++verdict_.instances;
                const auto w = condorcet_winner(p);
                if (w && d.undefeated() != std::vector<Candidate>{*w})
                    return found({{p}, {*w}, {}, {}, "Condorcet winner is not the unique undefeated candidate"});
                return true;
            }
            case AxiomId::acyclicity: {
                ++verdict_.instances;
                if (auto cyc = find_cycle(d)) {
                    std::vector<Candidate> names;
                    for (int i : *cyc) names.push_back(c[i]);
                    return found({{p}, names, {}, {}, "defeat cycle"});
                }
                return true;
            }
            default: break;
        }
        const auto m = margins(p);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (x == y) continue;
                ++verdict_.instances;
                bool bad = false;
                if (axiom_ == AxiomId::pareto) {
                    bad = m(x, y) == static_cast<int>(p.num_voters()) && !d.defeats(x, y);
                } else if (axiom_ == AxiomId::majority_defeat) {
                    bad = d.defeats(x, y) && m(x, y) <= 0;
                } else if (axiom_ == AxiomId::binary_majoritarianism) {
                    bad = d.defeats(x, y) != (m(x, y) > 0);
                }
                if (bad) return found({{p}, {c[x], c[y]}, {}, {}, ""});
            }
        }
        return true;
    }

    void scan_single() {
        visit(domain_, [&](const Profile& p, const DefeatRelation& d) { return single(p, d); });
    }

    // ---- transform axioms ----

    void scan_anonymity() {
        auto d = domain_;
        if (d.mode == DomainMode::exhaustive_multiset) d.mode = DomainMode::exhaustive_sequence;
        visit(d, [&](const Profile& p, const DefeatRelation& dp) {
            const auto v = p.num_voters();
            for (std::size_t i = 0; i < v; ++i) {
                for (std::size_t j = i + 1; j < v; ++j) {
                    if (p.ranking(i) == p.ranking(j)) continue;
                    std::vector<std::size_t> targets(v);
                    for (std::size_t k = 0; k < v; ++k) targets[k] = k;
                    std::swap(targets[i], targets[j]);
                    const auto q = permute_voters(p, targets);
                    const auto dq = f_.evaluate(q);
                    if (!compare_all(p, q, dp, dq, voter_label(i) + " and " + voter_label(j) + " swapped")) return false;
                }
            }
            return true;
        });
    }

    // x defeats y in P but not in Q, over every ordered pair.
    bool compare_all(const Profile& p, const Profile& q, const DefeatRelation& dp, const DefeatRelation& dq,
                     const std::string& note) {
        const auto n = p.num_candidates();
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (x == y) continue;
                ++verdict_.instances;
                if (dp.defeats(x, y) && !dq.defeats(x, y))
                    return found({{p, q}, {p.candidates()[x], p.candidates()[y]}, {}, {}, note});
            }
        }
        return true;
    }

    void scan_neutrality() {
        visit(domain_, [&](const Profile& p, const DefeatRelation& dp) {
            const auto& c = p.candidates();
            const auto n = c.size();
            for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t y = x + 1; y < n; ++y) {
                    const auto q = swap_candidates(p, c[x], c[y]);
                    const auto dq = f_.evaluate(q);
                    auto sigma = [&](std::size_t i) { return i == x ? y : i == y ? x : i; };
                    for (std::size_t u = 0; u < n; ++u) {
                        for (std::size_t v = 0; v < n; ++v) {
                            if (u == v) continue;
                            ++verdict_.instances;
                            if (dp.defeats(u, v) != dq.defeats(sigma(u), sigma(v)))
                                return found({{p, q}, {c[x], c[y], c[u], c[v]}, {}, {}, c[x] + " and " + c[y] + " swapped"});
                        }
                    }
                }
            }
            return true;
        });
    }

    void scan_homogeneity() {
        visit(domain_, [&](const Profile& p, const DefeatRelation& dp) {
            const auto q = replicate(p, 2);
            return compare_all(p, q, dp, f_.evaluate(q), "every ballot doubled");
        });
    }

    bool scan_monotonicity(const ProfileDomain& d) {
        return visit(d, [&](const Profile& p, const DefeatRelation& dp) {
            const auto& c = p.candidates();
            const auto n = c.size();
            for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t y = 0; y < n; ++y) {
                    if (x == y || !dp.defeats(x, y)) continue;
                    for (std::size_t i = 0; i < p.num_voters(); ++i) {
                        auto rankings = p.rankings();
                        auto& r = rankings[i];
                        const auto at = std::find(r.begin(), r.end(), static_cast<int>(x)) - r.begin();
                        if (at == 0) continue;
                        std::swap(r[at - 1], r[at]);
                        const Profile q(c, std::move(rankings));
                        ++verdict_.instances;
                        if (!f_.evaluate(q).defeats(x, y))
                            return found({{p, q}, {c[x], c[y]}, {}, {}, voter_label(i) + " lifts " + c[x]});
                    }
                }
            }
            return true;
        });
    }

    void scan_reversal() {
        const bool up = axiom_ == AxiomId::neutral_reversal_up;
        visit(domain_, [&](const Profile& p, const DefeatRelation& dp) {
            for (const auto& r : all_rankings(p.num_candidates())) {
                std::vector<Candidate> ballot;
                for (int i : r) ballot.push_back(p.candidates()[i]);
                const auto q = add_reversed_pair(p, ballot);
                const auto dq = f_.evaluate(q);
                std::string note = "reversed pair added, first ballot";
                for (const auto& b : ballot) note += " " + b;
                if (!(up ? compare_all(p, q, dp, dq, note) : compare_down(p, q, dp, dq, note))) return false;
            }
            return true;
        });
    }

    bool compare_down(const Profile& p, const Profile& q, const DefeatRelation& dp, const DefeatRelation& dq,
                      const std::string& note) {
        const auto n = p.num_candidates();
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (x == y) continue;
                ++verdict_.instances;
                if (dq.defeats(x, y) && !dp.defeats(x, y))
                    return found({{p, q}, {p.candidates()[x], p.candidates()[y]}, {}, {}, note});
            }
        }
        return true;
    }

    void scan_spoilers() {
        const bool immunity = axiom_ == AxiomId::immunity_to_spoilers;
        visit(domain_, [&](const Profile& p, const DefeatRelation& dp) {
            const auto& c = p.candidates();
            if (c.size() < 2) return true;
            const auto m = margins(p);
            for (std::size_t b = 0; b < c.size(); ++b) {
                const auto q = without(p, c[b]);
                const auto dq = f_.evaluate(q);
                for (std::size_t a = 0; a < c.size(); ++a) {
                    if (a == b) continue;
                    ++verdict_.instances;
                    if (defeated(dq, c[a]) || !defeated(dp, c[a])) continue;
                    const bool premise = immunity ? m(a, b) > 0 && defeated(dp, c[b]) : m(b, a) <= 0;
                    if (premise) return found({{p, q}, {c[a], c[b]}, {}, {}, c[b] + " removed"});
                }
            }
            return true;
        });
    }

    void scan_alpha() {
        visit(domain_, [&](const Profile& p, const DefeatRelation& dp) {
            const auto all = subsets(p.candidates(), 1);
            std::map<std::vector<Candidate>, std::vector<Candidate>> local;
            for (const auto& s : all) local[s] = f_.evaluate(restrict_to(p, s)).undefeated();
            auto choice = [&](const std::vector<Candidate>& s) {
                return axiom_ == AxiomId::global_alpha ? unbeaten_within(dp, s) : local[s];
            };
            const auto outers = axiom_ == AxiomId::alpha_bar ? std::vector<std::vector<Candidate>>{p.candidates()} : all;
            for (const auto& y : outers) {
                const auto big = choice(y);
                for (const auto& z : all) {
                    if (z == y || !subset_of(z, y)) continue;
                    const auto small = choice(z);
                    for (const auto& w : z) {
                        ++verdict_.instances;
                        if (contains(big, w) && !contains(small, w))
                            return found({{p}, {w}, axiom_ == AxiomId::alpha_bar ? std::vector<Candidate>{} : y, z, ""});
                    }
                }
            }
            return true;
        });
    }

    // ---- pair axioms ----

    bool variable_candidates() const { return axiom_ == AxiomId::coherent_iia || axiom_ == AxiomId::viia; }

    // Does (P, Q) violate the pair axiom at (x, y)? Candidates are names.
    bool pair_violation(const Profile& p, const DefeatRelation& dp, const Profile& q, const DefeatRelation& dq,
                        const Candidate& x, const Candidate& y) {
        switch (axiom_) {
            case AxiomId::coherent_iia:
                return dp.defeats(x, y) && !dq.defeats(x, y) && coherent_iia_related(p, q, x, y);
            case AxiomId::weak_iia:
                return dq.defeats(x, y) && dp.defeats(y, x) && same_pair_restriction(p, q, x, y);
            case AxiomId::fiia:
            case AxiomId::viia:
                return dp.defeats(x, y) != dq.defeats(x, y) && same_pair_restriction(p, q, x, y);
            case AxiomId::modified_iia:
                return dp.defeats(x, y) != dq.defeats(x, y) && modified_iia_related(p, q, x, y, BetweenMode::modified);
            case AxiomId::intensity_iia:
                return dp.defeats(x, y) != dq.defeats(x, y) && modified_iia_related(p, q, x, y, BetweenMode::intensity);
            default: return false;
        }
    }

    bool compare_pair(const Profile& p, const DefeatRelation& dp, const Profile& q, const DefeatRelation& dq,
                      const std::string& note) {
        const auto& s = q.candidates();
        for (const auto& x : s) {
            for (const auto& y : s) {
                if (x == y) continue;
                ++verdict_.instances;
                if (pair_violation(p, dp, q, dq, x, y)) return found({{p, q}, {x, y}, {}, {}, note});
            }
        }
        return true;
    }

    const Space& space(const std::vector<Candidate>& s, std::size_t voters) {
        auto key = std::make_pair(s, voters);
        auto it = spaces_.find(key);
        if (it != spaces_.end()) return it->second;
        ProfileDomain d;
        d.candidates = s;
        d.min_voters = d.max_voters = voters;
        d.mode = DomainMode::exhaustive_sequence;
        d.budget = UINT64_MAX;
        Space sp;
        for_each_profile(d, [&](const Profile& q) {
            ++verdict_.profiles;
            sp.profiles.push_back(q);
            sp.defeats.push_back(f_.evaluate(q));
            return true;
        });
        return spaces_.emplace(key, std::move(sp)).first->second;
    }

    std::vector<std::vector<Candidate>> partner_sets() const {
        if (!variable_candidates()) return {sorted_copy(domain_.candidates)};
        return subsets(domain_.candidates, 2);
    }

    void scan_pairs_exhaustive() {
        // Budget: the domain plus every comparison space it pairs against.
        std::uint64_t extra = 0;
        for (const auto& s : partner_sets()) {
            ProfileDomain d = domain_;
            d.candidates = s;
            d.mode = DomainMode::exhaustive_sequence;
            const auto n = count_profiles(d);
            extra = extra > UINT64_MAX - n ? UINT64_MAX : extra + n;
        }
        charge(extra);
        const auto sets = partner_sets();
        visit(domain_, [&](const Profile& p, const DefeatRelation& dp) {
            for (const auto& s : sets) {
                const auto& sp = space(s, p.num_voters());
                for (std::size_t k = 0; k < sp.profiles.size(); ++k)
                    if (!compare_pair(p, dp, sp.profiles[k], sp.defeats[k], "")) return false;
            }
            return true;
        });
    }

    // One random ballot over `set` keeping voter i's x-vs-y order and, per
    // axiom, the between-set or between-count.
    Ranking partner_ballot(Rng& rng, const Profile& p, std::size_t i, const std::vector<Candidate>& set,
                           const Candidate& x, const Candidate& y) {
        const int px = p.index_of(x), py = p.index_of(y);
        const bool x_first = ranks_above(p.ranking(i), px, py);
        std::vector<Candidate> others;
        for (const auto& c : set)
            if (c != x && c != y) others.push_back(c);
        std::vector<Candidate> inside;
        if (axiom_ == AxiomId::modified_iia) {
            inside = between(p, i, px, py);
        } else if (axiom_ == AxiomId::intensity_iia) {
            rng.shuffle(others);
            const auto k = between(p, i, px, py).size();
            inside.assign(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(k));
        }
        std::vector<Candidate> outside;
        for (const auto& c : others)
            if (!contains(inside, c)) outside.push_back(c);
        rng.shuffle(outside);
        rng.shuffle(inside);
        std::vector<Candidate> block{x_first ? x : y};
        block.insert(block.end(), inside.begin(), inside.end());
        block.push_back(x_first ? y : x);
        if (axiom_ != AxiomId::modified_iia && axiom_ != AxiomId::intensity_iia) {
            // Order only: scatter everything, then restore x before/after y.
            std::vector<Candidate> all = outside;
            all.push_back(x);
            all.push_back(y);
            rng.shuffle(all);
            auto ix = std::find(all.begin(), all.end(), x);
            auto iy = std::find(all.begin(), all.end(), y);
            if ((ix < iy) != x_first) std::iter_swap(ix, iy);
            return to_ranking(set, all);
        }
        const auto at = static_cast<std::ptrdiff_t>(rng.below(outside.size() + 1));
        std::vector<Candidate> all(outside.begin(), outside.begin() + at);
        all.insert(all.end(), block.begin(), block.end());
        all.insert(all.end(), outside.begin() + at, outside.end());
        return to_ranking(set, all);
    }

    static Ranking to_ranking(const std::vector<Candidate>& set, const std::vector<Candidate>& order) {
        Ranking r;
        for (const auto& c : order) r.push_back(static_cast<int>(std::lower_bound(set.begin(), set.end(), c) - set.begin()));
        return r;
    }

    void scan_pairs_random() {
        const auto n = domain_.candidates.size();
        const std::uint64_t per = 1 + kRandomPartners * n * (n - 1) / 2 + (variable_candidates() ? (1ULL << n) : 0);
        const auto samples = domain_.samples;
        if (samples > domain_.budget / per)
            throw BudgetExceeded("random scan of " + std::string(axiom_name(axiom_)) + " needs about " +
                                 std::to_string(per) + " profiles per sample, over the budget of " +
                                 std::to_string(domain_.budget));
        Rng rng(domain_.seed ^ 0x9e3779b97f4a7c15ULL);
        visit(domain_, [&](const Profile& p, const DefeatRelation& dp) {
            const auto& c = p.candidates();
            if (variable_candidates()) {
                for (const auto& s : subsets(c, 2)) {
                    const auto q = restrict_to(p, s);
                    ++verdict_.profiles;
                    if (!compare_pair(p, dp, q, f_.evaluate(q), "restriction")) return false;
                }
            }
            for (std::size_t a = 0; a < c.size(); ++a) {
                for (std::size_t b = a + 1; b < c.size(); ++b) {
                    for (std::size_t k = 0; k < kRandomPartners; ++k) {
                        auto set = c;
                        if (variable_candidates()) {
                            std::vector<Candidate> keep{c[a], c[b]};
                            for (std::size_t z = 0; z < c.size(); ++z)
                                if (z != a && z != b && rng.below(2)) keep.push_back(c[z]);
                            set = sorted_copy(keep);
                        }
                        std::vector<Ranking> rs;
                        for (std::size_t i = 0; i < p.num_voters(); ++i)
                            rs.push_back(partner_ballot(rng, p, i, set, c[a], c[b]));
                        const Profile q(set, std::move(rs));
                        ++verdict_.profiles;
                        if (!compare_pair(p, dp, q, f_.evaluate(q), "sampled partner")) return false;
                    }
                }
            }
            return true;
        });
    }

    AxiomId axiom_;
    const Vccr& f_;
    const ProfileDomain& domain_;
    AxiomVerdict verdict_;
    std::map<std::pair<std::vector<Candidate>, std::size_t>, Space> spaces_;
};

}  // namespace

AxiomVerdict check_axiom(AxiomId axiom, const Vccr& f, const ProfileDomain& domain) {
    return Scanner(axiom, f, domain).run();
}

AxiomVerdict check_axiom(AxiomId axiom, MethodId method, const ProfileDomain& domain) {
    return check_axiom(axiom, vccr(method), domain);
}

AxiomVerdict check_pairs(AxiomId axiom, const Vccr& f, const std::vector<std::pair<Profile, Profile>>& pairs) {
    if (!is_pair_axiom(axiom)) throw Error(std::string(axiom_name(axiom)) + " is not checked on profile pairs");
    AxiomVerdict verdict;
    verdict.axiom = axiom;
    verdict.method = f.name;
    verdict.domain = std::to_string(pairs.size()) + " supplied pair(s)";
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [p, q] = pairs[k];
        verdict.profiles += 2;
        for (const auto& x : q.candidates()) {
            for (const auto& y : q.candidates()) {
                if (x == y) continue;
                ++verdict.instances;
                Instance w{{p, q}, {x, y}, {}, {}, "supplied pair " + std::to_string(k + 1)};
                if (instance_violates(axiom, f, w)) {
                    verdict.status = VerdictStatus::counterexample;
                    verdict.witness = std::move(w);
                    return verdict;
                }
            }
        }
    }
    return verdict;
}

}  // namespace splitcycle
