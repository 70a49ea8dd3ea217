#include "splitcycle/domain.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "splitcycle/errors.hpp"
#include "splitcycle/rng.hpp"

namespace splitcycle {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f = sat_mul(f, i);
    return f;
}

// C(k + v - 1, v): multisets of size v drawn from k kinds.
std::uint64_t multichoose(std::uint64_t k, std::uint64_t v) {
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= v; ++i) {
        c = c * (k + i - 1) / i;
        if (c > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(c);
}

std::vector<Candidate> sorted_candidates(const ProfileDomain& d) {
    auto c = d.candidates;
    std::sort(c.begin(), c.end());
    return c;
}

}  // namespace

std::string_view mode_name(DomainMode mode) {
    switch (mode) {
        case DomainMode::exhaustive_multiset: return "exhaustive-multiset";
        case DomainMode::exhaustive_sequence: return "exhaustive-sequence";
        case DomainMode::random: return "random";
    }
    return "?";
}

DomainMode parse_mode(std::string_view name) {
    if (name == "exhaustive-multiset") return DomainMode::exhaustive_multiset;
    if (name == "exhaustive-sequence") return DomainMode::exhaustive_sequence;
    if (name == "random") return DomainMode::random;
    throw Error("unknown domain mode '" + std::string(name) + "'");
}

void ProfileDomain::validate() const {
    if (candidates.empty()) throw Error("domain needs at least one candidate");
    auto c = sorted_candidates(*this);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!is_valid_token(c[i])) throw Error("invalid candidate token '" + c[i] + "'");
        if (i > 0 && c[i] == c[i - 1]) throw Error("duplicate candidate '" + c[i] + "' in domain");
    }
    if (min_voters < 1) throw Error("domain needs at least one voter");
    if (min_voters > max_voters) throw Error("domain voter range is empty");
    if (mode == DomainMode::random && samples == 0) throw Error("random domain needs a positive sample count");
}

std::string ProfileDomain::summary() const {
    std::ostringstream out;
    out << mode_name(mode) << " {";
    auto c = sorted_candidates(*this);
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << "} voters " << min_voters << ".." << max_voters;
    if (mode == DomainMode::random) out << " samples " << samples << " seed " << seed;
    return out.str();
}

std::uint64_t count_profiles(const ProfileDomain& domain) {
    domain.validate();
    if (domain.mode == DomainMode::random) return domain.samples;
    const std::uint64_t k = factorial(domain.candidates.size());
    std::uint64_t total = 0;
    for (std::size_t v = domain.min_voters; v <= domain.max_voters; ++v) {
        std::uint64_t here = 1;
        if (domain.mode == DomainMode::exhaustive_sequence) {
            for (std::size_t i = 0; i < v && here != kSaturated; ++i) here = sat_mul(here, k);
        } else {
            here = k == kSaturated ? kSaturated : multichoose(k, v);
        }
        total = sat_add(total, here);
        if (total == kSaturated) break;
    }
    return total;
}

void require_within_budget(const ProfileDomain& domain) {
    const auto n = count_profiles(domain);
    if (n > domain.budget) {
        std::ostringstream msg;
        msg << "domain " << domain.summary() << " has ";
        if (n == kSaturated)
            msg << "more than 2^64";
        else
            msg << n;
        msg << " profiles, over the budget of " << domain.budget;
        throw BudgetExceeded(msg.str());
    }
}

void for_each_profile(const ProfileDomain& domain, const std::function<bool(const Profile&)>& visit) {
    require_within_budget(domain);
    const auto candidates = sorted_candidates(domain);
    const auto rankings = all_rankings(candidates.size());
    const std::size_t k = rankings.size();

    auto build = [&](const std::vector<std::size_t>& digits) {
        std::vector<Ranking> rs;
        rs.reserve(digits.size());
        for (auto d : digits) rs.push_back(rankings[d]);
        return Profile(candidates, std::move(rs));
    };

    if (domain.mode == DomainMode::random) {
        Rng rng(domain.seed);
        Ranking base(candidates.size());
        for (std::size_t i = 0; i < base.size(); ++i) base[i] = static_cast<int>(i);
        for (std::uint64_t s = 0; s < domain.samples; ++s) {
            const auto v = rng.between(domain.min_voters, domain.max_voters);
            std::vector<Ranking> rs;
            rs.reserve(v);
            for (std::uint64_t i = 0; i < v; ++i) {
                Ranking r = base;
                rng.shuffle(r);
                rs.push_back(std::move(r));
            }
            if (!visit(Profile(candidates, std::move(rs)))) return;
        }
        return;
    }

    const bool multiset = domain.mode == DomainMode::exhaustive_multiset;
    for (std::size_t v = domain.min_voters; v <= domain.max_voters; ++v) {
        std::vector<std::size_t> digits(v, 0);
        while (true) {
            if (!visit(build(digits))) return;
            // Advance the odometer; the last voter is the fastest digit.
            std::size_t i = v;
            while (i > 0 && digits[i - 1] + 1 == k) --i;
            if (i == 0) break;
            ++digits[i - 1];
            const auto reset = multiset ? digits[i - 1] : 0;
            for (std::size_t j = i; j < v; ++j) digits[j] = reset;
        }
    }
}

std::vector<Profile> enumerate_profiles(const ProfileDomain& domain) {
    std::vector<Profile> out;
    for_each_profile(domain, [&](const Profile& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::pair<std::size_t, std::size_t> parse_voter_range(std::string_view text) {
    auto number = [&](std::string_view s) {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw Error("malformed voter range '" + std::string(text) + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = number(text);
        return {v, v};
    }
    const auto lo = number(text.substr(0, dots));
    const auto hi = number(text.substr(dots + 2));
    if (lo > hi) throw Error("voter range '" + std::string(text) + "' is empty");
    return {lo, hi};
}

ProfileDomain with_candidates(ProfileDomain domain, std::vector<Candidate> candidates) {
    domain.candidates = std::move(candidates);
    return domain;
}

std::vector<std::vector<Candidate>> subsets(const std::vector<Candidate>& items, std::size_t min_size) {
    auto sorted = items;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    std::vector<std::vector<Candidate>> out;
    for (std::size_t size = std::max<std::size_t>(min_size, 1); size <= n; ++size) {
        std::vector<char> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), 1);
        // prev_permutation over a leading-ones mask walks combinations lexicographically.
        do {
            std::vector<Candidate> s;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i]) s.push_back(sorted[i]);
            out.push_back(std::move(s));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

}  // namespace splitcycle
