#include "splitcycle/ballots.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "splitcycle/errors.hpp"

namespace splitcycle {

namespace {

constexpr std::size_t kMaxVoters = 10'000'000;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

bool is_valid_token(std::string_view token) {
    if (token.empty()) return false;
    return std::all_of(token.begin(), token.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

Profile::Profile(std::vector<Candidate> candidates, const std::vector<std::vector<Candidate>>& ballots)
    : candidates_(std::move(candidates)) {
    std::sort(candidates_.begin(), candidates_.end());
    rankings_.reserve(ballots.size());
    for (const auto& b : ballots) {
        Ranking r;
        r.reserve(b.size());
        for (const auto& c : b) {
            const auto it = std::lower_bound(candidates_.begin(), candidates_.end(), c);
            if (it == candidates_.end() || *it != c) throw Error("unknown candidate '" + c + "' in ballot");
            r.push_back(static_cast<int>(it - candidates_.begin()));
        }
        rankings_.push_back(std::move(r));
    }
    validate();
}

Profile::Profile(std::vector<Candidate> candidates, std::vector<Ranking> rankings)
    : candidates_(std::move(candidates)), rankings_(std::move(rankings)) {
    if (!std::is_sorted(candidates_.begin(), candidates_.end()))
        throw Error("candidate list must be sorted");
    validate();
}

void Profile::validate() const {
    if (candidates_.empty()) throw Error("profile needs at least one candidate");
    if (rankings_.empty()) throw Error("profile needs at least one voter");
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
        if (!is_valid_token(candidates_[i])) throw Error("invalid candidate token '" + candidates_[i] + "'");
        if (i > 0 && candidates_[i] == candidates_[i - 1])
            throw Error("duplicate candidate '" + candidates_[i] + "'");
    }
    const int n = static_cast<int>(candidates_.size());
    std::vector<char> seen(candidates_.size());
    for (const auto& r : rankings_) {
        if (r.size() != candidates_.size()) throw Error("ballot does not rank every candidate exactly once");
        std::fill(seen.begin(), seen.end(), 0);
        for (int c : r) {
            if (c < 0 || c >= n) throw Error("ballot refers to an unknown candidate");
            if (seen[c]) throw Error("duplicate candidate '" + candidates_[c] + "' in ballot");
            seen[c] = 1;
        }
    }
}

std::vector<Candidate> Profile::ballot(std::size_t voter) const {
    std::vector<Candidate> out;
    for (int c : rankings_.at(voter)) out.push_back(candidates_[c]);
    return out;
}

std::optional<int> Profile::find(std::string_view candidate) const {
    const auto it = std::lower_bound(candidates_.begin(), candidates_.end(), candidate);
    if (it == candidates_.end() || *it != candidate) return std::nullopt;
    return static_cast<int>(it - candidates_.begin());
}

int Profile::index_of(std::string_view candidate) const {
    if (auto i = find(candidate)) return *i;
    throw Error("unknown candidate '" + std::string(candidate) + "'");
}

Profile parse_profile(std::string_view text) {
    std::vector<Candidate> declared;
    std::vector<std::vector<Candidate>> ballots;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, "expected ':'");
        const auto head = trim(line.substr(0, colon));
        const auto body = trim(line.substr(colon + 1));

        if (!have_header) {
            if (head != "candidates") throw ParseError(line_no, "first line must be 'candidates:'");
            for (auto tok : split_whitespace(body)) {
                if (!is_valid_token(tok)) throw ParseError(line_no, "invalid candidate token '" + std::string(tok) + "'");
                if (std::find(declared.begin(), declared.end(), tok) != declared.end())
                    throw ParseError(line_no, "candidate '" + std::string(tok) + "' declared twice");
                declared.emplace_back(tok);
            }
            if (declared.empty()) throw ParseError(line_no, "no candidates declared");
            have_header = true;
            continue;
        }

        long long count = 0;
        const auto* first = head.data();
        const auto* last = head.data() + head.size();
        if (head.empty() || head.front() == '+') throw ParseError(line_no, "malformed count");
        auto [ptr, ec] = std::from_chars(first, last, count);
        if (ec != std::errc() || ptr != last) throw ParseError(line_no, "malformed count '" + std::string(head) + "'");
        if (count <= 0) throw ParseError(line_no, "count must be positive");
        if (static_cast<std::size_t>(count) + ballots.size() > kMaxVoters)
            throw ParseError(line_no, "too many voters");

        std::vector<Candidate> ballot;
        std::set<std::string_view> used;
        std::size_t i = 0;
        while (i <= body.size()) {
            auto gt = body.find('>', i);
            if (gt == std::string_view::npos) gt = body.size();
            const auto tok = trim(body.substr(i, gt - i));
            i = gt + 1;
            if (tok.empty()) throw ParseError(line_no, "empty position in ballot");
            if (std::find(declared.begin(), declared.end(), tok) == declared.end())
                throw ParseError(line_no, "unknown candidate '" + std::string(tok) + "'");
            if (!used.insert(tok).second)
                throw ParseError(line_no, "duplicate candidate '" + std::string(tok) + "' in ballot");
            ballot.emplace_back(tok);
        }
        if (ballot.size() != declared.size()) throw ParseError(line_no, "ballot is missing a candidate");
        for (long long k = 0; k < count; ++k) ballots.push_back(ballot);
    }

    if (!have_header) throw ParseError(line_no, "missing 'candidates:' header");
    if (ballots.empty()) throw ParseError(line_no, "no ballots");
    return Profile(std::move(declared), ballots);
}

std::string to_vote_text(const Profile& profile) {
    std::ostringstream out;
    out << "candidates:";
    for (const auto& c : profile.candidates()) out << ' ' << c;
    out << '\n';
    const auto& rs = profile.rankings();
    for (std::size_t i = 0; i < rs.size();) {
        std::size_t j = i;
        while (j < rs.size() && rs[j] == rs[i]) ++j;
        out << (j - i) << ':';
        for (std::size_t k = 0; k < rs[i].size(); ++k)
            out << (k == 0 ? " " : " > ") << profile.candidates()[rs[i][k]];
        out << '\n';
        i = j;
    }
    return out.str();
}

std::vector<std::pair<std::size_t, Ranking>> anonymized(const Profile& profile) {
    std::vector<std::pair<std::size_t, Ranking>> groups;
    for (const auto& r : profile.rankings()) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.second == r; });
        if (it == groups.end())
            groups.emplace_back(1, r);
        else
            ++it->first;
    }
    return groups;
}

Profile restrict_to(const Profile& profile, const std::vector<Candidate>& subset) {
    if (subset.empty()) throw Error("restriction to an empty candidate set");
    std::vector<Candidate> kept = subset;
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) throw Error("restriction set repeats a candidate");

    std::vector<int> new_index(profile.num_candidates(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        auto idx = profile.find(kept[i]);
        if (!idx) throw Error("restriction set is not a subset: '" + kept[i] + "'");
        new_index[*idx] = static_cast<int>(i);
    }

    std::vector<Ranking> rankings;
    rankings.reserve(profile.num_voters());
    for (const auto& r : profile.rankings()) {
        Ranking out;
        out.reserve(kept.size());
        for (int c : r)
            if (new_index[c] >= 0) out.push_back(new_index[c]);
        rankings.push_back(std::move(out));
    }
    return Profile(std::move(kept), std::move(rankings));
}

Profile without(const Profile& profile, const Candidate& removed) {
    std::vector<Candidate> rest;
    for (const auto& c : profile.candidates())
        if (c != removed) rest.push_back(c);
    if (rest.size() == profile.num_candidates()) throw Error("unknown candidate '" + removed + "'");
    return restrict_to(profile, rest);
}

Profile replicate(const Profile& profile, std::size_t copies) {
    if (copies == 0) throw Error("replication factor must be positive");
    if (profile.num_voters() * copies > kMaxVoters) throw Error("replicated profile is too large");
    std::vector<Ranking> rankings;
    rankings.reserve(profile.num_voters() * copies);
    for (const auto& r : profile.rankings())
        for (std::size_t k = 0; k < copies; ++k) rankings.push_back(r);
    return Profile(profile.candidates(), std::move(rankings));
}

Profile add_reversed_pair(const Profile& profile, const std::vector<Candidate>& ballot) {
    if (ballot.size() != profile.num_candidates()) throw Error("ballot does not range over the profile's candidates");
    Ranking r;
    for (const auto& c : ballot) {
        auto idx = profile.find(c);
        if (!idx) throw Error("ballot does not range over the profile's candidates");
        r.push_back(*idx);
    }
    auto rankings = profile.rankings();
    rankings.push_back(r);
    rankings.push_back(reversed(r));
    return Profile(profile.candidates(), std::move(rankings));
}

Profile permute_voters(const Profile& profile, std::span<const std::size_t> targets) {
    const auto n = profile.num_voters();
    if (targets.size() != n) throw Error("voter permutation has the wrong size");
    std::vector<Ranking> rankings(n);
    std::vector<char> hit(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (targets[i] >= n || hit[targets[i]]) throw Error("voter map is not a bijection");
        hit[targets[i]] = 1;
        rankings[targets[i]] = profile.ranking(i);
    }
    return Profile(profile.candidates(), std::move(rankings));
}

Profile permute_candidates(const Profile& profile, const std::map<Candidate, Candidate>& sigma) {
    const auto n = profile.num_candidates();
    if (sigma.size() != n) throw Error("candidate map must cover every candidate");
    // image[i] = index of sigma(candidate i); preimage inverts it.
    std::vector<int> image(n, -1);
    std::vector<int> preimage(n, -1);
    for (const auto& [from, to] : sigma) {
        const int a = profile.index_of(from);
        const int b = profile.index_of(to);
        if (preimage[b] != -1) throw Error("candidate map is not a bijection");
        image[a] = b;
        preimage[b] = a;
    }
    std::vector<Ranking> rankings;
    rankings.reserve(profile.num_voters());
    for (const auto& r : profile.rankings()) {
        Ranking out(r.size());
        for (std::size_t k = 0; k < r.size(); ++k) out[k] = preimage[r[k]];
        rankings.push_back(std::move(out));
    }
    return Profile(profile.candidates(), std::move(rankings));
}

Profile swap_candidates(const Profile& profile, const Candidate& x, const Candidate& y) {
    std::map<Candidate, Candidate> sigma;
    for (const auto& c : profile.candidates()) sigma[c] = c;
    sigma[x] = y;
    sigma[y] = x;
    if (!profile.contains(x) || !profile.contains(y)) throw Error("unknown candidate in swap");
    return permute_candidates(profile, sigma);
}

MarginMatrix margins(const Profile& profile) {
    const auto n = profile.num_candidates();
    MarginMatrix m(n);
    std::vector<int> pos(n);
    for (const auto& r : profile.rankings()) {
        for (std::size_t k = 0; k < n; ++k) pos[r[k]] = static_cast<int>(k);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y) {
                const int d = pos[x] < pos[y] ? 1 : -1;
                m.at(x, y) += d;
                m.at(y, x) -= d;
            }
    }
    return m;
}

int margin(const Profile& profile, std::string_view x, std::string_view y) {
    const int a = profile.index_of(x);
    const int b = profile.index_of(y);
    if (a == b) throw Error("margin of a candidate over itself is undefined");
    int total = 0;
    for (const auto& r : profile.rankings()) {
        for (int c : r) {
            if (c == a) { ++total; break; }
            if (c == b) { --total; break; }
        }
    }
    return total;
}

std::optional<int> condorcet_winner(const MarginMatrix& m) {
    for (std::size_t x = 0; x < m.size(); ++x) {
        bool beats_all = true;
        for (std::size_t y = 0; y < m.size() && beats_all; ++y)
            if (y != x && m(x, y) <= 0) beats_all = false;
        if (beats_all) return static_cast<int>(x);
    }
    return std::nullopt;
}

std::optional<Candidate> condorcet_winner(const Profile& profile) {
    if (auto w = condorcet_winner(margins(profile))) return profile.candidates()[*w];
    return std::nullopt;
}

std::vector<Ranking> all_rankings(std::size_t n) {
    Ranking r(n);
    std::iota(r.begin(), r.end(), 0);
    std::vector<Ranking> out;
    do {
        out.push_back(r);
    } while (std::next_permutation(r.begin(), r.end()));
    return out;
}

Ranking reversed(Ranking ranking) {
    std::reverse(ranking.begin(), ranking.end());
    return ranking;
}

}  // namespace splitcycle
