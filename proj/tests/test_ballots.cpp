#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "splitcycle/domain.hpp"
#include "splitcycle/errors.hpp"
#include "support.hpp"

using namespace splitcycle;
using testing::kQ;

TEST_CASE("parse the three-ballot profile") {
    const auto q = parse_profile(kQ);
    CHECK(q.candidates() == std::vector<Candidate>{"a", "b", "c"});
    CHECK(q.num_voters() == 9);
    CHECK(q.ballot(0) == std::vector<Candidate>{"a", "b", "c"});
    CHECK(q.ballot(4) == std::vector<Candidate>{"b", "c", "a"});
    CHECK(q.ballot(8) == std::vector<Candidate>{"c", "a", "b"});
    CHECK(parse_profile(to_vote_text(q)) == q);
}

TEST_CASE("parse edge cases") {
    const auto one = parse_profile("candidates: a\n1: a");
    CHECK(one.num_voters() == 1);
    CHECK(one.num_candidates() == 1);

    const auto commented = parse_profile("# header\ncandidates: b a  # unsorted\n\n2: a > b\n1: b>a\n");
    CHECK(commented.candidates() == std::vector<Candidate>{"a", "b"});
    CHECK(margin(commented, "a", "b") == 1);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_profile("candidates: a b\n2: a > b > b"), ParseError);
    CHECK_THROWS_AS(parse_profile("candidates: a b\n2: a"), ParseError);
    CHECK_THROWS_AS(parse_profile("candidates: a b\n2: a > q"), ParseError);
    CHECK_THROWS_AS(parse_profile("candidates: a b\n0: a > b"), ParseError);
    CHECK_THROWS_AS(parse_profile("candidates: a b\n-1: a > b"), ParseError);
    CHECK_THROWS_AS(parse_profile("candidates: a b\na > b"), ParseError);
    CHECK_THROWS_AS(parse_profile("1: a > b"), ParseError);
    CHECK_THROWS_AS(parse_profile("candidates: a b"), ParseError);
    CHECK_THROWS_AS(parse_profile("candidates: a a\n1: a > a"), ParseError);
    try {
        parse_profile("candidates: a b\n1: a > b\n\n1: b > c\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("margins") {
    const auto q = parse_profile(kQ);
    CHECK(margin(q, "a", "b") == 5);
    CHECK(margin(q, "b", "a") == -5);
    CHECK(margin(q, "b", "c") == 3);
    CHECK(margin(q, "c", "a") == 1);
    CHECK(margin(parse_profile(testing::kBordaPairP), "y", "x") == 2);
    CHECK_THROWS_AS(margin(q, "a", "a"), Error);
    CHECK_THROWS_AS(margin(q, "a", "z"), Error);
}

TEST_CASE("condorcet winner") {
    CHECK_FALSE(condorcet_winner(parse_profile(kQ)).has_value());
    CHECK(condorcet_winner(parse_profile("candidates: a b c\n5: a > b > c\n")) == Candidate("a"));
    CHECK(condorcet_winner(parse_profile(testing::kBordaPairP)) == Candidate("y"));
}

TEST_CASE("restriction") {
    const auto q = parse_profile(kQ);
    CHECK(restrict_to(q, {"a", "b", "c"}) == q);
    CHECK(restrict_to(parse_profile(testing::kSpoilerP), {"a", "c"}) ==
          parse_profile("candidates: a c\n2: c > a\n3: a > c\n"));
    CHECK(without(parse_profile(testing::kSpoilerP), "b") == restrict_to(parse_profile(testing::kSpoilerP), {"a", "c"}));

    const auto xy = restrict_to(parse_profile(testing::kBordaPairP), {"x", "y"});
    CHECK(xy.num_voters() == 4);
    int x_first = 0;
    for (const auto& r : xy.rankings()) x_first += xy.candidates()[r[0]] == "x";
    CHECK(x_first == 1);

    CHECK_THROWS_AS(restrict_to(q, {}), Error);
    CHECK_THROWS_AS(restrict_to(q, {"a", "z"}), Error);
}

TEST_CASE("replication and reversed pairs") {
    const auto q = parse_profile(kQ);
    CHECK(replicate(q, 1) == q);
    const auto q2 = replicate(q, 2);
    CHECK(q2.num_voters() == 18);
    CHECK(margin(q2, "a", "b") == 10);
    CHECK(qualitative_view(margin_graph(q2)) == qualitative_view(margin_graph(q)));
    CHECK_THROWS_AS(replicate(q, 0), Error);

    const auto q11 = add_reversed_pair(q, {"a", "b", "c"});
    CHECK(q11.num_voters() == 11);
    CHECK(margins(q11) == margins(q));

    const auto one = parse_profile("candidates: a b\n1: a > b\n");
    const auto three = add_reversed_pair(one, {"a", "b"});
    CHECK(three.num_voters() == 3);
    CHECK(margin(three, "a", "b") == 1);

    const auto pb = parse_profile("candidates: a c\n2: c > a\n3: a > c\n");
    CHECK(margin(add_reversed_pair(pb, {"a", "c"}), "a", "c") == 1);
    CHECK_THROWS_AS(add_reversed_pair(q, {"a", "b"}), Error);
}

TEST_CASE("permutations") {
    const auto q = parse_profile(kQ);
    const std::vector<std::size_t> id{0, 1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(permute_voters(q, id) == q);
    const std::vector<std::size_t> rot{1, 2, 3, 4, 5, 6, 7, 8, 0};
    const auto moved = permute_voters(q, rot);
    CHECK(moved.ranking(1) == q.ranking(0));
    CHECK(margins(moved) == margins(q));
    CHECK_THROWS_AS(permute_voters(q, std::vector<std::size_t>{0, 0, 1, 2, 3, 4, 5, 6, 7}), Error);

    CHECK(permute_candidates(q, {{"a", "a"}, {"b", "b"}, {"c", "c"}}) == q);
    const std::map<Candidate, Candidate> sigma{{"a", "b"}, {"b", "c"}, {"c", "a"}};
    const std::map<Candidate, Candidate> inverse{{"b", "a"}, {"c", "b"}, {"a", "c"}};
    const auto sq = permute_candidates(q, sigma);
    for (const auto& x : q.candidates())
        for (const auto& y : q.candidates())
            if (x != y) CHECK(margin(sq, x, y) == margin(q, sigma.at(x), sigma.at(y)));
    CHECK(permute_candidates(sq, inverse) == q);
    CHECK_THROWS_AS(permute_candidates(q, {{"a", "b"}, {"b", "b"}, {"c", "c"}}), Error);

    const auto two = parse_profile("candidates: a b\n2: a > b\n");
    CHECK(margin(swap_candidates(two, "a", "b"), "a", "b") == -2);
}

TEST_CASE("margin invariants on random profiles") {
    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        const auto p = testing::random_profile(rng, 2 + rng.below(4), 1 + rng.below(9));
        const auto m = margins(p);
        const auto n = p.num_candidates();
        const auto v = static_cast<int>(p.num_voters());
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (x == y) continue;
                CHECK(m(x, y) == -m(y, x));
                CHECK(std::abs(m(x, y)) <= v);
                CHECK((m(x, y) - v) % 2 == 0);
            }
        }
        const auto& c = p.candidates();
        std::vector<Candidate> y(c.begin(), c.begin() + static_cast<long>((n + 1) / 2 + (n > 2)));
        std::vector<Candidate> z(y.begin(), y.begin() + 1);
        CHECK(restrict_to(restrict_to(p, y), z) == restrict_to(p, z));

        const auto k = 2 + rng.below(3);
        const auto rep = margins(replicate(p, k));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t w = 0; w < n; ++w) CHECK(rep(x, w) == static_cast<int>(k) * m(x, w));

        std::vector<Candidate> ballot = c;
        rng.shuffle(ballot);
        CHECK(margins(add_reversed_pair(p, ballot)) == m);
    }
}

TEST_CASE("domain enumeration counts") {
    ProfileDomain d;
    d.candidates = {"a", "b", "c"};
    d.min_voters = d.max_voters = 3;
    d.mode = DomainMode::exhaustive_sequence;
    CHECK(enumerate_profiles(d).size() == 216);
    CHECK(count_profiles(d) == 216);
    d.mode = DomainMode::exhaustive_multiset;
    CHECK(enumerate_profiles(d).size() == 56);
    CHECK(count_profiles(d) == 56);

    ProfileDomain two;
    two.candidates = {"a", "b"};
    two.min_voters = 1;
    two.max_voters = 2;
    two.mode = DomainMode::exhaustive_sequence;
    CHECK(enumerate_profiles(two).size() == 6);

    // every multiset representative is distinct as an anonymized ballot count
    d.min_voters = 1;
    d.max_voters = 4;
    std::set<std::vector<std::pair<std::size_t, Ranking>>> seen;
    for (const auto& p : enumerate_profiles(d)) {
        auto a = anonymized(p);
        std::sort(a.begin(), a.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
        CHECK(seen.insert(a).second);
    }
    CHECK(seen.size() == 6 + 21 + 56 + 126);
}

TEST_CASE("random domains are reproducible and budgets are enforced") {
    ProfileDomain d;
    d.candidates = {"a", "b", "c", "d"};
    d.min_voters = 2;
    d.max_voters = 7;
    d.mode = DomainMode::random;
    d.samples = 50;
    d.seed = 99;
    const auto first = enumerate_profiles(d);
    CHECK(first.size() == 50);
    CHECK(first == enumerate_profiles(d));
    d.seed = 100;
    CHECK(first != enumerate_profiles(d));

    ProfileDomain big;
    big.candidates = {"a", "b", "c", "d", "e"};
    big.min_voters = 1;
    big.max_voters = 9;
    big.mode = DomainMode::exhaustive_sequence;
    CHECK_THROWS_AS(require_within_budget(big), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_profiles(big), BudgetExceeded);

    ProfileDomain bad;
    bad.candidates = {"a"};
    bad.min_voters = 0;
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("voter ranges and subsets") {
    CHECK(parse_voter_range("1..3") == std::pair<std::size_t, std::size_t>{1, 3});
    CHECK(parse_voter_range("4") == std::pair<std::size_t, std::size_t>{4, 4});
    CHECK_THROWS_AS(parse_voter_range("3..1"), Error);
    CHECK_THROWS_AS(parse_voter_range("x"), Error);
    CHECK(subsets({"a", "b", "c"}, 2) ==
          std::vector<std::vector<Candidate>>{{"a", "b"}, {"a", "c"}, {"b", "c"}, {"a", "b", "c"}});
}
