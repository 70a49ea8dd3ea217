#include <doctest.h>

#include "splitcycle/axioms.hpp"
#include "splitcycle/errors.hpp"
#include "support.hpp"

using namespace splitcycle;

namespace {

ProfileDomain exhaustive(std::vector<Candidate> candidates, std::size_t lo, std::size_t hi) {
    ProfileDomain d;
    d.candidates = std::move(candidates);
    d.min_voters = lo;
    d.max_voters = hi;
    return d;
}

const std::vector<AxiomId> kSix = {AxiomId::anonymity,           AxiomId::neutrality,
                                   AxiomId::availability,        AxiomId::upward_homogeneity,
                                   AxiomId::monotonicity_two_candidate, AxiomId::neutral_reversal_up,
                                   AxiomId::neutral_reversal_down, AxiomId::coherent_iia};

void require_holds(AxiomId a, const Vccr& f, const ProfileDomain& d, bool vacuous_ok = false) {
    const auto v = check_axiom(a, f, d);
    CAPTURE(axiom_name(a));
    CAPTURE(f.name);
    CHECK(v.status == VerdictStatus::holds_on_domain);
    CHECK_FALSE(v.witness.has_value());
    if (!vacuous_ok) CHECK(v.instances > 0);
}

AxiomVerdict require_counterexample(AxiomId a, const Vccr& f, const ProfileDomain& d) {
    const auto v = check_axiom(a, f, d);
    CAPTURE(axiom_name(a));
    CAPTURE(f.name);
    REQUIRE(v.status == VerdictStatus::counterexample);
    REQUIRE(v.witness.has_value());
    CHECK(instance_violates(a, f, *v.witness));
    return v;
}

}  // namespace

TEST_CASE("axiom names round trip") {
    for (auto a : all_axioms()) CHECK(find_axiom(axiom_name(a)) == a);
    CHECK_THROWS_AS(parse_axiom("positive_responsiveness"), Error);
    CHECK(is_pair_axiom(AxiomId::coherent_iia));
    CHECK_FALSE(is_pair_axiom(AxiomId::anonymity));
}

TEST_CASE("coherent IIA relatedness") {
    const auto p12 = parse_profile(testing::kBordaPairP);
    const auto p12b = parse_profile(testing::kBordaPairQ);
    CHECK(coherent_iia_related(p12, p12b, "x", "y"));
    CHECK(coherent_iia_related(p12, restrict_to(p12, {"a", "x", "y"}), "x", "y"));
    CHECK(coherent_iia_related(p12, restrict_to(p12, {"x", "y"}), "x", "y"));

    const auto p9 = parse_profile("candidates: a b c\n1: a > b > c\n1: b > a > c\n1: c > a > b\n");
    const auto p9b = parse_profile(testing::kCycle3);
    CHECK_FALSE(coherent_iia_related(p9, p9b, "a", "b"));
    CHECK_FALSE(coherent_iia_related(p9, replicate(p9, 2), "a", "b"));
    CHECK_THROWS_AS(coherent_iia_related(p9, p9, "a", "a"), Error);
}

TEST_CASE("modified and intensity relatedness") {
    const auto p = parse_profile("candidates: a b c d\n1: a > b > c > d\n1: b > c > d > a\n1: a > b > c > d\n1: a > b > d > c\n");
    const auto p2 = parse_profile("candidates: a b c d\n1: a > b > c > d\n1: b > c > d > a\n1: c > d > a > b\n1: d > a > b > c\n");
    CHECK(modified_iia_related(p, p2, "a", "b", BetweenMode::modified));
    CHECK(modified_iia_related(p, p2, "a", "b", BetweenMode::intensity));
    // edges missing from the drawn graph of p
    CHECK(margin(p, "a", "c") == 2);
    CHECK(margin(p, "b", "d") == 4);
    CHECK(margin(p, "b", "c") == 4);
    for (auto mode : {BetweenMode::modified, BetweenMode::intensity}) CHECK(modified_iia_related(p, p, "c", "d", mode));

    const auto u = parse_profile("candidates: a b c d\n1: a > c > b > d\n");
    const auto w = parse_profile("candidates: a b c d\n1: a > d > b > c\n");
    CHECK_FALSE(modified_iia_related(u, w, "a", "b", BetweenMode::modified));
    CHECK(modified_iia_related(u, w, "a", "b", BetweenMode::intensity));

    Rng rng(61);
    for (int t = 0; t < 300; ++t) {
        const auto a = testing::random_profile(rng, 4, 2);
        const auto b = testing::random_profile(rng, 4, 2);
        if (modified_iia_related(a, b, "a", "b", BetweenMode::modified))
            CHECK(modified_iia_related(a, b, "a", "b", BetweenMode::intensity));
    }
}

TEST_CASE("split cycle passes the six-axiom suite on the small exhaustive domain") {
    const auto f = vccr(MethodId::split_cycle);
    const auto d = exhaustive({"a", "b", "c"}, 1, 3);
    for (auto a : kSix) require_holds(a, f, d);
    for (auto a : {AxiomId::weak_iia, AxiomId::pareto, AxiomId::majority_defeat, AxiomId::condorcet_consistency,
                   AxiomId::strong_stability, AxiomId::immunity_to_spoilers, AxiomId::acyclicity, AxiomId::global_alpha,
                   AxiomId::monotonicity})
        require_holds(a, f, d);
    require_holds(AxiomId::binary_majoritarianism, f, exhaustive({"a", "b"}, 1, 5));
}

TEST_CASE("the rival six-axiom rules pass and are never more resolute") {
    const auto d = exhaustive({"a", "b", "c"}, 1, 3);
    for (auto id : {MethodId::null, MethodId::global_split}) {
        // null never defeats, so its monotonicity scan has nothing to lift
        for (auto a : kSix) require_holds(a, vccr(id), d, id == MethodId::null);
        for_each_profile(d, [&](const Profile& p) {
            CHECK(defeat(id, p).subset_of(split_cycle(p)));
            return true;
        });
    }
}

TEST_CASE("derived axioms follow from the hypothesis set instancewise") {
    const auto d = exhaustive({"a", "b", "c"}, 1, 2);
    for (auto id : all_methods()) {
        const auto f = vccr(id);
        bool hypotheses = true;
        for (auto a : {AxiomId::anonymity, AxiomId::neutrality, AxiomId::monotonicity_two_candidate,
                       AxiomId::coherent_iia})
            hypotheses = hypotheses && check_axiom(a, f, d).status == VerdictStatus::holds_on_domain;
        if (!hypotheses) continue;
        CAPTURE(method_name(id));
        CHECK(check_axiom(AxiomId::majority_defeat, f, d).status == VerdictStatus::holds_on_domain);
        CHECK(check_axiom(AxiomId::weak_iia, f, d).status == VerdictStatus::holds_on_domain);
        CHECK(check_axiom(AxiomId::strong_stability, f, d).status == VerdictStatus::holds_on_domain);
    }
}

TEST_CASE("known violations are found by search") {
    require_counterexample(AxiomId::coherent_iia, vccr(MethodId::borda), exhaustive({"a", "b", "c"}, 1, 3));
    require_counterexample(AxiomId::neutral_reversal_up, vccr(MethodId::plurality), exhaustive({"a", "b", "c"}, 1, 3));
    require_counterexample(AxiomId::neutral_reversal_down, vccr(MethodId::plurality), exhaustive({"a", "b", "c"}, 1, 4));
    require_counterexample(AxiomId::monotonicity, vccr(MethodId::hare), exhaustive({"a", "b", "c"}, 1, 10));
    const auto la = require_counterexample(AxiomId::local_alpha, vccr(MethodId::split_cycle),
                                           exhaustive({"a", "b", "c"}, 1, 3));
    CHECK(la.witness->profiles.size() == 1);
    require_counterexample(AxiomId::availability, vccr(MethodId::simple_majority), exhaustive({"a", "b", "c"}, 1, 3));
    require_counterexample(AxiomId::majority_defeat, vccr(MethodId::borda), exhaustive({"a", "b", "c"}, 1, 3));
}

TEST_CASE("anonymity and neutrality catch rules that look at names or positions") {
    const Vccr first_voter{"first_voter", [](const Profile& p) {
                               DefeatRelation d(p.candidates());
                               const auto& r = p.ranking(0);
                               d.add(static_cast<std::size_t>(r[0]), static_cast<std::size_t>(r[1]));
                               return d;
                           }};
    require_counterexample(AxiomId::anonymity, first_voter, exhaustive({"a", "b"}, 1, 2));

    const Vccr a_wins{"a_wins", [](const Profile& p) {
                          DefeatRelation d(p.candidates());
                          for (std::size_t y = 1; y < p.num_candidates(); ++y) d.add(0, y);
                          return d;
                      }};
    require_counterexample(AxiomId::neutrality, a_wins, exhaustive({"a", "b"}, 1, 1));
    require_holds(AxiomId::anonymity, a_wins, exhaustive({"a", "b"}, 1, 2));
}

TEST_CASE("witnesses replay alone") {
    const auto borda = vccr(MethodId::borda);
    Instance i12{{parse_profile(testing::kBordaPairP), parse_profile(testing::kBordaPairQ)}, {"x", "y"}, {}, {}, ""};
    CHECK(instance_violates(AxiomId::coherent_iia, borda, i12));
    CHECK_FALSE(instance_violates(AxiomId::coherent_iia, vccr(MethodId::split_cycle), i12));

    Instance cycle{{parse_profile(testing::kCycle3)}, {"b"}, {"a", "b", "c"}, {"a", "b"}, ""};
    CHECK(instance_violates(AxiomId::local_alpha, vccr(MethodId::split_cycle), cycle));
    CHECK_FALSE(instance_violates(AxiomId::global_alpha, vccr(MethodId::split_cycle), cycle));

    Instance spoiler{{parse_profile(testing::kSpoilerP), parse_profile("candidates: a c\n2: c > a\n3: a > c\n")},
                     {"a", "b"}, {}, {}, ""};
    CHECK(instance_violates(AxiomId::immunity_to_spoilers, borda, spoiler));
    CHECK_FALSE(instance_violates(AxiomId::immunity_to_spoilers, vccr(MethodId::split_cycle), spoiler));

    // malformed instances are never violations
    Instance wrong_pair = i12;
    wrong_pair.profiles[1] = parse_profile(testing::kQ);
    CHECK_FALSE(instance_violates(AxiomId::coherent_iia, borda, wrong_pair));
}

TEST_CASE("supplied pairs") {
    const auto borda = vccr(MethodId::borda);
    const std::vector<std::pair<Profile, Profile>> pairs{
        {parse_profile(testing::kBordaPairP), parse_profile(testing::kBordaPairQ)}};
    const auto v = check_pairs(AxiomId::coherent_iia, borda, pairs);
    CHECK(v.status == VerdictStatus::counterexample);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->candidates == std::vector<Candidate>{"x", "y"});
    CHECK(check_pairs(AxiomId::coherent_iia, vccr(MethodId::split_cycle), pairs).status ==
          VerdictStatus::holds_on_domain);
    CHECK_THROWS_AS(check_pairs(AxiomId::anonymity, borda, pairs), Error);
}

TEST_CASE("budget and random domains") {
    auto big = exhaustive({"a", "b", "c", "d", "e"}, 1, 9);
    const auto v = check_axiom(AxiomId::availability, vccr(MethodId::split_cycle), big);
    CHECK(v.status == VerdictStatus::budget_exceeded);
    CHECK_FALSE(v.message.empty());

    ProfileDomain r;
    r.candidates = {"a", "b", "c", "d"};
    r.min_voters = 1;
    r.max_voters = 7;
    r.mode = DomainMode::random;
    r.samples = 40;
    r.seed = 3;
    for (auto a : {AxiomId::coherent_iia, AxiomId::modified_iia, AxiomId::intensity_iia, AxiomId::neutrality,
                   AxiomId::monotonicity_two_candidate}) {
        const auto first = check_axiom(a, vccr(MethodId::split_cycle), r);
        const auto second = check_axiom(a, vccr(MethodId::split_cycle), r);
        CHECK(first.instances == second.instances);
        CHECK(first.status == second.status);
        if (a == AxiomId::coherent_iia || a == AxiomId::neutrality || a == AxiomId::monotonicity_two_candidate)
            CHECK(first.status == VerdictStatus::holds_on_domain);
    }
}
