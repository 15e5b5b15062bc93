#include <doctest.h>

#include <algorithm>
#include <random>

#include "rdslink/errors.hpp"
#include "rdslink/profile.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace rdslink;
using fixtures::lit;
using fixtures::t;

TEST_CASE("entropy reference values") {
    CHECK(entropy({"a", "a", "a"}) == 0.0);
    CHECK(entropy({"a", "b", "c", "d"}) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(entropy({"a", "a", "b", "b"}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(entropy({}), std::invalid_argument);
}

TEST_CASE("entropy invariances and bounds") {
    gen::Rng rng(31337);
    for (int round = 0; round < 100; ++round) {
        std::vector<std::string> values;
        const std::size_t n = gen::pick(rng, 1, 40);
        for (std::size_t i = 0; i < n; ++i)
            values.push_back("v" + std::to_string(gen::pick(rng, 0, 6)));
        const double h = entropy(values);

        auto shuffled = values;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(entropy(shuffled) == doctest::Approx(h).epsilon(1e-12));

        auto renamed = values;
        for (auto& v : renamed) v = "renamed_" + v + "_suffix";
        CHECK(entropy(renamed) == doctest::Approx(h).epsilon(1e-12));

        std::set<std::string> distinct(values.begin(), values.end());
        CHECK(h >= 0.0);
        CHECK(h <= std::log2(static_cast<double>(distinct.size())) + 1e-12);
    }
}

namespace {

std::vector<Triple> two_predicate_fixture() {
    std::vector<Triple> triples;
    for (int i = 0; i < 4; ++i) {
        const std::string s = "http://s/" + std::to_string(i);
        triples.push_back(lit(s, "http://s/label", "name" + std::to_string(i)));
        triples.push_back(lit(s, "http://s/status", "active"));
    }
    return triples;
}

std::vector<Term> subjects_of(const Dataset& ds) { return ds.literal_bearing_subjects(); }

}  // namespace

TEST_CASE("distinct-valued predicate qualifies, constant one does not") {
    const auto ds = Dataset::load(two_predicate_fixture());
    const auto profile = build_label_profile(ds, subjects_of(ds));
    REQUIRE(profile.ranked.size() == 1);
    CHECK(profile.ranked[0].predicate == Term::uri("http://s/label"));
    CHECK(profile.ranked[0].entropy == doctest::Approx(2.0));
    CHECK(profile.omega_threshold == doctest::Approx(1.0));  // mean of 2.0 and 0.0

    const auto report = build_label_profile_report(ds, subjects_of(ds));
    REQUIRE(report.considered.size() == 2);
    CHECK(report.considered[0].qualifies);
    CHECK(!report.considered[1].qualifies);
}

TEST_CASE("single qualifying predicate: omega equals its entropy") {
    const auto ds = Dataset::load({lit("http://s/1", "http://s/label", "a"),
                                   lit("http://s/2", "http://s/label", "b")});
    const auto profile = build_label_profile(ds, subjects_of(ds));
    REQUIRE(profile.ranked.size() == 1);
    CHECK(profile.omega_threshold == doctest::Approx(profile.ranked[0].entropy));
}

TEST_CASE("long literals disqualify their predicate") {
    std::vector<Triple> triples = two_predicate_fixture();
    const std::string abstract(300, 'x');
    triples.push_back(lit("http://s/0", "http://s/abstract", abstract + "0"));
    triples.push_back(lit("http://s/1", "http://s/abstract", abstract + "1"));
    const auto ds = Dataset::load(triples);
    const auto report = build_label_profile_report(ds, subjects_of(ds));
    for (const auto& row : report.considered)
        CHECK(row.predicate.value() != "http://s/abstract");

    // boundary: exactly max_len is excluded, max_len - 1 passes
    const auto edge = Dataset::load({lit("http://s/1", "http://s/p", std::string(200, 'a')),
                                     lit("http://s/2", "http://s/p", std::string(199, 'b'))});
    CHECK_THROWS_AS(build_label_profile(edge, subjects_of(edge)), NoLabelPropertyError);
}

TEST_CASE("predicates on fewer than two subjects are excluded") {
    const auto ds = Dataset::load({lit("http://s/1", "http://s/only", "x"),
                                   lit("http://s/1", "http://s/only", "y"),
                                   lit("http://s/1", "http://s/label", "a"),
                                   lit("http://s/2", "http://s/label", "b")});
    const auto report = build_label_profile_report(ds, subjects_of(ds));
    REQUIRE(report.considered.size() == 1);
    CHECK(report.considered[0].predicate == Term::uri("http://s/label"));
}

TEST_CASE("no qualifying predicate raises NoLabelProperty") {
    const auto ds =
        Dataset::load({t("http://s/1", "http://s/rel", "http://o/1"),
                       t("http://s/2", "http://s/rel", "http://o/2")});
    CHECK_THROWS_AS(build_label_profile(ds, {Term::uri("http://s/1"), Term::uri("http://s/2")}),
                    NoLabelPropertyError);
}

TEST_CASE("profile restricted to given subjects only") {
    auto triples = two_predicate_fixture();
    // outside subject with huge-entropy junk predicate
    triples.push_back(lit("http://other/1", "http://s/junk", "j1"));
    triples.push_back(lit("http://other/2", "http://s/junk", "j2"));
    const auto ds = Dataset::load(triples);
    std::vector<Term> insiders;
    for (int i = 0; i < 4; ++i) insiders.push_back(Term::uri("http://s/" + std::to_string(i)));
    const auto report = build_label_profile_report(ds, insiders);
    for (const auto& row : report.considered)
        CHECK(row.predicate.value() != "http://s/junk");
}

TEST_CASE("sampling is deterministic per seed and changes with it") {
    std::vector<Triple> triples;
    for (int i = 0; i < 500; ++i)
        triples.push_back(lit("http://s/" + std::to_string(i), "http://s/label",
                              "v" + std::to_string(i)));
    const auto ds = Dataset::load(triples);
    ProfileOptions options;
    options.sample_cap = 50;
    options.seed = 9;
    const auto a = build_label_profile(ds, subjects_of(ds), options);
    const auto b = build_label_profile(ds, subjects_of(ds), options);
    CHECK(a.ranked[0].entropy == b.ranked[0].entropy);
    CHECK(a.omega_threshold == b.omega_threshold);
    // a 50-value sample of distinct values keeps entropy at log2(50)
    CHECK(a.ranked[0].entropy == doctest::Approx(std::log2(50.0)));
}

TEST_CASE("label_of picks the smallest value and reports missing predicates") {
    const auto ds = Dataset::load({lit("http://s/1", "http://s/label", "B"),
                                   lit("http://s/1", "http://s/label", "A"),
                                   lit("http://s/2", "http://s/label", "Brazil"),
                                   lit("http://s/1", "http://s/alt", "zz"),
                                   lit("http://s/2", "http://s/alt", "yy")});
    const auto profile = build_label_profile(ds, subjects_of(ds));
    REQUIRE(profile.ranked.size() >= 1);

    const auto rank0 = profile.ranked[0].predicate;
    const std::size_t label_rank =
        rank0 == Term::uri("http://s/label") ? 0 : 1;

    CHECK(label_of(ds, Term::uri("http://s/2"), profile, label_rank) == "Brazil");
    CHECK(label_of(ds, Term::uri("http://s/1"), profile, label_rank) == "A");
    CHECK(!label_of(ds, Term::uri("http://s/none"), profile, 0).has_value());
    CHECK(!label_of(ds, Term::uri("http://s/1"), profile, 99).has_value());
}

TEST_CASE("every ranked predicate sits at or above the threshold") {
    const auto corpus = fixtures::towns(40);
    const auto ds = Dataset::load(corpus.target);
    const auto report = build_label_profile_report(ds, subjects_of(ds));
    double sum = 0.0;
    for (const auto& row : report.considered) sum += row.entropy;
    const double mean = sum / static_cast<double>(report.considered.size());
    CHECK(report.profile.omega_threshold == doctest::Approx(mean).epsilon(1e-12));
    for (const auto& entry : report.profile.ranked)
        CHECK(entry.entropy >= report.profile.omega_threshold);
    for (std::size_t i = 1; i < report.profile.ranked.size(); ++i)
        CHECK(report.profile.ranked[i - 1].entropy >= report.profile.ranked[i].entropy);
}
