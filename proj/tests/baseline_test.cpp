#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lsm/baseline.hpp"
#include "lsm/corpus.hpp"
#include "lsm/rng.hpp"

using namespace lsm;

namespace {

Document five_sentence_doc() {
    return parse_document(
        "copper marble\nfalcon meadow\nwalrus tundra\npelican nebula\ncomet basalt\n", "five",
        make_config());
}

}  // namespace

TEST_CASE("random_segmentation draws k distinct positions from {2..n}") {
    SUBCASE("k = 0 yields the empty set") {
        CHECK(random_segmentation(10, 0, 42).boundaries.empty());
    }

    SUBCASE("n = 3, k = 2 is forced by exhaustion") {
        for (std::uint64_t seed = 0; seed < 20; ++seed)
            CHECK(random_segmentation(3, 2, seed).boundaries == std::set<int>{2, 3});
    }

    SUBCASE("fixed seed reproduces the same set") {
        const auto first = random_segmentation(10, 3, 77, "doc");
        for (int repeat = 0; repeat < 10; ++repeat) {
            const auto again = random_segmentation(10, 3, 77, "doc");
            CHECK(again.boundaries == first.boundaries);
        }
        CHECK(first.method == SegmentationMethod::random);
        CHECK(first.doc_id == "doc");
        CHECK(first.sentence_count == 10);
    }

    SUBCASE("bounds and size hold across seeds") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const auto seg = random_segmentation(12, 5, seed);
            CHECK(seg.boundaries.size() == 5);
            for (int b : seg.boundaries) {
                CHECK(b >= 2);
                CHECK(b <= 12);
            }
        }
    }

    SUBCASE("k outside {0..n-1} is a contract violation") {
        CHECK_THROWS_AS(random_segmentation(5, 5, 1), std::invalid_argument);
        CHECK_THROWS_AS(random_segmentation(5, -1, 1), std::invalid_argument);
        CHECK_NOTHROW(random_segmentation(5, 4, 1));
    }

    SUBCASE("positions are uniform: each candidate hit within 3 sigma") {
        // n=5, k=1: each of {2,3,4,5} should be hit ~ trials/4
        const int trials = 40000;
        std::map<int, int> hits;
        for (int t = 0; t < trials; ++t) {
            const auto seg = random_segmentation(5, 1, derive_seed(5150, static_cast<std::uint64_t>(t)));
            ++hits[*seg.boundaries.begin()];
        }
        const double expected = trials / 4.0;
        const double sigma = std::sqrt(trials * 0.25 * 0.75);
        for (int position = 2; position <= 5; ++position) {
            CAPTURE(position);
            CHECK(std::abs(hits[position] - expected) <= 3 * sigma);
        }
    }
}

TEST_CASE("random_trial_scores") {
    const auto doc = five_sentence_doc();

    SUBCASE("reference covering every candidate makes precision 1") {
        ReferenceSegments ref;
        ref.positions = {2, 3, 4, 5};
        RandomTrialConfig config;
        config.trials = 50;
        config.seed = 9;
        for (const auto& trial : random_trial_scores(doc, ref, 2, config)) {
            REQUIRE(trial.precision.has_value());
            CHECK(*trial.precision == 1.0);
        }
    }

    SUBCASE("empty reference: recall undefined, precision 0 for k > 0") {
        ReferenceSegments ref;
        RandomTrialConfig config;
        config.trials = 20;
        config.seed = 3;
        for (const auto& trial : random_trial_scores(doc, ref, 2, config)) {
            CHECK_FALSE(trial.recall.has_value());
            REQUIRE(trial.precision.has_value());
            CHECK(*trial.precision == 0.0);
        }
    }

    SUBCASE("mean recall approaches the exact hit probability") {
        // n=5, k=1, ref={3}: exactly 1 hit among 4 equally likely positions
        ReferenceSegments ref;
        ref.positions = {3};
        RandomTrialConfig config;
        config.trials = 20000;
        config.seed = 11;
        const auto scores = random_trial_scores(doc, ref, 1, config);
        double sum = 0;
        for (const auto& trial : scores) sum += *trial.recall;
        const double mean = sum / static_cast<double>(scores.size());
        const double sigma = std::sqrt(0.25 * 0.75 / static_cast<double>(scores.size()));
        CHECK(std::abs(mean - 0.25) <= 3 * sigma);
    }

    SUBCASE("fixed boundary count overrides the matched one") {
        ReferenceSegments ref;
        ref.positions = {3};
        RandomTrialConfig config;
        config.trials = 5;
        config.seed = 4;
        config.fixed_boundary_count = 4;
        for (const auto& trial : random_trial_scores(doc, ref, 1, config))
            CHECK(*trial.recall == 1.0);  // k=4 covers every candidate
    }

    SUBCASE("trial sequence is reproducible and per-trial seeded") {
        ReferenceSegments ref;
        ref.positions = {3, 5};
        RandomTrialConfig config;
        config.trials = 30;
        config.seed = 123;
        const auto first = random_trial_scores(doc, ref, 2, config);
        const auto again = random_trial_scores(doc, ref, 2, config);
        REQUIRE(first.size() == again.size());
        for (std::size_t t = 0; t < first.size(); ++t) {
            CHECK(first[t].recall == again[t].recall);
            CHECK(first[t].precision == again[t].precision);
        }

        // trial t draws with derive_seed(seed, t), independent of the others
        const auto lone = random_segmentation(doc.size(), 2, derive_seed(123, 7), doc.id);
        const auto report = score(lone, ref, 0);
        CHECK(first[7].recall == report.recall);
        CHECK(first[7].precision == report.precision);
    }

    SUBCASE("at least one trial is required") {
        ReferenceSegments ref;
        RandomTrialConfig config;
        config.trials = 0;
        config.seed = 1;
        CHECK_THROWS_AS(random_trial_scores(doc, ref, 1, config), std::invalid_argument);
    }
}

TEST_CASE("uniform_below rejects a zero bound and respects the range") {
    std::mt19937_64 engine(1);
    CHECK_THROWS_AS(uniform_below(engine, 0), std::invalid_argument);
    for (int i = 0; i < 1000; ++i) CHECK(uniform_below(engine, 7) < 7);
}
