#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "posetsim/rank_measures.hpp"

using namespace posetsim;

TEST_CASE("precision at a cut-off keeps the cut-off as denominator") {
    const Chain run({"d1", "d2", "d3"});
    const Qrels qrels{{"d1", "d3"}};
    CHECK(precision_at(run, qrels, 2) == doctest::Approx(0.5));
    CHECK(precision_at(Chain({"d1", "d3"}), qrels, 2) == doctest::Approx(1.0));
    CHECK(precision_at(Chain({"x", "y"}), qrels, 2) == doctest::Approx(0.0));
    // The run is shorter than the cut-off: found 2 of 5 requested slots.
    CHECK(precision_at(Chain({"d1", "d3"}), qrels, 5) == doctest::Approx(0.4));
    CHECK_THROWS_AS(precision_at(run, qrels, 0), InvariantViolation);
}

TEST_CASE("recall at a cut-off divides by the relevant count") {
    const Qrels qrels{{"d1", "d3"}};
    CHECK(recall_at(Chain({"d1", "d2"}), qrels, 1000) == doctest::Approx(0.5));
    CHECK(recall_at(Chain({"d3", "d1"}), qrels, 2) == doctest::Approx(1.0));
    CHECK(recall_at(Chain({"x"}), qrels, 10) == doctest::Approx(0.0));
    CHECK_THROWS_AS(recall_at(Chain({"d1"}), Qrels{}, 10), UndefinedMeasure);
}

TEST_CASE("recall grows with the cut-off and saturates past the run length") {
    std::mt19937 rng(99);
    for (int round = 0; round < 50; ++round) {
        auto [run, other] = testgen::random_chain_pair(rng, 10);
        const Qrels qrels{other.elements()};
        double previous = 0.0;
        for (std::size_t k = 1; k <= run.size() + 3; ++k) {
            const double value = recall_at(run, qrels, k);
            CHECK(value >= previous - 1e-12);
            previous = value;
        }
        CHECK(recall_at(run, qrels, run.size()) ==
              doctest::Approx(recall_at(run, qrels, run.size() + 100)));
    }
}

TEST_CASE("r-precision is precision at the relevant count") {
    const Chain run({"d1", "d2", "d3", "d4"});
    const Qrels qrels{{"d1", "d3"}};
    CHECK(r_precision(run, qrels) == doctest::Approx(0.5));
    CHECK(r_precision(Chain({"d1", "d3", "d2"}), qrels) == doctest::Approx(1.0));
    CHECK(r_precision(Chain({"x", "y"}), qrels) == doctest::Approx(0.0));
    CHECK_THROWS_AS(r_precision(run, Qrels{}), UndefinedMeasure);
}

TEST_CASE("average precision uses zero for relevant elements never retrieved") {
    const Chain run({"d1", "d2", "d3", "d4"});
    const Qrels qrels{{"d1", "d3", "d5"}};
    CHECK(average_precision(run, qrels) == doctest::Approx(5.0 / 9.0).epsilon(1e-9));
    CHECK(average_precision(Chain({"d5", "d1", "d3"}), Qrels{{"d1", "d3", "d5"}}) ==
          doctest::Approx(1.0));
    CHECK(average_precision(Chain({"x", "y"}), qrels) == doctest::Approx(0.0));
}

TEST_CASE("average precision is 1 exactly when the relevant set fills the top ranks") {
    std::mt19937 rng(123);
    for (int round = 0; round < 200; ++round) {
        auto [run, other] = testgen::random_chain_pair(rng, 9);
        const Qrels qrels{other.elements()};
        const double value = average_precision(run, qrels);
        CHECK(value >= 0.0);
        CHECK(value <= 1.0 + 1e-12);
        std::size_t prefix_hits = 0;
        const std::size_t depth = std::min(run.size(), qrels.relevant.size());
        for (std::size_t i = 0; i < depth; ++i) {
            prefix_hits += qrels.relevant.count(run.sequence()[i]);
        }
        const bool perfect = prefix_hits == qrels.relevant.size();
        CHECK((value == doctest::Approx(1.0)) == perfect);
    }
}

TEST_CASE("spearman rho on the worked examples") {
    CHECK(spearman_rho(Chain({"A", "B", "C"}), Chain({"C", "B", "A"})) == doctest::Approx(-1.0));
    CHECK(spearman_rho(Chain({"A", "B", "C"}), Chain({"A", "B", "C"})) == doctest::Approx(1.0));
    CHECK(spearman_rho(Chain({"A", "B", "C"}), Chain({"A", "C", "B"})) == doctest::Approx(0.5));
}

TEST_CASE("kendall tau on the worked examples") {
    CHECK(kendall_tau(Chain({"A", "B", "C"}), Chain({"A", "B", "C"})) == doctest::Approx(1.0));
    CHECK(kendall_tau(Chain({"A", "B", "C"}), Chain({"C", "B", "A"})) == doctest::Approx(-1.0));
    CHECK(kendall_tau(Chain({"A", "B", "C"}), Chain({"A", "C", "B"})) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("correlations restrict to the shared elements with compressed ranks") {
    // Common part of both chains is B before D in both, so agreement is perfect.
    CHECK(kendall_tau(Chain({"A", "B", "C", "D"}), Chain({"B", "D", "E"})) ==
          doctest::Approx(1.0));
    CHECK(spearman_rho(Chain({"A", "B", "C", "D"}), Chain({"B", "D", "E"})) ==
          doctest::Approx(1.0));
    // Reversed common part.
    CHECK(kendall_tau(Chain({"B", "D"}), Chain({"D", "B", "X"})) == doctest::Approx(-1.0));
    // One shared element carries no disorder evidence.
    CHECK(kendall_tau(Chain({"A", "B"}), Chain({"B", "C"})) == 1.0);
    CHECK(spearman_rho(Chain({"A", "B"}), Chain({"B", "C"})) == 1.0);
    CHECK_THROWS_AS(kendall_tau(Chain({"A"}), Chain({"B"})), NoCommonElements);
    CHECK_THROWS_AS(spearman_rho(Chain({"A"}), Chain({"B"})), NoCommonElements);
}

TEST_CASE("correlations are symmetric and relabeling invariant") {
    std::mt19937 rng(321);
    for (int round = 0; round < 100; ++round) {
        auto [c1, c2] = testgen::random_chain_pair(rng, 9);
        CHECK(kendall_tau(c1, c2) == doctest::Approx(kendall_tau(c2, c1)).epsilon(1e-12));
        CHECK(spearman_rho(c1, c2) == doctest::Approx(spearman_rho(c2, c1)).epsilon(1e-12));
        CHECK(kendall_tau(c1, c1) == doctest::Approx(1.0));
        CHECK(spearman_rho(c1, c1) == doctest::Approx(1.0));

        auto relabel = [](const Chain& c) {
            std::vector<Element> renamed;
            for (const Element& e : c.sequence()) {
                renamed.push_back("x_" + e);
            }
            return Chain(renamed);
        };
        CHECK(kendall_tau(relabel(c1), relabel(c2)) ==
              doctest::Approx(kendall_tau(c1, c2)).epsilon(1e-12));
        CHECK(spearman_rho(relabel(c1), relabel(c2)) ==
              doctest::Approx(spearman_rho(c1, c2)).epsilon(1e-12));
    }
}

TEST_CASE("rho equals tau on two-element chains") {
    CHECK(spearman_rho(Chain({"A", "B"}), Chain({"A", "B"})) ==
          kendall_tau(Chain({"A", "B"}), Chain({"A", "B"})));
    CHECK(spearman_rho(Chain({"A", "B"}), Chain({"B", "A"})) ==
          kendall_tau(Chain({"A", "B"}), Chain({"B", "A"})));
}

TEST_CASE("ordered combination multiplies a correlation by a set measure") {
    const Chain abc({"A", "B", "C"});
    CHECK(ordered_combination(abc, abc, StrongKind::Jaccard, CorrelationKind::Spearman) ==
          doctest::Approx(1.0));
    CHECK(ordered_combination(abc, Chain({"C", "B", "A"}), StrongKind::Jaccard,
                              CorrelationKind::Spearman) == doctest::Approx(-1.0));
    CHECK(ordered_combination(abc, Chain({"A", "C", "B"}), StrongKind::Jaccard,
                              CorrelationKind::Spearman) == doctest::Approx(0.5));
    // The set factor sees the full supports, not just the common part.
    CHECK(ordered_combination(Chain({"A", "B"}), Chain({"A", "B", "C", "D"}),
                              StrongKind::Jaccard, CorrelationKind::Kendall) ==
          doctest::Approx(0.5));
}
