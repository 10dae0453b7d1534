#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "posetsim/runfile.hpp"

using namespace posetsim;

TEST_CASE("parses the example partition file") {
    const ResultSet rs = parse_runfile(
        "#type: partition\n"
        "A\t1\nB\t1\nC\t1\nD\t2\nE\t2\nF\t3\n",
        "fig3");
    REQUIRE(rs.shape() == Shape::Partition);
    CHECK(rs.label == "fig3");
    CHECK(rs.as<Partition>() == Partition({{"A", "B", "C"}, {"D", "E"}, {"F"}}));
}

TEST_CASE("parses the example chain file in rank order") {
    const ResultSet rs = parse_runfile("#type: chain\nA\nB\nC\nD\nE\nF\n");
    REQUIRE(rs.shape() == Shape::Chain);
    CHECK(rs.as<Chain>() == Chain({"A", "B", "C", "D", "E", "F"}));
}

TEST_CASE("parses comments, blank lines and windows line endings") {
    const ResultSet rs = parse_runfile(
        "#type: antichain\r\n"
        "# a comment\r\n"
        "\r\n"
        "A\r\nB\r\n");
    CHECK(rs.as<Antichain>() == Antichain({"A", "B"}));
}

TEST_CASE("parses a partition of chains with class and rank columns") {
    const ResultSet rs = parse_runfile(
        "#type: partition_of_chains\n"
        "A\t1\t1\nB\t1\t2\nC\t2\t1\nD\t2\t2\n");
    REQUIRE(rs.shape() == Shape::PartitionOfChains);
    CHECK(rs.as<PartitionOfChains>() ==
          PartitionOfChains({Chain({"A", "B"}), Chain({"C", "D"})}));
}

TEST_CASE("rejects malformed headers and rows with line numbers") {
    CHECK_THROWS_AS(parse_runfile(""), ParseError);
    CHECK_THROWS_AS(parse_runfile("A\t1\n"), ParseError);
    CHECK_THROWS_AS(parse_runfile("#type: heap\nA\n"), ParseError);
    CHECK_THROWS_AS(parse_runfile("#type: partition\nA\n"), ParseError);
    CHECK_THROWS_AS(parse_runfile("#type: partition\nA\tone\n"), ParseError);
    CHECK_THROWS_AS(parse_runfile("#type: partition\nA\t0\n"), ParseError);
    CHECK_THROWS_AS(parse_runfile("#type: chain\nA\t1\n"), ParseError);
    try {
        parse_runfile("#type: partition\nA\t1\nB\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("rejects invariant violations found while assembling") {
    CHECK_THROWS_AS(parse_runfile("#type: partition\nA\t1\nA\t2\n"), InvariantViolation);
    CHECK_THROWS_AS(parse_runfile("#type: antichain\nA\nA\n"), InvariantViolation);
    CHECK_THROWS_AS(parse_runfile("#type: chain\nA\nA\n"), InvariantViolation);
    // class 2 never appears: empty class
    CHECK_THROWS_AS(parse_runfile("#type: partition\nA\t1\nB\t3\n"), InvariantViolation);
    // rank gap inside a chain
    CHECK_THROWS_AS(parse_runfile("#type: partition_of_chains\nA\t1\t1\nB\t1\t3\n"),
                    InvariantViolation);
    // duplicate rank inside a chain
    CHECK_THROWS_AS(parse_runfile("#type: partition_of_chains\nA\t1\t1\nB\t1\t1\n"),
                    InvariantViolation);
}

TEST_CASE("parse and serialize round-trip on random result sets") {
    std::mt19937 rng(555);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = testgen::pick(rng, 1, 15);
        std::vector<ResultSet> sets;
        sets.push_back(ResultSet{testgen::random_antichain(rng, n), "a"});
        sets.push_back(ResultSet{testgen::random_chain_pair(rng, n).first, "c"});
        sets.push_back(ResultSet{testgen::random_partition(rng, n, 4), "p"});
        sets.push_back(ResultSet{testgen::random_ordered_partition(rng, n, 4), "o"});
        sets.push_back(ResultSet{testgen::random_vc(rng, n, 4), "v"});
        for (const ResultSet& rs : sets) {
            const std::string text = serialize_runfile(rs);
            const ResultSet back = parse_runfile(text, rs.label);
            CHECK(back.shape() == rs.shape());
            CHECK(back.value == rs.value);
            CHECK(serialize_runfile(back) == text);
        }
    }
}

TEST_CASE("qrels files hold one id per line") {
    const Qrels qrels = parse_qrels("# judged\nd1\nd3\n\nd5\n");
    CHECK(qrels.relevant == ElementSet{"d1", "d3", "d5"});
    CHECK_THROWS_AS(parse_qrels("d1 d2\n"), ParseError);
    CHECK(parse_qrels("").relevant.empty());
}
