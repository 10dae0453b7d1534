#include <doctest.h>

#include <algorithm>

#include "posetsim/report.hpp"
#include "posetsim/runfile.hpp"

using namespace posetsim;

namespace {

const char* kPartition1 = "#type: partition\nA\t1\nB\t1\nC\t1\nD\t2\nE\t2\nF\t3\n";
const char* kPartition2 = "#type: partition\nA\t1\nB\t1\nC\t2\nD\t2\nE\t2\nF\t3\n";
const char* kVc1 = "#type: partition_of_chains\nA\t1\t1\nB\t1\t2\nC\t2\t1\nD\t2\t2\n";
const char* kVc2 = "#type: partition_of_chains\nA\t1\t1\nC\t1\t2\nB\t2\t1\nD\t2\t2\n";

const ReportLine* find_line(const Report& report, const std::string& name) {
    for (const ReportLine& line : report.lines) {
        if (line.name == name) {
            return &line;
        }
    }
    return nullptr;
}

}  // namespace

TEST_CASE("partition comparison reports the worked values") {
    const ResultSet v1 = parse_runfile(kPartition1, "v1");
    const ResultSet v2 = parse_runfile(kPartition2, "v2");
    const Report report = compare_report(v1, v2, CompareOptions{});

    const std::string text = report.to_text();
    CHECK(text.find("rand_pair 0.733333") != std::string::npos);
    CHECK(text.find("jaccard_partition 0.333333") != std::string::npos);
    CHECK(text.find("rand_asymmetric 0.866667") != std::string::npos);
    CHECK(text.find("rand_relational 0.777778") != std::string::npos);

    // Lines are sorted by measure name.
    std::vector<std::string> names;
    for (const ReportLine& line : report.lines) {
        names.push_back(line.name);
    }
    CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("identical non-degenerate inputs score 1 everywhere") {
    const char* kAntichain = "#type: antichain\nA\nB\nC\n";
    const char* kChain = "#type: chain\nA\nB\nC\n";
    const char* kOrdered = "#type: ordered_partition\nA\t1\nB\t1\nC\t2\n";
    for (const char* text : {kPartition1, kVc1, kAntichain, kChain, kOrdered}) {
        const ResultSet rs = parse_runfile(text, "same");
        const Report report = compare_report(rs, rs, CompareOptions{});
        REQUIRE(!report.lines.empty());
        for (const ReportLine& line : report.lines) {
            REQUIRE(line.value.has_value());
            CHECK(*line.value == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("partition-of-chains comparison includes the composite measure") {
    const Report report = compare_report(parse_runfile(kVc1, "vc1"), parse_runfile(kVc2, "vc2"),
                                         CompareOptions{});
    const std::string text = report.to_text();
    CHECK(text.find("poset_jaccard 0.238095") != std::string::npos);
    const ReportLine* line = find_line(report, "poset_jaccard");
    REQUIRE(line != nullptr);
    CHECK(line->params == "phi=0.5");
    CHECK(find_line(report, "rand_pair") != nullptr);
    CHECK(find_line(report, "ordered_jaccard") != nullptr);
}

TEST_CASE("chain comparison carries correlations and qrels measures") {
    const ResultSet c1 = parse_runfile("#type: chain\nd1\nd2\nd3\nd4\n", "run1");
    const ResultSet c2 = parse_runfile("#type: chain\nd1\nd3\nd2\nd4\n", "run2");
    CompareOptions options;
    options.qrels = Qrels{{"d1", "d3", "d5"}};
    options.cutoffs = {2};
    const Report report = compare_report(c1, c2, options);
    CHECK(find_line(report, "kendall_tau") != nullptr);
    CHECK(find_line(report, "spearman_rho") != nullptr);
    CHECK(find_line(report, "kendall_times_jaccard") != nullptr);
    const ReportLine* ap1 = find_line(report, "average_precision_run1");
    REQUIRE(ap1 != nullptr);
    CHECK(*ap1->value == doctest::Approx(5.0 / 9.0));
    CHECK(find_line(report, "precision_at_2_run2") != nullptr);
    CHECK(find_line(report, "recall_at_1000_run1") != nullptr);
    CHECK(find_line(report, "r_precision_run2") != nullptr);
    // Report-only composition: for run1 half of {d1,d3,d5} is reached at
    // rank 3 with 2 hits.
    const ReportLine* half = find_line(report, "precision_at_half_recall_run1");
    REQUIRE(half != nullptr);
    CHECK(*half->value == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("measure filter keeps known names and flags unknown ones") {
    const ResultSet v1 = parse_runfile(kPartition1, "v1");
    const ResultSet v2 = parse_runfile(kPartition2, "v2");
    CompareOptions options;
    options.measures = {"rand_pair", "does_not_exist"};
    const Report report = compare_report(v1, v2, options);
    CHECK(report.lines.size() == 1);
    CHECK(report.lines.front().name == "rand_pair");
    REQUIRE(report.requested_but_unknown.size() == 1);
    CHECK(report.requested_but_unknown.front() == "does_not_exist");
}

TEST_CASE("mixed shapes need the coercion flag") {
    const ResultSet chain = parse_runfile("#type: chain\nA\nB\nC\n", "c");
    const ResultSet ov = parse_runfile("#type: ordered_partition\nA\t1\nB\t1\nC\t2\n", "o");
    CHECK_THROWS_AS(compare_report(chain, ov, CompareOptions{}), ShapeMismatch);

    CompareOptions coerce;
    coerce.coerce = true;
    const Report report = compare_report(chain, ov, coerce);
    CHECK(find_line(report, "ordered_jaccard") != nullptr);

    // chain vs partition meets at plain sets
    const ResultSet partition = parse_runfile(kPartition1, "p");
    const Report sets = compare_report(chain, partition, coerce);
    CHECK(find_line(sets, "jaccard") != nullptr);
    CHECK(find_line(sets, "rand_pair") == nullptr);
}

TEST_CASE("undefined measures are reported per line without aborting") {
    const ResultSet s1 = parse_runfile("#type: partition\nA\t1\nB\t2\n", "s1");
    const ResultSet s2 = parse_runfile("#type: partition\nA\t1\nB\t2\n", "s2");
    const Report report = compare_report(s1, s2, CompareOptions{});
    const ReportLine* jp = find_line(report, "jaccard_partition");
    REQUIRE(jp != nullptr);
    CHECK_FALSE(jp->value.has_value());
    CHECK(report.any_undefined());
    const ReportLine* rp = find_line(report, "rand_pair");
    REQUIRE(rp != nullptr);
    CHECK(*rp->value == doctest::Approx(1.0));
    CHECK(report.to_text().find("jaccard_partition undefined") != std::string::npos);

    CompareOptions convention;
    convention.jaccard_singletons_one = true;
    const Report lenient = compare_report(s1, s2, convention);
    CHECK(*find_line(lenient, "jaccard_partition")->value == doctest::Approx(1.0));
}

TEST_CASE("verification passes clean and catches an injected fault") {
    const ResultSet v1 = parse_runfile(kPartition1, "v1");
    const ResultSet v2 = parse_runfile(kPartition2, "v2");
    CompareOptions options;
    options.verify = true;
    CHECK(compare_report(v1, v2, options).verify_failures.empty());

    options.verify_fault = 1e-6;
    CHECK(!compare_report(v1, v2, options).verify_failures.empty());

    options.verify_fault = 0.0;
    const ResultSet vc1 = parse_runfile(kVc1, "vc1");
    const ResultSet vc2 = parse_runfile(kVc2, "vc2");
    CHECK(compare_report(vc1, vc2, options).verify_failures.empty());
    options.verify_fault = 1e-6;
    CHECK(!compare_report(vc1, vc2, options).verify_failures.empty());

    const ResultSet c1 = parse_runfile("#type: chain\nA\nB\nC\n", "c1");
    const ResultSet c2 = parse_runfile("#type: chain\nB\nA\nC\n", "c2");
    options.verify_fault = 0.0;
    CHECK(compare_report(c1, c2, options).verify_failures.empty());
    options.verify_fault = 1e-6;
    CHECK(!compare_report(c1, c2, options).verify_failures.empty());
}

TEST_CASE("similarity matrix over three identical files") {
    const ResultSet rs = parse_runfile(kPartition1, "p");
    const MatrixResult result = similarity_matrix_csv({rs, rs, rs}, "rand_pair",
                                                      CompareOptions{});
    CHECK(result.csv ==
          "label,p,p,p\n"
          "p,1.000000,1.000000,1.000000\n"
          "p,1.000000,1.000000,1.000000\n"
          "p,1.000000,1.000000,1.000000\n");
    CHECK_FALSE(result.any_undefined);
}

TEST_CASE("similarity matrix off-diagonal equals the pairwise value") {
    const ResultSet v1 = parse_runfile(kPartition1, "v1");
    const ResultSet v2 = parse_runfile(kPartition2, "v2");
    const MatrixResult result = similarity_matrix_csv({v1, v2}, "rand_pair", CompareOptions{});
    CHECK(result.csv.find("v1,1.000000,0.733333") != std::string::npos);
    CHECK(result.csv.find("v2,0.733333,1.000000") != std::string::npos);

    CHECK_THROWS_AS(similarity_matrix_csv({v1, v2}, "kendall_tau", CompareOptions{}),
                    UndefinedMeasure);

    const ResultSet chain = parse_runfile("#type: chain\nA\nB\n", "c");
    CHECK_THROWS_AS(similarity_matrix_csv({v1, chain}, "rand_pair", CompareOptions{}),
                    ShapeMismatch);
}

TEST_CASE("scores print with six decimals, round-half-even style") {
    CHECK(format_score(0.5) == "0.500000");
    CHECK(format_score(22.0 / 30.0) == "0.733333");
    CHECK(format_score(-1.0 / 3.0) == "-0.333333");
    CHECK(format_score(5.0 / 21.0) == "0.238095");
}
