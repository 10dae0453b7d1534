#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetsim/model.hpp"
#include "posetsim/rank_measures.hpp"

namespace posetsim {

std::vector<std::size_t> default_cutoffs();

struct CompareOptions {
    // Empty means every measure applicable to the shape pair.
    std::vector<std::string> measures;
    double phi_ratio = 0.5;
    double beta = 1.0;
    std::vector<std::size_t> cutoffs = default_cutoffs();
    std::optional<Qrels> qrels;
    bool strict_universe = false;
    bool coerce = false;
    // Report the partition Jaccard as 1 when both partitions are all
    // singletons instead of flagging it undefined.
    bool jaccard_singletons_one = false;
    bool verify = false;
    // Test shim: offset added to one closed-form value before each oracle
    // comparison, so the verification path itself can be exercised.
    double verify_fault = 0.0;

    UniversePolicy policy() const {
        return strict_universe ? UniversePolicy::Strict : UniversePolicy::Lenient;
    }
};

struct ReportLine {
    std::string name;
    std::optional<double> value;  // empty when the measure has no value here
    std::string params;
    std::string note;
};

struct Report {
    std::string label1;
    std::string label2;
    std::vector<ReportLine> lines;           // sorted by measure name
    std::vector<std::string> requested_but_unknown;
    std::vector<std::string> verify_failures;

    bool any_undefined() const;
    std::string to_text() const;
};

// Every applicable measure for the (possibly coerced) shape pair, plus the
// oracle cross-checks when options.verify is set.
Report compare_report(const ResultSet& rs1, const ResultSet& rs2, const CompareOptions& options);

struct MatrixResult {
    std::string csv;
    bool any_undefined = false;
};

// Square CSV matrix of one measure across all inputs.
MatrixResult similarity_matrix_csv(const std::vector<ResultSet>& inputs,
                                   const std::string& measure, const CompareOptions& options);

// Fixed six decimal places, locale independent.
std::string format_score(double value);

}  // namespace posetsim
