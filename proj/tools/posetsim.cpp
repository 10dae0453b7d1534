// Command-line front end: compare two answer-set files, build a similarity
// matrix across many, or export the relational view of one file.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "posetsim/relational.hpp"
#include "posetsim/report.hpp"
#include "posetsim/runfile.hpp"

namespace {

// 0 success, 1 usage or parse error, 2 measure undefined, 3 verification
// mismatch.
enum ExitCode { kOk = 0, kUsage = 1, kUndefined = 2, kVerifyFailed = 3 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw posetsim::Error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string label_from_path(const std::string& path) {
    const std::size_t slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    const std::size_t dot = name.find_last_of('.');
    if (dot != std::string::npos && dot != 0) {
        name.resize(dot);
    }
    return name;
}

posetsim::ResultSet load_runfile(const std::string& path) {
    return posetsim::parse_runfile(read_file(path), label_from_path(path));
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw posetsim::Error("cannot write '" + path + "'");
    }
    out << text;
}

struct CommonFlags {
    double phi_ratio = 0.5;
    double beta = 1.0;
    bool strict_universe = false;
    bool coerce = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--phi-ratio", flags.phi_ratio,
                    "Geometric membership ratio r in (0,1); phi(i) = r^(i-1)")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    cmd->add_option("--beta", flags.beta, "Beta of the generalized Dice measure")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--strict-universe", flags.strict_universe,
                  "Fail instead of restricting to the shared universe");
    cmd->add_flag("--coerce", flags.coerce,
                  "Compare mixed shapes by viewing one input as the other's shape");
}

posetsim::CompareOptions make_options(const CommonFlags& flags) {
    posetsim::CompareOptions options;
    options.phi_ratio = flags.phi_ratio;
    options.beta = flags.beta;
    options.strict_universe = flags.strict_universe;
    options.coerce = flags.coerce;
    return options;
}

int run_compare(const std::string& file1, const std::string& file2,
                posetsim::CompareOptions options, const std::string& qrels_path) {
    if (!qrels_path.empty()) {
        options.qrels = posetsim::parse_qrels(read_file(qrels_path));
    }
    const posetsim::ResultSet rs1 = load_runfile(file1);
    const posetsim::ResultSet rs2 = load_runfile(file2);
    const posetsim::Report report = posetsim::compare_report(rs1, rs2, options);
    std::cout << report.to_text();
    for (const std::string& name : report.requested_but_unknown) {
        std::cerr << "error: measure '" << name << "' is not applicable to these inputs\n";
    }
    if (!report.verify_failures.empty()) {
        for (const std::string& failure : report.verify_failures) {
            std::cerr << "verification mismatch: " << failure << '\n';
        }
        return kVerifyFailed;
    }
    if (!report.requested_but_unknown.empty() || report.any_undefined()) {
        return kUndefined;
    }
    return kOk;
}

int run_matrix(const std::vector<std::string>& files, const std::string& measure,
               const posetsim::CompareOptions& options, const std::string& out_path) {
    std::vector<posetsim::ResultSet> inputs;
    inputs.reserve(files.size());
    for (const std::string& file : files) {
        inputs.push_back(load_runfile(file));
    }
    const posetsim::MatrixResult result =
        posetsim::similarity_matrix_csv(inputs, measure, options);
    write_output(out_path, result.csv);
    return result.any_undefined ? kUndefined : kOk;
}

int run_export(const std::string& file, const std::vector<std::string>& kind_names,
               const std::string& dot_path, const std::string& csv_path) {
    std::vector<posetsim::RelationKind> kinds;
    for (const std::string& name : kind_names) {
        const auto kind = posetsim::relation_from_name(name);
        if (!kind) {
            throw posetsim::Error("unknown relation '" + name +
                                  "' (same_cluster, greater_than, same_rank, greater_or_equal)");
        }
        kinds.push_back(*kind);
    }
    const posetsim::ResultSet rs = load_runfile(file);
    if (!dot_path.empty()) {
        write_output(dot_path, posetsim::export_dot(rs, kinds));
    }
    if (!csv_path.empty()) {
        if (kinds.size() != 1) {
            throw posetsim::Error("--csv exports exactly one relation; pass a single --kinds");
        }
        write_output(csv_path, posetsim::adjacency_csv(posetsim::adjacency(rs, kinds[0])));
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Similarity measures for IR answer sets: plain sets, ranked lists,\n"
                 "partitions, ordered partitions and partitions of chains."};
    app.require_subcommand(1);

    // compare
    auto* compare = app.add_subcommand("compare", "Report every applicable measure for two files");
    std::string file1;
    std::string file2;
    compare->add_option("file1", file1, "First run file")->required();
    compare->add_option("file2", file2, "Second run file")->required();
    CommonFlags compare_flags;
    add_common_flags(compare, compare_flags);
    std::vector<std::string> measures;
    compare->add_option("--measures", measures, "Only report these measure names")
        ->delimiter(',');
    std::vector<std::size_t> cutoffs;
    compare->add_option("--cutoffs", cutoffs, "Precision cut-off levels (default 1,2,5,...,1000)")
        ->delimiter(',');
    std::string qrels_path;
    compare->add_option("--qrels", qrels_path, "Relevance judgments, one element id per line");
    bool verify = false;
    compare->add_flag("--verify", verify, "Re-check every value against the brute-force oracles");
    bool jaccard_singletons_one = false;
    compare->add_flag("--jaccard-singletons-one", jaccard_singletons_one,
                      "Report partition Jaccard as 1 when both partitions are all singletons");
    double verify_fault = 0.0;
    compare->add_option("--verify-fault", verify_fault)->group("");  // test shim, hidden

    // matrix
    auto* matrix = app.add_subcommand("matrix", "CSV similarity matrix over many files");
    std::vector<std::string> matrix_files;
    matrix->add_option("files", matrix_files, "Run files")->required()->expected(2, -1);
    std::string matrix_measure;
    matrix->add_option("--measure", matrix_measure, "Measure name for every cell")->required();
    CommonFlags matrix_flags;
    add_common_flags(matrix, matrix_flags);
    std::string matrix_out = "-";
    matrix->add_option("--out", matrix_out, "Output path, '-' for stdout");

    // export
    auto* exporter = app.add_subcommand("export", "Write the DOT graph or adjacency CSV");
    std::string export_file;
    exporter->add_option("file", export_file, "Run file")->required();
    std::vector<std::string> kind_names;
    exporter->add_option("--kinds", kind_names, "Relations to draw or export")->delimiter(',');
    std::string dot_path;
    exporter->add_option("--dot", dot_path, "DOT output path, '-' for stdout");
    std::string csv_path;
    exporter->add_option("--csv", csv_path, "Adjacency CSV output path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (compare->parsed()) {
            posetsim::CompareOptions options = make_options(compare_flags);
            options.measures = measures;
            if (!cutoffs.empty()) {
                options.cutoffs = cutoffs;
            }
            options.verify = verify;
            options.verify_fault = verify_fault;
            options.jaccard_singletons_one = jaccard_singletons_one;
            return run_compare(file1, file2, options, qrels_path);
        }
        if (matrix->parsed()) {
            return run_matrix(matrix_files, matrix_measure, make_options(matrix_flags),
                              matrix_out);
        }
        if (exporter->parsed()) {
            if (dot_path.empty() && csv_path.empty()) {
                throw posetsim::Error("pass --dot and/or --csv");
            }
            return run_export(export_file, kind_names, dot_path, csv_path);
        }
    } catch (const posetsim::UndefinedMeasure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUndefined;
    } catch (const posetsim::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
