#include "posetsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "posetsim/oracle.hpp"
#include "posetsim/ordered_measures.hpp"
#include "posetsim/partition_measures.hpp"
#include "posetsim/relational.hpp"
#include "posetsim/set_measures.hpp"

namespace posetsim {

namespace {

constexpr double kVerifyTolerance = 1e-12;

std::string format_param(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", value);
    return buffer;
}

// Collects measure lines, turning per-measure errors into `undefined` rows
// instead of aborting the whole report.
class LineCollector {
public:
    explicit LineCollector(std::vector<ReportLine>& lines) : lines_(lines) {}

    void add(std::string name, const std::function<double()>& compute, std::string params = "") {
        ReportLine line;
        line.name = std::move(name);
        line.params = std::move(params);
        try {
            line.value = compute();
        } catch (const UndefinedMeasure& e) {
            line.note = e.what();
        } catch (const TooFewElements& e) {
            line.note = e.what();
        } catch (const NoCommonElements& e) {
            line.note = e.what();
        } catch (const UniverseMismatch& e) {
            line.note = e.what();
        }
        lines_.push_back(std::move(line));
    }

private:
    std::vector<ReportLine>& lines_;
};

ResultSet coerce_to(const ResultSet& rs, Shape target) {
    if (rs.shape() == target) {
        return rs;
    }
    ResultSet out;
    out.label = rs.label;
    switch (rs.shape()) {
        case Shape::Chain: {
            const auto& chain = rs.as<Chain>();
            if (target == Shape::Antichain) {
                out.value = Antichain(chain.elements());
                return out;
            }
            if (target == Shape::OrderedPartition) {
                out.value = singleton_classes(chain);
                return out;
            }
            if (target == Shape::PartitionOfChains) {
                out.value = PartitionOfChains({chain});
                return out;
            }
            break;
        }
        case Shape::OrderedPartition: {
            const auto& ov = rs.as<OrderedPartition>();
            if (target == Shape::Partition) {
                out.value = forget_class_order(ov);
                return out;
            }
            if (target == Shape::Antichain) {
                out.value = Antichain(ov.universe());
                return out;
            }
            break;
        }
        case Shape::Partition: {
            if (target == Shape::Antichain) {
                out.value = Antichain(rs.as<Partition>().universe());
                return out;
            }
            break;
        }
        case Shape::PartitionOfChains: {
            const auto& vc = rs.as<PartitionOfChains>();
            if (target == Shape::Partition) {
                out.value = forget_chain_order(vc);
                return out;
            }
            if (target == Shape::OrderedPartition) {
                out.value = rank_classes(vc);
                return out;
            }
            if (target == Shape::Antichain) {
                out.value = Antichain(vc.universe());
                return out;
            }
            break;
        }
        case Shape::Antichain:
            break;
    }
    throw ShapeMismatch("cannot view a " + std::string(shape_name(rs.shape())) + " as a " +
                        std::string(shape_name(target)));
}

bool coercible(Shape from, Shape to) {
    if (from == to) {
        return true;
    }
    switch (from) {
        case Shape::Chain:
            return to == Shape::Antichain || to == Shape::OrderedPartition ||
                   to == Shape::PartitionOfChains;
        case Shape::OrderedPartition:
            return to == Shape::Partition || to == Shape::Antichain;
        case Shape::Partition:
            return to == Shape::Antichain;
        case Shape::PartitionOfChains:
            return to == Shape::Partition || to == Shape::OrderedPartition ||
                   to == Shape::Antichain;
        case Shape::Antichain:
            return false;
    }
    return false;
}

// Brings the two inputs to one shape. Prefers viewing one input as the
// other's shape; otherwise both meet at the richest common shape.
std::pair<ResultSet, ResultSet> align_shapes(const ResultSet& rs1, const ResultSet& rs2,
                                             bool coerce) {
    if (rs1.shape() == rs2.shape()) {
        return {rs1, rs2};
    }
    if (!coerce) {
        throw ShapeMismatch("inputs have shapes " + std::string(shape_name(rs1.shape())) +
                            " and " + std::string(shape_name(rs2.shape())) +
                            "; pass --coerce to compare them");
    }
    if (coercible(rs1.shape(), rs2.shape())) {
        return {coerce_to(rs1, rs2.shape()), rs2};
    }
    if (coercible(rs2.shape(), rs1.shape())) {
        return {rs1, coerce_to(rs2, rs1.shape())};
    }
    for (Shape target : {Shape::OrderedPartition, Shape::Partition, Shape::Antichain}) {
        if (coercible(rs1.shape(), target) && coercible(rs2.shape(), target)) {
            return {coerce_to(rs1, target), coerce_to(rs2, target)};
        }
    }
    throw ShapeMismatch("no common shape for the two inputs");
}

void add_set_lines(LineCollector& out, const Antichain& s1, const Antichain& s2,
                   const CompareOptions& opt, bool weak_too) {
    for (StrongKind kind : {StrongKind::Cosine, StrongKind::Dice, StrongKind::Jaccard,
                            StrongKind::OverlapMax, StrongKind::OverlapMin}) {
        out.add(std::string(strong_kind_name(kind)),
                [kind, &s1, &s2] { return strong_measure(kind, s1, s2); });
    }
    out.add("generalized_dice",
            [&s1, &s2, &opt] {
                return strong_measure(StrongKind::GeneralizedDice, s1, s2, opt.beta);
            },
            "beta=" + format_param(opt.beta));
    if (weak_too) {
        out.add("precision", [&s1, &s2] { return weak_measure(WeakKind::Precision, s1, s2); });
        out.add("recall", [&s1, &s2] { return weak_measure(WeakKind::Recall, s1, s2); });
    }
}

void add_partition_lines(LineCollector& out, const Partition& v1, const Partition& v2,
                         const CompareOptions& opt) {
    const UniversePolicy policy = opt.policy();
    out.add("jaccard_partition", [&v1, &v2, policy, &opt] {
        return jaccard_partition(v1, v2, policy,
                                 opt.jaccard_singletons_one ? std::optional<double>(1.0)
                                                            : std::nullopt);
    });
    out.add("rand_asymmetric", [&v1, &v2, policy] { return rand_asymmetric(v1, v2, policy); });
    out.add("rand_pair", [&v1, &v2, policy] { return rand_pair(v1, v2, policy); });
    out.add("rand_relational", [&v1, &v2, policy] { return rand_relational(v1, v2, policy); });
}

void add_ordered_lines(LineCollector& out, const OrderedPartition& ov1,
                       const OrderedPartition& ov2, const FuzzyWeighting& w,
                       const CompareOptions& opt) {
    const std::string phi = "phi=" + format_param(opt.phi_ratio);
    for (OrderedKind kind :
         {OrderedKind::Cosine, OrderedKind::Dice, OrderedKind::Jaccard, OrderedKind::OverlapMax,
          OrderedKind::OverlapMin, OrderedKind::Precision, OrderedKind::Recall}) {
        out.add("ordered_" + std::string(ordered_kind_name(kind)),
                [kind, &ov1, &ov2, &w] { return ordered_measure(kind, ov1, ov2, w); }, phi);
    }
}

// Report-only composition: precision at the earliest rank where at least
// half of the relevant elements have been retrieved, zero if never.
double precision_at_half_recall(const Chain& run, const Qrels& qrels) {
    if (qrels.relevant.empty()) {
        throw UndefinedMeasure("precision at half recall is undefined: no relevant elements");
    }
    const std::size_t needed = (qrels.relevant.size() + 1) / 2;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < run.size(); ++i) {
        hits += qrels.relevant.count(run.sequence()[i]);
        if (hits >= needed) {
            return static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return 0.0;
}

void add_qrels_lines(LineCollector& out, const Chain& run, const Qrels& qrels, int which,
                     const CompareOptions& opt) {
    const std::string tag = "_run" + std::to_string(which);
    out.add("average_precision" + tag, [&run, &qrels] { return average_precision(run, qrels); });
    for (std::size_t k : opt.cutoffs) {
        out.add("precision_at_" + std::to_string(k) + tag,
                [&run, &qrels, k] { return precision_at(run, qrels, k); });
    }
    out.add("precision_at_half_recall" + tag,
            [&run, &qrels] { return precision_at_half_recall(run, qrels); });
    out.add("r_precision" + tag, [&run, &qrels] { return r_precision(run, qrels); });
    out.add("recall_at_1000" + tag, [&run, &qrels] { return recall_at(run, qrels, 1000); });
}

void add_chain_lines(LineCollector& out, const Chain& c1, const Chain& c2,
                     const CompareOptions& opt) {
    out.add("kendall_tau", [&c1, &c2] { return kendall_tau(c1, c2); });
    out.add("spearman_rho", [&c1, &c2] { return spearman_rho(c1, c2); });
    out.add("kendall_times_jaccard", [&c1, &c2] {
        return ordered_combination(c1, c2, StrongKind::Jaccard, CorrelationKind::Kendall);
    });
    out.add("spearman_times_jaccard", [&c1, &c2] {
        return ordered_combination(c1, c2, StrongKind::Jaccard, CorrelationKind::Spearman);
    });
    add_set_lines(out, Antichain(c1.elements()), Antichain(c2.elements()), opt, false);
    if (opt.qrels) {
        add_qrels_lines(out, c1, *opt.qrels, 1, opt);
        add_qrels_lines(out, c2, *opt.qrels, 2, opt);
    }
}

void add_poset_lines(LineCollector& out, const PartitionOfChains& vc1,
                     const PartitionOfChains& vc2, const FuzzyWeighting& w,
                     const CompareOptions& opt) {
    const UniversePolicy policy = opt.policy();
    const std::string phi = "phi=" + format_param(opt.phi_ratio);
    for (StrongKind kind : {StrongKind::Cosine, StrongKind::Dice, StrongKind::Jaccard,
                            StrongKind::OverlapMax, StrongKind::OverlapMin}) {
        out.add("poset_" + std::string(strong_kind_name(kind)),
                [kind, &vc1, &vc2, &w, policy] {
                    return poset_similarity_template(kind, vc1, vc2, w, policy);
                },
                phi);
    }
    out.add("poset_generalized_dice",
            [&vc1, &vc2, &w, policy, &opt] {
                return poset_similarity_template(StrongKind::GeneralizedDice, vc1, vc2, w,
                                                 policy, opt.beta);
            },
            phi + " beta=" + format_param(opt.beta));
}

// Oracle cross-checks. Each check recomputes the quantity along an
// independent route and records any disagreement.

void check_close(double closed, double reference, const std::string& what,
                 std::vector<std::string>& failures) {
    if (!(std::abs(closed - reference) <= kVerifyTolerance)) {
        std::ostringstream message;
        message.precision(17);
        message << what << ": closed form " << closed << " vs oracle " << reference;
        failures.push_back(message.str());
    }
}

void check_count(long long closed, long long reference, const std::string& what,
                 std::vector<std::string>& failures) {
    if (closed != reference) {
        failures.push_back(what + ": closed form " + std::to_string(closed) + " vs oracle " +
                           std::to_string(reference));
    }
}

void verify_partition_pair(const Partition& v1, const Partition& v2, const CompareOptions& opt,
                           std::vector<std::string>& failures) {
    if (opt.policy() == UniversePolicy::Strict && v1.universe() != v2.universe()) {
        return;  // the measure lines already report the mismatch
    }
    auto [r1, r2] = restrict_to_shared(v1, v2, opt.policy());
    if (r1.size() < 2) {
        return;
    }
    const PairCensus closed = pair_census(v1, v2, opt.policy());
    const PairCensus brute = oracle::pairs_bruteforce(r1, r2);
    check_count(closed.a, brute.a, "pair census a", failures);
    check_count(closed.b, brute.b, "pair census b", failures);
    check_count(closed.c, brute.c, "pair census c", failures);
    check_count(closed.d, brute.d, "pair census d", failures);
    check_count(closed.a + closed.b + closed.c + closed.d, brute.total_pairs(),
                "pair census total", failures);

    const double pairs = static_cast<double>(brute.n * (brute.n - 1));
    const double rand_brute = 2.0 * static_cast<double>(brute.agreements()) / pairs;
    check_close(rand_pair(v1, v2, opt.policy()) + opt.verify_fault, rand_brute, "rand_pair",
                failures);
    check_close(rand_asymmetric(v1, v2, opt.policy()),
                2.0 * static_cast<double>(brute.agreements() + brute.b) / pairs,
                "rand_asymmetric", failures);
    const auto n = static_cast<double>(brute.n);
    check_close(rand_relational(v1, v2, opt.policy()), (1.0 + (n - 1.0) * rand_brute) / n,
                "rand_relational", failures);
    if (brute.a + brute.b + brute.c > 0) {
        check_close(jaccard_partition(v1, v2, opt.policy()),
                    static_cast<double>(brute.a) /
                        static_cast<double>(brute.a + brute.b + brute.c),
                    "jaccard_partition", failures);
    }

    // Linearization identities between contingency counts and matrix sums.
    const ContingencyTable table = contingency(r1, r2, opt.policy());
    const AdjacencyMatrix m1 = adjacency(r1, RelationKind::SameCluster);
    const AdjacencyMatrix m2 = adjacency(r2, RelationKind::SameCluster);
    const long long cells = table.counts.cast<long long>().array().square().sum();
    const long long rows = table.row_sums.cast<long long>().array().square().sum();
    const long long cols = table.col_sums.cast<long long>().array().square().sum();
    check_count(cells, (m1.bits.array() * m2.bits.array()).cast<long long>().sum(),
                "sum n_uv^2 vs sum a1*a2", failures);
    check_count(rows, m1.bits.cast<long long>().sum(), "sum n_u.^2 vs sum a1", failures);
    check_count(cols, m2.bits.cast<long long>().sum(), "sum n_.v^2 vs sum a2", failures);
}

void verify_ordered_pair(const OrderedPartition& ov1, const OrderedPartition& ov2,
                         const FuzzyWeighting& w, const CompareOptions& opt,
                         std::vector<std::string>& failures) {
    FuzzyCardinalities closed = fuzzy_cardinalities(ov1, ov2, w);
    const FuzzyCardinalities brute = oracle::fuzzy_bruteforce(ov1, ov2, w);
    closed.intersection += opt.verify_fault;
    check_close(closed.intersection, brute.intersection, "fuzzy intersection", failures);
    check_close(closed.union_, brute.union_, "fuzzy union", failures);
    check_close(closed.card1, brute.card1, "fuzzy cardinality 1", failures);
    check_close(closed.card2, brute.card2, "fuzzy cardinality 2", failures);
    check_close(brute.intersection + brute.union_, brute.card1 + brute.card2,
                "fuzzy inclusion-exclusion", failures);
}

void verify_chain_pair(const Chain& c1, const Chain& c2, const CompareOptions& opt,
                       std::vector<std::string>& failures) {
    std::optional<double> closed;
    std::optional<double> brute;
    try {
        closed = kendall_tau(c1, c2) + opt.verify_fault;
    } catch (const NoCommonElements&) {
    }
    try {
        brute = oracle::tau_bruteforce(c1, c2);
    } catch (const NoCommonElements&) {
    }
    if (closed.has_value() != brute.has_value()) {
        failures.push_back("kendall_tau: one route has a value, the other does not");
        return;
    }
    if (closed) {
        check_close(*closed, *brute, "kendall_tau", failures);
    }
}

void verify_antichain_pair(const Antichain& s1, const Antichain& s2, const CompareOptions& opt,
                           std::vector<std::string>& failures) {
    ElementSet all = s1.elements();
    all.insert(s2.elements().begin(), s2.elements().end());
    const std::vector<Element> universe(all.begin(), all.end());
    const auto closed =
        static_cast<double>(dot_intersection(s1, s2, universe)) + opt.verify_fault;
    ElementSet shared;
    std::set_intersection(s1.elements().begin(), s1.elements().end(), s2.elements().begin(),
                          s2.elements().end(), std::inserter(shared, shared.end()));
    check_close(closed, static_cast<double>(shared.size()), "dot intersection", failures);
}

void run_verification(const ResultSet& rs1, const ResultSet& rs2, const FuzzyWeighting& w,
                      const CompareOptions& opt, std::vector<std::string>& failures) {
    switch (rs1.shape()) {
        case Shape::Antichain:
            verify_antichain_pair(rs1.as<Antichain>(), rs2.as<Antichain>(), opt, failures);
            return;
        case Shape::Chain:
            verify_chain_pair(rs1.as<Chain>(), rs2.as<Chain>(), opt, failures);
            return;
        case Shape::Partition:
            verify_partition_pair(rs1.as<Partition>(), rs2.as<Partition>(), opt, failures);
            return;
        case Shape::OrderedPartition:
            verify_ordered_pair(rs1.as<OrderedPartition>(), rs2.as<OrderedPartition>(), w, opt,
                                failures);
            return;
        case Shape::PartitionOfChains: {
            const auto& vc1 = rs1.as<PartitionOfChains>();
            const auto& vc2 = rs2.as<PartitionOfChains>();
            verify_partition_pair(forget_chain_order(vc1), forget_chain_order(vc2), opt,
                                  failures);
            verify_ordered_pair(rank_classes(vc1), rank_classes(vc2), w, opt, failures);
            return;
        }
    }
}

}  // namespace

std::vector<std::size_t> default_cutoffs() {
    return {1, 2, 5, 10, 15, 20, 30, 50, 100, 300, 1000};
}

bool Report::any_undefined() const {
    return std::any_of(lines.begin(), lines.end(),
                       [](const ReportLine& line) { return !line.value.has_value(); });
}

std::string Report::to_text() const {
    std::ostringstream out;
    if (!label1.empty() || !label2.empty()) {
        out << "# compare: " << label1 << " vs " << label2 << '\n';
    }
    for (const ReportLine& line : lines) {
        out << line.name << ' ';
        if (line.value) {
            out << format_score(*line.value);
        } else {
            out << "undefined";
        }
        if (!line.params.empty()) {
            out << ' ' << line.params;
        }
        if (!line.value && !line.note.empty()) {
            out << " (" << line.note << ')';
        }
        out << '\n';
    }
    return out.str();
}

Report compare_report(const ResultSet& rs1, const ResultSet& rs2,
                      const CompareOptions& options) {
    auto [a, b] = align_shapes(rs1, rs2, options.coerce);
    if (options.qrels && a.shape() != Shape::Chain) {
        throw ShapeMismatch("--qrels measures apply to chains only");
    }

    Report report;
    report.label1 = rs1.label;
    report.label2 = rs2.label;
    LineCollector out(report.lines);
    const FuzzyWeighting weighting = FuzzyWeighting::geometric(options.phi_ratio);

    switch (a.shape()) {
        case Shape::Antichain:
            add_set_lines(out, a.as<Antichain>(), b.as<Antichain>(), options, true);
            break;
        case Shape::Chain:
            add_chain_lines(out, a.as<Chain>(), b.as<Chain>(), options);
            break;
        case Shape::Partition:
            add_partition_lines(out, a.as<Partition>(), b.as<Partition>(), options);
            break;
        case Shape::OrderedPartition: {
            const auto& ov1 = a.as<OrderedPartition>();
            const auto& ov2 = b.as<OrderedPartition>();
            add_ordered_lines(out, ov1, ov2, weighting, options);
            add_partition_lines(out, forget_class_order(ov1), forget_class_order(ov2), options);
            break;
        }
        case Shape::PartitionOfChains: {
            const auto& vc1 = a.as<PartitionOfChains>();
            const auto& vc2 = b.as<PartitionOfChains>();
            add_poset_lines(out, vc1, vc2, weighting, options);
            add_partition_lines(out, forget_chain_order(vc1), forget_chain_order(vc2), options);
            add_ordered_lines(out, rank_classes(vc1), rank_classes(vc2), weighting, options);
            break;
        }
    }

    if (!options.measures.empty()) {
        std::vector<ReportLine> kept;
        for (const std::string& wanted : options.measures) {
            const bool known = std::any_of(
                report.lines.begin(), report.lines.end(),
                [&wanted](const ReportLine& line) { return line.name == wanted; });
            if (!known) {
                report.requested_but_unknown.push_back(wanted);
            }
        }
        for (ReportLine& line : report.lines) {
            if (std::find(options.measures.begin(), options.measures.end(), line.name) !=
                options.measures.end()) {
                kept.push_back(std::move(line));
            }
        }
        report.lines = std::move(kept);
    }

    std::sort(report.lines.begin(), report.lines.end(),
              [](const ReportLine& x, const ReportLine& y) { return x.name < y.name; });

    if (options.verify) {
        run_verification(a, b, weighting, options, report.verify_failures);
    }
    return report;
}

MatrixResult similarity_matrix_csv(const std::vector<ResultSet>& inputs,
                                   const std::string& measure, const CompareOptions& options) {
    if (inputs.size() < 2) {
        throw InvariantViolation("a similarity matrix needs at least two inputs");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        labels.push_back(inputs[i].label.empty() ? "input" + std::to_string(i + 1)
                                                 : inputs[i].label);
    }
    CompareOptions cell_options = options;
    cell_options.measures = {measure};
    cell_options.verify = false;

    MatrixResult result;
    std::ostringstream out;
    out << "label";
    for (const std::string& label : labels) {
        out << ',' << label;
    }
    out << '\n';
    bool seen_anywhere = false;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        out << labels[i];
        for (std::size_t j = 0; j < inputs.size(); ++j) {
            const Report report = compare_report(inputs[i], inputs[j], cell_options);
            out << ',';
            if (report.lines.empty()) {
                out << "unknown";
            } else if (report.lines.front().value) {
                seen_anywhere = true;
                out << format_score(*report.lines.front().value);
            } else {
                seen_anywhere = true;
                result.any_undefined = true;
                out << "undefined";
            }
        }
        out << '\n';
    }
    if (!seen_anywhere) {
        throw UndefinedMeasure("measure '" + measure + "' is not applicable to these inputs");
    }
    result.csv = out.str();
    return result;
}

std::string format_score(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

}  // namespace posetsim
