#include "posetsim/partition_measures.hpp"

namespace posetsim {

namespace {

long long sum_of_squares(const Eigen::VectorXi& v) {
    return v.cast<long long>().array().square().sum();
}

void need_pairs(long long n) {
    if (n < 2) {
        throw TooFewElements("pair-based measures need at least 2 shared elements");
    }
}

}  // namespace

PairCensus pair_census(const Partition& v1, const Partition& v2, UniversePolicy policy) {
    const ContingencyTable table = contingency(v1, v2, policy);
    // Co-clustered ordered pairs in both / first / second, diagonal included,
    // equal the sums of squared cell, row and column counts.
    const long long both = table.counts.cast<long long>().array().square().sum();
    const long long first = sum_of_squares(table.row_sums);
    const long long second = sum_of_squares(table.col_sums);
    PairCensus census;
    census.n = table.total;
    census.a = (both - table.total) / 2;
    census.c = (first - both) / 2;
    census.b = (second - both) / 2;
    census.d = census.total_pairs() - census.a - census.b - census.c;
    return census;
}

double rand_pair(const Partition& v1, const Partition& v2, UniversePolicy policy) {
    const PairCensus census = pair_census(v1, v2, policy);
    need_pairs(census.n);
    return 2.0 * static_cast<double>(census.agreements()) /
           static_cast<double>(census.n * (census.n - 1));
}

double rand_relational(const Partition& v1, const Partition& v2, UniversePolicy policy) {
    auto [r1, r2] = restrict_to_shared(v1, v2, policy);
    need_pairs(static_cast<long long>(r1.size()));
    const AdjacencyMatrix m1 = adjacency(r1, RelationKind::SameCluster);
    const AdjacencyMatrix m2 = adjacency(r2, RelationKind::SameCluster);
    const long long agreements = (m1.bits.array() == m2.bits.array()).count();
    const auto n = static_cast<long long>(r1.size());
    return static_cast<double>(agreements) / static_cast<double>(n * n);
}

double rand_asymmetric(const Partition& v1, const Partition& v2, UniversePolicy policy) {
    const PairCensus census = pair_census(v1, v2, policy);
    need_pairs(census.n);
    return 2.0 * static_cast<double>(census.agreements() + census.b) /
           static_cast<double>(census.n * (census.n - 1));
}

double jaccard_partition(const Partition& v1, const Partition& v2, UniversePolicy policy,
                         std::optional<double> all_singletons_value) {
    const PairCensus census = pair_census(v1, v2, policy);
    const long long co_clustered = census.a + census.b + census.c;
    if (co_clustered == 0) {
        if (all_singletons_value) {
            return *all_singletons_value;
        }
        throw UndefinedMeasure(
            "partition Jaccard is undefined: no pair is co-clustered in either partition");
    }
    return static_cast<double>(census.a) / static_cast<double>(co_clustered);
}

}  // namespace posetsim
