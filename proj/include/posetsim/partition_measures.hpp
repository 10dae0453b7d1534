#pragma once

#include <optional>

#include "posetsim/model.hpp"
#include "posetsim/relational.hpp"

namespace posetsim {

// Classification of the n(n-1)/2 unordered element pairs: a per pair
// co-clustered in both partitions, b co-clustered only in the second,
// c co-clustered only in the first, d co-clustered in neither.
struct PairCensus {
    long long a = 0;
    long long b = 0;
    long long c = 0;
    long long d = 0;
    long long n = 0;

    long long agreements() const { return a + d; }
    long long disagreements() const { return b + c; }
    long long total_pairs() const { return n * (n - 1) / 2; }
};

// Pair counts computed from the contingency table.
PairCensus pair_census(const Partition& v1, const Partition& v2,
                       UniversePolicy policy = UniversePolicy::Lenient);

// Fraction of pairs in accord: 2(a + d) / (n(n-1)). Needs n >= 2.
double rand_pair(const Partition& v1, const Partition& v2,
                 UniversePolicy policy = UniversePolicy::Lenient);

// Adjacency-matrix form of the Rand index: the fraction of the n^2 ordered
// entry positions, unit diagonals included, where the two matrices agree.
// Relates to rand_pair by rand_relational = (1 + (n-1) rand_pair) / n.
double rand_relational(const Partition& v1, const Partition& v2,
                       UniversePolicy policy = UniversePolicy::Lenient);

// 2(a + d + b) / (n(n-1)); reaches 1 exactly when v1 refines v2, i.e. every
// class of v1 lies inside some class of v2.
double rand_asymmetric(const Partition& v1, const Partition& v2,
                       UniversePolicy policy = UniversePolicy::Lenient);

// a / (a + b + c). When both partitions are all singletons the ratio is
// 0/0; the convention value is returned if given, otherwise this throws
// UndefinedMeasure.
double jaccard_partition(const Partition& v1, const Partition& v2,
                         UniversePolicy policy = UniversePolicy::Lenient,
                         std::optional<double> all_singletons_value = std::nullopt);

}  // namespace posetsim
