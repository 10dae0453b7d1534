#pragma once

#include "posetsim/model.hpp"
#include "posetsim/ordered_measures.hpp"
#include "posetsim/partition_measures.hpp"

namespace posetsim {
// Brute-force reference implementations used to validate the closed-form
// measures. They are deliberately quadratic and share no computation with
// the code they check.
namespace oracle {

// Classifies every unordered pair of the common universe by direct class
// lookups. Both partitions must cover the same elements.
PairCensus pairs_bruteforce(const Partition& v1, const Partition& v2);

// Per-element membership sums: intersection as the sum of min(m1, m2),
// union as the sum of max(m1, m2), cardinalities as plain sums.
FuzzyCardinalities fuzzy_bruteforce(const OrderedPartition& ov1, const OrderedPartition& ov2,
                                    const FuzzyWeighting& w);

// Scores every common-element pair +1/-1 straight from the raw positions.
double tau_bruteforce(const Chain& c1, const Chain& c2);

}  // namespace oracle
}  // namespace posetsim
