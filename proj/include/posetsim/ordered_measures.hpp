#pragma once

#include <functional>
#include <string_view>

#include "posetsim/model.hpp"
#include "posetsim/set_measures.hpp"

namespace posetsim {

// Membership weight of an element as a function of its 1-based class
// index. Must be strictly decreasing, positive, and start at phi(1) <= 1;
// the default is phi(i) = 1/2^(i-1).
class FuzzyWeighting {
public:
    explicit FuzzyWeighting(std::function<double(std::size_t)> phi);

    // phi(i) = ratio^(i-1) for 0 < ratio < 1.
    static FuzzyWeighting geometric(double ratio);
    static FuzzyWeighting standard() { return geometric(0.5); }

    double operator()(std::size_t class_index) const;

    // Validates positivity, phi(1) <= 1 and strict decrease over 1..max_index.
    void check_decreasing(std::size_t max_index) const;

private:
    std::function<double(std::size_t)> phi_;
};

// The four weighted quantities every ordered measure is built from.
struct FuzzyCardinalities {
    double intersection = 0.0;
    double union_ = 0.0;
    double card1 = 0.0;
    double card2 = 0.0;
};

// Sum of |A_i| phi(i) over the classes.
double fuzzy_cardinality(const OrderedPartition& ov, const FuzzyWeighting& w);

// Sum over class pairs of |A1_i n A2_j| phi(max(i, j)): a shared element
// counts with the weight of its less important class.
double fuzzy_intersection(const OrderedPartition& ov1, const OrderedPartition& ov2,
                          const FuzzyWeighting& w);

// Shared elements weighted by phi(min(i, j)), plus each side's unshared
// elements at their own weight.
double fuzzy_union(const OrderedPartition& ov1, const OrderedPartition& ov2,
                   const FuzzyWeighting& w);

// All four quantities from the class-pair formulas in one pass.
FuzzyCardinalities fuzzy_cardinalities(const OrderedPartition& ov1, const OrderedPartition& ov2,
                                       const FuzzyWeighting& w);

// The classical similarity templates applied to fuzzy quantities. Recall
// divides by the second cardinality, Precision by the first.
enum class OrderedKind {
    Jaccard,
    Dice,
    Cosine,
    OverlapMin,
    OverlapMax,
    Recall,
    Precision,
    GeneralizedDice
};

std::string_view ordered_kind_name(OrderedKind kind);

double ordered_measure(OrderedKind kind, const OrderedPartition& ov1,
                       const OrderedPartition& ov2, const FuzzyWeighting& w, double beta = 1.0);

double ordered_measure_from(OrderedKind kind, const FuzzyCardinalities& q, double beta = 1.0);

// Composite similarity for partitions of chains: the Rand index of the
// cluster structures times the ordered Jaccard of the rank structures.
double poset_similarity(const PartitionOfChains& vc1, const PartitionOfChains& vc2,
                        const FuzzyWeighting& w,
                        UniversePolicy policy = UniversePolicy::Lenient);

// Same construction with any set-measure template in place of Jaccard.
double poset_similarity_template(StrongKind kind, const PartitionOfChains& vc1,
                                 const PartitionOfChains& vc2, const FuzzyWeighting& w,
                                 UniversePolicy policy = UniversePolicy::Lenient,
                                 double beta = 1.0);

OrderedKind ordered_kind_for(StrongKind kind);

}  // namespace posetsim
