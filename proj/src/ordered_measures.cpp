#include "posetsim/ordered_measures.hpp"

#include <algorithm>
#include <cmath>

#include "posetsim/partition_measures.hpp"

namespace posetsim {

namespace {

std::size_t class_intersection(const ElementSet& a, const ElementSet& b) {
    const ElementSet& small = a.size() <= b.size() ? a : b;
    const ElementSet& large = a.size() <= b.size() ? b : a;
    std::size_t count = 0;
    for (const Element& e : small) {
        count += large.count(e);
    }
    return count;
}

std::size_t unshared_count(const ElementSet& cls, const ElementSet& other_universe) {
    std::size_t count = 0;
    for (const Element& e : cls) {
        count += other_universe.count(e) == 0 ? 1 : 0;
    }
    return count;
}

void check_weighting(const FuzzyWeighting& w, const OrderedPartition& ov1,
                     const OrderedPartition& ov2) {
    w.check_decreasing(std::max(ov1.class_count(), ov2.class_count()));
}

double guarded_ratio(double numerator, double denominator, OrderedKind kind) {
    if (denominator <= 0.0) {
        throw UndefinedMeasure("ordered " + std::string(ordered_kind_name(kind)) +
                               " is undefined: zero denominator");
    }
    return numerator / denominator;
}

}  // namespace

FuzzyWeighting::FuzzyWeighting(std::function<double(std::size_t)> phi) : phi_(std::move(phi)) {
    if (!phi_) {
        throw InvariantViolation("fuzzy weighting needs a callable");
    }
}

FuzzyWeighting FuzzyWeighting::geometric(double ratio) {
    if (ratio <= 0.0 || ratio >= 1.0) {
        throw InvariantViolation("geometric weighting ratio must lie in (0, 1)");
    }
    return FuzzyWeighting([ratio](std::size_t i) {
        return std::pow(ratio, static_cast<double>(i - 1));
    });
}

double FuzzyWeighting::operator()(std::size_t class_index) const {
    if (class_index == 0) {
        throw InvariantViolation("class indices are 1-based");
    }
    return phi_(class_index);
}

void FuzzyWeighting::check_decreasing(std::size_t max_index) const {
    if (max_index == 0) {
        return;
    }
    double previous = phi_(1);
    if (previous > 1.0) {
        throw InvariantViolation("fuzzy weighting must satisfy phi(1) <= 1");
    }
    if (previous <= 0.0) {
        throw InvariantViolation("fuzzy weighting must be positive");
    }
    for (std::size_t i = 2; i <= max_index; ++i) {
        const double value = phi_(i);
        if (value <= 0.0) {
            throw InvariantViolation("fuzzy weighting must be positive");
        }
        if (value >= previous) {
            throw InvariantViolation("fuzzy weighting must be strictly decreasing");
        }
        previous = value;
    }
}

double fuzzy_cardinality(const OrderedPartition& ov, const FuzzyWeighting& w) {
    w.check_decreasing(ov.class_count());
    double sum = 0.0;
    for (std::size_t i = 0; i < ov.class_count(); ++i) {
        sum += static_cast<double>(ov.classes()[i].size()) * w(i + 1);
    }
    return sum;
}

double fuzzy_intersection(const OrderedPartition& ov1, const OrderedPartition& ov2,
                          const FuzzyWeighting& w) {
    check_weighting(w, ov1, ov2);
    double sum = 0.0;
    for (std::size_t i = 0; i < ov1.class_count(); ++i) {
        for (std::size_t j = 0; j < ov2.class_count(); ++j) {
            const std::size_t shared = class_intersection(ov1.classes()[i], ov2.classes()[j]);
            if (shared != 0) {
                sum += static_cast<double>(shared) * w(std::max(i, j) + 1);
            }
        }
    }
    return sum;
}

double fuzzy_union(const OrderedPartition& ov1, const OrderedPartition& ov2,
                   const FuzzyWeighting& w) {
    check_weighting(w, ov1, ov2);
    double sum = 0.0;
    for (std::size_t i = 0; i < ov1.class_count(); ++i) {
        for (std::size_t j = 0; j < ov2.class_count(); ++j) {
            const std::size_t shared = class_intersection(ov1.classes()[i], ov2.classes()[j]);
            if (shared != 0) {
                sum += static_cast<double>(shared) * w(std::min(i, j) + 1);
            }
        }
    }
    for (std::size_t i = 0; i < ov1.class_count(); ++i) {
        const std::size_t only1 = unshared_count(ov1.classes()[i], ov2.universe());
        if (only1 != 0) {
            sum += static_cast<double>(only1) * w(i + 1);
        }
    }
    for (std::size_t j = 0; j < ov2.class_count(); ++j) {
        const std::size_t only2 = unshared_count(ov2.classes()[j], ov1.universe());
        if (only2 != 0) {
            sum += static_cast<double>(only2) * w(j + 1);
        }
    }
    return sum;
}

FuzzyCardinalities fuzzy_cardinalities(const OrderedPartition& ov1, const OrderedPartition& ov2,
                                       const FuzzyWeighting& w) {
    FuzzyCardinalities q;
    q.intersection = fuzzy_intersection(ov1, ov2, w);
    q.union_ = fuzzy_union(ov1, ov2, w);
    q.card1 = fuzzy_cardinality(ov1, w);
    q.card2 = fuzzy_cardinality(ov2, w);
    return q;
}

std::string_view ordered_kind_name(OrderedKind kind) {
    switch (kind) {
        case OrderedKind::Jaccard: return "jaccard";
        case OrderedKind::Dice: return "dice";
        case OrderedKind::Cosine: return "cosine";
        case OrderedKind::OverlapMin: return "overlap_min";
        case OrderedKind::OverlapMax: return "overlap_max";
        case OrderedKind::Recall: return "recall";
        case OrderedKind::Precision: return "precision";
        case OrderedKind::GeneralizedDice: return "generalized_dice";
    }
    return "unknown";
}

double ordered_measure_from(OrderedKind kind, const FuzzyCardinalities& q, double beta) {
    if (beta <= 0.0) {
        throw InvariantViolation("beta must be positive");
    }
    switch (kind) {
        case OrderedKind::Jaccard: return guarded_ratio(q.intersection, q.union_, kind);
        case OrderedKind::Dice:
            return guarded_ratio(2.0 * q.intersection, q.card1 + q.card2, kind);
        case OrderedKind::Cosine:
            return guarded_ratio(q.intersection, std::sqrt(q.card1 * q.card2), kind);
        case OrderedKind::OverlapMin:
            return guarded_ratio(q.intersection, std::min(q.card1, q.card2), kind);
        case OrderedKind::OverlapMax:
            return guarded_ratio(q.intersection, std::max(q.card1, q.card2), kind);
        case OrderedKind::Recall: return guarded_ratio(q.intersection, q.card2, kind);
        case OrderedKind::Precision: return guarded_ratio(q.intersection, q.card1, kind);
        case OrderedKind::GeneralizedDice:
            return guarded_ratio((1.0 + beta * beta) * q.intersection,
                                 beta * beta * q.card2 + q.card1, kind);
    }
    throw InvariantViolation("unknown ordered measure kind");
}

double ordered_measure(OrderedKind kind, const OrderedPartition& ov1,
                       const OrderedPartition& ov2, const FuzzyWeighting& w, double beta) {
    return ordered_measure_from(kind, fuzzy_cardinalities(ov1, ov2, w), beta);
}

OrderedKind ordered_kind_for(StrongKind kind) {
    switch (kind) {
        case StrongKind::Jaccard: return OrderedKind::Jaccard;
        case StrongKind::Dice: return OrderedKind::Dice;
        case StrongKind::Cosine: return OrderedKind::Cosine;
        case StrongKind::OverlapMin: return OrderedKind::OverlapMin;
        case StrongKind::OverlapMax: return OrderedKind::OverlapMax;
        case StrongKind::GeneralizedDice: return OrderedKind::GeneralizedDice;
    }
    throw InvariantViolation("unknown strong measure kind");
}

double poset_similarity_template(StrongKind kind, const PartitionOfChains& vc1,
                                 const PartitionOfChains& vc2, const FuzzyWeighting& w,
                                 UniversePolicy policy, double beta) {
    const double cluster_factor =
        rand_pair(forget_chain_order(vc1), forget_chain_order(vc2), policy);
    const double rank_factor =
        ordered_measure(ordered_kind_for(kind), rank_classes(vc1), rank_classes(vc2), w, beta);
    return cluster_factor * rank_factor;
}

double poset_similarity(const PartitionOfChains& vc1, const PartitionOfChains& vc2,
                        const FuzzyWeighting& w, UniversePolicy policy) {
    return poset_similarity_template(StrongKind::Jaccard, vc1, vc2, w, policy);
}

}  // namespace posetsim
