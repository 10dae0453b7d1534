#include "posetsim/set_measures.hpp"

#include <algorithm>
#include <cmath>

namespace posetsim {

namespace {

std::size_t intersection_size(const ElementSet& a, const ElementSet& b) {
    const ElementSet& small = a.size() <= b.size() ? a : b;
    const ElementSet& large = a.size() <= b.size() ? b : a;
    std::size_t count = 0;
    for (const Element& e : small) {
        count += large.count(e);
    }
    return count;
}

}  // namespace

std::string_view strong_kind_name(StrongKind kind) {
    switch (kind) {
        case StrongKind::Jaccard: return "jaccard";
        case StrongKind::Dice: return "dice";
        case StrongKind::Cosine: return "cosine";
        case StrongKind::OverlapMin: return "overlap_min";
        case StrongKind::OverlapMax: return "overlap_max";
        case StrongKind::GeneralizedDice: return "generalized_dice";
    }
    return "unknown";
}

double strong_measure(StrongKind kind, const Antichain& s1, const Antichain& s2, double beta) {
    if (beta <= 0.0) {
        throw InvariantViolation("beta must be positive");
    }
    const auto n1 = static_cast<double>(s1.size());
    const auto n2 = static_cast<double>(s2.size());
    if (s1.size() == 0 && s2.size() == 0) {
        return 1.0;
    }
    if (s1.size() == 0 || s2.size() == 0) {
        return 0.0;
    }
    const auto inter = static_cast<double>(intersection_size(s1.elements(), s2.elements()));
    switch (kind) {
        case StrongKind::Jaccard: return inter / (n1 + n2 - inter);
        case StrongKind::Dice: return 2.0 * inter / (n1 + n2);
        case StrongKind::Cosine: return inter / std::sqrt(n1 * n2);
        case StrongKind::OverlapMin: return inter / std::min(n1, n2);
        case StrongKind::OverlapMax: return inter / std::max(n1, n2);
        case StrongKind::GeneralizedDice:
            return (1.0 + beta * beta) * inter / (beta * beta * n2 + n1);
    }
    throw InvariantViolation("unknown strong measure kind");
}

double weak_measure(WeakKind kind, const Antichain& retrieved, const Antichain& relevant,
                    std::optional<double> empty_denominator_value) {
    const Antichain& denominator = kind == WeakKind::Recall ? relevant : retrieved;
    if (denominator.size() == 0) {
        if (empty_denominator_value) {
            return *empty_denominator_value;
        }
        throw UndefinedMeasure(kind == WeakKind::Recall
                                   ? "recall is undefined: no relevant elements"
                                   : "precision is undefined: no retrieved elements");
    }
    const auto inter = static_cast<double>(
        intersection_size(retrieved.elements(), relevant.elements()));
    return inter / static_cast<double>(denominator.size());
}

}  // namespace posetsim
