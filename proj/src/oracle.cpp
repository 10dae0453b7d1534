#include "posetsim/oracle.hpp"

#include <algorithm>
#include <vector>

namespace posetsim {
namespace oracle {

PairCensus pairs_bruteforce(const Partition& v1, const Partition& v2) {
    if (v1.universe() != v2.universe()) {
        throw UniverseMismatch("brute-force census needs a common universe");
    }
    const std::vector<Element> order(v1.universe().begin(), v1.universe().end());
    PairCensus census;
    census.n = static_cast<long long>(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const bool together1 = v1.same_class(order[i], order[j]);
            const bool together2 = v2.same_class(order[i], order[j]);
            if (together1 && together2) {
                ++census.a;
            } else if (!together1 && together2) {
                ++census.b;
            } else if (together1 && !together2) {
                ++census.c;
            } else {
                ++census.d;
            }
        }
    }
    return census;
}

FuzzyCardinalities fuzzy_bruteforce(const OrderedPartition& ov1, const OrderedPartition& ov2,
                                    const FuzzyWeighting& w) {
    w.check_decreasing(std::max(ov1.class_count(), ov2.class_count()));
    ElementSet all = ov1.universe();
    all.insert(ov2.universe().begin(), ov2.universe().end());
    FuzzyCardinalities q;
    for (const Element& e : all) {
        const double m1 = ov1.contains(e) ? w(ov1.class_of(e) + 1) : 0.0;
        const double m2 = ov2.contains(e) ? w(ov2.class_of(e) + 1) : 0.0;
        q.intersection += std::min(m1, m2);
        q.union_ += std::max(m1, m2);
        q.card1 += m1;
        q.card2 += m2;
    }
    return q;
}

double tau_bruteforce(const Chain& c1, const Chain& c2) {
    std::vector<Element> common;
    for (const Element& e : c1.sequence()) {
        if (c2.contains(e)) {
            common.push_back(e);
        }
    }
    if (common.empty()) {
        throw NoCommonElements("chains share no element");
    }
    if (common.size() == 1) {
        return 1.0;
    }
    long long score = 0;
    long long pairs = 0;
    for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
            const bool same_order =
                (*c1.position_of(common[i]) < *c1.position_of(common[j])) ==
                (*c2.position_of(common[i]) < *c2.position_of(common[j]));
            score += same_order ? 1 : -1;
            ++pairs;
        }
    }
    return static_cast<double>(score) / static_cast<double>(pairs);
}

}  // namespace oracle
}  // namespace posetsim
