#include "posetsim/rank_measures.hpp"

#include <algorithm>
#include <vector>

namespace posetsim {

namespace {

std::size_t hits_in_top(const Chain& run, const Qrels& qrels, std::size_t k) {
    const std::size_t depth = std::min(k, run.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < depth; ++i) {
        hits += qrels.relevant.count(run.sequence()[i]);
    }
    return hits;
}

// Ranks of the shared elements compressed to 1..n within each chain,
// aligned so that entry t of both vectors describes the same element.
struct CommonRanks {
    std::vector<std::size_t> in_first;
    std::vector<std::size_t> in_second;
};

CommonRanks common_ranks(const Chain& c1, const Chain& c2) {
    std::vector<Element> common;
    for (const Element& e : c1.sequence()) {
        if (c2.contains(e)) {
            common.push_back(e);
        }
    }
    if (common.empty()) {
        throw NoCommonElements("chains share no element");
    }
    // `common` is already in c1 order, so compressed c1 ranks are 1,2,...
    CommonRanks ranks;
    ranks.in_first.resize(common.size());
    ranks.in_second.resize(common.size());
    std::vector<std::size_t> order2(common.size());
    for (std::size_t t = 0; t < common.size(); ++t) {
        ranks.in_first[t] = t + 1;
        order2[t] = t;
    }
    std::sort(order2.begin(), order2.end(), [&](std::size_t x, std::size_t y) {
        return *c2.position_of(common[x]) < *c2.position_of(common[y]);
    });
    for (std::size_t r = 0; r < order2.size(); ++r) {
        ranks.in_second[order2[r]] = r + 1;
    }
    return ranks;
}

}  // namespace

double precision_at(const Chain& run, const Qrels& qrels, std::size_t cutoff) {
    if (cutoff == 0) {
        throw InvariantViolation("cut-off level must be at least 1");
    }
    return static_cast<double>(hits_in_top(run, qrels, cutoff)) / static_cast<double>(cutoff);
}

double recall_at(const Chain& run, const Qrels& qrels, std::size_t cutoff) {
    if (cutoff == 0) {
        throw InvariantViolation("cut-off level must be at least 1");
    }
    if (qrels.relevant.empty()) {
        throw UndefinedMeasure("recall is undefined: no relevant elements");
    }
    return static_cast<double>(hits_in_top(run, qrels, cutoff)) /
           static_cast<double>(qrels.relevant.size());
}

double r_precision(const Chain& run, const Qrels& qrels) {
    if (qrels.relevant.empty()) {
        throw UndefinedMeasure("r-precision is undefined: no relevant elements");
    }
    return precision_at(run, qrels, qrels.relevant.size());
}

double average_precision(const Chain& run, const Qrels& qrels) {
    if (qrels.relevant.empty()) {
        throw UndefinedMeasure("average precision is undefined: no relevant elements");
    }
    double sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < run.size(); ++i) {
        if (qrels.relevant.count(run.sequence()[i]) != 0) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(qrels.relevant.size());
}

double spearman_rho(const Chain& c1, const Chain& c2) {
    const CommonRanks ranks = common_ranks(c1, c2);
    const auto n = static_cast<double>(ranks.in_first.size());
    if (ranks.in_first.size() == 1) {
        return 1.0;
    }
    double sum_sq = 0.0;
    for (std::size_t t = 0; t < ranks.in_first.size(); ++t) {
        const double d = static_cast<double>(ranks.in_first[t]) -
                         static_cast<double>(ranks.in_second[t]);
        sum_sq += d * d;
    }
    return 1.0 - 6.0 * sum_sq / (n * (n * n - 1.0));
}

double kendall_tau(const Chain& c1, const Chain& c2) {
    const CommonRanks ranks = common_ranks(c1, c2);
    const std::size_t n = ranks.in_first.size();
    if (n == 1) {
        return 1.0;
    }
    long long score = 0;
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
            const bool first_before = ranks.in_first[s] < ranks.in_first[t];
            const bool second_before = ranks.in_second[s] < ranks.in_second[t];
            score += first_before == second_before ? 1 : -1;
        }
    }
    const auto nn = static_cast<double>(n);
    return 2.0 * static_cast<double>(score) / (nn * nn - nn);
}

double ordered_combination(const Chain& c1, const Chain& c2, StrongKind base,
                           CorrelationKind correlation, double beta) {
    const double corr =
        correlation == CorrelationKind::Spearman ? spearman_rho(c1, c2) : kendall_tau(c1, c2);
    const double sets =
        strong_measure(base, Antichain(c1.elements()), Antichain(c2.elements()), beta);
    return corr * sets;
}

}  // namespace posetsim
