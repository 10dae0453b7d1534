#pragma once

#include <cstddef>

#include "posetsim/model.hpp"
#include "posetsim/set_measures.hpp"

namespace posetsim {

// Relevance judgments for one topic.
struct Qrels {
    ElementSet relevant;
};

// Fraction of the top-k positions holding relevant elements; the
// denominator stays k even when the run is shorter.
double precision_at(const Chain& run, const Qrels& qrels, std::size_t cutoff);

// Fraction of the relevant elements found within the top k positions.
double recall_at(const Chain& run, const Qrels& qrels, std::size_t cutoff);

// Precision at cut-off R, where R is the number of relevant elements.
double r_precision(const Chain& run, const Qrels& qrels);

// Mean of the precision values observed as each relevant element is
// retrieved; relevant elements never retrieved contribute zero.
double average_precision(const Chain& run, const Qrels& qrels);

// Rank correlations over the elements the two chains share; ranks are
// compressed order-preservingly to 1..n within each chain. A single common
// element gives 1 by convention; no common element throws NoCommonElements.
double spearman_rho(const Chain& c1, const Chain& c2);
double kendall_tau(const Chain& c1, const Chain& c2);

enum class CorrelationKind { Spearman, Kendall };

// Product of a rank correlation on the common elements and a set measure
// on the two full element sets taken without ranks.
double ordered_combination(const Chain& c1, const Chain& c2, StrongKind base,
                           CorrelationKind correlation, double beta = 1.0);

}  // namespace posetsim
