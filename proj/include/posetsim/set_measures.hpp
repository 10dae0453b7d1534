#pragma once

#include <optional>
#include <string_view>

#include "posetsim/model.hpp"

namespace posetsim {

// Set similarities that compare two antichains symmetrically. All of them
// give 1 on identical sets; Jaccard, Dice, Cosine, GeneralizedDice and
// OverlapMax give 1 only then, while OverlapMin already gives 1 when one
// set includes the other.
enum class StrongKind { Jaccard, Dice, Cosine, OverlapMin, OverlapMax, GeneralizedDice };

// Asymmetric retrieval measures; 1 means inclusion, not identity.
enum class WeakKind { Recall, Precision };

std::string_view strong_kind_name(StrongKind kind);

// Jaccard |I|/|U|, Dice 2|I|/(|s1|+|s2|), Cosine |I|/sqrt(|s1||s2|),
// OverlapMin |I|/min, OverlapMax |I|/max, and the effectiveness-style
// GeneralizedDice (1+beta^2)|I| / (beta^2 |s2| + |s1|), where I is the
// intersection and U the union. Two empty sets compare as equal (1); an
// empty set against a non-empty one scores 0.
double strong_measure(StrongKind kind, const Antichain& s1, const Antichain& s2,
                      double beta = 1.0);

// Recall |retrieved n relevant| / |relevant|; Precision the same count over
// |retrieved|. An empty denominator set throws UndefinedMeasure unless a
// convention value is supplied.
double weak_measure(WeakKind kind, const Antichain& retrieved, const Antichain& relevant,
                    std::optional<double> empty_denominator_value = std::nullopt);

}  // namespace posetsim
