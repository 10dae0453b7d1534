#include "posetsim/model.hpp"

#include <algorithm>
#include <cctype>

namespace posetsim {

namespace {

void check_id(const Element& id) {
    if (id.empty()) {
        throw InvariantViolation("element id must not be empty");
    }
    for (unsigned char ch : id) {
        if (std::isspace(ch)) {
            throw InvariantViolation("element id '" + id + "' contains whitespace");
        }
    }
}

// Inserts every member of cls into universe, rejecting overlaps.
void merge_class(const ElementSet& cls, ElementSet& universe) {
    for (const Element& e : cls) {
        check_id(e);
        if (!universe.insert(e).second) {
            throw InvariantViolation("duplicate element '" + e + "' across classes");
        }
    }
}

}  // namespace

Antichain::Antichain(ElementSet elements) : elements_(std::move(elements)) {
    for (const Element& e : elements_) {
        check_id(e);
    }
}

Chain::Chain(std::vector<Element> sequence) : sequence_(std::move(sequence)) {
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
        check_id(sequence_[i]);
        if (!positions_.emplace(sequence_[i], i + 1).second) {
            throw InvariantViolation("duplicate element '" + sequence_[i] + "' in chain");
        }
    }
}

ElementSet Chain::elements() const {
    return ElementSet(sequence_.begin(), sequence_.end());
}

std::optional<std::size_t> Chain::position_of(const Element& e) const {
    auto it = positions_.find(e);
    if (it == positions_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Partition::Partition(std::vector<ElementSet> classes) : classes_(std::move(classes)) {
    for (const ElementSet& cls : classes_) {
        if (cls.empty()) {
            throw InvariantViolation("empty class in partition");
        }
        merge_class(cls, universe_);
    }
    // Canonical order: classes sorted by smallest element. Disjointness makes
    // the leading elements distinct, so this is a strict order.
    std::sort(classes_.begin(), classes_.end(),
              [](const ElementSet& a, const ElementSet& b) { return *a.begin() < *b.begin(); });
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (const Element& e : classes_[i]) {
            class_index_[e] = i;
        }
    }
}

std::size_t Partition::class_of(const Element& e) const {
    auto it = class_index_.find(e);
    if (it == class_index_.end()) {
        throw UnknownElement("element '" + e + "' is not in the partition");
    }
    return it->second;
}

bool Partition::same_class(const Element& x, const Element& y) const {
    return class_of(x) == class_of(y);
}

OrderedPartition::OrderedPartition(std::vector<ElementSet> classes) : classes_(std::move(classes)) {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i].empty()) {
            throw InvariantViolation("empty class in ordered partition");
        }
        merge_class(classes_[i], universe_);
        for (const Element& e : classes_[i]) {
            class_index_[e] = i;
        }
    }
}

std::size_t OrderedPartition::class_of(const Element& e) const {
    auto it = class_index_.find(e);
    if (it == class_index_.end()) {
        throw UnknownElement("element '" + e + "' is not in the ordered partition");
    }
    return it->second;
}

PartitionOfChains::PartitionOfChains(std::vector<Chain> chains) : chains_(std::move(chains)) {
    for (const Chain& chain : chains_) {
        if (chain.size() == 0) {
            throw InvariantViolation("empty chain in partition of chains");
        }
        merge_class(chain.elements(), universe_);
    }
    std::sort(chains_.begin(), chains_.end(), [](const Chain& a, const Chain& b) {
        return a.sequence() < b.sequence();
    });
    for (std::size_t i = 0; i < chains_.size(); ++i) {
        for (const Element& e : chains_[i].sequence()) {
            chain_index_[e] = i;
        }
    }
}

std::size_t PartitionOfChains::max_chain_length() const {
    std::size_t longest = 0;
    for (const Chain& chain : chains_) {
        longest = std::max(longest, chain.size());
    }
    return longest;
}

std::size_t PartitionOfChains::chain_of(const Element& e) const {
    auto it = chain_index_.find(e);
    if (it == chain_index_.end()) {
        throw UnknownElement("element '" + e + "' is not in the partition of chains");
    }
    return it->second;
}

std::size_t PartitionOfChains::rank_of(const Element& e) const {
    return *chains_[chain_of(e)].position_of(e);
}

std::string_view shape_name(Shape shape) {
    switch (shape) {
        case Shape::Antichain: return "antichain";
        case Shape::Chain: return "chain";
        case Shape::Partition: return "partition";
        case Shape::OrderedPartition: return "ordered_partition";
        case Shape::PartitionOfChains: return "partition_of_chains";
    }
    return "unknown";
}

std::optional<Shape> shape_from_name(std::string_view name) {
    for (Shape shape : {Shape::Antichain, Shape::Chain, Shape::Partition,
                        Shape::OrderedPartition, Shape::PartitionOfChains}) {
        if (name == shape_name(shape)) {
            return shape;
        }
    }
    return std::nullopt;
}

ElementSet universe_of(const ResultSet& rs) {
    return std::visit(
        [](const auto& value) -> ElementSet {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Antichain>) {
                return value.elements();
            } else if constexpr (std::is_same_v<T, Chain>) {
                return value.elements();
            } else {
                return value.universe();
            }
        },
        rs.value);
}

Partition forget_chain_order(const PartitionOfChains& vc) {
    std::vector<ElementSet> classes;
    classes.reserve(vc.chain_count());
    for (const Chain& chain : vc.chains()) {
        classes.push_back(chain.elements());
    }
    return Partition(std::move(classes));
}

OrderedPartition rank_classes(const PartitionOfChains& vc) {
    std::vector<ElementSet> classes(vc.max_chain_length());
    for (const Chain& chain : vc.chains()) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            classes[i].insert(chain.sequence()[i]);
        }
    }
    // Ranks beyond a chain's length contribute nothing, so no class is empty.
    return OrderedPartition(std::move(classes));
}

OrderedPartition singleton_classes(const Chain& chain) {
    std::vector<ElementSet> classes;
    classes.reserve(chain.size());
    for (const Element& e : chain.sequence()) {
        classes.push_back(ElementSet{e});
    }
    return OrderedPartition(std::move(classes));
}

Partition forget_class_order(const OrderedPartition& ov) {
    return Partition(ov.classes());
}

std::pair<Partition, Partition> restrict_to_shared(const Partition& v1, const Partition& v2,
                                                   UniversePolicy policy) {
    if (v1.universe() == v2.universe()) {
        return {v1, v2};
    }
    if (policy == UniversePolicy::Strict) {
        throw UniverseMismatch("partitions cover different element universes");
    }
    ElementSet shared;
    std::set_intersection(v1.universe().begin(), v1.universe().end(), v2.universe().begin(),
                          v2.universe().end(), std::inserter(shared, shared.end()));
    auto restrict = [&shared](const Partition& v) {
        std::vector<ElementSet> classes;
        for (const ElementSet& cls : v.classes()) {
            ElementSet kept;
            std::set_intersection(cls.begin(), cls.end(), shared.begin(), shared.end(),
                                  std::inserter(kept, kept.end()));
            if (!kept.empty()) {
                classes.push_back(std::move(kept));
            }
        }
        return Partition(std::move(classes));
    };
    return {restrict(v1), restrict(v2)};
}

}  // namespace posetsim
