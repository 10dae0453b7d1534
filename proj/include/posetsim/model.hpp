#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "posetsim/errors.hpp"

namespace posetsim {

// Elements are opaque id tokens; answers are abstract points.
using Element = std::string;
using ElementSet = std::set<Element>;

// Unordered set of answers with no classes (the discrete order).
class Antichain {
public:
    Antichain() = default;
    explicit Antichain(ElementSet elements);

    const ElementSet& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Element& e) const { return elements_.count(e) != 0; }

    bool operator==(const Antichain& other) const { return elements_ == other.elements_; }

private:
    ElementSet elements_;
};

// Totally ordered answer list; position 1 is presented first. No repeats.
class Chain {
public:
    Chain() = default;
    explicit Chain(std::vector<Element> sequence);

    const std::vector<Element>& sequence() const { return sequence_; }
    std::size_t size() const { return sequence_.size(); }
    ElementSet elements() const;
    bool contains(const Element& e) const { return positions_.count(e) != 0; }

    // 1-based rank of e within this chain, if present.
    std::optional<std::size_t> position_of(const Element& e) const;

    bool operator==(const Chain& other) const { return sequence_ == other.sequence_; }

private:
    std::vector<Element> sequence_;
    std::map<Element, std::size_t> positions_;
};

// Division of the universe into disjoint non-empty unordered classes.
// Classes are stored sorted by their smallest element so that equal
// partitions compare equal and all outputs are deterministic.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<ElementSet> classes);
    Partition(std::initializer_list<ElementSet> classes)
        : Partition(std::vector<ElementSet>(classes)) {}

    const std::vector<ElementSet>& classes() const { return classes_; }
    std::size_t class_count() const { return classes_.size(); }
    const ElementSet& universe() const { return universe_; }
    std::size_t size() const { return universe_.size(); }

    // 0-based index of the class containing e.
    std::size_t class_of(const Element& e) const;
    bool same_class(const Element& x, const Element& y) const;

    bool operator==(const Partition& other) const { return classes_ == other.classes_; }

private:
    std::vector<ElementSet> classes_;
    ElementSet universe_;
    std::map<Element, std::size_t> class_index_;
};

// Partition whose classes carry a total order; class 1 is the most important.
class OrderedPartition {
public:
    OrderedPartition() = default;
    explicit OrderedPartition(std::vector<ElementSet> classes);
    OrderedPartition(std::initializer_list<ElementSet> classes)
        : OrderedPartition(std::vector<ElementSet>(classes)) {}

    const std::vector<ElementSet>& classes() const { return classes_; }
    std::size_t class_count() const { return classes_.size(); }
    const ElementSet& universe() const { return universe_; }
    std::size_t size() const { return universe_.size(); }

    // 0-based index of the class containing e.
    std::size_t class_of(const Element& e) const;
    bool contains(const Element& e) const { return class_index_.count(e) != 0; }

    bool operator==(const OrderedPartition& other) const { return classes_ == other.classes_; }

private:
    std::vector<ElementSet> classes_;
    ElementSet universe_;
    std::map<Element, std::size_t> class_index_;
};

// Disjoint chains with no order among them; within-chain order is total.
// Chains are stored sorted by sequence for deterministic output only.
class PartitionOfChains {
public:
    PartitionOfChains() = default;
    explicit PartitionOfChains(std::vector<Chain> chains);
    PartitionOfChains(std::initializer_list<Chain> chains)
        : PartitionOfChains(std::vector<Chain>(chains)) {}

    const std::vector<Chain>& chains() const { return chains_; }
    std::size_t chain_count() const { return chains_.size(); }
    const ElementSet& universe() const { return universe_; }
    std::size_t size() const { return universe_.size(); }
    std::size_t max_chain_length() const;

    // 0-based index of the chain containing e.
    std::size_t chain_of(const Element& e) const;
    // 1-based rank of e within its own chain.
    std::size_t rank_of(const Element& e) const;

    bool operator==(const PartitionOfChains& other) const { return chains_ == other.chains_; }

private:
    std::vector<Chain> chains_;
    ElementSet universe_;
    std::map<Element, std::size_t> chain_index_;
};

enum class Shape { Antichain, Chain, Partition, OrderedPartition, PartitionOfChains };

std::string_view shape_name(Shape shape);
std::optional<Shape> shape_from_name(std::string_view name);

// One answer set of any shape, plus a display label.
struct ResultSet {
    using Value = std::variant<Antichain, Chain, Partition, OrderedPartition, PartitionOfChains>;

    Value value;
    std::string label;

    Shape shape() const { return static_cast<Shape>(value.index()); }

    template <class T>
    const T& as() const { return std::get<T>(value); }
};

ElementSet universe_of(const ResultSet& rs);

// Shape conversions.

// Drops the within-chain orders: each chain becomes an unordered class.
Partition forget_chain_order(const PartitionOfChains& vc);

// Groups elements by within-chain rank: class k holds every element ranked
// k in its own chain; class count equals the longest chain.
OrderedPartition rank_classes(const PartitionOfChains& vc);

// A chain is an ordered partition of singletons.
OrderedPartition singleton_classes(const Chain& chain);

// Drops the class order.
Partition forget_class_order(const OrderedPartition& ov);

// Universe handling when the two compared sets cover different elements:
// lenient comparisons restrict both sides to the shared universe, strict
// comparisons demand equal universes.
enum class UniversePolicy { Lenient, Strict };

std::pair<Partition, Partition> restrict_to_shared(const Partition& v1, const Partition& v2,
                                                   UniversePolicy policy);

}  // namespace posetsim
