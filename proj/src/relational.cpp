#include "posetsim/relational.hpp"

#include <algorithm>
#include <sstream>

namespace posetsim {

namespace {

std::vector<Element> default_order(const ElementSet& universe) {
    return std::vector<Element>(universe.begin(), universe.end());
}

std::vector<Element> resolve_order(const ElementSet& universe, std::vector<Element> order) {
    if (order.empty()) {
        return default_order(universe);
    }
    if (order.size() != universe.size() ||
        ElementSet(order.begin(), order.end()) != universe) {
        throw InvariantViolation("element order must be a permutation of the universe");
    }
    return order;
}

[[noreturn]] void unsupported(Shape shape, RelationKind kind) {
    throw UnsupportedRelation(std::string(relation_name(kind)) + " is not defined for shape " +
                              std::string(shape_name(shape)));
}

// Fills bits over `order` from a predicate on ordered element pairs; the
// diagonal is forced to 1 for every relation built here.
template <class Related>
AdjacencyMatrix build(std::vector<Element> order, Related related) {
    const auto n = static_cast<Eigen::Index>(order.size());
    AdjacencyMatrix m{std::move(order), Eigen::MatrixXi::Zero(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m.bits(i, j) = (i == j || related(m.order[i], m.order[j])) ? 1 : 0;
        }
    }
    return m;
}

}  // namespace

std::string_view relation_name(RelationKind kind) {
    switch (kind) {
        case RelationKind::SameCluster: return "same_cluster";
        case RelationKind::GreaterThan: return "greater_than";
        case RelationKind::SameRank: return "same_rank";
        case RelationKind::GreaterOrEqual: return "greater_or_equal";
    }
    return "unknown";
}

std::optional<RelationKind> relation_from_name(std::string_view name) {
    for (RelationKind kind : {RelationKind::SameCluster, RelationKind::GreaterThan,
                              RelationKind::SameRank, RelationKind::GreaterOrEqual}) {
        if (name == relation_name(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

AdjacencyMatrix adjacency(const Partition& v, RelationKind kind, std::vector<Element> order) {
    if (kind != RelationKind::SameCluster) {
        unsupported(Shape::Partition, kind);
    }
    return build(resolve_order(v.universe(), std::move(order)),
                 [&v](const Element& x, const Element& y) { return v.same_class(x, y); });
}

AdjacencyMatrix adjacency(const Chain& c, RelationKind kind, std::vector<Element> order) {
    if (kind != RelationKind::GreaterThan && kind != RelationKind::GreaterOrEqual) {
        unsupported(Shape::Chain, kind);
    }
    // With the unit-diagonal convention the strict and reflexive forms of a
    // total order produce the same matrix.
    return build(resolve_order(c.elements(), std::move(order)),
                 [&c](const Element& x, const Element& y) {
                     return *c.position_of(x) < *c.position_of(y);
                 });
}

AdjacencyMatrix adjacency(const OrderedPartition& ov, RelationKind kind,
                          std::vector<Element> order) {
    auto resolved = resolve_order(ov.universe(), std::move(order));
    switch (kind) {
        case RelationKind::SameCluster:
        case RelationKind::SameRank:
            // For an ordered partition the rank of an element is its class
            // index, so same-rank coincides with same-cluster.
            return build(std::move(resolved), [&ov](const Element& x, const Element& y) {
                return ov.class_of(x) == ov.class_of(y);
            });
        case RelationKind::GreaterThan:
            // Members of one class are unrelated by the strict order.
            return build(std::move(resolved), [&ov](const Element& x, const Element& y) {
                return ov.class_of(x) < ov.class_of(y);
            });
        case RelationKind::GreaterOrEqual:
            return build(std::move(resolved), [&ov](const Element& x, const Element& y) {
                return ov.class_of(x) <= ov.class_of(y);
            });
    }
    unsupported(Shape::OrderedPartition, kind);
}

AdjacencyMatrix adjacency(const PartitionOfChains& vc, RelationKind kind,
                          std::vector<Element> order) {
    auto resolved = resolve_order(vc.universe(), std::move(order));
    switch (kind) {
        case RelationKind::SameCluster:
            return build(std::move(resolved), [&vc](const Element& x, const Element& y) {
                return vc.chain_of(x) == vc.chain_of(y);
            });
        case RelationKind::GreaterThan:
            // Only elements of one chain are comparable.
            return build(std::move(resolved), [&vc](const Element& x, const Element& y) {
                return vc.chain_of(x) == vc.chain_of(y) && vc.rank_of(x) < vc.rank_of(y);
            });
        case RelationKind::SameRank:
            return build(std::move(resolved), [&vc](const Element& x, const Element& y) {
                return vc.rank_of(x) == vc.rank_of(y);
            });
        case RelationKind::GreaterOrEqual:
            break;
    }
    unsupported(Shape::PartitionOfChains, kind);
}

AdjacencyMatrix adjacency(const ResultSet& rs, RelationKind kind, std::vector<Element> order) {
    return std::visit(
        [&](const auto& value) -> AdjacencyMatrix {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Antichain>) {
                unsupported(Shape::Antichain, kind);
            } else {
                return adjacency(value, kind, std::move(order));
            }
        },
        rs.value);
}

AdjacencyMatrix relation_sum(const AdjacencyMatrix& m1, const AdjacencyMatrix& m2) {
    if (m1.order != m2.order) {
        throw OrderMismatch("adjacency matrices have different element orders");
    }
    return AdjacencyMatrix{m1.order, m1.bits.cwiseMax(m2.bits)};
}

ContingencyTable contingency(const Partition& v1, const Partition& v2, UniversePolicy policy) {
    auto [r1, r2] = restrict_to_shared(v1, v2, policy);
    const auto p = static_cast<Eigen::Index>(r1.class_count());
    const auto q = static_cast<Eigen::Index>(r2.class_count());
    ContingencyTable table;
    table.counts = Eigen::MatrixXi::Zero(p, q);
    for (const Element& e : r1.universe()) {
        table.counts(static_cast<Eigen::Index>(r1.class_of(e)),
                     static_cast<Eigen::Index>(r2.class_of(e))) += 1;
    }
    table.row_sums = table.counts.rowwise().sum();
    table.col_sums = table.counts.colwise().sum();
    table.total = table.counts.sum();
    return table;
}

long long dot_intersection(const Antichain& s1, const Antichain& s2,
                           const std::vector<Element>& universe) {
    const auto n = static_cast<Eigen::Index>(universe.size());
    Eigen::VectorXi ind1 = Eigen::VectorXi::Zero(n);
    Eigen::VectorXi ind2 = Eigen::VectorXi::Zero(n);
    std::size_t seen1 = 0;
    std::size_t seen2 = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (s1.contains(universe[i])) {
            ind1(i) = 1;
            ++seen1;
        }
        if (s2.contains(universe[i])) {
            ind2(i) = 1;
            ++seen2;
        }
    }
    if (seen1 != s1.size() || seen2 != s2.size()) {
        throw UnknownElement("set contains an element outside the universe");
    }
    return ind1.dot(ind2);
}

std::string export_dot(const ResultSet& rs, const std::vector<RelationKind>& kinds) {
    std::ostringstream out;
    out << "digraph \"" << (rs.label.empty() ? "G" : rs.label) << "\" {\n";
    auto order = default_order(universe_of(rs));
    for (const Element& e : order) {
        out << "  \"" << e << "\";\n";
    }
    for (RelationKind kind : kinds) {
        AdjacencyMatrix m = adjacency(rs, kind, order);
        const bool symmetric = kind == RelationKind::SameCluster || kind == RelationKind::SameRank;
        const char* style = "solid";
        if (kind == RelationKind::GreaterThan) {
            style = "dashed";
        } else if (kind == RelationKind::SameRank) {
            style = "dotted";
        } else if (kind == RelationKind::GreaterOrEqual) {
            style = "bold";
        }
        for (Eigen::Index i = 0; i < m.size(); ++i) {
            const Eigen::Index first_col = symmetric ? i + 1 : 0;
            for (Eigen::Index j = first_col; j < m.size(); ++j) {
                if (i == j || m.bits(i, j) == 0) {
                    continue;
                }
                out << "  \"" << m.order[i] << "\" -> \"" << m.order[j] << "\" [style=" << style;
                if (symmetric) {
                    out << ", dir=none";
                }
                out << "];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

std::string adjacency_csv(const AdjacencyMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.order.size(); ++i) {
        out << (i == 0 ? "" : ",") << m.order[i];
    }
    out << '\n';
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        for (Eigen::Index j = 0; j < m.size(); ++j) {
            out << (j == 0 ? "" : ",") << m.bits(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace posetsim
