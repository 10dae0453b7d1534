#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posetsim/model.hpp"

namespace posetsim {

// The binary relations an answer set can express: "is in the same cluster
// as", "is greater than", "has the same rank as", and their boolean sum
// "is greater than or equal to".
enum class RelationKind { SameCluster, GreaterThan, SameRank, GreaterOrEqual };

std::string_view relation_name(RelationKind kind);
std::optional<RelationKind> relation_from_name(std::string_view name);

// Binary relation over a fixed element order. Entries are exactly 0 or 1
// and every diagonal entry is 1, loops included.
struct AdjacencyMatrix {
    std::vector<Element> order;
    Eigen::MatrixXi bits;

    Eigen::Index size() const { return bits.rows(); }
};

// a_ij = 1 iff element i relates to element j, with a unit diagonal. Rows
// and columns follow `order` when given and the lexicographic universe
// otherwise. Throws UnsupportedRelation when the shape cannot express kind.
AdjacencyMatrix adjacency(const ResultSet& rs, RelationKind kind,
                          std::vector<Element> order = {});
AdjacencyMatrix adjacency(const Partition& v, RelationKind kind,
                          std::vector<Element> order = {});
AdjacencyMatrix adjacency(const Chain& c, RelationKind kind,
                          std::vector<Element> order = {});
AdjacencyMatrix adjacency(const OrderedPartition& ov, RelationKind kind,
                          std::vector<Element> order = {});
AdjacencyMatrix adjacency(const PartitionOfChains& vc, RelationKind kind,
                          std::vector<Element> order = {});

// Entrywise boolean OR of two relations over the same element order.
AdjacencyMatrix relation_sum(const AdjacencyMatrix& m1, const AdjacencyMatrix& m2);

// Shared-member counts between the classes of two partitions over a common
// universe: counts(u, v) = |class u of v1  intersect  class v of v2|.
struct ContingencyTable {
    Eigen::MatrixXi counts;
    Eigen::VectorXi row_sums;
    Eigen::VectorXi col_sums;
    long long total = 0;
};

ContingencyTable contingency(const Partition& v1, const Partition& v2,
                             UniversePolicy policy = UniversePolicy::Lenient);

// |s1 intersect s2| as the dot product of the two indicator vectors over
// the given universe order.
long long dot_intersection(const Antichain& s1, const Antichain& s2,
                           const std::vector<Element>& universe);

// DOT digraph with one edge style per relation kind: solid for same-cluster,
// dashed for greater-than, dotted for same-rank, bold for greater-or-equal.
// Self-loops are omitted to keep the graph readable.
std::string export_dot(const ResultSet& rs, const std::vector<RelationKind>& kinds);

// Header row of element ids, then one 0/1 row per element.
std::string adjacency_csv(const AdjacencyMatrix& m);

}  // namespace posetsim
