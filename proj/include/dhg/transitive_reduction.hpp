#pragma once

#include <cstdint>
#include <vector>

#include "dhg/hypergraph.hpp"
#include "dhg/reachability.hpp"

namespace dhg {

/// A reachability relation known (and checked on demand) to be reflexive and
/// transitive.
class Preorder {
public:
    explicit Preorder(ReachRelation relation) : relation_(std::move(relation)) {}

    const ReachRelation& relation() const { return relation_; }
    std::uint32_t vertex_count() const { return relation_.vertex_count(); }
    bool at(VertexId u, VertexId v) const { return relation_.at(u, v); }

    /// Throws NotTransitive when the matrix fails either closure property.
    void validate() const;

private:
    ReachRelation relation_;
};

/// Canonical transitive reduction of a preorder: inside every non-trivial
/// mutual-reachability class an ascending cycle over its members, and between
/// classes the covering pairs of the condensation order, connecting class
/// representatives (smallest members). Its transitive closure, plus
/// reflexivity, restores the preorder, and its size is independent of vertex
/// labelling.
struct TransitiveReduction {
    std::vector<std::pair<VertexId, VertexId>> pairs;
};

TransitiveReduction transitive_reduction(const Preorder& p);

/// Number of pairs of the canonical reduction of the reachability relation.
std::uint64_t transitive_reduction_size(const Hypergraph& h);

/// Total order with u before v whenever u reaches v. Throws
/// CyclicHypergraph when some mutual-reachability class is not a singleton.
/// Deterministic: among the ready vertices the smallest id goes first.
std::vector<VertexId> topological_sort(const Hypergraph& h);

struct GrowthRow {
    std::uint32_t n = 0;
    std::uint64_t hypergraph_size = 0;
    std::uint64_t reduction_size = 0;

    double ratio() const {
        return static_cast<double>(reduction_size) / static_cast<double>(hypergraph_size);
    }
};

/// For each n (divisible by 4, at most 16), builds the subset hypergraph of
/// lower_bound_family(n) and measures it against the transitive reduction of
/// its reachability relation. The ratio column grows with n.
std::vector<GrowthRow> growth_experiment(const std::vector<std::uint32_t>& n_values);

} // namespace dhg
