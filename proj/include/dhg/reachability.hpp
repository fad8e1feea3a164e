#pragma once

#include <cstdint>
#include <vector>

#include "dhg/hypergraph.hpp"

namespace dhg {

/// Vertices reachable from a single source (the source itself included).
struct ReachSet {
    VertexId source = 0;
    std::vector<bool> members;

    bool contains(VertexId v) const { return members[v]; }

    /// Member ids in ascending order.
    std::vector<VertexId> to_sorted() const;
};

/// Work accounting of a single reachable_set call. Every arc fires at most
/// once, so counter_increments stays below the total tail weight and
/// head_scans below the total head weight of the touched arcs.
struct ReachStats {
    std::uint64_t vertices_visited = 0;
    std::uint64_t counter_increments = 0;
    std::uint64_t head_scans = 0;
};

/// Reusable per-query state for reachable_set. Counters are reset lazily via
/// a generation stamp, so repeated queries on the same hypergraph avoid the
/// O(|A|) clearing cost. One scratch must not be shared across threads.
class ReachScratch {
public:
    void prepare(const Hypergraph& h);

    bool reached(VertexId v) const { return vertex_stamp_[v] == generation_; }

    friend ReachSet reachable_set(const Hypergraph&, VertexId, ReachScratch&,
                                  ReachStats*);

private:
    std::vector<std::uint32_t> arc_hits_;
    std::vector<std::uint32_t> arc_stamp_;
    std::vector<std::uint32_t> vertex_stamp_;
    std::vector<VertexId> worklist_;
    std::uint32_t generation_ = 0;
};

/// Exactly the vertices v with u reaching v, by the counter method: each arc
/// keeps the number of its tail vertices already reached, and fires once that
/// number hits the tail size. Runs in O(size(h)).
ReachSet reachable_set(const Hypergraph& h, VertexId u, ReachScratch& scratch,
                       ReachStats* stats = nullptr);

/// Convenience overload with private scratch.
ReachSet reachable_set(const Hypergraph& h, VertexId u);

bool is_reachable(const Hypergraph& h, VertexId u, VertexId v);

/// The full reachability relation as a boolean matrix; reflexive and
/// transitive by construction. Cost O(|V| * size(h)).
class ReachRelation {
public:
    ReachRelation() = default;
    ReachRelation(std::uint32_t vertex_count, std::vector<bool> matrix)
        : vertex_count_(vertex_count), matrix_(std::move(matrix)) {}

    std::uint32_t vertex_count() const { return vertex_count_; }
    bool at(VertexId u, VertexId v) const {
        return matrix_[static_cast<std::size_t>(u) * vertex_count_ + v];
    }

    bool is_reflexive() const;
    bool is_transitive() const;

    bool operator==(const ReachRelation&) const = default;

private:
    std::uint32_t vertex_count_ = 0;
    std::vector<bool> matrix_;
};

ReachRelation reachability_relation(const Hypergraph& h);

} // namespace dhg
