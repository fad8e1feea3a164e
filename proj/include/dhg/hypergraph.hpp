#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dhg {

/// Dense 0-based vertex id. Valid ids are < vertex_count() of the owning
/// hypergraph.
using VertexId = std::uint32_t;

using ArcIndex = std::uint32_t;

/// A hyperarc (T, H): both endpoint sets are non-empty and stored sorted
/// and duplicate-free.
struct Hyperarc {
    std::vector<VertexId> tail;
    std::vector<VertexId> head;

    bool is_simple() const { return tail.size() == 1; }

    bool operator==(const Hyperarc&) const = default;
};

/// Plain digraph: arc set stored as sorted, duplicate-free ordered pairs.
struct Digraph {
    std::uint32_t vertex_count = 0;
    std::vector<std::pair<VertexId, VertexId>> arcs;

    bool operator==(const Digraph&) const = default;
};

/// Directed hypergraph over dense integer vertices.
///
/// The build phase (add_hyperarc) is single-owner and mutable. Afterwards the
/// structure is treated as immutable and is safe for concurrent read-only
/// queries. Tails and heads are canonicalized (sorted, deduplicated) on
/// insertion; duplicate hyperarcs are kept as distinct entries, since they
/// contribute to size() and to the incidence lists.
class Hypergraph {
public:
    Hypergraph() = default;
    explicit Hypergraph(std::uint32_t vertex_count);

    /// Appends the arc (tail, head) and returns its index.
    /// Throws EmptyTail/EmptyHead if a set deduplicates to empty, and
    /// VertexOutOfRange for out-of-range ids.
    ArcIndex add_hyperarc(std::span<const VertexId> tail,
                          std::span<const VertexId> head);

    ArcIndex add_hyperarc(std::initializer_list<VertexId> tail,
                          std::initializer_list<VertexId> head) {
        return add_hyperarc(std::span<const VertexId>(tail.begin(), tail.size()),
                            std::span<const VertexId>(head.begin(), head.size()));
    }
    ArcIndex add_hyperarc(std::initializer_list<VertexId> tail,
                          std::span<const VertexId> head) {
        return add_hyperarc(std::span<const VertexId>(tail.begin(), tail.size()), head);
    }
    ArcIndex add_hyperarc(std::span<const VertexId> tail,
                          std::initializer_list<VertexId> head) {
        return add_hyperarc(tail, std::span<const VertexId>(head.begin(), head.size()));
    }

    std::uint32_t vertex_count() const { return vertex_count_; }
    std::uint32_t arc_count() const { return static_cast<std::uint32_t>(arcs_.size()); }
    const Hyperarc& arc(ArcIndex a) const { return arcs_[a]; }
    const std::vector<Hyperarc>& arcs() const { return arcs_; }

    /// Indices of the arcs whose tail contains u.
    std::span<const ArcIndex> incident_arcs(VertexId u) const {
        return incidence_[u];
    }

    /// size = |V| + sum over arcs of (|T| + |H|).
    std::uint64_t size() const;

    bool operator==(const Hypergraph&) const = default;

private:
    std::uint32_t vertex_count_ = 0;
    std::vector<Hyperarc> arcs_;
    std::vector<std::vector<ArcIndex>> incidence_;
};

/// Digraph generated by the simple arcs (|T| = 1): one arc (t, h) per head h,
/// duplicates collapsed.
Digraph graph_projection(const Hypergraph& h);

/// Image of h under the total vertex map f (one entry per vertex of h),
/// mapping into a hypergraph with out_vertex_count vertices. Tail and head
/// images are deduplicated. Throws VertexOutOfRange if some f[v] is out of
/// range of the output.
Hypergraph image(const Hypergraph& h, std::span<const VertexId> f,
                 std::uint32_t out_vertex_count);

} // namespace dhg
