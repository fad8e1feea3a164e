#pragma once

#include <cstdint>
#include <vector>

#include "dhg/hypergraph.hpp"

namespace dhg {

/// Operation counters of a disjoint-set forest. Exposed read-only so that
/// callers can assert the operation-count bounds of the traversal they drive.
struct UnionFindCounters {
    std::uint64_t makeset_calls = 0;
    std::uint64_t find_calls = 0;
    std::uint64_t merge_calls = 0;
};

/// Disjoint-set forest with union by rank and path compression.
///
/// Elements start uninitialized; make_set must be called exactly once per
/// element before it takes part in find/merge. On a rank tie the smaller id
/// becomes the representative, which makes outputs independent of allocation
/// order. Single-threaded per instance.
class UnionFind {
public:
    explicit UnionFind(std::uint32_t capacity);

    void make_set(VertexId u);

    /// Representative of u's class, with path compression.
    VertexId find(VertexId u);

    /// Merges the classes of two distinct representatives and returns the
    /// surviving representative. Throws MergeSameClass when u == v and
    /// NotRepresentative when either argument is not a class root.
    VertexId merge(VertexId u, VertexId v);

    /// Representative lookup without path compression and without touching
    /// the counters. For result assembly and diagnostics, where the counted
    /// find would distort the operation accounting.
    VertexId representative(VertexId u) const;

    std::uint32_t capacity() const { return static_cast<std::uint32_t>(parent_.size()); }
    bool initialized(VertexId u) const { return parent_[u] != kUninitialized; }
    const UnionFindCounters& counters() const { return counters_; }

private:
    static constexpr VertexId kUninitialized = static_cast<VertexId>(-1);

    void check_in_range(VertexId u) const;

    std::vector<VertexId> parent_;
    std::vector<std::uint8_t> rank_;
    UnionFindCounters counters_;
};

} // namespace dhg
