#include "dhg/union_find.hpp"

#include <string>

#include "dhg/error.hpp"

namespace dhg {

UnionFind::UnionFind(std::uint32_t capacity)
    : parent_(capacity, kUninitialized), rank_(capacity, 0) {}

void UnionFind::check_in_range(VertexId u) const {
    if (u >= parent_.size()) {
        raise(ErrorCode::VertexOutOfRange,
              "element " + std::to_string(u) + " out of range");
    }
}

void UnionFind::make_set(VertexId u) {
    check_in_range(u);
    if (parent_[u] != kUninitialized) {
        raise(ErrorCode::DoubleInit,
              "make_set called twice on element " + std::to_string(u));
    }
    parent_[u] = u;
    rank_[u] = 0;
    ++counters_.makeset_calls;
}

VertexId UnionFind::find(VertexId u) {
    check_in_range(u);
    if (parent_[u] == kUninitialized) {
        raise(ErrorCode::InvalidArgument,
              "find on uninitialized element " + std::to_string(u));
    }
    ++counters_.find_calls;

    VertexId root = u;
    while (parent_[root] != root) {
        root = parent_[root];
    }
    while (parent_[u] != root) {
        VertexId next = parent_[u];
        parent_[u] = root;
        u = next;
    }
    return root;
}

VertexId UnionFind::representative(VertexId u) const {
    check_in_range(u);
    if (parent_[u] == kUninitialized) {
        raise(ErrorCode::InvalidArgument,
              "lookup on uninitialized element " + std::to_string(u));
    }
    while (parent_[u] != u) {
        u = parent_[u];
    }
    return u;
}

VertexId UnionFind::merge(VertexId u, VertexId v) {
    check_in_range(u);
    check_in_range(v);
    if (u == v) {
        raise(ErrorCode::MergeSameClass,
              "merge of element " + std::to_string(u) + " with itself");
    }
    if (parent_[u] != u || parent_[v] != v) {
        raise(ErrorCode::NotRepresentative, "merge arguments must be class roots");
    }
    ++counters_.merge_calls;

    VertexId winner;
    if (rank_[u] > rank_[v]) {
        winner = u;
    } else if (rank_[v] > rank_[u]) {
        winner = v;
    } else {
        winner = u < v ? u : v;
        ++rank_[winner];
    }
    VertexId loser = winner == u ? v : u;
    parent_[loser] = winner;
    return winner;
}

} // namespace dhg
