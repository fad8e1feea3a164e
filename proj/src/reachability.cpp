#include "dhg/reachability.hpp"

#include <string>

#include "dhg/error.hpp"

namespace dhg {

std::vector<VertexId> ReachSet::to_sorted() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < members.size(); ++v) {
        if (members[v]) {
            out.push_back(v);
        }
    }
    return out;
}

void ReachScratch::prepare(const Hypergraph& h) {
    if (arc_stamp_.size() < h.arc_count() || vertex_stamp_.size() < h.vertex_count() ||
        generation_ == static_cast<std::uint32_t>(-1)) {
        arc_hits_.assign(h.arc_count(), 0);
        arc_stamp_.assign(h.arc_count(), 0);
        vertex_stamp_.assign(h.vertex_count(), 0);
        generation_ = 0;
    }
    ++generation_;
}

ReachSet reachable_set(const Hypergraph& h, VertexId u, ReachScratch& scratch,
                       ReachStats* stats) {
    if (u >= h.vertex_count()) {
        raise(ErrorCode::VertexOutOfRange,
              "source vertex " + std::to_string(u) + " out of range");
    }
    scratch.prepare(h);
    const std::uint32_t gen = scratch.generation_;

    ReachSet result;
    result.source = u;
    result.members.assign(h.vertex_count(), false);

    auto& worklist = scratch.worklist_;
    worklist.clear();
    result.members[u] = true;
    scratch.vertex_stamp_[u] = gen;
    worklist.push_back(u);

    while (!worklist.empty()) {
        const VertexId v = worklist.back();
        worklist.pop_back();
        if (stats) ++stats->vertices_visited;

        for (ArcIndex a : h.incident_arcs(v)) {
            if (scratch.arc_stamp_[a] != gen) {
                scratch.arc_stamp_[a] = gen;
                scratch.arc_hits_[a] = 0;
            }
            if (stats) ++stats->counter_increments;
            if (++scratch.arc_hits_[a] != h.arc(a).tail.size()) {
                continue;
            }
            // All tail vertices reached: the arc fires exactly once.
            for (VertexId w : h.arc(a).head) {
                if (stats) ++stats->head_scans;
                if (scratch.vertex_stamp_[w] != gen) {
                    scratch.vertex_stamp_[w] = gen;
                    result.members[w] = true;
                    worklist.push_back(w);
                }
            }
        }
    }
    return result;
}

ReachSet reachable_set(const Hypergraph& h, VertexId u) {
    ReachScratch scratch;
    return reachable_set(h, u, scratch);
}

bool is_reachable(const Hypergraph& h, VertexId u, VertexId v) {
    if (v >= h.vertex_count()) {
        raise(ErrorCode::VertexOutOfRange,
              "target vertex " + std::to_string(v) + " out of range");
    }
    return reachable_set(h, u).contains(v);
}

bool ReachRelation::is_reflexive() const {
    for (VertexId u = 0; u < vertex_count_; ++u) {
        if (!at(u, u)) return false;
    }
    return true;
}

bool ReachRelation::is_transitive() const {
    for (VertexId u = 0; u < vertex_count_; ++u) {
        for (VertexId v = 0; v < vertex_count_; ++v) {
            if (!at(u, v)) continue;
            for (VertexId w = 0; w < vertex_count_; ++w) {
                if (at(v, w) && !at(u, w)) return false;
            }
        }
    }
    return true;
}

ReachRelation reachability_relation(const Hypergraph& h) {
    const std::uint32_t n = h.vertex_count();
    std::vector<bool> matrix(static_cast<std::size_t>(n) * n, false);
    ReachScratch scratch;
    for (VertexId u = 0; u < n; ++u) {
        const ReachSet row = reachable_set(h, u, scratch);
        for (VertexId v = 0; v < n; ++v) {
            matrix[static_cast<std::size_t>(u) * n + v] = row.members[v];
        }
    }
    return ReachRelation(n, std::move(matrix));
}

} // namespace dhg
