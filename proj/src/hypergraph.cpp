#include "dhg/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "dhg/error.hpp"

namespace dhg {

namespace {

std::vector<VertexId> canonical_set(std::span<const VertexId> ids,
                                    std::uint32_t vertex_count,
                                    ErrorCode empty_code) {
    std::vector<VertexId> out(ids.begin(), ids.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) {
        raise(empty_code, empty_code == ErrorCode::EmptyTail
                              ? "hyperarc tail is empty"
                              : "hyperarc head is empty");
    }
    if (out.back() >= vertex_count) {
        raise(ErrorCode::VertexOutOfRange,
              "vertex " + std::to_string(out.back()) + " out of range (vertex count " +
                  std::to_string(vertex_count) + ")");
    }
    return out;
}

} // namespace

Hypergraph::Hypergraph(std::uint32_t vertex_count)
    : vertex_count_(vertex_count), incidence_(vertex_count) {}

ArcIndex Hypergraph::add_hyperarc(std::span<const VertexId> tail,
                                  std::span<const VertexId> head) {
    Hyperarc arc;
    arc.tail = canonical_set(tail, vertex_count_, ErrorCode::EmptyTail);
    arc.head = canonical_set(head, vertex_count_, ErrorCode::EmptyHead);

    const ArcIndex a = static_cast<ArcIndex>(arcs_.size());
    for (VertexId t : arc.tail) {
        incidence_[t].push_back(a);
    }
    arcs_.push_back(std::move(arc));
    return a;
}

std::uint64_t Hypergraph::size() const {
    std::uint64_t total = vertex_count_;
    for (const Hyperarc& a : arcs_) {
        total += a.tail.size() + a.head.size();
    }
    return total;
}

Digraph graph_projection(const Hypergraph& h) {
    Digraph g;
    g.vertex_count = h.vertex_count();
    for (const Hyperarc& a : h.arcs()) {
        if (!a.is_simple()) {
            continue;
        }
        const VertexId t = a.tail.front();
        for (VertexId v : a.head) {
            g.arcs.emplace_back(t, v);
        }
    }
    std::sort(g.arcs.begin(), g.arcs.end());
    g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
    return g;
}

Hypergraph image(const Hypergraph& h, std::span<const VertexId> f,
                 std::uint32_t out_vertex_count) {
    if (f.size() != h.vertex_count()) {
        raise(ErrorCode::InvalidArgument, "vertex map has wrong arity");
    }
    for (VertexId mapped : f) {
        if (mapped >= out_vertex_count) {
            raise(ErrorCode::VertexOutOfRange,
                  "image vertex " + std::to_string(mapped) + " out of range");
        }
    }

    Hypergraph out(out_vertex_count);
    std::vector<VertexId> tail, head;
    for (const Hyperarc& a : h.arcs()) {
        tail.clear();
        head.clear();
        for (VertexId v : a.tail) tail.push_back(f[v]);
        for (VertexId v : a.head) head.push_back(f[v]);
        out.add_hyperarc(tail, head);
    }
    return out;
}

} // namespace dhg
