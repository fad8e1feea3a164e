#pragma once

#include "dhg/hypergraph.hpp"

namespace dhg::testing {

// Six-vertex hypergraph with a 3-cycle 0 -> 1 -> 2 -> 0 feeding two
// non-simple arcs: ({1,2},{3,4}) and ({2,4},{5}). Vertices 3, 4, 5 are the
// terminal components; {0,1,2} is a non-terminal SCC.
inline Hypergraph make_sample() {
    Hypergraph h(6);
    h.add_hyperarc({0}, {1});
    h.add_hyperarc({1}, {2});
    h.add_hyperarc({2}, {0});
    h.add_hyperarc({1, 2}, {3, 4});
    h.add_hyperarc({2, 4}, {5});
    return h;
}

// Three vertices 0 -> 1, 2 -> 0 and the hyperarc ({0,1},{2}). The SCC {0,2}
// exists but is invisible to the terminal-SCC traversal because the hyperarc
// never turns simple; only {1} is terminal.
inline Hypergraph make_hidden_scc() {
    Hypergraph h(3);
    h.add_hyperarc({0}, {1});
    h.add_hyperarc({2}, {0});
    h.add_hyperarc({0, 1}, {2});
    return h;
}

inline Hypergraph make_cycle(std::uint32_t n) {
    Hypergraph h(n);
    for (VertexId v = 0; v < n; ++v) {
        h.add_hyperarc({v}, {static_cast<VertexId>((v + 1) % n)});
    }
    return h;
}

inline Hypergraph make_chain(std::uint32_t n) {
    Hypergraph h(n);
    for (VertexId v = 0; v + 1 < n; ++v) {
        h.add_hyperarc({v}, {static_cast<VertexId>(v + 1)});
    }
    return h;
}

} // namespace dhg::testing
