#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dhg/hypergraph.hpp"

namespace dhg {

/// A class of original vertices, sorted ascending. For terminal_sccs the
/// classes flagged terminal are exactly the terminal SCCs of the hypergraph;
/// the remaining classes are whatever the traversal left merged and carry no
/// completeness guarantee.
struct Component {
    std::vector<VertexId> members;
    bool terminal = false;

    bool operator==(const Component&) const = default;
};

/// Operation counts of one terminal_sccs run. The traversal keeps within the
/// following budget, asserted by the test suite on every run:
///   makeset_calls == |V|
///   merge_calls   <= |V| - 1
///   find_calls    <= size(h)
///   fu_pushes     <= |A|
///   f_pushes      <= 2 * |A|
///   inner_loop_iterations <= total head weight
struct RunStats {
    std::uint64_t makeset_calls = 0;
    std::uint64_t find_calls = 0;
    std::uint64_t merge_calls = 0;
    std::uint64_t fu_pushes = 0;
    std::uint64_t f_pushes = 0;
    std::uint64_t inner_loop_iterations = 0;

    std::uint64_t total() const {
        return makeset_calls + find_calls + merge_calls + fu_pushes + f_pushes +
               inner_loop_iterations;
    }
};

/// Final per-arc auxiliary data of the traversal, exposed for inspection.
/// root[a] is the first-visited tail vertex of a non-simple arc a (kNoRoot if
/// never visited); counter[a] is the number of tail vertices whose class had
/// become reachable from the root's class when they were visited.
struct TerminalSccTrace {
    static constexpr std::int64_t kNoRoot = -1;

    std::vector<std::int64_t> root;
    std::vector<std::uint32_t> counter;
};

struct TerminalSccOptions {
    /// Order in which the outer loop tries vertices; empty means ascending
    /// ids. Must be a permutation of 0..n-1. The terminal components are
    /// independent of this order.
    std::span<const VertexId> visit_order{};

    /// Re-derive the per-arc counter values from the current quotient graph
    /// at every checkpoint and throw on mismatch. Quadratic; test use only.
    bool check_invariants = false;

    /// When set, receives the final per-arc auxiliary data.
    TerminalSccTrace* trace = nullptr;
};

struct TerminalSccResult {
    /// All classes of the final partition, sorted by smallest member.
    std::vector<Component> components;
    RunStats stats;

    std::vector<Component> terminal_components() const;
};

/// Computes the terminal strongly connected components in time
/// O(size(h) * alpha(|V|)). Works on one union-find quotient of the vertex
/// set: a Tarjan-style search over the digraph of currently-simple arcs,
/// merging every discovered terminal digraph SCC into a single vertex and
/// resuming from the hyperarcs that the merge turned simple.
TerminalSccResult terminal_sccs(const Hypergraph& h, const TerminalSccOptions& options = {});

/// Reference algorithm: repeatedly project to the digraph of simple arcs,
/// collapse its non-singleton terminal SCCs through image(), and stop when
/// all terminal digraph SCCs are singletons. Returns only the terminal
/// components, sorted by smallest member.
std::vector<Component> terminal_sccs_naive(const Hypergraph& h);

/// Quadratic oracle: all SCCs from the full reachability relation, with the
/// terminal flag set exactly. Sorted by smallest member.
std::vector<Component> all_sccs_bruteforce(const Hypergraph& h);

/// Standard Tarjan on a digraph, with terminal flags. Sorted by smallest
/// member.
std::vector<Component> tarjan_digraph_sccs(const Digraph& g);

/// True iff some vertex is reachable from every vertex, i.e. the hypergraph
/// has exactly one terminal SCC. Throws EmptyHypergraph on zero vertices.
bool has_sink(const Hypergraph& h);

/// True iff all vertices are mutually reachable, i.e. one terminal SCC
/// contains every vertex. Throws EmptyHypergraph on zero vertices.
bool is_strongly_connected(const Hypergraph& h);

} // namespace dhg
