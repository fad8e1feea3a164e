#pragma once

#include <cstdint>
#include <vector>

#include "dhg/hypergraph.hpp"

namespace dhg {

/// Family of pairwise-distinct sets over the domain 0..domain_size-1. Sets
/// are stored sorted; the constructor path (normalize) rejects duplicates.
struct SetFamily {
    std::uint32_t domain_size = 0;
    std::vector<std::vector<std::uint32_t>> sets;

    /// Sorts and deduplicates elements of each set, checks ranges, and
    /// throws DuplicateSet if two sets coincide.
    void normalize();

    bool operator==(const SetFamily&) const = default;
};

/// The hypergraph built from a set family: one vertex per set and per domain
/// element, with a pair of opposite hyperarcs connecting each set's vertex
/// with its elements' vertices. When the family has a set of size <= 1, two
/// fresh padding elements are appended to every set (and the domain) so that
/// every set has more than one element; that keeps the inclusion order and
/// the acyclicity argument intact.
///
/// The minimal-set extension adds a witness vertex per set, a chain of
/// cardinality counters, and the distinguished superset vertex that is
/// reachable exactly from the vertices of non-minimal sets.
struct SubsetHypergraph {
    Hypergraph hypergraph;
    std::uint32_t n_sets = 0;
    std::uint32_t padded_domain = 0; // domain_size, +2 when padding applied
    bool minimal_extension = false;

    /// v[S]: vertex of set index k (0-based).
    VertexId set_vertex(std::uint32_t k) const { return k; }
    /// v[x]: vertex of domain element x.
    VertexId element_vertex(std::uint32_t x) const { return n_sets + x; }
    /// w[S]: witness vertex of set index k (minimal extension only).
    VertexId witness_vertex(std::uint32_t k) const {
        return n_sets + padded_domain + k;
    }
    /// c_i: cardinality counter vertex, 0 <= i <= padded_domain.
    VertexId counter_vertex(std::uint32_t i) const {
        return 2 * n_sets + padded_domain + i;
    }
    VertexId superset_vertex() const {
        return 2 * n_sets + 2 * padded_domain + 1;
    }

    /// Arc index of a[S] (set vertex to element vertices) and its inverse
    /// a'[S].
    ArcIndex down_arc(std::uint32_t k) const { return 2 * k; }
    ArcIndex up_arc(std::uint32_t k) const { return 2 * k + 1; }
};

/// Builds the plain subset hypergraph of the family.
SubsetHypergraph build_subset_hypergraph(const SetFamily& f);

/// Builds the minimal-set extension.
SubsetHypergraph build_minimal_hypergraph(const SetFamily& f);

/// Indices of the inclusion-minimal sets, via one reachability query per set
/// on the minimal-set extension: S is minimal iff the superset vertex is not
/// reachable from v[S].
std::vector<std::uint32_t> minimal_sets(const SetFamily& f);

/// Pairwise-comparison oracle for the same question.
std::vector<std::uint32_t> minimal_sets_bruteforce(const SetFamily& f);

/// True iff no member of the family contains another, decided by comparing
/// the number of minimal sets with the family size.
bool is_sperner(const SetFamily& f);

/// The two-layer family over domain size n (n divisible by 4, n >= 4):
/// all n/4-subsets of the first half, plus all sets made of the whole first
/// half and exactly n/4 elements of the second half. Its inclusion order is
/// the complete bipartite relation between the layers, which makes the
/// transitive-reduction size quadratic in the family size.
SetFamily lower_bound_family(std::uint32_t n);

/// Covering pairs (k, k') of the strict inclusion order: sets[k] is a proper
/// subset of sets[k'] with nothing strictly between.
std::vector<std::pair<std::uint32_t, std::uint32_t>>
subset_order_transitive_reduction(const SetFamily& f);

/// A total order of set indices listing S before S' whenever S is a subset
/// of S', obtained from a topological sort of the subset hypergraph.
std::vector<std::uint32_t> linear_extension(const SetFamily& f);

} // namespace dhg
