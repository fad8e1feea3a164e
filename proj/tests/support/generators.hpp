#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "dhg/horn.hpp"
#include "dhg/hypergraph.hpp"
#include "dhg/set_family.hpp"

namespace dhg::testing {

using Rng = std::mt19937;

inline std::uint32_t pick(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
    return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

inline std::vector<VertexId> random_vertex_set(Rng& rng, std::uint32_t vertex_count,
                                               std::uint32_t max_size) {
    const std::uint32_t size = pick(rng, 1, std::min(max_size, vertex_count));
    std::vector<VertexId> out;
    for (std::uint32_t i = 0; i < size; ++i) {
        out.push_back(pick(rng, 0, vertex_count - 1));
    }
    return out; // duplicates are fine, add_hyperarc canonicalizes
}

inline Hypergraph random_hypergraph(Rng& rng, std::uint32_t max_vertices = 12,
                                    std::uint32_t max_arcs = 20,
                                    std::uint32_t max_side = 4) {
    const std::uint32_t n = pick(rng, 1, max_vertices);
    Hypergraph h(n);
    const std::uint32_t arcs = pick(rng, 0, max_arcs);
    for (std::uint32_t i = 0; i < arcs; ++i) {
        h.add_hyperarc(random_vertex_set(rng, n, max_side),
                       random_vertex_set(rng, n, max_side));
    }
    return h;
}

// Hypergraph whose arcs all have singleton tails and heads.
inline Hypergraph random_digraph_as_hypergraph(Rng& rng, std::uint32_t max_vertices = 12,
                                               std::uint32_t max_arcs = 24) {
    const std::uint32_t n = pick(rng, 1, max_vertices);
    Hypergraph h(n);
    const std::uint32_t arcs = pick(rng, 0, max_arcs);
    for (std::uint32_t i = 0; i < arcs; ++i) {
        h.add_hyperarc({pick(rng, 0, n - 1)}, {pick(rng, 0, n - 1)});
    }
    return h;
}

inline std::vector<VertexId> random_permutation(Rng& rng, std::uint32_t n) {
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

inline Hypergraph permute_arcs(Rng& rng, const Hypergraph& h) {
    std::vector<std::uint32_t> arc_order(h.arc_count());
    for (std::uint32_t i = 0; i < h.arc_count(); ++i) arc_order[i] = i;
    std::shuffle(arc_order.begin(), arc_order.end(), rng);
    Hypergraph out(h.vertex_count());
    for (std::uint32_t i : arc_order) {
        out.add_hyperarc(h.arc(i).tail, h.arc(i).head);
    }
    return out;
}

// Random mix of implications, facts, and goals; a self-implication per
// variable keeps the every-variable-occurs invariant.
inline HornFormula random_horn_formula(Rng& rng, std::uint32_t max_vars = 10) {
    HornFormula f;
    f.n_vars = pick(rng, 1, max_vars);
    const std::uint32_t clause_count = pick(rng, 0, 2 * f.n_vars);
    for (std::uint32_t i = 0; i < clause_count; ++i) {
        std::vector<std::uint32_t> vars;
        const std::uint32_t arity = pick(rng, 1, std::min(3u, f.n_vars));
        for (std::uint32_t j = 0; j < arity; ++j) {
            vars.push_back(pick(rng, 1, f.n_vars));
        }
        switch (pick(rng, 0, 2)) {
        case 0:
            f.clauses.push_back(HornFormula::implication(vars, pick(rng, 1, f.n_vars)));
            break;
        case 1:
            f.clauses.push_back(HornFormula::fact(vars.front()));
            break;
        default:
            f.clauses.push_back(HornFormula::goal(vars));
            break;
        }
    }
    for (std::uint32_t v = 1; v <= f.n_vars; ++v) {
        f.clauses.push_back(HornFormula::implication({v}, v));
    }
    return f;
}

inline SetFamily random_set_family(Rng& rng, std::uint32_t max_domain = 8,
                                   std::uint32_t max_sets = 12) {
    SetFamily f;
    f.domain_size = pick(rng, 1, max_domain);
    const std::uint32_t want = pick(rng, 0, max_sets);
    for (std::uint32_t i = 0; i < want; ++i) {
        std::vector<std::uint32_t> s;
        for (std::uint32_t x = 0; x < f.domain_size; ++x) {
            if (pick(rng, 0, 2) == 0) s.push_back(x);
        }
        f.sets.push_back(std::move(s));
    }
    std::sort(f.sets.begin(), f.sets.end());
    f.sets.erase(std::unique(f.sets.begin(), f.sets.end()), f.sets.end());
    return f;
}

} // namespace dhg::testing
