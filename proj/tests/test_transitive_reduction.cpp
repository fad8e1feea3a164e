#include "dhg/transitive_reduction.hpp"

#include <doctest.h>

#include "dhg/error.hpp"
#include "dhg/set_family.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace dhg;
using namespace dhg::testing;

namespace {

// Transitive-reflexive closure of a pair list, as a relation matrix.
ReachRelation close_pairs(std::uint32_t n,
                          const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::vector<bool> m(static_cast<std::size_t>(n) * n, false);
    auto at = [&](VertexId u, VertexId v) -> decltype(m)::reference {
        return m[static_cast<std::size_t>(u) * n + v];
    };
    for (VertexId v = 0; v < n; ++v) at(v, v) = true;
    for (auto [u, v] : pairs) at(u, v) = true;
    for (VertexId k = 0; k < n; ++k) {
        for (VertexId u = 0; u < n; ++u) {
            if (!at(u, k)) continue;
            for (VertexId v = 0; v < n; ++v) {
                if (at(k, v)) at(u, v) = true;
            }
        }
    }
    return ReachRelation(n, std::move(m));
}

} // namespace

TEST_CASE("three-cycle reduces to three pairs") {
    const Preorder p(reachability_relation(make_cycle(3)));
    const auto red = transitive_reduction(p);
    CHECK(red.pairs.size() == 3);
    CHECK(close_pairs(3, red.pairs) == p.relation());
    CHECK(transitive_reduction_size(make_cycle(3)) == 3);
}

TEST_CASE("chain reduces to its two covering pairs") {
    const Preorder p(reachability_relation(make_chain(3)));
    const auto red = transitive_reduction(p);
    CHECK(red.pairs == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});
}

TEST_CASE("identity preorder reduces to nothing") {
    CHECK(transitive_reduction_size(Hypergraph(5)) == 0);
}

TEST_CASE("reduction of the nested-family hypergraph keeps inclusion pairs") {
    SetFamily f;
    f.domain_size = 4;
    f.sets = {{0, 1, 3}, {0, 1, 2}, {0, 1}};
    const SubsetHypergraph built = build_subset_hypergraph(f);
    const auto red = transitive_reduction(Preorder(reachability_relation(built.hypergraph)));
    auto has_pair = [&](VertexId a, VertexId b) {
        return std::find(red.pairs.begin(), red.pairs.end(),
                         std::make_pair(a, b)) != red.pairs.end();
    };
    CHECK(has_pair(built.set_vertex(0), built.set_vertex(2)));
    CHECK(has_pair(built.set_vertex(1), built.set_vertex(2)));
}

TEST_CASE("validate flags non-preorders") {
    std::vector<bool> m = {
        true, true, false,
        false, true, true,
        false, false, true,
    };
    const Preorder broken{ReachRelation(3, std::move(m))};
    CHECK_THROWS_AS(broken.validate(), Error);
}

TEST_CASE("closure round-trip on random preorders") {
    Rng rng(11011);
    for (int iter = 0; iter < 150; ++iter) {
        const Hypergraph h = pick(rng, 0, 1) ? random_hypergraph(rng, 10, 16, 3)
                                             : random_digraph_as_hypergraph(rng, 10, 20);
        const Preorder p(reachability_relation(h));
        const auto red = transitive_reduction(p);
        CHECK(close_pairs(h.vertex_count(), red.pairs) == p.relation());
    }
}

TEST_CASE("reduction size is invariant under relabeling") {
    Rng rng(40004);
    for (int iter = 0; iter < 80; ++iter) {
        const Hypergraph h = random_hypergraph(rng, 9, 14, 3);
        const std::uint32_t n = h.vertex_count();
        const auto perm = random_permutation(rng, n);
        const ReachRelation rel = reachability_relation(h);
        std::vector<bool> permuted(static_cast<std::size_t>(n) * n, false);
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = 0; v < n; ++v) {
                permuted[static_cast<std::size_t>(perm[u]) * n + perm[v]] = rel.at(u, v);
            }
        }
        const auto base = transitive_reduction(Preorder(rel));
        const auto relabeled = transitive_reduction(Preorder(ReachRelation(n, std::move(permuted))));
        CHECK(base.pairs.size() == relabeled.pairs.size());
    }
}

TEST_CASE("topological sort of chains and DAGs") {
    CHECK(topological_sort(make_chain(3)) == std::vector<VertexId>{0, 1, 2});
    CHECK_THROWS_AS(topological_sort(make_sample()), Error);
    try {
        topological_sort(make_cycle(4));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CyclicHypergraph);
    }

    // on the nested-family hypergraph, both non-minimal set vertices come
    // before the minimal one, which comes before every element vertex
    SetFamily f;
    f.domain_size = 4;
    f.sets = {{0, 1, 3}, {0, 1, 2}, {0, 1}};
    const SubsetHypergraph built = build_subset_hypergraph(f);
    const auto order = topological_sort(built.hypergraph);
    std::vector<std::uint32_t> position(order.size());
    for (std::uint32_t pos = 0; pos < order.size(); ++pos) position[order[pos]] = pos;
    CHECK(position[built.set_vertex(0)] < position[built.set_vertex(2)]);
    CHECK(position[built.set_vertex(1)] < position[built.set_vertex(2)]);
    for (std::uint32_t x = 0; x < 2; ++x) {
        CHECK(position[built.set_vertex(2)] < position[built.element_vertex(x)]);
    }
}

TEST_CASE("topological sort satisfies its defining predicate") {
    Rng rng(3003);
    int checked = 0;
    for (int iter = 0; iter < 200 && checked < 60; ++iter) {
        const Hypergraph h = random_hypergraph(rng, 8, 10, 3);
        const ReachRelation rel = reachability_relation(h);
        bool acyclic = true;
        for (VertexId u = 0; u < h.vertex_count() && acyclic; ++u) {
            for (VertexId v = u + 1; v < h.vertex_count(); ++v) {
                if (rel.at(u, v) && rel.at(v, u)) {
                    acyclic = false;
                    break;
                }
            }
        }
        if (!acyclic) continue;
        ++checked;
        const auto order = topological_sort(h);
        REQUIRE(order.size() == h.vertex_count());
        std::vector<std::uint32_t> position(order.size());
        for (std::uint32_t pos = 0; pos < order.size(); ++pos) position[order[pos]] = pos;
        for (VertexId u = 0; u < h.vertex_count(); ++u) {
            for (VertexId v = 0; v < h.vertex_count(); ++v) {
                if (u != v && rel.at(u, v)) {
                    CHECK(position[u] < position[v]);
                }
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("reduction of the subset hypergraph dominates the poset reduction") {
    Rng rng(171717);
    for (int iter = 0; iter < 60; ++iter) {
        SetFamily f = random_set_family(rng, 6, 8);
        f.normalize();
        const SubsetHypergraph built = build_subset_hypergraph(f);
        CHECK(transitive_reduction_size(built.hypergraph) >=
              subset_order_transitive_reduction(f).size());
    }
}

TEST_CASE("growth rows and the increasing ratio") {
    const auto rows = growth_experiment({4, 8, 12});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].reduction_size >= 4);
    CHECK(rows[1].reduction_size >= 36);
    CHECK(rows[1].ratio() < rows[2].ratio());
    CHECK(rows[0].ratio() < rows[1].ratio());

    CHECK_THROWS_AS(growth_experiment({20}), Error);
    CHECK_THROWS_AS(growth_experiment({5}), Error);
}
