#include "dhg/terminal_scc.hpp"

#include <doctest.h>

#include "dhg/error.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace dhg;
using namespace dhg::testing;

namespace {

std::vector<std::vector<VertexId>> terminal_member_sets(const std::vector<Component>& comps) {
    std::vector<std::vector<VertexId>> out;
    for (const Component& c : comps) {
        if (c.terminal) out.push_back(c.members);
    }
    return out;
}

void check_stats_bounds(const Hypergraph& h, const RunStats& stats) {
    std::uint64_t arc_count = h.arc_count();
    std::uint64_t head_weight = 0;
    for (const Hyperarc& a : h.arcs()) head_weight += a.head.size();

    CHECK(stats.makeset_calls == h.vertex_count());
    CHECK(stats.merge_calls <= (h.vertex_count() == 0 ? 0 : h.vertex_count() - 1));
    CHECK(stats.find_calls <= h.size());
    CHECK(stats.fu_pushes <= arc_count);
    CHECK(stats.f_pushes <= 2 * arc_count);
    CHECK(stats.inner_loop_iterations <= head_weight);
}

} // namespace

TEST_CASE("six-vertex sample: components and final arc data") {
    const Hypergraph h = make_sample();
    TerminalSccTrace trace;
    TerminalSccOptions opts;
    opts.trace = &trace;
    opts.check_invariants = true;

    const TerminalSccResult result = terminal_sccs(h, opts);

    REQUIRE(result.components.size() == 4);
    CHECK(result.components[0].members == std::vector<VertexId>{0, 1, 2});
    CHECK_FALSE(result.components[0].terminal);
    CHECK(result.components[1].members == std::vector<VertexId>{3});
    CHECK(result.components[1].terminal);
    CHECK(result.components[2].members == std::vector<VertexId>{4});
    CHECK(result.components[2].terminal);
    CHECK(result.components[3].members == std::vector<VertexId>{5});
    CHECK(result.components[3].terminal);

    // final auxiliary data of the two non-simple arcs under the canonical
    // ascending visit order
    CHECK(trace.root[3] == 1);
    CHECK(trace.counter[3] == 2);
    CHECK(trace.root[4] == 2);
    CHECK(trace.counter[4] == 2);

    check_stats_bounds(h, result.stats);
}

TEST_CASE("hidden SCC: only the sink vertex is discovered as terminal") {
    const Hypergraph h = make_hidden_scc();
    const auto result = terminal_sccs(h, {.check_invariants = true});
    CHECK(terminal_member_sets(result.components) ==
          std::vector<std::vector<VertexId>>{{1}});

    // the brute-force oracle sees the whole partition
    const auto oracle = all_sccs_bruteforce(h);
    REQUIRE(oracle.size() == 2);
    CHECK(oracle[0].members == std::vector<VertexId>{0, 2});
    CHECK_FALSE(oracle[0].terminal);
    CHECK(oracle[1].members == std::vector<VertexId>{1});
    CHECK(oracle[1].terminal);
}

TEST_CASE("cycle with an entry tail") {
    Hypergraph h = make_cycle(3);
    // extra vertex 3 feeding the cycle
    Hypergraph with_tail(4);
    for (ArcIndex a = 0; a < h.arc_count(); ++a) {
        with_tail.add_hyperarc(h.arc(a).tail, h.arc(a).head);
    }
    with_tail.add_hyperarc({3}, {0});
    const auto result = terminal_sccs(with_tail, {.check_invariants = true});
    CHECK(terminal_member_sets(result.components) ==
          std::vector<std::vector<VertexId>>{{0, 1, 2}});
}

TEST_CASE("single vertex and empty hypergraph") {
    const auto lone = terminal_sccs(Hypergraph(1));
    REQUIRE(lone.components.size() == 1);
    CHECK(lone.components[0].terminal);

    CHECK(terminal_sccs(Hypergraph(0)).components.empty());
    CHECK(all_sccs_bruteforce(Hypergraph(1)).at(0).terminal);
}

TEST_CASE("naive reference algorithm on the fixtures") {
    CHECK(terminal_member_sets(terminal_sccs_naive(make_sample())) ==
          std::vector<std::vector<VertexId>>{{3}, {4}, {5}});
    CHECK(terminal_member_sets(terminal_sccs_naive(make_hidden_scc())) ==
          std::vector<std::vector<VertexId>>{{1}});
    CHECK(terminal_member_sets(terminal_sccs_naive(make_chain(4))) ==
          std::vector<std::vector<VertexId>>{{3}});
}

TEST_CASE("tarjan on digraphs") {
    const Digraph cycle = graph_projection(make_cycle(3));
    const auto comps = tarjan_digraph_sccs(cycle);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].members == std::vector<VertexId>{0, 1, 2});
    CHECK(comps[0].terminal);

    const Digraph chain = graph_projection(make_chain(3));
    const auto chain_comps = tarjan_digraph_sccs(chain);
    REQUIRE(chain_comps.size() == 3);
    CHECK_FALSE(chain_comps[0].terminal);
    CHECK_FALSE(chain_comps[1].terminal);
    CHECK(chain_comps[2].terminal);

    const auto sample_comps = tarjan_digraph_sccs(graph_projection(make_sample()));
    bool found_cycle = false;
    for (const auto& c : sample_comps) {
        if (c.members == std::vector<VertexId>{0, 1, 2}) {
            CHECK(c.terminal);
            found_cycle = true;
        }
    }
    CHECK(found_cycle);
}

TEST_CASE("oracle agreement on random hypergraphs") {
    Rng rng(123456);
    for (int iter = 0; iter < 400; ++iter) {
        const Hypergraph h = random_hypergraph(rng);
        const auto fast = terminal_sccs(h, {.check_invariants = true});
        const auto fast_terminal = terminal_member_sets(fast.components);
        CHECK(fast_terminal == terminal_member_sets(all_sccs_bruteforce(h)));
        CHECK(fast_terminal == terminal_member_sets(terminal_sccs_naive(h)));
        check_stats_bounds(h, fast.stats);

        // the reported classes partition the vertex set
        std::vector<int> seen(h.vertex_count(), 0);
        for (const Component& c : fast.components) {
            CHECK_FALSE(c.members.empty());
            for (VertexId v : c.members) ++seen[v];
        }
        CHECK(std::count(seen.begin(), seen.end(), 1) ==
              static_cast<long>(h.vertex_count()));
    }
}

TEST_CASE("digraph specialization agrees with tarjan") {
    Rng rng(654321);
    for (int iter = 0; iter < 300; ++iter) {
        const Hypergraph h = random_digraph_as_hypergraph(rng);
        const auto fast = terminal_sccs(h, {.check_invariants = true});
        CHECK(terminal_member_sets(fast.components) ==
              terminal_member_sets(tarjan_digraph_sccs(graph_projection(h))));
    }
}

TEST_CASE("terminal components are independent of arc and visit order") {
    Rng rng(988);
    for (int iter = 0; iter < 40; ++iter) {
        const Hypergraph h = random_hypergraph(rng);
        const auto reference = terminal_member_sets(terminal_sccs(h).components);
        for (int round = 0; round < 4; ++round) {
            const Hypergraph shuffled = permute_arcs(rng, h);
            const auto order = random_permutation(rng, h.vertex_count());
            TerminalSccOptions opts;
            opts.visit_order = order;
            CHECK(terminal_member_sets(terminal_sccs(shuffled, opts).components) == reference);
        }
    }
}

TEST_CASE("visit order must be a permutation") {
    const Hypergraph h = make_sample();
    const std::vector<VertexId> bad{0, 0, 1, 2, 3, 4};
    TerminalSccOptions opts;
    opts.visit_order = bad;
    CHECK_THROWS_AS(terminal_sccs(h, opts), Error);
}

TEST_CASE("sink and strong connectivity queries") {
    CHECK(has_sink(make_cycle(3)));
    CHECK(is_strongly_connected(make_cycle(3)));

    CHECK_FALSE(has_sink(make_sample()));
    CHECK_FALSE(is_strongly_connected(make_sample()));

    CHECK_FALSE(has_sink(Hypergraph(2)));
    CHECK(has_sink(Hypergraph(1)));
    CHECK(is_strongly_connected(Hypergraph(1)));
    CHECK(has_sink(make_chain(4)));
    CHECK_FALSE(is_strongly_connected(make_chain(4)));

    CHECK_THROWS_AS(has_sink(Hypergraph(0)), Error);
    CHECK_THROWS_AS(is_strongly_connected(Hypergraph(0)), Error);
}
