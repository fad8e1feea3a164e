#include "dhg/text_io.hpp"

#include <doctest.h>

#include "dhg/error.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace dhg;
using namespace dhg::testing;

TEST_CASE("hypergraph round trip") {
    const Hypergraph h = make_sample();
    CHECK(parse_hypergraph(format_hypergraph(h)) == h);

    const std::string text = "# demo\nvertices 3\n\n0 -> 1 2   # fan\n1 2 -> 0\n";
    const Hypergraph parsed = parse_hypergraph(text);
    CHECK(parsed.vertex_count() == 3);
    CHECK(parsed.arc_count() == 2);
    CHECK(parsed.arc(1) == Hyperarc{{1, 2}, {0}});
}

TEST_CASE("hypergraph parse errors carry line numbers") {
    auto message_of = [](const char* text) -> std::string {
        try {
            parse_hypergraph(text);
        } catch (const Error& e) {
            return e.what();
        }
        return "";
    };
    CHECK(message_of("") == "line 1: missing 'vertices <n>' header");
    CHECK(message_of("vertices\n") == "line 1: expected 'vertices <n>'");
    CHECK(message_of("vertices 2\n0 1\n").find("line 2") == 0);
    CHECK(message_of("vertices 2\n\n0 -> 5\n").find("line 3") == 0);
    CHECK(message_of("vertices 2\n0 -> x\n").find("line 2") == 0);
    CHECK(message_of("vertices 1\n -> 0\n").find("line 2") == 0);
}

TEST_CASE("hypergraph format is canonical") {
    Hypergraph h(4);
    h.add_hyperarc({3, 1}, {2, 0});
    CHECK(format_hypergraph(h) == "vertices 4\n1 3 -> 0 2\n");
}

TEST_CASE("horn round trip and errors") {
    const std::string text =
        "vars 3\nfact 1\nimp 1 2 -> 3\ngoal 2 3\n";
    const HornFormula f = parse_horn(text);
    CHECK(f.n_vars == 3);
    REQUIRE(f.clauses.size() == 3);
    CHECK(f.clauses[1].premises == std::vector<std::uint32_t>{1, 2});
    CHECK(f.clauses[1].conclusion == 3);
    CHECK(parse_horn(format_horn(f)) == f);

    CHECK_THROWS_AS(parse_horn("vars 2\nfact 1\n"), Error); // variable 2 unused
    CHECK_THROWS_AS(parse_horn("vars 1\nimp -> 1\n"), Error);
    CHECK_THROWS_AS(parse_horn("vars 1\nblah 1\n"), Error);
    try {
        parse_horn("vars 1\nfact 1\nfact 9\n");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("family round trip and errors") {
    const std::string text = "domain 4\nset 0 1\nset 2 3\nset\n";
    const SetFamily f = parse_family(text);
    CHECK(f.domain_size == 4);
    REQUIRE(f.sets.size() == 3);
    CHECK(f.sets[2].empty());
    CHECK(parse_family(format_family(f)) == f);

    CHECK_THROWS_AS(parse_family("domain 2\nset 0\nset 0\n"), Error);
    CHECK_THROWS_AS(parse_family("domain 2\nset 7\n"), Error);
    CHECK_THROWS_AS(parse_family("set 1\n"), Error);
}

TEST_CASE("random hypergraphs survive the round trip") {
    Rng rng(808);
    for (int iter = 0; iter < 100; ++iter) {
        const Hypergraph h = random_hypergraph(rng);
        CHECK(parse_hypergraph(format_hypergraph(h)) == h);
    }
}
