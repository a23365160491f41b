#include <string>

#include "doctest.h"
#include "matchgap/edgelist.hpp"
#include "support/checks.hpp"
#include "support/corpus.hpp"

using namespace matchgap;
using checks::thrown_code;

TEST_CASE("parsing a well-formed edge list") {
    const std::string text =
        "c a comment\n"
        "\n"
        "p edge 5 4\n"
        "e 1 2\n"
        "c interleaved comment\n"
        "e 2 3\r\n"  // CRLF line endings are tolerated
        "e 3 4\n"
        "e 4 5\n";
    Graph g = parse_edgelist(text);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edges() == EdgeSet{{0, 1}, {1, 2}, {2, 3}, {3, 4}});

    // Endpoint order in the file is free; 1-based becomes 0-based.
    Graph h = parse_edgelist("p edge 3 1\ne 3 1\n");
    CHECK(h.edges() == EdgeSet{{0, 2}});

    // Vertices may be isolated; a trailing newline is optional.
    Graph iso = parse_edgelist("p edge 4 1\ne 1 2");
    CHECK(iso.vertex_count() == 4);
    CHECK(iso.edge_count() == 1);
}

TEST_CASE("parser rejections carry the offending line") {
    auto code = [](const std::string& text) {
        return thrown_code([&] { parse_edgelist(text); });
    };
    CHECK(code("") == errc::syntax);                                // no problem line
    CHECK(code("e 1 2\n") == errc::syntax);                         // edge first
    CHECK(code("p edge 3 1\np edge 3 1\ne 1 2\n") == errc::syntax); // second header
    CHECK(code("p clique 3 1\ne 1 2\n") == errc::syntax);          // wrong kind
    CHECK(code("p edge 3 1 junk\ne 1 2\n") == errc::syntax);       // trailing tokens
    CHECK(code("p edge 3 1\ne 1 2 junk\n") == errc::syntax);
    CHECK(code("p edge 3 1\ne 1\n") == errc::syntax);              // missing endpoint
    CHECK(code("p edge 3 1\nq 1 2\n") == errc::syntax);            // unknown record
    CHECK(code("p edge 3 2\ne 1 2\ne 2 1\n") == errc::syntax);     // duplicate edge
    CHECK(code("p edge 3 1\ne 0 2\n") == errc::index_out_of_range);
    CHECK(code("p edge 3 1\ne 1 4\n") == errc::index_out_of_range);
    CHECK(code("p edge 3 1\ne 2 2\n") == errc::self_loop);
    CHECK(code("p edge 3 2\ne 1 2\n") == errc::header_mismatch);
    CHECK(code("p edge 3 0\ne 1 2\n") == errc::header_mismatch);

    try {
        parse_edgelist("p edge 3 1\nc fine\ne 1 1\n");
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("writing produces the canonical sorted form") {
    Graph g(4, {{3, 2}, {0, 1}});
    CHECK(write_edgelist(g) == "p edge 4 2\ne 1 2\ne 3 4\n");
    CHECK(write_edgelist(Graph(2, {})) == "p edge 2 0\n");
}

TEST_CASE("write/parse round-trips 1000 random graphs") {
    for (int trial = 0; trial < 1000; ++trial) {
        const Graph g = corpus::random_connected(2 + trial % 11, 71000 + trial);
        const std::string text = write_edgelist(g);
        const Graph back = parse_edgelist(text);
        REQUIRE(back.vertex_count() == g.vertex_count());
        REQUIRE(back.edges() == g.edges());
        REQUIRE(write_edgelist(back) == text);  // canonical form is a fixed point
    }
}
