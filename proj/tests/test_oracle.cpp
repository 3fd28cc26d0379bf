#include <algorithm>
#include <sstream>

#include "carpet/graph_io.hpp"
#include "carpet/metric.hpp"
#include "carpet/oracle.hpp"
#include "doctest.h"

using namespace carpet;

TEST_CASE("graph sizes: vertices 4/16/96/688/5280, edges 4/24/168/1272/9960") {
    const std::size_t want_v[] = {4, 16, 96, 688, 5280};
    const std::size_t want_e[] = {4, 24, 168, 1272, 9960};
    for (int level = 1; level <= 5; ++level) {
        const AdjacencyGraph g = build_graph(level);
        CHECK(g.vertex_count() == want_v[level - 1]);
        CHECK(g.edge_count() == want_e[level - 1]);
    }
}

TEST_CASE("oracle cap is enforced and overridable") {
    CHECK_THROWS_AS(build_graph(7), CapError);
    CHECK_THROWS_AS(build_graph(kMaxOracleLevel + 1, 99), CapError);
    CHECK(build_graph(3, 3).vertex_count() == 96);
}

TEST_CASE("graph structure: degrees 2..4, symmetric adjacency, no loops") {
    for (int level = 1; level <= 4; ++level) {
        const AdjacencyGraph g = build_graph(level);
        for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
            const auto nb = g.neighbors(u);
            CHECK(nb.size() >= 2);
            CHECK(nb.size() <= 4);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
            for (std::uint32_t v : nb) {
                CHECK(v != u);
                const auto back = g.neighbors(v);
                CHECK(std::binary_search(back.begin(), back.end(), u));
                // edges are unit steps of the lattice
                CHECK(l1(g.points[u], g.points[v]) == 1);
            }
        }
    }
}

TEST_CASE("graph agrees with the vertex table on the vertex set") {
    for (int level = 1; level <= 5; ++level) {
        const AdjacencyGraph g = build_graph(level);
        const VertexTable table = build_vertex_table(level);
        CHECK(g.points == table.points());
    }
}

TEST_CASE("bfs_from level 1 is the 4-cycle") {
    const AdjacencyGraph g = build_graph(1);
    const auto a = g.find(LatticePoint{0, 0});
    REQUIRE(a.has_value());
    const auto dist = bfs_from(g, *a);
    std::vector<std::uint16_t> sorted(dist.begin(), dist.end());
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<std::uint16_t>{0, 1, 1, 2});
}

TEST_CASE("bfs reproduces the worked distances") {
    SUBCASE("level 4, around a nested hole") {
        const AdjacencyGraph g = build_graph(4);
        const auto s = g.find(LatticePoint{0, 5});
        const auto t = g.find(LatticePoint{27, 5});
        REQUIRE(s.has_value());
        REQUIRE(t.has_value());
        CHECK(bfs_from(g, *s)[*t] == 29);
    }
    SUBCASE("level 3, around the central hole") {
        const AdjacencyGraph g = build_graph(3);
        const auto s = g.find(LatticePoint{5, 2});
        const auto t = g.find(LatticePoint{5, 8});
        REQUIRE(s.has_value());
        REQUIRE(t.has_value());
        CHECK(bfs_from(g, *s)[*t] == 8);
    }
}

TEST_CASE("bfs reaches every vertex (connectivity)") {
    for (int level = 1; level <= 5; ++level) {
        const AdjacencyGraph g = build_graph(level);
        const auto dist = bfs_from(g, 0);
        CHECK(std::count(dist.begin(), dist.end(), 0xffff) == 0);
    }
}

TEST_CASE("the dihedral maps are adjacency-preserving automorphisms") {
    for (int level = 2; level <= 4; ++level) {
        const AdjacencyGraph g = build_graph(level);
        const std::int64_t extent = pow3(level - 1);
        for (int op = 0; op < 8; ++op) {
            for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
                const auto iu = g.find(d4_image(op, g.points[u], extent));
                REQUIRE(iu.has_value());
                for (std::uint32_t v : g.neighbors(u)) {
                    const auto iv = g.find(d4_image(op, g.points[v], extent));
                    REQUIRE(iv.has_value());
                    const auto nb = g.neighbors(*iu);
                    CHECK(std::binary_search(nb.begin(), nb.end(), *iv));
                }
            }
        }
    }
}

TEST_CASE("oracle_wiener matches the handmade values and is worker-independent") {
    const AdjacencyGraph g1 = build_graph(1);
    CHECK(oracle_wiener(g1) == 8);
    const AdjacencyGraph g2 = build_graph(2);
    CHECK(oracle_wiener(g2) == 320);
    const AdjacencyGraph g3 = build_graph(3);
    CHECK(oracle_wiener(g3) == 31264);
    CHECK(oracle_wiener(g3, 2) == 31264);
    CHECK(oracle_wiener(g3, 8) == 31264);
}

TEST_CASE("uint128 decimal rendering") {
    CHECK(to_string(uint128(0)) == "0");
    CHECK(to_string(uint128(4642456)) == "4642456");
    const uint128 big = uint128(150203897168ull) * 1000000000ull;  // > 2^64
    CHECK(to_string(big) == "150203897168000000000");
}

TEST_CASE("exports are well-formed and sized to the graph") {
    const AdjacencyGraph g = build_graph(2);
    const VertexTable table = build_vertex_table(2);

    std::ostringstream edges;
    write_edge_list(edges, g, table);
    std::size_t edge_lines = 0, header_lines = 0;
    std::istringstream in(edges.str());
    for (std::string line; std::getline(in, line);) {
        (line.rfind("# ", 0) == 0 ? header_lines : edge_lines) += 1;
    }
    CHECK(edge_lines == 24);
    CHECK(header_lines == 2 + 16);

    std::ostringstream dot;
    write_dot(dot, g, table);
    CHECK(dot.str().rfind("graph carpet_2 {", 0) == 0);
    CHECK(dot.str().find("v0 [label=\"a0\", pos=\"0,0!\"]") != std::string::npos);

    std::ostringstream csv;
    write_csv(csv, g, table);
    const std::string csv_text = csv.str();
    CHECK(std::count(csv_text.begin(), csv_text.end(), '\n') == 17);  // header + 16 vertices
}
