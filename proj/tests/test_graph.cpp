#include <doctest.h>

#include "matgeo/graph.hpp"

using namespace matgeo;

namespace {

struct Built {
    PointSet space;
    AdjacencyList adj;
    DistanceIndex index;
};

Built build(const std::string& descriptor, int jobs = 1) {
    PointSet space = PointSet::enumerate(SpaceDescriptor::parse(descriptor));
    AdjacencyList adj = build_adjacency(space, jobs);
    DistanceIndex index = build_index(adj, 100000, jobs);
    return Built{std::move(space), std::move(adj), std::move(index)};
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("synthetic graphs validate their edge lists") {
    AdjacencyList p3 = adjacency_from_edges(3, {{0, 1}, {1, 2}});
    CHECK(p3.edge_count == 2);
    CHECK(p3.nbrs[1] == std::vector<int>{0, 2});
    CHECK(p3.adjacent(0, 1));
    CHECK_FALSE(p3.adjacent(0, 2));

    CHECK_THROWS_AS(adjacency_from_edges(3, {{0, 0}}), Error);          // self loop
    CHECK_THROWS_AS(adjacency_from_edges(3, {{0, 1}, {1, 0}}), Error);  // duplicate
    CHECK_THROWS_AS(adjacency_from_edges(3, {{0, 3}}), Error);          // out of range
}

TEST_CASE("bfs marks unreachable vertices") {
    AdjacencyList two = adjacency_from_edges(2, {});
    auto d = bfs_from(two, 0);
    CHECK(d[0] == 0);
    CHECK(d[1] == kUnreachable);

    DistanceIndex index = build_index(two);
    CHECK_FALSE(index.connected());
    auto hist = distance_histogram(index);
    CHECK(hist.at(0) == 2);
    CHECK(hist.at(kUnreachable) == 2);
}

TEST_CASE("distance index on a path and a cycle") {
    DistanceIndex p3 = build_index(adjacency_from_edges(3, {{0, 1}, {1, 2}}));
    CHECK(p3.connected());
    CHECK(p3.diameter() == 2);
    CHECK(p3.d(0, 2) == 2);

    DistanceIndex c4 = build_index(adjacency_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    CHECK(c4.diameter() == 2);
    CHECK(common_neighbors(c4, 0, 2) == std::vector<int>{1, 3});
    CHECK(common_neighbors(c4, 0, 1).empty());
}

TEST_CASE("vertex cap refuses oversized graphs") {
    Built b = build("sym:2:GF(2)");
    CHECK_THROWS_AS(build_index(b.adj, 4), Error);
}

TEST_CASE("matrix-space graph census is reproducible") {
    Built b = build("sym:2:GF(3)");
    CHECK(b.adj.edge_count == 108);
    for (const auto& row : b.adj.nbrs) CHECK(row.size() == 8);
    CHECK(b.index.diameter() == 2);

    auto hist = distance_histogram(b.index);
    CHECK(hist == std::map<int, long long>{{0, 27}, {1, 216}, {2, 486}});
}

TEST_CASE("worker count never changes the graph or the distances") {
    Built serial = build("sym:2:GF(3)", 1);
    Built parallel = build("sym:2:GF(3)", 3);
    CHECK(serial.adj.nbrs == parallel.adj.nbrs);
    CHECK(serial.adj.edge_count == parallel.adj.edge_count);
    for (int a = 0; a < serial.index.size(); ++a)
        for (int bb = 0; bb < serial.index.size(); ++bb)
            CHECK(serial.index.d(a, bb) == parallel.index.d(a, bb));
}

TEST_CASE("rank formula mode verifies square and wide spaces") {
    Built sq = build("rect:2x2:GF(2)");
    auto rep = verify_distance_formula(sq.space, sq.index);
    CHECK(rep.mode == FormulaMode::RankFormula);
    CHECK(rep.pass);
    CHECK(rep.expected_diameter == 2);
    CHECK(rep.pairs_checked == 16LL * 16);

    Built wide = build("rect:2x3:GF(3)");
    auto wide_rep = verify_distance_formula(wide.space, wide.index);
    CHECK(wide_rep.mode == FormulaMode::RankFormula);
    CHECK(wide_rep.pass);
    CHECK(wide_rep.expected_diameter == 2);
}

TEST_CASE("rank formula mode covers restricted hermitian spaces") {
    Built sym5 = build("sym:2:GF(5)");
    auto rep5 = verify_distance_formula(sym5.space, sym5.index);
    CHECK(rep5.mode == FormulaMode::RankFormula);
    CHECK(rep5.pass);

    Built grass = build("grass:2:4:GF(2)");
    auto repg = verify_distance_formula(grass.space, grass.index);
    CHECK(repg.mode == FormulaMode::RankFormula);
    CHECK(repg.pass);
    CHECK(repg.expected_diameter == 2);
}

TEST_CASE("alternate bound mode asserts only the top distance") {
    Built b = build("sym:2:GF(2)");
    auto rep = verify_distance_formula(b.space, b.index);
    CHECK(rep.mode == FormulaMode::AlternateBound);
    CHECK(rep.pass);
    CHECK(rep.expected_diameter == 3);
    CHECK(b.index.diameter() == 3);
}

TEST_CASE("descriptive mode claims nothing but still reports") {
    Built small = build("sym:2:GF(3)");  // identity involution over only three fixed elements
    auto rep = verify_distance_formula(small.space, small.index);
    CHECK(rep.mode == FormulaMode::Descriptive);
    CHECK(rep.pass);
    CHECK_FALSE(rep.note.empty());
    CHECK(rep.histogram == distance_histogram(small.index));

    Built odd = build("sym:3:GF(2)");  // characteristic 2 but odd size
    CHECK(verify_distance_formula(odd.space, odd.index).mode == FormulaMode::Descriptive);
}

TEST_CASE("dot export is stable and complete") {
    Built b = build("sym:2:GF(2)");
    std::string dot = to_dot(b.space, b.adj);
    CHECK(dot == to_dot(b.space, b.adj));
    CHECK(dot.find("graph \"sym:2:GF(2)\"") == 0);
    CHECK(dot.find("0 [label=\"0,0;0,0\"]") != std::string::npos);
    // 8 label lines and 12 edge lines.
    long long labels = 0, edges = 0;
    for (std::size_t pos = 0; (pos = dot.find("label=", pos)) != std::string::npos; ++pos) ++labels;
    for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(labels == 8);
    CHECK(edges == 12);
}

}  // TEST_SUITE("graph")
