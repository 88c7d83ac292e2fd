#include <doctest.h>

#include <random>

#include "matgeo/axioms.hpp"
#include "matgeo/random.hpp"

using namespace matgeo;

namespace {

struct Built {
    PointSet space;
    AdjacencyList adj;
    DistanceIndex index;
};

Built build(const std::string& descriptor) {
    PointSet space = PointSet::enumerate(SpaceDescriptor::parse(descriptor));
    AdjacencyList adj = build_adjacency(space);
    DistanceIndex index = build_index(adj);
    return Built{std::move(space), std::move(adj), std::move(index)};
}

std::vector<bool> verdicts(const DistanceIndex& index) {
    std::vector<bool> out;
    for (const auto& r : check_axioms(index)) out.push_back(r.holds);
    return out;
}

AxiomResult probe(Axiom axiom, std::vector<WitnessPart> witness) {
    AxiomResult r;
    r.axiom = axiom;
    r.holds = false;
    r.witness = std::move(witness);
    return r;
}

}  // namespace

TEST_SUITE("axioms") {

TEST_CASE("shell index mirrors the distance table") {
    DistanceIndex index = build_index(
        adjacency_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    ShellIndex shells(index);
    CHECK(shells.size() == 4);
    CHECK(shells.diameter() == 2);
    for (int v = 0; v < 4; ++v)
        for (int t = 0; t <= 2; ++t)
            for (int w = 0; w < 4; ++w)
                CHECK(shells.contains(v, t, w) == (index.d(v, w) == t));
}

TEST_CASE("a path fails geodesic extendability at its midpoint") {
    DistanceIndex index = build_index(adjacency_from_edges(3, {{0, 1}, {1, 2}}));
    ShellIndex shells(index);
    CHECK(check_a1(index).holds);
    AxiomResult a2 = check_a2(index, shells);
    CHECK_FALSE(a2.holds);
    REQUIRE(a2.witness.size() == 2);
    CHECK(a2.witness[0].vertex == 1);  // no vertex is at distance 2 from the midpoint
    CHECK(a2.witness[1].vertex == 0);
    CHECK(witness_violates(a2, index));
}

TEST_CASE("a 4-cycle fails only the covering-point axiom") {
    DistanceIndex index = build_index(
        adjacency_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    ShellIndex shells(index);
    auto results = check_axioms(index);
    for (int i = 0; i < 4; ++i) CHECK(results[i].holds);

    // Every vertex has a unique antipode, so for the edge (0, 1) a third
    // point p would need its own antipode inside {2, 3}, forcing p back
    // into {0, 1}.
    AxiomResult a5 = results[4];
    CHECK_FALSE(a5.holds);
    REQUIRE(a5.witness.size() == 2);
    CHECK(a5.witness[0].vertex == 0);
    CHECK(a5.witness[1].vertex == 1);
    CHECK(witness_violates(a5, index));
}

TEST_CASE("degenerate graphs take the vacuous branches") {
    DistanceIndex k1 = build_index(adjacency_from_edges(1, {}));
    for (const auto& r : check_axioms(k1)) CHECK(r.holds);

    // A single edge has no third vertex, so the covering-point axiom fails.
    DistanceIndex k2 = build_index(adjacency_from_edges(2, {{0, 1}}));
    auto results = check_axioms(k2);
    CHECK(results[0].holds);
    CHECK(results[1].holds);
    CHECK(results[2].holds);
    CHECK(results[3].holds);
    CHECK_FALSE(results[4].holds);
}

TEST_CASE("disconnected graphs fail connectivity with a witness pair") {
    DistanceIndex index = build_index(adjacency_from_edges(3, {{0, 1}}));
    AxiomResult a1 = check_a1(index);
    CHECK_FALSE(a1.holds);
    REQUIRE(a1.witness.size() == 2);
    CHECK(index.d(a1.witness[0].vertex, a1.witness[1].vertex) == kUnreachable);
    CHECK(witness_violates(a1, index));
}

TEST_CASE("symmetric 2x2 over GF(3): only the penultimate axiom fails") {
    Built b = build("sym:2:GF(3)");
    CHECK(verdicts(b.index) == std::vector<bool>{true, true, true, false, true});

    AxiomResult a4 = check_axioms(b.index)[3];
    REQUIRE(a4.witness.size() == 3);
    CHECK(a4.witness[0].vertex == 3);
    CHECK(a4.witness[1].vertex == 17);
    CHECK(a4.witness[2].vertex == 0);
    CHECK(witness_violates(a4, b.index));

    // The same tuple with a vertex adjacent to z is not a counterexample.
    int u = b.space.index_of(Matrix::parse(*b.space.descriptor().field, "1,0;0,0"));
    CHECK_FALSE(witness_violates(probe(Axiom::A4, {{"x", 3}, {"y", u}, {"z", 0}}), b.index));
}

TEST_CASE("symmetric 2x2 over GF(2): only the covering-point axiom fails") {
    Built b = build("sym:2:GF(2)");
    CHECK(verdicts(b.index) == std::vector<bool>{true, true, true, true, false});

    AxiomResult a5 = check_axioms(b.index)[4];
    REQUIRE(a5.witness.size() == 2);
    CHECK(a5.witness[0].vertex == 0);
    CHECK(a5.witness[1].vertex == 1);
    CHECK(witness_violates(a5, b.index));

    // A non-edge is outside the axiom's quantifier.
    CHECK_FALSE(witness_violates(probe(Axiom::A5, {{"a", 0}, {"b", 2}}), b.index));
}

TEST_CASE("square 2x2 over GF(2): covering points run out in the smallest case") {
    Built b = build("rect:2x2:GF(2)");
    CHECK(verdicts(b.index) == std::vector<bool>{true, true, true, true, false});
    AxiomResult a5 = check_axioms(b.index)[4];
    CHECK(a5.witness[0].vertex == 0);
    CHECK(a5.witness[1].vertex == 1);
    CHECK(witness_violates(a5, b.index));

    // The first four axioms hold, so a criterion point certifies adjacency.
    // The converse direction is the failing fifth axiom: here no pair has a
    // criterion point at all, so the survey flags the first edge.
    ShellIndex shells(b.index);
    CriterionSurvey survey = adjacency_criterion_survey(b.index, shells);
    CHECK(survey.precondition_ok);
    CHECK_FALSE(survey.pass);
    CHECK(survey.pairs_with_p == 0);
    CHECK(survey.edge_count == b.adj.edge_count);
    CHECK(survey.pairs_scanned == 16LL * 15 / 2);
    REQUIRE(survey.first_violation.has_value());
    CHECK(survey.first_violation->a == 0);
    CHECK(survey.first_violation->b == 1);
    CHECK_FALSE(survey.first_violation->p_without_edge);
}

TEST_CASE("order-4 hermitian plane misses the fixed-field restriction and the covering axiom") {
    SpaceDescriptor d = SpaceDescriptor::parse("herm:2:GF(4):frob");
    CHECK_FALSE(d.sigma->check_restrictions().fixed_field_large_enough);

    Built b = build("herm:2:GF(4):frob");
    CHECK(b.space.size() == 16);
    AxiomResult a5 = check_axioms(b.index)[4];
    CHECK_FALSE(a5.holds);
    CHECK(witness_violates(a5, b.index));
}

TEST_CASE("symmetric 4x4 over GF(2): the alternate layer breaks three axioms") {
    Built b = build("sym:4:GF(2)");
    CHECK(b.space.size() == 1024);
    CHECK(b.index.diameter() == 5);

    auto hist = distance_histogram(b.index);
    std::map<int, long long> expected = {{0, 1024},   {1, 15360},  {2, 107520},
                                         {3, 465920}, {4, 430080}, {5, 28672}};
    CHECK(hist == expected);

    auto formula = verify_distance_formula(b.space, b.index);
    CHECK(formula.mode == FormulaMode::AlternateBound);
    CHECK(formula.pass);

    auto results = check_axioms(b.index);
    CHECK(results[0].holds);
    CHECK_FALSE(results[1].holds);
    CHECK(results[2].holds);
    CHECK_FALSE(results[3].holds);
    CHECK_FALSE(results[4].holds);
    CHECK(results[1].witness[0].vertex == 0);
    CHECK(results[1].witness[1].vertex == 2);
    CHECK(results[3].witness[0].vertex == 80);
    CHECK(results[3].witness[1].vertex == 82);
    CHECK(results[3].witness[2].vertex == 0);
    for (const auto& r : results)
        if (!r.holds) CHECK(witness_violates(r, b.index));
}

TEST_CASE("edge criterion scan order matches the first-hit finder") {
    Built b = build("sym:2:GF(3)");
    ShellIndex shells(b.index);
    const FieldSpec& f = *b.space.descriptor().field;
    int X = b.space.index_of(Matrix::parse(f, "1,0;0,2"));
    int Y = b.space.index_of(Matrix::parse(f, "2,2;2,1"));
    int Z = 0;

    auto p = adjacency_criterion_find_p(b.index, shells, X, Z);
    REQUIRE(p.has_value());
    CHECK(*p == 22);
    CHECK(adjacency_criterion_holds(b.index, shells, X, Z, *p));
    CHECK(adjacency_criterion_holds(b.index, shells, X, Z, Y));
    for (int cand = 0; cand < *p; ++cand)
        if (cand != X && cand != Z)
            CHECK_FALSE(adjacency_criterion_holds(b.index, shells, X, Z, cand));
    // p must be a third point.
    CHECK_FALSE(adjacency_criterion_holds(b.index, shells, X, Z, X));
    CHECK_FALSE(adjacency_criterion_holds(b.index, shells, X, Z, Z));
}

TEST_CASE("rectangular witness meets its three rank postconditions") {
    std::mt19937_64 rng(21);
    const std::vector<std::tuple<int, int, int, int>> cases = {
        {2, 2, 3, 1}, {2, 3, 3, 1}, {3, 2, 2, 1}, {2, 2, 2, 2}, {3, 3, 2, 1}};
    for (auto [m, n, p, k] : cases) {
        const FieldSpec& f = field_make(p, k);
        int full = std::min(m, n);
        for (int trial = 0; trial < 10; ++trial) {
            Matrix X = random_matrix(rng, f, m, n);
            while (rank(X) != full) X = random_matrix(rng, f, m, n);
            Matrix Y = random_matrix(rng, f, m, n);
            while (rank(Y) != full || Y == X) Y = random_matrix(rng, f, m, n);
            Matrix W = witness_a4_rect(X, Y);
            CHECK(rank(W) == 1);
            CHECK(rank(X - W) == full - 1);
            CHECK(rank(Y - W) == full);
        }
    }

    const FieldSpec& f3 = field_make(3, 1);
    CHECK_THROWS_AS(witness_a4_rect(Matrix(f3, 2, 2), Matrix::identity(f3, 2)), Error);
}

TEST_CASE("hermitian witness requires invertible distinct endpoints") {
    const FieldSpec& f5 = field_make(5, 1);
    Involution id5(f5, InvolutionKind::Identity);
    Matrix X = Matrix::parse(f5, "1,0;0,1");
    CHECK_THROWS_AS(witness_a4_herm(X, X, id5), Error);
    CHECK_THROWS_AS(witness_a4_herm(Matrix(f5, 2, 2), X, id5), Error);
    // det "2,1;1,3" = 5 = 0, so the second endpoint is rejected as singular.
    CHECK_THROWS_AS(witness_a4_herm(X, Matrix::parse(f5, "2,1;1,3"), id5), Error);

    Matrix Y = Matrix::parse(f5, "2,1;1,1");
    REQUIRE(rank(Y) == 2);
    Matrix W = witness_a4_herm(X, Y, id5);
    CHECK(rank(W) == 1);
    CHECK(rank(X - W) == 1);
    CHECK(rank(Y - W) == 2);
    CHECK(is_symmetric(W));
}

TEST_CASE("rank-one step formula matches brute force on a restricted space") {
    Built b = build("herm:2:GF(16):frob");
    const Involution& sigma = *b.space.descriptor().sigma;
    Matrix A = Matrix::identity(*b.space.descriptor().field, 2);
    auto fast = rank1_step_neighbors(A, sigma);
    auto brute = rank1_step_neighbors_brute(b.space, A);
    CHECK_FALSE(fast.empty());
    CHECK(fast == brute);
}

TEST_CASE("grassmann witness lands adjacent to Z and penultimate to X") {
    Built b = build("grass:2:4:GF(2)");
    int Z = 0;
    std::vector<int> far;
    for (int v = 0; v < b.index.size(); ++v)
        if (b.index.d(Z, v) == 2) far.push_back(v);
    REQUIRE(far.size() >= 2);

    int checked = 0;
    for (std::size_t i = 0; i < far.size() && checked < 6; ++i)
        for (std::size_t j = 0; j < far.size() && checked < 6; ++j) {
            if (i == j) continue;
            const Matrix& X = b.space.point(far[i]);
            const Matrix& Y = b.space.point(far[j]);
            Matrix W = witness_a4_grass(X, Y, b.space.point(Z));
            int w = b.space.index_of(W);
            CHECK(b.index.d(Z, w) == 1);
            CHECK(b.index.d(far[i], w) == 1);
            CHECK(b.index.d(far[j], w) == 2);
            ++checked;
        }
    CHECK(checked == 6);

    // Z itself is not at full distance from Z, so the precondition trips.
    CHECK_THROWS_AS(
        witness_a4_grass(b.space.point(Z), b.space.point(far[0]), b.space.point(Z)), Error);
}

}  // TEST_SUITE("axioms")
