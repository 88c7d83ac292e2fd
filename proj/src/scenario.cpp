#include "matgeo/scenario.hpp"

#include <chrono>
#include <sstream>

#include "matgeo/axioms.hpp"
#include "matgeo/maps.hpp"
#include "matgeo/random.hpp"

namespace matgeo {

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

void step(ScenarioReport& rep, const std::string& name, bool pass, const std::string& expected,
          const std::string& actual) {
    rep.steps.push_back(StepResult{name, pass, expected, actual});
}

void step_eq(ScenarioReport& rep, const std::string& name, long long expected, long long actual) {
    step(rep, name, expected == actual, std::to_string(expected), std::to_string(actual));
}

void step_bool(ScenarioReport& rep, const std::string& name, bool expected, bool actual) {
    step(rep, name, expected == actual, expected ? "true" : "false", actual ? "true" : "false");
}

std::string join_ids(const std::vector<int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

// Is (x, y, z) a counterexample to the penultimate-neighbor condition?
bool violates_a4_triple(const DistanceIndex& index, int x, int y, int z) {
    AxiomResult probe;
    probe.axiom = Axiom::A4;
    probe.holds = false;
    probe.witness = {{"x", x}, {"y", y}, {"z", z}};
    return witness_violates(probe, index);
}

ScenarioReport scenario_s2f3_a4() {
    ScenarioReport rep;
    rep.name = "s2f3-a4";
    Built b = build("sym:2:GF(3)");
    const FieldSpec& f = *b.space.descriptor().field;
    int X = b.space.index_of(Matrix::parse(f, "1,0;0,2"));
    int Y = b.space.index_of(Matrix::parse(f, "2,2;2,1"));
    int U = b.space.index_of(Matrix::parse(f, "1,0;0,0"));
    int V = b.space.index_of(Matrix::parse(f, "0,0;0,2"));
    int Z = b.space.index_of(Matrix::parse(f, "0,0;0,0"));

    step_eq(rep, "point count", 27, b.space.size());
    step_eq(rep, "diameter", 2, b.index.diameter());

    // The depicted configuration: the four edges X-U, X-V, Y-U, Y-V plus
    // U-Z, V-Z, and no edges inside {X,Y}, {U,V} or from {X,Y} to Z.
    bool edges_ok = b.index.d(X, U) == 1 && b.index.d(X, V) == 1 && b.index.d(Y, U) == 1 &&
                    b.index.d(Y, V) == 1 && b.index.d(U, Z) == 1 && b.index.d(V, Z) == 1;
    bool non_edges_ok = b.index.d(X, Y) == 2 && b.index.d(X, Z) == 2 && b.index.d(Y, Z) == 2 &&
                        b.index.d(U, V) == 2;
    step_bool(rep, "reference edges present", true, edges_ok);
    step_bool(rep, "reference non-edges at distance 2", true, non_edges_ok);

    auto cn = common_neighbors(b.index, X, Z);
    std::vector<int> expected_cn = {std::min(U, V), std::max(U, V)};
    step(rep, "common neighbors of X and Z are U and V", cn == expected_cn, join_ids(expected_cn),
         join_ids(cn));

    auto results = check_axioms(b.index);
    bool verdicts_ok = results[0].holds && results[1].holds && results[2].holds &&
                       !results[3].holds && results[4].holds;
    step_bool(rep, "A1 A2 A3 A5 hold and A4 fails", true, verdicts_ok);

    const AxiomResult& a4 = results[3];
    bool witness_ok = !a4.holds && a4.witness.size() == 3 && a4.witness[2].vertex == Z &&
                      witness_violates(a4, b.index);
    step_bool(rep, "first A4 counterexample sits at z = Z and re-verifies", true, witness_ok);
    step_bool(rep, "the reference triple (X, Y, Z) violates A4", true,
              violates_a4_triple(b.index, X, Y, Z));

    ShellIndex shells(b.index);
    step_bool(rep, "Y qualifies as criterion point for the pair (X, Z)", true,
              adjacency_criterion_holds(b.index, shells, X, Z, Y));
    step_bool(rep, "criterion point exists for (X, Z) despite distance 2", true,
              adjacency_criterion_find_p(b.index, shells, X, Z).has_value());

    rep.pass = true;
    for (const auto& s : rep.steps) rep.pass = rep.pass && s.pass;
    return rep;
}

ScenarioReport scenario_s2f2_a5() {
    ScenarioReport rep;
    rep.name = "s2f2-a5";
    Built b = build("sym:2:GF(2)");

    step_eq(rep, "point count", 8, b.space.size());
    step_eq(rep, "diameter", 3, b.index.diameter());
    step_eq(rep, "edge count", 12, b.adj.edge_count);
    bool regular = true;
    for (const auto& row : b.adj.nbrs) regular = regular && row.size() == 3;
    step_bool(rep, "3-regular", true, regular);

    // The depicted cube, by vertex index in enumeration order.
    std::vector<std::pair<int, int>> expected_edges = {{0, 1}, {0, 4}, {0, 7}, {1, 5},
                                                       {1, 6}, {2, 3}, {2, 5}, {2, 6},
                                                       {3, 4}, {3, 7}, {4, 5}, {6, 7}};
    std::vector<std::pair<int, int>> actual_edges;
    for (int i = 0; i < b.adj.n; ++i)
        for (int j : b.adj.nbrs[i])
            if (i < j) actual_edges.emplace_back(i, j);
    step_bool(rep, "exact reference edge list", true, actual_edges == expected_edges);

    auto results = check_axioms(b.index);
    bool verdicts_ok = results[0].holds && results[1].holds && results[2].holds &&
                       results[3].holds && !results[4].holds;
    step_bool(rep, "A1 A2 A3 A4 hold and A5 fails", true, verdicts_ok);
    step_bool(rep, "A5 counterexample re-verifies", true, witness_violates(results[4], b.index));

    const FieldSpec& f = *b.space.descriptor().field;
    int star = b.space.index_of(Matrix::parse(f, "0,1;1,0"));
    PointMap swap = antipodal_swap(b.space, b.index, 0);
    step_eq(rep, "antipode of the zero matrix", star, swap.table[0]);
    step_bool(rep, "swap preserves diameter pairs", true,
              check_diameter_pairs(swap, b.index, b.index).dm_treu);
    step_bool(rep, "swap is an isomorphism", false,
              check_isomorphism(swap, b.index, b.index).isomorphism);

    rep.pass = true;
    for (const auto& s : rep.steps) rep.pass = rep.pass && s.pass;
    return rep;
}

ScenarioReport scenario_alt_shift(int n) {
    ScenarioReport rep;
    rep.name = "alt-shift:" + std::to_string(n);
    if (n < 2 || n % 2 != 0) throw Error("the shift scenario needs an even matrix size >= 2");
    Built b = build("sym:" + std::to_string(n) + ":GF(2)");
    const FieldSpec& f = *b.space.descriptor().field;

    long long expected_points = 1;
    for (int i = 0; i < n * (n + 1) / 2; ++i) expected_points *= 2;
    step_eq(rep, "point count", expected_points, b.space.size());
    step_eq(rep, "diameter is n+1", n + 1, b.index.diameter());

    auto formula = verify_distance_formula(b.space, b.index);
    bool formula_ok = formula.mode == FormulaMode::AlternateBound && formula.pass;
    step_bool(rep, "top distance happens exactly on alternate full-rank differences", true,
              formula_ok);

    Matrix K = Matrix::unit(f, n, n, 0, 1) + Matrix::unit(f, n, n, 1, 0);
    PointMap shift = alternate_shift(b.space, K);
    step_bool(rep, "shift preserves diameter pairs", true,
              check_diameter_pairs(shift, b.index, b.index).dm_treu);
    step_bool(rep, "shift is an isomorphism", false,
              check_isomorphism(shift, b.index, b.index).isomorphism);

    int e11 = b.space.index_of(Matrix::unit(f, n, n, 0, 0));
    int zero = b.space.index_of(Matrix(f, n, n));
    step_eq(rep, "image distance of the unit-matrix edge (E11, 0)", 2,
            b.index.d(shift.table[e11], shift.table[zero]));

    rep.pass = true;
    for (const auto& s : rep.steps) rep.pass = rep.pass && s.pass;
    return rep;
}

ScenarioReport scenario_lemma21() {
    ScenarioReport rep;
    rep.name = "lemma21";

    Built rect = build("rect:2x2:GF(3)");
    ShellIndex rect_shells(rect.index);
    CriterionSurvey survey = adjacency_criterion_survey(rect.index, rect_shells);
    step_bool(rep, "square case: first four axioms hold", true, survey.precondition_ok);
    step_bool(rep, "square case: criterion pairs equal the edge set", true, survey.pass);
    step_eq(rep, "square case: edge count", survey.edge_count, survey.pairs_with_p);

    int a = 0;
    int b_adj = rect.adj.nbrs[0].front();
    step_bool(rep, "adjacent pair has a criterion point", true,
              adjacency_criterion_find_p(rect.index, rect_shells, a, b_adj).has_value());
    int b_far = -1;
    for (int v = 0; v < rect.index.size() && b_far < 0; ++v)
        if (rect.index.d(0, v) == 2) b_far = v;
    step_bool(rep, "distance-2 pair has none", false,
              adjacency_criterion_find_p(rect.index, rect_shells, a, b_far).has_value());

    Built sym = build("sym:2:GF(3)");
    ShellIndex sym_shells(sym.index);
    CriterionSurvey sym_survey = adjacency_criterion_survey(sym.index, sym_shells);
    step_bool(rep, "symmetric case: precondition fails", false, sym_survey.precondition_ok);
    const FieldSpec& f3 = *sym.space.descriptor().field;
    int X = sym.space.index_of(Matrix::parse(f3, "1,0;0,2"));
    int Y = sym.space.index_of(Matrix::parse(f3, "2,2;2,1"));
    int Z = sym.space.index_of(Matrix::parse(f3, "0,0;0,0"));
    bool exhibit = adjacency_criterion_holds(sym.index, sym_shells, X, Z, Y) &&
                   sym.index.d(X, Z) == 2;
    step_bool(rep, "symmetric case: criterion point without adjacency", true, exhibit);

    rep.pass = true;
    for (const auto& s : rep.steps) rep.pass = rep.pass && s.pass;
    return rep;
}

ScenarioReport scenario_herm_witness(std::uint64_t seed) {
    ScenarioReport rep;
    rep.name = "herm-witness";

    const FieldSpec& f5 = field_make(5, 1);
    Involution id5(f5, InvolutionKind::Identity);
    auto r5 = id5.check_restrictions();
    step_bool(rep, "prime-field identity involution passes both restrictions", true, r5.both());

    const FieldSpec& f16 = field_make(2, 4);
    Involution frob16(f16, InvolutionKind::Frobenius);
    auto r16 = frob16.check_restrictions();
    step_bool(rep, "order-16 frobenius passes both restrictions", true, r16.both());

    Matrix X5 = Matrix::parse(f5, "1,0;0,1");
    Matrix Y5 = Matrix::parse(f5, "2,0;0,3");
    Matrix W5 = witness_a4_herm(X5, Y5, id5);
    bool w5_ok = rank(W5) == 1 && rank(X5 - W5) == 1 && rank(Y5 - W5) == 2;
    step_bool(rep, "prime-field witness satisfies its three rank conditions", true, w5_ok);

    Elt g = frob16.fixed_elements()[2];
    Matrix X16 = Matrix::identity(f16, 2);
    Matrix Y16(f16, 2, 2);
    Y16.set(0, 0, g);
    Y16.set(1, 1, g);
    Matrix W16 = witness_a4_herm(X16, Y16, frob16);
    bool w16_ok = rank(W16) == 1 && rank(X16 - W16) == 1 && rank(Y16 - W16) == 2;
    step_bool(rep, "order-16 witness satisfies its three rank conditions", true, w16_ok);

    // Sampled invertible pairs, both endpoints drawn from the space.
    PointSet s5 = PointSet::enumerate(SpaceDescriptor::parse("sym:2:GF(5)"));
    std::mt19937_64 rng(seed);
    auto random_invertible_point = [&]() {
        while (true) {
            const Matrix& m = s5.point(static_cast<int>(rng_below(rng, s5.size())));
            if (rank(m) == 2) return m;
        }
    };
    int good = 0;
    const int wanted = 20;
    for (int i = 0; i < wanted; ++i) {
        Matrix X = random_invertible_point();
        Matrix Y = random_invertible_point();
        while (Y == X) Y = random_invertible_point();
        Matrix W = witness_a4_herm(X, Y, id5);
        if (rank(W) == 1 && rank(X - W) == 1 && rank(Y - W) == 2) ++good;
    }
    step_eq(rep, "sampled witness pairs verified", wanted, good);

    Matrix A5 = Matrix::parse(f5, "1,0;0,1");
    auto formula_set = rank1_step_neighbors(A5, id5);
    auto brute_set = rank1_step_neighbors_brute(s5, A5);
    step_bool(rep, "rank-one step formula matches brute force", true, formula_set == brute_set);

    // Outside the size restriction the equality is not asserted; both sets
    // are computed and reported.
    const FieldSpec& f3 = field_make(3, 1);
    Involution id3(f3, InvolutionKind::Identity);
    PointSet s3 = PointSet::enumerate(SpaceDescriptor::parse("sym:2:GF(3)"));
    auto formula3 = rank1_step_neighbors(Matrix::parse(f3, "1,0;0,1"), id3);
    auto brute3 = rank1_step_neighbors_brute(s3, Matrix::parse(f3, "1,0;0,1"));
    std::ostringstream obs;
    obs << "formula " << formula3.size() << ", brute " << brute3.size() << ", "
        << (formula3 == brute3 ? "equal" : "different");
    step(rep, "small-field rank-one step is reported without assertion", true, "report only",
         obs.str());

    rep.pass = true;
    for (const auto& s : rep.steps) rep.pass = rep.pass && s.pass;
    return rep;
}

}  // namespace

ScenarioReport run_scenario(const std::string& name, std::uint64_t seed) {
    auto start = std::chrono::steady_clock::now();
    ScenarioReport rep;
    if (name == "s2f3-a4") {
        rep = scenario_s2f3_a4();
    } else if (name == "s2f2-a5") {
        rep = scenario_s2f2_a5();
    } else if (name.rfind("alt-shift:", 0) == 0) {
        std::string arg = name.substr(10);
        std::size_t pos = 0;
        int n = 0;
        try {
            n = std::stoi(arg, &pos);
        } catch (const std::exception&) {
            throw Error("bad shift size '" + arg + "'");
        }
        if (pos != arg.size()) throw Error("bad shift size '" + arg + "'");
        rep = scenario_alt_shift(n);
    } else if (name == "lemma21") {
        rep = scenario_lemma21();
    } else if (name == "herm-witness") {
        rep = scenario_herm_witness(seed);
    } else {
        throw Error("unknown scenario '" + name + "'");
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

std::vector<std::string> scenario_names() {
    return {"s2f3-a4", "s2f2-a5", "alt-shift:2", "alt-shift:4", "lemma21", "herm-witness"};
}

}  // namespace matgeo
