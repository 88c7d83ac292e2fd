#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matgeo/graph.hpp"
#include "matgeo/matrix.hpp"

namespace matgeo {

// The five structural conditions tested on every graph. A1 is connectivity;
// A2 extends any pair to a full-diameter geodesic; A3 completes squares at
// distance 2; A4 finds a penultimate neighbor for diameter pairs; A5 demands
// a covering point p for every edge.
enum class Axiom { A1, A2, A3, A4, A5 };

std::string axiom_name(Axiom a);

// One labeled vertex of a counterexample tuple, such as {"x", 3}.
struct WitnessPart {
    std::string role;
    int vertex = -1;
};

struct AxiomResult {
    Axiom axiom = Axiom::A1;
    bool holds = false;
    // First failure in scan order; empty when the axiom holds.
    std::vector<WitnessPart> witness;
    double elapsed_ms = 0.0;
};

// Per-vertex, per-distance membership bitsets over the vertex range.
// Row (v, t) has bit w set when d(v,w) = t. Shared by every quantified scan.
class ShellIndex {
  public:
    explicit ShellIndex(const DistanceIndex& index);

    int size() const { return n_; }
    int diameter() const { return diam_; }
    int words() const { return words_; }
    const std::uint64_t* shell(int v, int t) const;
    bool contains(int v, int t, int w) const;

  private:
    int n_ = 0;
    int diam_ = 0;
    int words_ = 0;
    // Layout: ((v * (diam+1)) + t) * words.
    std::vector<std::uint64_t> bits_;
};

// All checkers scan vertices in ascending index order and stop at the first
// failure, so reported witnesses are reproducible. A2 through A5 require a
// connected graph.
AxiomResult check_a1(const DistanceIndex& index);
AxiomResult check_a2(const DistanceIndex& index, const ShellIndex& shells);
AxiomResult check_a3(const DistanceIndex& index, const ShellIndex& shells);
AxiomResult check_a4(const DistanceIndex& index, const ShellIndex& shells);
AxiomResult check_a5(const DistanceIndex& index, const ShellIndex& shells);

AxiomResult check_axiom(Axiom a, const DistanceIndex& index, const ShellIndex& shells);
std::vector<AxiomResult> check_axioms(const DistanceIndex& index,
                                      const std::vector<Axiom>& which = {
                                          Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5});

// Re-evaluates the quantified condition on a reported counterexample tuple,
// independently of the checker's scan. True means the tuple genuinely
// violates the axiom.
bool witness_violates(const AxiomResult& result, const DistanceIndex& index);

// Edge criterion: p qualifies for (a,b) when p is outside {a,b} and every
// vertex at full distance from p is at full distance from a or from b.
bool adjacency_criterion_holds(const DistanceIndex& index, const ShellIndex& shells, int a, int b,
                               int p);

// First qualifying p in index order, or absent.
std::optional<int> adjacency_criterion_find_p(const DistanceIndex& index,
                                              const ShellIndex& shells, int a, int b);

struct CriterionViolation {
    int a = -1;
    int b = -1;
    // True: some p qualifies but the pair is not an edge. False: the pair is
    // an edge but no p qualifies.
    bool p_without_edge = false;
    int p = -1;
};

// Exhaustive comparison of { pairs with a qualifying p } against the edge
// set. Under A1 through A4 a qualifying p forces adjacency; the converse,
// a p for every edge, is A5 itself, so set equality needs all five.
// precondition_ok records whether A1 through A4 hold here.
struct CriterionSurvey {
    bool precondition_ok = false;
    bool pass = false;
    long long pairs_with_p = 0;
    long long edge_count = 0;
    long long pairs_scanned = 0;
    std::optional<CriterionViolation> first_violation;
};

CriterionSurvey adjacency_criterion_survey(const DistanceIndex& index, const ShellIndex& shells);

// Constructive witnesses lifted from existence proofs. Every returned matrix
// is re-verified against its distance postconditions before returning.

// Rectangular spaces, pair normalized to Z = 0: X, Y of full row rank m with
// m <= cols. Returns rank-1 W with rank(X-W) = m-1 and rank(Y-W) = m. When
// rows exceed columns the construction runs on transposes.
Matrix witness_a4_rect(const Matrix& X, const Matrix& Y);

// Hermitian spaces under both field restrictions, Z = 0 normalization:
// X, Y invertible Hermitian, X != Y. Searches vectors v in lexicographic
// order with v X sigma(v)^t != 0 and v (X - X Y^-1 X) sigma(v)^t != 0, then
// returns W = sigma(vX)^t (v X sigma(v)^t)^-1 (vX).
Matrix witness_a4_herm(const Matrix& X, const Matrix& Y, const Involution& sigma);

// All Hermitian B with rank(B) = 1 and rank(A-B) = rank(A) - 1, produced by
// the closed formula B = sigma(xA)^t (x A sigma(x)^t)^-1 (xA) over all row
// vectors x with x A sigma(x)^t != 0. Sorted, deduplicated.
std::vector<Matrix> rank1_step_neighbors(const Matrix& A, const Involution& sigma);

// Same set by exhaustive scan over the whole space; the oracle the formula
// set is compared against.
std::vector<Matrix> rank1_step_neighbors_brute(const PointSet& space, const Matrix& A);

// Grassmann spaces: X, Y, Z with d(X,Z) = d(Y,Z) = m and X != Y. Picks a row
// a in X outside Y, then an (m-1)-dimensional S inside Z meeting
// span(a, Y) trivially, and returns W = span(a, S) with d(Z,W) = 1,
// d(X,W) = m-1, d(Y,W) = m.
Matrix witness_a4_grass(const Matrix& X, const Matrix& Y, const Matrix& Z);

}  // namespace matgeo
