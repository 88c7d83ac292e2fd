#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matgeo/space.hpp"

namespace matgeo {

// Distance value for vertices no BFS layer reaches. Real distances at desk
// scale stay far below this.
inline constexpr std::uint8_t kUnreachable = 0xFF;

// Materialized undirected graph. Neighbor lists are sorted ascending so every
// scan that walks them is deterministic.
struct AdjacencyList {
    int n = 0;
    std::vector<std::vector<int>> nbrs;
    long long edge_count = 0;

    bool adjacent(int a, int b) const;
};

// Runs the pairwise adjacency test of the space over all vertex pairs once.
AdjacencyList build_adjacency(const PointSet& space, int jobs = 1);

// Synthetic graphs for checker tests that need shapes no matrix space has.
AdjacencyList adjacency_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Exact shortest-path distances from one source; kUnreachable marks vertices
// in other components.
std::vector<std::uint8_t> bfs_from(const AdjacencyList& adj, int source);

// All-pairs distances as a flat n*n byte array, plus connectivity and
// diameter. Immutable once built.
class DistanceIndex {
  public:
    int size() const { return n_; }
    std::uint8_t d(int a, int b) const { return dist_[static_cast<std::size_t>(a) * n_ + b]; }
    bool connected() const { return connected_; }
    // Maximum distance over reachable pairs; equals the graph diameter when
    // connected.
    int diameter() const { return diameter_; }
    const std::uint8_t* row(int a) const { return dist_.data() + static_cast<std::size_t>(a) * n_; }

  private:
    friend DistanceIndex build_index(const AdjacencyList&, long long, int);
    int n_ = 0;
    bool connected_ = false;
    int diameter_ = 0;
    std::vector<std::uint8_t> dist_;
};

DistanceIndex build_index(const AdjacencyList& adj, long long cap = 100000, int jobs = 1);

// { w : d(a,w) = 1 and d(b,w) = 1 }, ascending.
std::vector<int> common_neighbors(const DistanceIndex& index, int a, int b);

// Ordered-pair census {distance: count}; the diagonal contributes n at
// distance 0 and unreachable pairs count under kUnreachable.
std::map<int, long long> distance_histogram(const DistanceIndex& index);

// How BFS distances are validated against the closed-form predictions.
// RankFormula: every pair must satisfy the space's distance formula.
// AlternateBound: symmetric spaces over characteristic 2 with even n; only
// the diameter value and the top-distance characterization are asserted.
// Descriptive: no formula is claimed; BFS is the source of truth.
enum class FormulaMode { RankFormula, AlternateBound, Descriptive };

std::string formula_mode_name(FormulaMode mode);

struct FormulaViolation {
    int a = -1;
    int b = -1;
    int expected = -1;
    int actual = -1;
};

struct DistanceFormulaReport {
    FormulaMode mode = FormulaMode::Descriptive;
    bool pass = true;
    long long pairs_checked = 0;
    std::optional<FormulaViolation> violation;
    // -1 when no closed-form diameter is asserted.
    int expected_diameter = -1;
    std::string note;
    std::map<int, long long> histogram;
};

DistanceFormulaReport verify_distance_formula(const PointSet& space, const DistanceIndex& index);

// Graphviz text with canonical matrix labels; byte-stable for a fixed space.
std::string to_dot(const PointSet& space, const AdjacencyList& adj);

}  // namespace matgeo
