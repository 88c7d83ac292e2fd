#include "matgeo/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <thread>

namespace matgeo {

namespace {

// Splits [0, n) into contiguous chunks and runs fn(begin, end) on each, on
// jobs threads. fn must only write to per-index slots.
void parallel_ranges(int n, int jobs, const std::function<void(int, int)>& fn) {
    if (jobs <= 1 || n < 2 * jobs) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    int chunk = (n + jobs - 1) / jobs;
    for (int start = 0; start < n; start += chunk) {
        int end = std::min(n, start + chunk);
        pool.emplace_back(fn, start, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace

bool AdjacencyList::adjacent(int a, int b) const {
    const auto& row = nbrs[a];
    return std::binary_search(row.begin(), row.end(), b);
}

AdjacencyList build_adjacency(const PointSet& space, int jobs) {
    AdjacencyList g;
    g.n = space.size();
    g.nbrs.assign(g.n, {});
    parallel_ranges(g.n, jobs, [&](int begin, int end) {
        for (int i = begin; i < end; ++i)
            for (int j = 0; j < g.n; ++j)
                if (j != i && space.adjacent(i, j)) g.nbrs[i].push_back(j);
    });
    long long total = 0;
    for (int i = 0; i < g.n; ++i) {
        for (int j : g.nbrs[i])
            if (!std::binary_search(g.nbrs[j].begin(), g.nbrs[j].end(), i))
                throw Error("adjacency is not symmetric at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
        total += static_cast<long long>(g.nbrs[i].size());
    }
    g.edge_count = total / 2;
    return g;
}

AdjacencyList adjacency_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw Error("negative vertex count");
    AdjacencyList g;
    g.n = n;
    g.nbrs.assign(n, {});
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw Error("edge endpoint out of range");
        if (a == b) throw Error("self-loops are not allowed");
        g.nbrs[a].push_back(b);
        g.nbrs[b].push_back(a);
    }
    for (auto& row : g.nbrs) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw Error("duplicate edge");
    }
    g.edge_count = static_cast<long long>(edges.size());
    return g;
}

std::vector<std::uint8_t> bfs_from(const AdjacencyList& adj, int source) {
    if (source < 0 || source >= adj.n) throw Error("BFS source out of range");
    std::vector<std::uint8_t> dist(adj.n, kUnreachable);
    std::deque<int> queue;
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        std::uint8_t next = static_cast<std::uint8_t>(dist[v] + 1);
        if (next >= kUnreachable) throw Error("distance exceeds the 8-bit range");
        for (int w : adj.nbrs[v])
            if (dist[w] == kUnreachable) {
                dist[w] = next;
                queue.push_back(w);
            }
    }
    return dist;
}

DistanceIndex build_index(const AdjacencyList& adj, long long cap, int jobs) {
    if (adj.n > cap)
        throw Error("graph has " + std::to_string(adj.n) + " vertices, cap is " +
                    std::to_string(cap));
    DistanceIndex index;
    index.n_ = adj.n;
    index.dist_.assign(static_cast<std::size_t>(adj.n) * adj.n, 0);
    parallel_ranges(adj.n, jobs, [&](int begin, int end) {
        for (int src = begin; src < end; ++src) {
            auto row = bfs_from(adj, src);
            std::copy(row.begin(), row.end(),
                      index.dist_.begin() + static_cast<std::size_t>(src) * adj.n);
        }
    });
    index.connected_ = adj.n > 0;
    index.diameter_ = 0;
    for (std::uint8_t d : index.dist_) {
        if (d == kUnreachable)
            index.connected_ = false;
        else if (d > index.diameter_)
            index.diameter_ = d;
    }
    return index;
}

std::vector<int> common_neighbors(const DistanceIndex& index, int a, int b) {
    if (a < 0 || b < 0 || a >= index.size() || b >= index.size())
        throw Error("vertex id out of range");
    std::vector<int> out;
    for (int w = 0; w < index.size(); ++w)
        if (index.d(a, w) == 1 && index.d(b, w) == 1) out.push_back(w);
    return out;
}

std::map<int, long long> distance_histogram(const DistanceIndex& index) {
    std::map<int, long long> h;
    for (int a = 0; a < index.size(); ++a)
        for (int b = 0; b < index.size(); ++b) ++h[index.d(a, b)];
    return h;
}

std::string formula_mode_name(FormulaMode mode) {
    switch (mode) {
        case FormulaMode::RankFormula: return "rank-formula";
        case FormulaMode::AlternateBound: return "alternate-bound";
        case FormulaMode::Descriptive: return "descriptive";
    }
    return "?";
}

namespace {

FormulaMode pick_mode(const SpaceDescriptor& d) {
    if (d.kind != SpaceKind::Hermitian) return FormulaMode::RankFormula;
    if (d.sigma->check_restrictions().both()) return FormulaMode::RankFormula;
    bool char2_symmetric =
        d.field->p() == 2 && d.sigma->kind() == InvolutionKind::Identity;
    if (char2_symmetric && d.n % 2 == 0) return FormulaMode::AlternateBound;
    return FormulaMode::Descriptive;
}

}  // namespace

DistanceFormulaReport verify_distance_formula(const PointSet& space, const DistanceIndex& index) {
    if (index.size() != space.size()) throw Error("index does not match the space");
    const SpaceDescriptor& d = space.descriptor();
    DistanceFormulaReport rep;
    rep.mode = pick_mode(d);
    rep.histogram = distance_histogram(index);

    if (rep.mode == FormulaMode::Descriptive) {
        rep.note = "no closed-form distance is asserted for this space; BFS census only";
        rep.pass = true;
        return rep;
    }

    if (rep.mode == FormulaMode::AlternateBound) {
        // Asserted facts: diameter n+1, and top-distance pairs are exactly the
        // pairs whose difference is alternate of full rank. Other distances
        // are left to the census.
        rep.expected_diameter = d.n + 1;
        rep.note = "asserting diameter and the top-distance characterization only";
        if (index.diameter() != rep.expected_diameter) {
            rep.pass = false;
            rep.violation = FormulaViolation{-1, -1, rep.expected_diameter, index.diameter()};
            return rep;
        }
        for (int a = 0; a < space.size() && rep.pass; ++a)
            for (int b = 0; b < space.size(); ++b) {
                Matrix diff = space.point(a) - space.point(b);
                bool top = is_alternate(diff) && rank(diff) == d.n;
                bool at_top = index.d(a, b) == rep.expected_diameter;
                ++rep.pairs_checked;
                if (top != at_top) {
                    rep.pass = false;
                    rep.violation =
                        FormulaViolation{a, b, top ? rep.expected_diameter : -1, index.d(a, b)};
                    break;
                }
            }
        return rep;
    }

    rep.expected_diameter = d.kind == SpaceKind::Hermitian ? d.n : std::min(d.m, d.n);
    rep.note = d.kind == SpaceKind::Grassmann
                   ? "asserting d = m - dim(intersection) for every pair"
                   : "asserting d = rank of the difference for every pair";
    if (index.diameter() != rep.expected_diameter) {
        rep.pass = false;
        rep.violation = FormulaViolation{-1, -1, rep.expected_diameter, index.diameter()};
        return rep;
    }
    for (int a = 0; a < space.size() && rep.pass; ++a)
        for (int b = 0; b < space.size(); ++b) {
            int expected =
                d.kind == SpaceKind::Grassmann
                    ? d.m - intersection_dim(space.point(a), space.point(b))
                    : rank(space.point(a) - space.point(b));
            ++rep.pairs_checked;
            if (index.d(a, b) != expected) {
                rep.pass = false;
                rep.violation = FormulaViolation{a, b, expected, index.d(a, b)};
                break;
            }
        }
    return rep;
}

std::string to_dot(const PointSet& space, const AdjacencyList& adj) {
    if (adj.n != space.size()) throw Error("adjacency does not match the space");
    std::ostringstream out;
    out << "graph \"" << space.descriptor().to_string() << "\" {\n";
    for (int i = 0; i < adj.n; ++i)
        out << "  " << i << " [label=\"" << space.point(i).to_text() << "\"];\n";
    for (int i = 0; i < adj.n; ++i)
        for (int j : adj.nbrs[i])
            if (i < j) out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace matgeo
