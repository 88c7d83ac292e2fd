#include "matgeo/maps.hpp"

#include <fstream>
#include <sstream>

#include "matgeo/random.hpp"

namespace matgeo {

namespace {

std::vector<int> image_counts(const PointMap& map) {
    std::vector<int> seen(map.target_size, 0);
    for (int v : map.table) {
        if (v < 0 || v >= map.target_size) throw Error("map image out of range");
        ++seen[v];
    }
    return seen;
}

PointMap table_map(const PointSet& space, std::vector<int> table) {
    PointMap m;
    m.source = space.descriptor();
    m.target = space.descriptor();
    m.target_size = space.size();
    m.table = std::move(table);
    return m;
}

void require_permutation(const PointMap& map, const char* what) {
    if (!map.bijective())
        throw Error(std::string(what) + " did not induce a bijection; construction is broken");
}

}  // namespace

bool PointMap::injective() const {
    for (int c : image_counts(*this))
        if (c > 1) return false;
    return true;
}

bool PointMap::surjective() const {
    for (int c : image_counts(*this))
        if (c == 0) return false;
    return true;
}

PointMap identity_map(const PointSet& space) {
    std::vector<int> table(space.size());
    for (int i = 0; i < space.size(); ++i) table[i] = i;
    return table_map(space, std::move(table));
}

PointMap make_rect_transform(const Matrix& P, const Matrix& Q, const Matrix& R,
                             const PointSet& space) {
    const SpaceDescriptor& d = space.descriptor();
    if (d.kind != SpaceKind::Rectangular) throw Error("transform needs a rectangular space");
    if (P.rows() != d.m || P.cols() != d.m || Q.rows() != d.n || Q.cols() != d.n)
        throw Error("transform factors do not match the space dimensions");
    if (rank(P) != d.m || rank(Q) != d.n) throw Error("transform factors must be invertible");
    if (!space.contains_shape(R)) throw Error("translation part is not a point of the space");
    std::vector<int> table(space.size());
    for (int i = 0; i < space.size(); ++i) table[i] = space.index_of(P * space.point(i) * Q + R);
    PointMap m = table_map(space, std::move(table));
    require_permutation(m, "rectangular transform");
    return m;
}

PointMap make_herm_transform(const Matrix& P, const Matrix& H, const PointSet& space) {
    const SpaceDescriptor& d = space.descriptor();
    if (d.kind != SpaceKind::Hermitian) throw Error("transform needs a hermitian space");
    const Involution& sigma = *d.sigma;
    if (P.rows() != d.n || P.cols() != d.n)
        throw Error("transform factor does not match the space dimension");
    if (rank(P) != d.n) throw Error("transform factor must be invertible");
    if (!space.contains_shape(H)) throw Error("translation part is not a point of the space");
    Matrix pct = conj_transpose(P, sigma);
    std::vector<int> table(space.size());
    for (int i = 0; i < space.size(); ++i) {
        Matrix img = P * space.point(i) * pct + H;
        if (!is_hermitian(img, sigma)) throw Error("transform image is not hermitian");
        table[i] = space.index_of(img);
    }
    PointMap m = table_map(space, std::move(table));
    require_permutation(m, "hermitian transform");
    return m;
}

PointMap make_grass_transform(const Matrix& B, const PointSet& space) {
    const SpaceDescriptor& d = space.descriptor();
    if (d.kind != SpaceKind::Grassmann) throw Error("transform needs a grassmann space");
    int amb = d.ambient();
    if (B.rows() != amb || B.cols() != amb)
        throw Error("transform factor does not match the ambient dimension");
    if (rank(B) != amb) throw Error("transform factor must be invertible");
    std::vector<int> table(space.size());
    for (int i = 0; i < space.size(); ++i)
        table[i] = space.index_of(grassmann_point(space.point(i) * B, d.m));
    PointMap m = table_map(space, std::move(table));
    require_permutation(m, "grassmann transform");
    return m;
}

PointMap antipodal_swap(const PointSet& space, const DistanceIndex& index, int a) {
    if (index.size() != space.size()) throw Error("index does not match the space");
    if (a < 0 || a >= index.size()) throw Error("vertex id out of range");
    int diam = index.diameter();
    int partner = -1;
    for (int w = 0; w < index.size(); ++w) {
        if (index.d(a, w) != diam) continue;
        if (partner != -1)
            throw Error("vertex " + std::to_string(a) + " has more than one antipode");
        partner = w;
    }
    if (partner == -1) throw Error("vertex has no antipode");
    for (int w = 0; w < index.size(); ++w)
        if (index.d(partner, w) == diam && w != a)
            throw Error("the antipode has further top-distance partners");
    std::vector<int> table(space.size());
    for (int i = 0; i < space.size(); ++i) table[i] = i;
    table[a] = partner;
    table[partner] = a;
    return table_map(space, std::move(table));
}

PointMap alternate_shift(const PointSet& space, const Matrix& K) {
    const SpaceDescriptor& d = space.descriptor();
    if (d.kind != SpaceKind::Hermitian || d.sigma->kind() != InvolutionKind::Identity)
        throw Error("the shift map lives on symmetric matrix spaces");
    if (d.field->p() != 2) throw Error("the shift map needs characteristic 2");
    if (d.n % 2 != 0) throw Error("the shift map needs even matrix size");
    if (!space.contains_shape(K)) throw Error("shift matrix is not a point of the space");
    if (is_zero(K)) throw Error("shift matrix must be nonzero");
    if (!is_alternate(K)) throw Error("shift matrix must be alternate");
    std::vector<int> table(space.size());
    for (int i = 0; i < space.size(); ++i) {
        const Matrix& x = space.point(i);
        table[i] = is_alternate(x) ? space.index_of(x + K) : i;
    }
    PointMap m = table_map(space, std::move(table));
    require_permutation(m, "alternate shift");
    return m;
}

PointMap with_swapped_images(const PointMap& map, int u, int v) {
    if (u < 0 || v < 0 || u >= map.source_size() || v >= map.source_size())
        throw Error("vertex id out of range");
    PointMap out = map;
    std::swap(out.table[u], out.table[v]);
    return out;
}

DiameterPairReport check_diameter_pairs(const PointMap& map, const DistanceIndex& src,
                                        const DistanceIndex& tgt) {
    if (map.source_size() != src.size() || map.target_size != tgt.size())
        throw Error("map endpoints do not match the indices");
    DiameterPairReport rep;
    rep.surjective = map.surjective();
    rep.dm_treu = true;
    int ds = src.diameter();
    int dt = tgt.diameter();
    for (int x = 0; x < src.size() && rep.dm_treu; ++x) {
        const std::uint8_t* row = src.row(x);
        int fx = map.table[x];
        for (int y = 0; y < src.size(); ++y) {
            ++rep.pairs_checked;
            bool top_src = row[y] == ds;
            bool top_tgt = tgt.d(fx, map.table[y]) == dt;
            if (top_src != top_tgt) {
                rep.dm_treu = false;
                rep.violation = MapViolation{x, y, row[y], tgt.d(fx, map.table[y])};
                break;
            }
        }
    }
    return rep;
}

IsomorphismReport check_isomorphism(const PointMap& map, const DistanceIndex& src,
                                    const DistanceIndex& tgt) {
    if (map.source_size() != src.size() || map.target_size != tgt.size())
        throw Error("map endpoints do not match the indices");
    IsomorphismReport rep;
    rep.bijective = map.bijective();
    rep.adjacency_preserved = true;
    for (int x = 0; x < src.size() && rep.adjacency_preserved; ++x) {
        const std::uint8_t* row = src.row(x);
        int fx = map.table[x];
        for (int y = 0; y < src.size(); ++y) {
            bool edge_src = row[y] == 1;
            bool edge_tgt = tgt.d(fx, map.table[y]) == 1;
            if (edge_src != edge_tgt) {
                rep.adjacency_preserved = false;
                rep.violation = MapViolation{x, y, row[y], tgt.d(fx, map.table[y])};
                break;
            }
        }
    }
    rep.isomorphism = rep.bijective && rep.adjacency_preserved;
    return rep;
}

void save_map(const PointMap& map, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write map file '" + path + "'");
    out << "# map source=" << map.source.to_string() << " target=" << map.target.to_string()
        << "\n";
    for (int i = 0; i < map.source_size(); ++i) out << i << "," << map.table[i] << "\n";
    if (!out) throw Error("write to map file '" + path + "' failed");
}

PointMap load_map(const std::string& path, const PointSet& src, const PointSet& tgt) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read map file '" + path + "'");
    std::string header;
    if (!std::getline(in, header)) throw Error("map file is empty");
    std::string expected =
        "# map source=" + src.descriptor().to_string() + " target=" + tgt.descriptor().to_string();
    if (header != expected)
        throw Error("map header '" + header + "' does not name these spaces ('" + expected + "')");

    PointMap map;
    map.source = src.descriptor();
    map.target = tgt.descriptor();
    map.target_size = tgt.size();
    map.table.assign(src.size(), -1);
    std::string line;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw Error("map line " + std::to_string(lineno) + " has no comma");
        int a, b;
        try {
            std::size_t pos_a, pos_b;
            a = std::stoi(line.substr(0, comma), &pos_a);
            b = std::stoi(line.substr(comma + 1), &pos_b);
            if (pos_a != comma || pos_b != line.size() - comma - 1)
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw Error("map line " + std::to_string(lineno) + " is not 'src,dst'");
        }
        if (a < 0 || a >= src.size())
            throw Error("map line " + std::to_string(lineno) + ": source vertex out of range");
        if (b < 0 || b >= tgt.size())
            throw Error("map line " + std::to_string(lineno) + ": target vertex out of range");
        if (map.table[a] != -1)
            throw Error("map line " + std::to_string(lineno) + ": vertex " + std::to_string(a) +
                        " assigned twice");
        map.table[a] = b;
    }
    for (int i = 0; i < src.size(); ++i)
        if (map.table[i] == -1)
            throw Error("map file assigns no image to vertex " + std::to_string(i));
    return map;
}

TheoremSweep theorem_falsification_sweep(const PointSet& space, const DistanceIndex& index,
                                         int rounds, std::uint64_t seed) {
    if (space.size() < 2) throw Error("the sweep needs at least two vertices");
    const SpaceDescriptor& d = space.descriptor();
    const FieldSpec& f = *d.field;
    std::mt19937_64 rng(seed);
    TheoremSweep sweep;
    for (int round = 0; round < rounds; ++round) {
        PointMap base;
        switch (d.kind) {
            case SpaceKind::Rectangular:
                base = make_rect_transform(
                    random_invertible(rng, f, d.m), random_invertible(rng, f, d.n),
                    space.point(static_cast<int>(rng_below(rng, space.size()))), space);
                break;
            case SpaceKind::Hermitian:
                base = make_herm_transform(
                    random_invertible(rng, f, d.n),
                    space.point(static_cast<int>(rng_below(rng, space.size()))), space);
                break;
            case SpaceKind::Grassmann:
                base = make_grass_transform(random_invertible(rng, f, d.ambient()), space);
                break;
        }
        int u = static_cast<int>(rng_below(rng, space.size()));
        int v = static_cast<int>(rng_below(rng, space.size() - 1));
        if (v >= u) ++v;
        PointMap perturbed = with_swapped_images(base, u, v);
        ++sweep.maps_tested;
        if (!check_diameter_pairs(perturbed, index, index).dm_treu) continue;
        ++sweep.dm_treu_passes;
        if (check_isomorphism(perturbed, index, index).isomorphism) {
            ++sweep.isomorphism_passes;
        } else {
            ++sweep.violations;
            if (!sweep.first_violation_round) sweep.first_violation_round = round;
        }
    }
    return sweep;
}

}  // namespace matgeo
