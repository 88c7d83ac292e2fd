#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matgeo/graph.hpp"
#include "matgeo/space.hpp"

namespace matgeo {

// Total map between two point sets by vertex index. Injectivity and
// surjectivity are measured, never assumed.
struct PointMap {
    SpaceDescriptor source;
    SpaceDescriptor target;
    int target_size = 0;
    // table[i] = image of source vertex i.
    std::vector<int> table;

    int source_size() const { return static_cast<int>(table.size()); }
    bool injective() const;
    bool surjective() const;
    bool bijective() const { return injective() && surjective(); }
};

PointMap identity_map(const PointSet& space);

// X -> P X Q + R with invertible P, Q and R a point of the space.
PointMap make_rect_transform(const Matrix& P, const Matrix& Q, const Matrix& R,
                             const PointSet& space);

// X -> P X sigma(P)^t + H with invertible P and H a point of the space.
PointMap make_herm_transform(const Matrix& P, const Matrix& H, const PointSet& space);

// W -> row space of (basis of W) * B with invertible B on the ambient space.
PointMap make_grass_transform(const Matrix& B, const PointSet& space);

// Swaps a with its antipode and fixes everything else. Requires the
// top-distance shell of a to be a single vertex a* whose own shell is {a}.
PointMap antipodal_swap(const PointSet& space, const DistanceIndex& index, int a);

// X -> X + K on alternate X, identity elsewhere. Symmetric spaces over
// characteristic 2 with even n and K alternate, nonzero.
PointMap alternate_shift(const PointSet& space, const Matrix& K);

// Copy of the map with the images of vertices u and v exchanged.
PointMap with_swapped_images(const PointMap& map, int u, int v);

struct MapViolation {
    int x = -1;
    int y = -1;
    int d_src = -1;
    int d_tgt = -1;
};

// Both directions of: d(x,y) = diam(source) iff d(x^phi, y^phi) =
// diam(target), over all ordered source pairs.
struct DiameterPairReport {
    bool dm_treu = false;
    bool surjective = false;
    long long pairs_checked = 0;
    std::optional<MapViolation> violation;
};

DiameterPairReport check_diameter_pairs(const PointMap& map, const DistanceIndex& src,
                                        const DistanceIndex& tgt);

struct IsomorphismReport {
    bool bijective = false;
    bool adjacency_preserved = false;
    bool isomorphism = false;
    std::optional<MapViolation> violation;
};

IsomorphismReport check_isomorphism(const PointMap& map, const DistanceIndex& src,
                                    const DistanceIndex& tgt);

// Line format: a header naming both descriptors, then one "src,dst" line per
// source vertex.
void save_map(const PointMap& map, const std::string& path);
PointMap load_map(const std::string& path, const PointSet& src, const PointSet& tgt);

// Falsification sweep for the rigidity theorem: on spaces satisfying all
// five axioms, a map that preserves diameter pairs must be an isomorphism.
// Each round perturbs a random group transform by swapping two images, then
// hunts for dm_treu && !isomorphism. Any hit is a theorem violation.
struct TheoremSweep {
    int maps_tested = 0;
    int dm_treu_passes = 0;
    int isomorphism_passes = 0;
    int violations = 0;
    std::optional<int> first_violation_round;
};

TheoremSweep theorem_falsification_sweep(const PointSet& space, const DistanceIndex& index,
                                         int rounds, std::uint64_t seed);

}  // namespace matgeo
