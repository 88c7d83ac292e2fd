#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matgeo/matrix.hpp"

namespace matgeo {

enum class SpaceKind { Rectangular, Hermitian, Grassmann };

// A point space plus its adjacency relation:
//   rect:  all m x n matrices over F;           A ~ B iff rank(A-B) = 1
//   herm:  sigma-hermitian n x n matrices;      A ~ B iff rank(A-B) = 1
//          (sym:n:GF(q) is the identity-involution case)
//   grass: m-dim subspaces of F^(m+n), stored   W1 ~ W2 iff dim(W1 ∩ W2) = m-1
//          as RREF basis matrices m x (m+n)
struct SpaceDescriptor {
    SpaceKind kind;
    int m = 0;  // rect rows / grass subspace dim; equals n for hermitian
    int n = 0;  // rect cols / hermitian size / grass co-dimension (ambient = m + n)
    const FieldSpec* field = nullptr;
    std::optional<Involution> sigma;  // hermitian only

    // Grammar: "rect:MxN:GF(q)", "sym:N:GF(q)", "herm:N:GF(q):frob",
    // "grass:M:A:GF(q)" where A is the ambient dimension m+n.
    static SpaceDescriptor parse(const std::string& text);
    std::string to_string() const;

    int ambient() const { return m + n; }
    // Closed-form point count; saturates at a large sentinel instead of overflowing.
    long long point_count() const;
};

// Exact Gaussian binomial [n choose k]_q.
long long gaussian_binomial(int n, int k, int q);

// dim(rowspace(a) ∩ rowspace(b)) = rank(a) + rank(b) - rank(stack).
int intersection_dim(const Matrix& a, const Matrix& b);

// Canonical RREF basis for the row space of `spanning`; throws unless the rank
// is exactly m.
Matrix grassmann_point(const Matrix& spanning, int m);

// Immutable, sorted enumeration of a space. Vertex ids are positions in the
// lexicographic order of the canonical serializations.
class PointSet {
public:
    static PointSet enumerate(const SpaceDescriptor& d, long long cap = 100000);

    const SpaceDescriptor& descriptor() const { return desc_; }
    int size() const { return static_cast<int>(points_.size()); }
    const Matrix& point(int i) const { return points_[i]; }
    const std::vector<Matrix>& points() const { return points_; }

    int index_of(const Matrix& m) const;             // throws when absent
    std::optional<int> find(const Matrix& m) const;

    bool adjacent(int i, int j) const;
    bool adjacent(const Matrix& a, const Matrix& b) const;  // validates membership

    // Shape/field/kind predicate check, including hermitian symmetry or RREF form.
    bool contains_shape(const Matrix& m) const;

private:
    PointSet(SpaceDescriptor d, std::vector<Matrix> pts);
    SpaceDescriptor desc_;
    std::vector<Matrix> points_;
};

}  // namespace matgeo
