#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matgeo/field.hpp"

namespace matgeo {

// Dense matrix over one finite field, entries row-major. Value semantics.
// The canonical serialization "1,0;0,2" (rows joined by ';', entries by ',')
// visits entries in the same row-major order that operator< compares; string
// sorting agrees with matrix sorting only while entries stay single-digit.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& f, int rows, int cols);  // zero-filled
    Matrix(const FieldSpec& f, int rows, int cols, std::vector<Elt> entries);

    static Matrix identity(const FieldSpec& f, int n);
    // E_ij: single 1 at (i, j), zero elsewhere.
    static Matrix unit(const FieldSpec& f, int rows, int cols, int i, int j);
    static Matrix from_rows(const FieldSpec& f, const std::vector<std::vector<int>>& rows);
    static Matrix parse(const FieldSpec& f, const std::string& text);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return field_ == nullptr; }
    const FieldSpec& field() const;

    Elt at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, Elt v);
    Elt operator()(int i, int j) const { return at(i, j); }
    const std::vector<Elt>& entries() const { return entries_; }

    std::string to_text() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
    // Dimensions first, then row-major entry encodings. Total order within one field.
    friend bool operator<(const Matrix& a, const Matrix& b);

private:
    const FieldSpec* field_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<Elt> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix scale(Elt c, const Matrix& a);

Matrix transpose(const Matrix& a);
// conj_transpose(M)[i][j] = sigma(M[j][i]); sigma must live on M's field.
Matrix conj_transpose(const Matrix& a, const Involution& sigma);

// Gaussian elimination with first-nonzero pivots. Exact over the field.
int rank(const Matrix& a);
Matrix rref(const Matrix& a);
Matrix inverse(const Matrix& a);  // throws Error when singular or non-square
std::optional<Matrix> try_inverse(const Matrix& a);

bool is_zero(const Matrix& a);
bool is_hermitian(const Matrix& a, const Involution& sigma);  // square only
bool is_symmetric(const Matrix& a);
// Alternate: transpose(M) == -M with zero diagonal. Over char 2 this is
// exactly "symmetric with zero diagonal".
bool is_alternate(const Matrix& a);

Matrix vstack(const Matrix& a, const Matrix& b);
// Row vector v as 1 x n matrix convenience.
Matrix row_vector(const FieldSpec& f, const std::vector<int>& v);

// Is v (1 x n) in the row space of a?
bool in_row_space(const Matrix& a, const Matrix& v);
// Basis of rowspace(a) ∩ rowspace(b) via the Zassenhaus stack; result is in
// reduced row echelon form with one row per dimension (0 x n when trivial).
Matrix intersect_row_spaces(const Matrix& a, const Matrix& b);

}  // namespace matgeo
