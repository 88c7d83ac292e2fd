#include "matgeo/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace matgeo {

namespace {

const FieldSpec& common_field(const Matrix& a, const Matrix& b) {
    if (&a.field() != &b.field()) throw Error("mixed fields in matrix operation");
    return a.field();
}

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

}  // namespace

Matrix::Matrix(const FieldSpec& f, int rows, int cols)
    : field_(&f), rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 1) throw Error("invalid matrix shape");
}

Matrix::Matrix(const FieldSpec& f, int rows, int cols, std::vector<Elt> entries)
    : field_(&f), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 1) throw Error("invalid matrix shape");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw Error("entry count does not match shape");
    for (Elt e : entries_)
        if (e >= f.order()) throw Error("entry " + std::to_string(e) + " out of range for " + f.name());
}

Matrix Matrix::identity(const FieldSpec& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::unit(const FieldSpec& f, int rows, int cols, int i, int j) {
    Matrix m(f, rows, cols);
    m.set(i, j, 1);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw Error("from_rows needs at least one row");
    Matrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw Error("ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (v < 0 || v >= f.order())
                throw Error("entry " + std::to_string(v) + " out of range for " + f.name());
            m.set(static_cast<int>(i), static_cast<int>(j), static_cast<Elt>(v));
        }
    }
    return m;
}

Matrix Matrix::parse(const FieldSpec& f, const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream rs(text);
    std::string rowtext;
    while (std::getline(rs, rowtext, ';')) {
        std::vector<int> row;
        std::stringstream es(rowtext);
        std::string etext;
        while (std::getline(es, etext, ',')) {
            std::size_t pos = 0;
            int v;
            try {
                v = std::stoi(etext, &pos);
            } catch (const std::exception&) {
                throw Error("bad matrix entry '" + etext + "'");
            }
            while (pos < etext.size() && std::isspace(static_cast<unsigned char>(etext[pos]))) ++pos;
            if (pos != etext.size()) throw Error("bad matrix entry '" + etext + "'");
            row.push_back(v);
        }
        if (row.empty()) throw Error("empty row in matrix text");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error("empty matrix text");
    return from_rows(f, rows);
}

const FieldSpec& Matrix::field() const {
    if (!field_) throw Error("empty matrix has no field");
    return *field_;
}

void Matrix::set(int i, int j, Elt v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error("matrix index out of range");
    if (v >= field().order())
        throw Error("entry " + std::to_string(v) + " out of range for " + field().name());
    entries_[static_cast<std::size_t>(i) * cols_ + j] = v;
}

std::string Matrix::to_text() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        if (i) out += ';';
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ',';
            out += std::to_string(at(i, j));
        }
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
}

bool operator<(const Matrix& a, const Matrix& b) {
    int qa = a.field_ ? a.field_->order() : 0;
    int qb = b.field_ ? b.field_->order() : 0;
    if (qa != qb) return qa < qb;
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.entries_ < b.entries_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    const FieldSpec& f = common_field(a, b);
    require_same_shape(a, b);
    Matrix r(f, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, f.add(a.at(i, j), b.at(i, j)));
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    const FieldSpec& f = common_field(a, b);
    require_same_shape(a, b);
    Matrix r(f, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, f.sub(a.at(i, j), b.at(i, j)));
    return r;
}

Matrix operator-(const Matrix& a) {
    const FieldSpec& f = a.field();
    Matrix r(f, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, f.neg(a.at(i, j)));
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    const FieldSpec& f = common_field(a, b);
    if (a.cols() != b.rows())
        throw Error("shape mismatch in product: " + std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()));
    Matrix r(f, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            Elt ail = a.at(i, l);
            if (ail == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.set(i, j, f.add(r.at(i, j), f.mul(ail, b.at(l, j))));
        }
    return r;
}

Matrix scale(Elt c, const Matrix& a) {
    const FieldSpec& f = a.field();
    Matrix r(f, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, f.mul(c, a.at(i, j)));
    return r;
}

Matrix transpose(const Matrix& a) {
    Matrix r(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(j, i, a.at(i, j));
    return r;
}

Matrix conj_transpose(const Matrix& a, const Involution& sigma) {
    if (&sigma.field() != &a.field()) throw Error("involution lives on a different field");
    Matrix r(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(j, i, sigma(a.at(i, j)));
    return r;
}

namespace {

// In-place reduced row echelon form; returns the rank. Pivot choice is the
// first nonzero entry down each column, so the result is deterministic.
int rref_in_place(Matrix& m) {
    const FieldSpec& f = m.field();
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) {
                Elt t = m.at(r, j);
                m.set(r, j, m.at(piv, j));
                m.set(piv, j, t);
            }
        Elt iv = f.inv(m.at(r, c));
        for (int j = 0; j < m.cols(); ++j) m.set(r, j, f.mul(iv, m.at(r, j)));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Elt factor = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j)
                m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
        }
        ++r;
    }
    return r;
}

}  // namespace

int rank(const Matrix& a) {
    if (a.rows() == 0) return 0;
    Matrix tmp = a;
    return rref_in_place(tmp);
}

Matrix rref(const Matrix& a) {
    Matrix tmp = a;
    if (tmp.rows() > 0) rref_in_place(tmp);
    return tmp;
}

Matrix inverse(const Matrix& a) {
    auto r = try_inverse(a);
    if (!r) throw Error("matrix is singular");
    return *r;
}

std::optional<Matrix> try_inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error("inverse of non-square matrix");
    const FieldSpec& f = a.field();
    int n = a.rows();
    Matrix aug(f, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, n + i, 1);
    }
    // The identity block keeps the augmented rank at n regardless of a, so
    // invertibility is read off the reduced left block instead.
    rref_in_place(aug);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (aug.at(i, j) != (i == j ? 1 : 0)) return std::nullopt;
    Matrix out(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, aug.at(i, n + j));
    return out;
}

bool is_zero(const Matrix& a) {
    for (Elt e : a.entries())
        if (e != 0) return false;
    return true;
}

bool is_hermitian(const Matrix& a, const Involution& sigma) {
    if (a.rows() != a.cols()) throw Error("hermitian test needs a square matrix");
    return conj_transpose(a, sigma) == a;
}

bool is_symmetric(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error("symmetry test needs a square matrix");
    return transpose(a) == a;
}

bool is_alternate(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error("alternate test needs a square matrix");
    if (transpose(a) != -a) return false;
    for (int i = 0; i < a.rows(); ++i)
        if (a.at(i, i) != 0) return false;
    return true;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    const FieldSpec& f = common_field(a, b);
    if (a.cols() != b.cols()) throw Error("vstack needs equal column counts");
    Matrix r(f, a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, j, b.at(i, j));
    return r;
}

Matrix row_vector(const FieldSpec& f, const std::vector<int>& v) {
    return Matrix::from_rows(f, {v});
}

bool in_row_space(const Matrix& a, const Matrix& v) {
    if (v.rows() != 1) throw Error("in_row_space expects a single row");
    return rank(a) == rank(vstack(a, v));
}

Matrix intersect_row_spaces(const Matrix& a, const Matrix& b) {
    const FieldSpec& f = common_field(a, b);
    if (a.cols() != b.cols()) throw Error("intersection needs equal ambient dimension");
    int n = a.cols();
    // Zassenhaus: reduce [[A A],[B 0]]; rows with zero left half carry the
    // intersection in their right half.
    Matrix stack(f, a.rows() + b.rows(), 2 * n);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < n; ++j) {
            stack.set(i, j, a.at(i, j));
            stack.set(i, n + j, a.at(i, j));
        }
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < n; ++j) stack.set(a.rows() + i, j, b.at(i, j));
    Matrix red = rref(stack);
    std::vector<std::vector<int>> kept;
    for (int i = 0; i < red.rows(); ++i) {
        bool left_zero = true, right_zero = true;
        for (int j = 0; j < n; ++j) {
            if (red.at(i, j) != 0) left_zero = false;
            if (red.at(i, n + j) != 0) right_zero = false;
        }
        if (left_zero && !right_zero) {
            std::vector<int> row(n);
            for (int j = 0; j < n; ++j) row[j] = red.at(i, n + j);
            kept.push_back(std::move(row));
        }
    }
    if (kept.empty()) return Matrix(f, 0, n);
    Matrix out = rref(Matrix::from_rows(f, kept));
    return out;
}

}  // namespace matgeo
