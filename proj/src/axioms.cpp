#include "matgeo/axioms.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

namespace matgeo {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_connected(const DistanceIndex& index) {
    if (!index.connected())
        throw Error("this check requires a connected graph (A1 must hold first)");
}

// Calls fn(vertex) for each set bit, ascending. fn returning false stops.
template <typename Fn>
void for_bits(const std::uint64_t* words, int nwords, Fn&& fn) {
    for (int w = 0; w < nwords; ++w) {
        std::uint64_t word = words[w];
        while (word != 0) {
            int bit = std::countr_zero(word);
            word &= word - 1;
            if (!fn(w * 64 + bit)) return;
        }
    }
}

bool intersect_any(const std::uint64_t* a, const std::uint64_t* b, int nwords) {
    for (int w = 0; w < nwords; ++w)
        if ((a[w] & b[w]) != 0) return true;
    return false;
}

std::vector<int> bit_list(const std::uint64_t* words, int nwords) {
    std::vector<int> out;
    for_bits(words, nwords, [&](int v) {
        out.push_back(v);
        return true;
    });
    return out;
}

}  // namespace

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::A1: return "A1";
        case Axiom::A2: return "A2";
        case Axiom::A3: return "A3";
        case Axiom::A4: return "A4";
        case Axiom::A5: return "A5";
    }
    return "?";
}

ShellIndex::ShellIndex(const DistanceIndex& index)
    : n_(index.size()), diam_(index.diameter()), words_((index.size() + 63) / 64) {
    bits_.assign(static_cast<std::size_t>(n_) * (diam_ + 1) * words_, 0);
    for (int v = 0; v < n_; ++v) {
        const std::uint8_t* row = index.row(v);
        for (int w = 0; w < n_; ++w) {
            if (row[w] > diam_) continue;
            std::size_t base = (static_cast<std::size_t>(v) * (diam_ + 1) + row[w]) * words_;
            bits_[base + w / 64] |= std::uint64_t{1} << (w % 64);
        }
    }
}

const std::uint64_t* ShellIndex::shell(int v, int t) const {
    if (v < 0 || v >= n_ || t < 0 || t > diam_) throw Error("shell query out of range");
    return bits_.data() + (static_cast<std::size_t>(v) * (diam_ + 1) + t) * words_;
}

bool ShellIndex::contains(int v, int t, int w) const {
    return (shell(v, t)[w / 64] >> (w % 64)) & 1;
}

AxiomResult check_a1(const DistanceIndex& index) {
    auto start = Clock::now();
    AxiomResult r;
    r.axiom = Axiom::A1;
    r.holds = index.connected();
    if (!r.holds) {
        for (int x = 0; x < index.size() && r.witness.empty(); ++x)
            for (int y = 0; y < index.size(); ++y)
                if (index.d(x, y) == kUnreachable) {
                    r.witness = {{"x", x}, {"y", y}};
                    break;
                }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

AxiomResult check_a2(const DistanceIndex& index, const ShellIndex& shells) {
    require_connected(index);
    auto start = Clock::now();
    AxiomResult r;
    r.axiom = Axiom::A2;
    r.holds = true;
    int diam = index.diameter();
    int nw = shells.words();
    for (int x = 0; x < index.size() && r.holds; ++x) {
        const std::uint64_t* far_x = shells.shell(x, diam);
        for (int y = 0; y < index.size(); ++y) {
            int need = diam - index.d(x, y);
            if (!intersect_any(far_x, shells.shell(y, need), nw)) {
                r.holds = false;
                r.witness = {{"x", x}, {"y", y}};
                break;
            }
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

AxiomResult check_a3(const DistanceIndex& index, const ShellIndex& shells) {
    require_connected(index);
    auto start = Clock::now();
    AxiomResult r;
    r.axiom = Axiom::A3;
    r.holds = true;
    if (index.diameter() < 2) {
        r.elapsed_ms = ms_since(start);
        return r;
    }
    int nw = shells.words();
    for (int z = 0; z < index.size() && r.holds; ++z) {
        std::vector<int> nbrs = bit_list(shells.shell(z, 1), nw);
        const std::uint64_t* two_z = shells.shell(z, 2);
        for (std::size_t i = 0; i < nbrs.size() && r.holds; ++i) {
            int x = nbrs[i];
            const std::uint64_t* adj_x = shells.shell(x, 1);
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                int y = nbrs[j];
                if (index.d(x, y) != 2) continue;
                const std::uint64_t* adj_y = shells.shell(y, 1);
                bool found = false;
                for (int w = 0; w < nw && !found; ++w)
                    found = (adj_x[w] & adj_y[w] & two_z[w]) != 0;
                if (!found) {
                    r.holds = false;
                    r.witness = {{"x", x}, {"y", y}, {"z", z}};
                    break;
                }
            }
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

AxiomResult check_a4(const DistanceIndex& index, const ShellIndex& shells) {
    require_connected(index);
    auto start = Clock::now();
    AxiomResult r;
    r.axiom = Axiom::A4;
    r.holds = true;
    int diam = index.diameter();
    int nw = shells.words();
    for (int z = 0; z < index.size() && r.holds; ++z) {
        std::vector<int> shell = bit_list(shells.shell(z, diam), nw);
        if (shell.size() < 2) continue;
        std::vector<int> nbrs = bit_list(shells.shell(z, 1), nw);
        int cw = (static_cast<int>(nbrs.size()) + 63) / 64;
        // Compressed over the neighbor slots of z: near marks neighbors at
        // distance diam-1 from a shell member, far marks those at diam.
        std::vector<std::uint64_t> near(shell.size() * cw, 0);
        std::vector<std::uint64_t> far(shell.size() * cw, 0);
        for (std::size_t s = 0; s < shell.size(); ++s) {
            const std::uint8_t* row = index.row(shell[s]);
            for (std::size_t t = 0; t < nbrs.size(); ++t) {
                if (row[nbrs[t]] == diam - 1)
                    near[s * cw + t / 64] |= std::uint64_t{1} << (t % 64);
                if (row[nbrs[t]] == diam) far[s * cw + t / 64] |= std::uint64_t{1} << (t % 64);
            }
        }
        for (std::size_t xi = 0; xi < shell.size() && r.holds; ++xi)
            for (std::size_t yi = 0; yi < shell.size(); ++yi) {
                if (xi == yi) continue;
                if (!intersect_any(near.data() + xi * cw, far.data() + yi * cw, cw)) {
                    r.holds = false;
                    r.witness = {{"x", shell[xi]}, {"y", shell[yi]}, {"z", z}};
                    break;
                }
            }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

namespace {

// Complement of shell(a,diam) | shell(b,diam), restricted to real vertices.
// Returned as the list of (word index, word) with nonzero words only.
std::vector<std::pair<int, std::uint64_t>> uncovered_words(const ShellIndex& shells, int a, int b) {
    int nw = shells.words();
    int n = shells.size();
    const std::uint64_t* fa = shells.shell(a, shells.diameter());
    const std::uint64_t* fb = shells.shell(b, shells.diameter());
    std::vector<std::pair<int, std::uint64_t>> out;
    for (int w = 0; w < nw; ++w) {
        std::uint64_t word = ~(fa[w] | fb[w]);
        if (w == nw - 1 && n % 64 != 0) word &= (std::uint64_t{1} << (n % 64)) - 1;
        if (word != 0) out.emplace_back(w, word);
    }
    return out;
}

bool shell_inside(const ShellIndex& shells, int p,
                  const std::vector<std::pair<int, std::uint64_t>>& uncovered) {
    const std::uint64_t* fp = shells.shell(p, shells.diameter());
    for (auto [w, word] : uncovered)
        if ((fp[w] & word) != 0) return false;
    return true;
}

}  // namespace

AxiomResult check_a5(const DistanceIndex& index, const ShellIndex& shells) {
    require_connected(index);
    auto start = Clock::now();
    AxiomResult r;
    r.axiom = Axiom::A5;
    r.holds = true;
    if (index.diameter() < 1) {
        r.elapsed_ms = ms_since(start);
        return r;
    }
    int nw = shells.words();
    for (int a = 0; a < index.size() && r.holds; ++a) {
        std::vector<int> nbrs = bit_list(shells.shell(a, 1), nw);
        for (int b : nbrs) {
            if (b < a) continue;
            auto uncovered = uncovered_words(shells, a, b);
            bool found = false;
            for (int p = 0; p < index.size() && !found; ++p)
                found = p != a && p != b && shell_inside(shells, p, uncovered);
            if (!found) {
                r.holds = false;
                r.witness = {{"a", a}, {"b", b}};
                break;
            }
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

AxiomResult check_axiom(Axiom a, const DistanceIndex& index, const ShellIndex& shells) {
    switch (a) {
        case Axiom::A1: return check_a1(index);
        case Axiom::A2: return check_a2(index, shells);
        case Axiom::A3: return check_a3(index, shells);
        case Axiom::A4: return check_a4(index, shells);
        case Axiom::A5: return check_a5(index, shells);
    }
    throw Error("unknown axiom");
}

std::vector<AxiomResult> check_axioms(const DistanceIndex& index, const std::vector<Axiom>& which) {
    bool needs_shells = false;
    for (Axiom a : which)
        if (a != Axiom::A1) needs_shells = true;
    if (needs_shells) require_connected(index);
    std::optional<ShellIndex> shells;
    if (needs_shells) shells.emplace(index);
    std::vector<AxiomResult> out;
    out.reserve(which.size());
    for (Axiom a : which)
        out.push_back(a == Axiom::A1 ? check_a1(index) : check_axiom(a, index, *shells));
    return out;
}

bool witness_violates(const AxiomResult& result, const DistanceIndex& index) {
    if (result.holds || result.witness.empty()) return false;
    auto get = [&](const std::string& role) {
        for (const auto& part : result.witness)
            if (part.role == role) return part.vertex;
        throw Error("witness has no role '" + role + "'");
    };
    int n = index.size();
    int diam = index.diameter();
    switch (result.axiom) {
        case Axiom::A1:
            return index.d(get("x"), get("y")) == kUnreachable;
        case Axiom::A2: {
            int x = get("x"), y = get("y");
            for (int z = 0; z < n; ++z)
                if (index.d(x, z) == diam && index.d(x, y) + index.d(y, z) == diam) return false;
            return true;
        }
        case Axiom::A3: {
            int x = get("x"), y = get("y"), z = get("z");
            if (index.d(x, z) != 1 || index.d(y, z) != 1 || index.d(x, y) != 2) return false;
            for (int w = 0; w < n; ++w)
                if (index.d(x, w) == 1 && index.d(y, w) == 1 && index.d(z, w) == 2) return false;
            return true;
        }
        case Axiom::A4: {
            int x = get("x"), y = get("y"), z = get("z");
            if (x == y || index.d(x, z) != diam || index.d(y, z) != diam) return false;
            for (int w = 0; w < n; ++w)
                if (index.d(z, w) == 1 && index.d(x, w) == diam - 1 && index.d(y, w) == diam)
                    return false;
            return true;
        }
        case Axiom::A5: {
            int a = get("a"), b = get("b");
            if (index.d(a, b) != 1) return false;
            for (int p = 0; p < n; ++p) {
                if (p == a || p == b) continue;
                bool covered = true;
                for (int x = 0; x < n && covered; ++x)
                    if (index.d(x, p) == diam && index.d(x, a) != diam && index.d(x, b) != diam)
                        covered = false;
                if (covered) return false;
            }
            return true;
        }
    }
    return false;
}

bool adjacency_criterion_holds(const DistanceIndex& index, const ShellIndex& shells, int a, int b,
                               int p) {
    require_connected(index);
    if (a < 0 || b < 0 || p < 0 || a >= index.size() || b >= index.size() || p >= index.size())
        throw Error("vertex id out of range");
    if (p == a || p == b) return false;
    return shell_inside(shells, p, uncovered_words(shells, a, b));
}

std::optional<int> adjacency_criterion_find_p(const DistanceIndex& index, const ShellIndex& shells,
                                              int a, int b) {
    require_connected(index);
    if (a == b) throw Error("criterion needs two distinct vertices");
    auto uncovered = uncovered_words(shells, a, b);
    for (int p = 0; p < index.size(); ++p)
        if (p != a && p != b && shell_inside(shells, p, uncovered)) return p;
    return std::nullopt;
}

CriterionSurvey adjacency_criterion_survey(const DistanceIndex& index, const ShellIndex& shells) {
    require_connected(index);
    CriterionSurvey s;
    s.precondition_ok = check_a1(index).holds && check_a2(index, shells).holds &&
                        check_a3(index, shells).holds && check_a4(index, shells).holds;
    s.pass = true;
    int n = index.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            ++s.pairs_scanned;
            bool edge = index.d(a, b) == 1;
            if (edge) ++s.edge_count;
            auto uncovered = uncovered_words(shells, a, b);
            std::optional<int> p;
            for (int cand = 0; cand < n && !p; ++cand)
                if (cand != a && cand != b && shell_inside(shells, cand, uncovered)) p = cand;
            if (p) ++s.pairs_with_p;
            if (p.has_value() != edge && s.pass) {
                s.pass = false;
                s.first_violation = CriterionViolation{a, b, p.has_value(), p.value_or(-1)};
            }
        }
    return s;
}

namespace {

// Rows of m other than row skip, stacked.
Matrix rows_without(const Matrix& m, int skip) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < m.rows(); ++i) {
        if (i == skip) continue;
        std::vector<int> row(m.cols());
        for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(m.field(), rows);
}

Matrix row_of(const Matrix& m, int i) {
    std::vector<Elt> v(m.cols());
    for (int j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
    return Matrix(m.field(), 1, m.cols(), std::move(v));
}

// All vectors of the row space of basis (rank r), as r-digit coefficient
// odometer in lexicographic order, including zero.
template <typename Fn>
void for_row_space(const Matrix& basis, Fn&& fn) {
    const FieldSpec& f = basis.field();
    int r = basis.rows();
    if (r == 0) {
        fn(Matrix(f, 1, basis.cols()));
        return;
    }
    std::vector<Elt> coeff(r, 0);
    while (true) {
        Matrix v(f, 1, basis.cols());
        for (int i = 0; i < r; ++i)
            if (coeff[i] != 0)
                for (int j = 0; j < basis.cols(); ++j)
                    v.set(0, j, f.add(v.at(0, j), f.mul(coeff[i], basis.at(i, j))));
        if (!fn(v)) return;
        int i = r - 1;
        while (i >= 0 && coeff[i] == f.order() - 1) coeff[i--] = 0;
        if (i < 0) return;
        ++coeff[i];
    }
}

}  // namespace

Matrix witness_a4_rect(const Matrix& X, const Matrix& Y) {
    if (X.rows() != Y.rows() || X.cols() != Y.cols() || &X.field() != &Y.field())
        throw Error("witness needs two matrices of the same shape over one field");
    if (X == Y) throw Error("witness needs two distinct matrices");
    if (X.rows() > X.cols()) return transpose(witness_a4_rect(transpose(X), transpose(Y)));
    int m = X.rows();
    if (rank(X) != m || rank(Y) != m) throw Error("witness needs full-rank endpoints");

    for (int i = 0; i < m; ++i) {
        Matrix bx = rref(rows_without(X, i));
        Matrix by = rref(rows_without(Y, i));
        Matrix xi = row_of(X, i);
        Matrix yi = row_of(Y, i);
        // The affine subspaces x_i + row(bx) and y_i + row(by) coincide only
        // if the linear parts match and the offsets differ by a row vector.
        if (bx == by && in_row_space(by, (xi - yi))) continue;
        Matrix w(X.field(), 1, X.cols());
        bool found = false;
        for_row_space(bx, [&](const Matrix& u) {
            Matrix cand = xi + u;
            if (!in_row_space(by, cand - yi)) {
                w = cand;
                found = true;
                return false;
            }
            return true;
        });
        if (!found) continue;
        Matrix W(X.field(), X.rows(), X.cols());
        for (int j = 0; j < X.cols(); ++j) W.set(i, j, w.at(0, j));
        if (rank(W) != 1 || rank(X - W) != m - 1 || rank(Y - W) != m)
            throw Error("constructed witness failed its rank postconditions");
        return W;
    }
    throw Error("no row with distinct affine subspaces; construction hypothesis violated");
}

Matrix witness_a4_herm(const Matrix& X, const Matrix& Y, const Involution& sigma) {
    if (X.rows() != X.cols() || Y.rows() != Y.cols() || X.rows() != Y.rows() ||
        &X.field() != &Y.field())
        throw Error("witness needs square matrices of one size over one field");
    if (&X.field() != &sigma.field()) throw Error("involution lives on a different field");
    if (X == Y) throw Error("witness needs two distinct matrices");
    int n = X.rows();
    const FieldSpec& f = X.field();
    auto yinv = try_inverse(Y);
    if (!yinv) throw Error("witness needs an invertible second endpoint");
    if (rank(X) != n) throw Error("witness needs an invertible first endpoint");
    Matrix B = X - X * (*yinv) * X;
    if (is_zero(B)) throw Error("endpoints with X = X Y^-1 X give a zero defect matrix");

    auto form = [&](const Matrix& A, const Matrix& v) {
        Matrix s = v * A * conj_transpose(v, sigma);
        return s.at(0, 0);
    };
    std::vector<Elt> digits(n, 0);
    while (true) {
        Matrix v(f, 1, n, std::vector<Elt>(digits.begin(), digits.end()));
        if (form(X, v) != 0 && form(B, v) != 0) {
            Matrix vx = v * X;
            Elt coef = f.inv(form(X, v));
            Matrix W = scale(coef, conj_transpose(vx, sigma) * vx);
            if (rank(W) != 1 || rank(X - W) != n - 1 || rank(Y - W) != n)
                throw Error("constructed witness failed its rank postconditions");
            if (!is_hermitian(W, sigma)) throw Error("constructed witness is not hermitian");
            return W;
        }
        int i = n - 1;
        while (i >= 0 && digits[i] == f.order() - 1) digits[i--] = 0;
        if (i < 0) break;
        ++digits[i];
    }
    throw Error("no vector avoids both radical conditions; construction hypothesis violated");
}

std::vector<Matrix> rank1_step_neighbors(const Matrix& A, const Involution& sigma) {
    if (A.rows() != A.cols()) throw Error("rank-one step needs a square matrix");
    if (&A.field() != &sigma.field()) throw Error("involution lives on a different field");
    if (is_zero(A)) throw Error("the zero matrix has no rank-one step neighbors");
    const FieldSpec& f = A.field();
    int n = A.rows();
    std::vector<Matrix> out;
    std::vector<Elt> digits(n, 0);
    while (true) {
        Matrix x(f, 1, n, std::vector<Elt>(digits.begin(), digits.end()));
        Matrix xa = x * A;
        Matrix s = xa * conj_transpose(x, sigma);
        if (s.at(0, 0) != 0) {
            Elt coef = f.inv(s.at(0, 0));
            out.push_back(scale(coef, conj_transpose(xa, sigma) * xa));
        }
        int i = n - 1;
        while (i >= 0 && digits[i] == f.order() - 1) digits[i--] = 0;
        if (i < 0) break;
        ++digits[i];
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Matrix> rank1_step_neighbors_brute(const PointSet& space, const Matrix& A) {
    if (!space.contains_shape(A)) throw Error("matrix is not a point of the space");
    int k = rank(A);
    if (k == 0) throw Error("the zero matrix has no rank-one step neighbors");
    std::vector<Matrix> out;
    for (int i = 0; i < space.size(); ++i) {
        const Matrix& b = space.point(i);
        if (rank(b) == 1 && rank(A - b) == k - 1) out.push_back(b);
    }
    return out;
}

Matrix witness_a4_grass(const Matrix& X, const Matrix& Y, const Matrix& Z) {
    if (X.rows() != Y.rows() || X.rows() != Z.rows() || X.cols() != Y.cols() ||
        X.cols() != Z.cols() || &X.field() != &Y.field() || &X.field() != &Z.field())
        throw Error("witness needs three subspaces of one Grassmannian");
    int m = X.rows();
    if (X == Y) throw Error("witness needs two distinct subspaces");
    if (intersection_dim(X, Z) != 0 || intersection_dim(Y, Z) != 0)
        throw Error("witness needs both endpoints at full distance from the base point");

    // First vector of X outside Y, in coefficient order.
    std::optional<Matrix> a;
    for_row_space(X, [&](const Matrix& v) {
        if (!is_zero(v) && !in_row_space(Y, v)) {
            a = v;
            return false;
        }
        return true;
    });
    if (!a) throw Error("every vector of X lies in Y; endpoints are not distinct subspaces");

    Matrix span_ay = vstack(*a, Y);
    Matrix T = intersect_row_spaces(span_ay, Z);

    // Subspaces of Z correspond to coefficient subspaces; enumerate (m-1)-row
    // reduced bases over the coefficient space in lexicographic order.
    const FieldSpec& f = X.field();
    SpaceDescriptor coeff;
    coeff.kind = SpaceKind::Grassmann;
    coeff.m = m - 1;
    coeff.n = 1;
    coeff.field = &f;
    PointSet coeff_space = PointSet::enumerate(coeff);
    for (int i = 0; i < coeff_space.size(); ++i) {
        Matrix S = coeff_space.point(i) * Z;
        if (T.rows() > 0 && intersection_dim(S, T) != 0) continue;
        Matrix W = grassmann_point(vstack(*a, S), m);
        if (intersection_dim(W, Z) != m - 1 || intersection_dim(W, X) != 1 ||
            intersection_dim(W, Y) != 0)
            throw Error("constructed witness failed its intersection postconditions");
        return W;
    }
    throw Error("no complement inside the base point; construction hypothesis violated");
}

}  // namespace matgeo
