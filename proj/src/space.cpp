#include "matgeo/space.hpp"

#include <algorithm>
#include <limits>

namespace matgeo {

namespace {

constexpr long long kCountSentinel = std::numeric_limits<long long>::max() / 4;

long long sat_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > kCountSentinel / b) return kCountSentinel;
    return a * b;
}

long long sat_pow(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r = sat_mul(r, base);
    return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw Error("bad number '" + s + "' in space descriptor");
    }
    if (pos != s.size()) throw Error("bad number '" + s + "' in space descriptor");
    return v;
}

const FieldSpec& parse_field(const std::string& s) {
    if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')')
        throw Error("bad field '" + s + "' (expected GF(q))");
    int q = parse_int(s.substr(3, s.size() - 4));
    if (q < 2) throw Error("field order must be >= 2");
    int p = 0;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    if (p == 0) p = q;
    int k = 0;
    int rest = q;
    while (rest > 1 && rest % p == 0) { rest /= p; ++k; }
    if (rest != 1) throw Error("field order " + std::to_string(q) + " is not a prime power");
    return field_make(p, k);
}

}  // namespace

SpaceDescriptor SpaceDescriptor::parse(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.size() < 2) throw Error("bad space descriptor '" + text + "'");
    const std::string& tag = parts[0];
    SpaceDescriptor d;
    if (tag == "rect") {
        if (parts.size() != 3) throw Error("rect descriptor expects rect:MxN:GF(q)");
        auto dims = split(parts[1], 'x');
        if (dims.size() != 2) throw Error("rect dimensions expect MxN, got '" + parts[1] + "'");
        d.kind = SpaceKind::Rectangular;
        d.m = parse_int(dims[0]);
        d.n = parse_int(dims[1]);
        d.field = &parse_field(parts[2]);
        if (d.m < 2 || d.n < 2) throw Error("rectangular spaces need m, n >= 2");
        return d;
    }
    if (tag == "sym" || tag == "herm") {
        if (tag == "sym" && parts.size() != 3)
            throw Error("sym descriptor expects sym:N:GF(q)");
        if (tag == "herm" && parts.size() != 4)
            throw Error("herm descriptor expects herm:N:GF(q):{id|frob}");
        d.kind = SpaceKind::Hermitian;
        d.n = parse_int(parts[1]);
        d.m = d.n;
        d.field = &parse_field(parts[2]);
        InvolutionKind ik = InvolutionKind::Identity;
        if (tag == "herm") {
            if (parts[3] == "frob")
                ik = InvolutionKind::Frobenius;
            else if (parts[3] != "id")
                throw Error("unknown involution '" + parts[3] + "' (expected id or frob)");
        }
        d.sigma = Involution(*d.field, ik);
        if (d.n < 2) throw Error("hermitian spaces need n >= 2");
        return d;
    }
    if (tag == "grass") {
        if (parts.size() != 4) throw Error("grass descriptor expects grass:M:A:GF(q)");
        d.kind = SpaceKind::Grassmann;
        d.m = parse_int(parts[1]);
        int amb = parse_int(parts[2]);
        d.n = amb - d.m;
        d.field = &parse_field(parts[3]);
        if (d.m < 2 || d.n < d.m)
            throw Error("grassmann spaces need 2 <= m <= ambient - m");
        return d;
    }
    throw Error("unknown space kind '" + tag + "'");
}

std::string SpaceDescriptor::to_string() const {
    switch (kind) {
        case SpaceKind::Rectangular:
            return "rect:" + std::to_string(m) + "x" + std::to_string(n) + ":" + field->name();
        case SpaceKind::Hermitian:
            if (sigma && sigma->kind() == InvolutionKind::Frobenius)
                return "herm:" + std::to_string(n) + ":" + field->name() + ":frob";
            return "sym:" + std::to_string(n) + ":" + field->name();
        case SpaceKind::Grassmann:
            return "grass:" + std::to_string(m) + ":" + std::to_string(ambient()) + ":" +
                   field->name();
    }
    throw Error("unknown space kind");
}

long long SpaceDescriptor::point_count() const {
    if (!field) throw Error("descriptor has no field");
    long long q = field->order();
    switch (kind) {
        case SpaceKind::Rectangular:
            return sat_pow(q, m * n);
        case SpaceKind::Hermitian: {
            if (!sigma) throw Error("hermitian descriptor has no involution");
            long long qf = static_cast<long long>(sigma->fixed_elements().size());
            return sat_mul(sat_pow(qf, n), sat_pow(q, n * (n - 1) / 2));
        }
        case SpaceKind::Grassmann:
            return gaussian_binomial(ambient(), m, static_cast<int>(q));
    }
    throw Error("unknown space kind");
}

long long gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    // Pascal recurrence [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q, exact integers.
    std::vector<std::vector<long long>> t(n + 1, std::vector<long long>(k + 1, 0));
    for (int i = 0; i <= n; ++i) t[i][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            t[i][j] = sat_mul(1, t[i - 1][j - 1]) + sat_mul(sat_pow(q, j), t[i - 1][j]);
    return std::min(t[n][k], kCountSentinel);
}

int intersection_dim(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw Error("intersection needs equal ambient dimension");
    return rank(a) + rank(b) - rank(vstack(a, b));
}

Matrix grassmann_point(const Matrix& spanning, int m) {
    Matrix red = rref(spanning);
    std::vector<std::vector<int>> keep;
    for (int i = 0; i < red.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < red.cols(); ++j)
            if (red.at(i, j) != 0) { zero = false; break; }
        if (!zero) {
            std::vector<int> row(red.cols());
            for (int j = 0; j < red.cols(); ++j) row[j] = red.at(i, j);
            keep.push_back(std::move(row));
        }
    }
    if (static_cast<int>(keep.size()) != m)
        throw Error("spanning rows have rank " + std::to_string(keep.size()) + ", expected " +
                    std::to_string(m));
    return Matrix::from_rows(spanning.field(), keep);
}

PointSet::PointSet(SpaceDescriptor d, std::vector<Matrix> pts)
    : desc_(std::move(d)), points_(std::move(pts)) {}

PointSet PointSet::enumerate(const SpaceDescriptor& d, long long cap) {
    long long count = d.point_count();
    if (count > cap)
        throw Error("space " + d.to_string() + " has " +
                    (count >= std::numeric_limits<long long>::max() / 8
                         ? std::string("more than ") + std::to_string(cap)
                         : std::to_string(count)) +
                    " points, cap is " + std::to_string(cap));
    const FieldSpec& f = *d.field;
    int q = f.order();
    std::vector<Matrix> pts;
    pts.reserve(static_cast<std::size_t>(count));

    if (d.kind == SpaceKind::Rectangular) {
        int cells = d.m * d.n;
        std::vector<Elt> digits(cells, 0);
        while (true) {
            pts.emplace_back(f, d.m, d.n, std::vector<Elt>(digits));
            int i = cells - 1;
            while (i >= 0 && digits[i] == q - 1) digits[i--] = 0;
            if (i < 0) break;
            ++digits[i];
        }
    } else if (d.kind == SpaceKind::Hermitian) {
        const Involution& sig = *d.sigma;
        if (&sig.field() != d.field) throw Error("involution lives on a different field");
        std::vector<Elt> fixed = sig.fixed_elements();
        // Free positions in row-major order: the upper triangle including the
        // diagonal; diagonal slots range over the fixed subfield only.
        struct Slot { int i, j; bool diag; };
        std::vector<Slot> slots;
        for (int i = 0; i < d.n; ++i)
            for (int j = i; j < d.n; ++j) slots.push_back({i, j, i == j});
        std::vector<int> pos(slots.size(), 0);
        while (true) {
            Matrix m(f, d.n, d.n);
            for (std::size_t s = 0; s < slots.size(); ++s) {
                Elt v = slots[s].diag ? fixed[pos[s]] : static_cast<Elt>(pos[s]);
                m.set(slots[s].i, slots[s].j, v);
                if (!slots[s].diag) m.set(slots[s].j, slots[s].i, sig(v));
            }
            pts.push_back(std::move(m));
            int s = static_cast<int>(slots.size()) - 1;
            while (s >= 0) {
                int limit = slots[s].diag ? static_cast<int>(fixed.size()) : q;
                if (pos[s] + 1 < limit) { ++pos[s]; break; }
                pos[s--] = 0;
            }
            if (s < 0) break;
        }
    } else {
        // RREF enumeration: choose pivot columns, then free entries right of
        // each pivot and outside later pivot columns.
        int amb = d.ambient();
        std::vector<int> pivots(d.m);
        for (int i = 0; i < d.m; ++i) pivots[i] = i;
        auto next_combo = [&]() {
            int i = d.m - 1;
            while (i >= 0 && pivots[i] == amb - d.m + i) --i;
            if (i < 0) return false;
            ++pivots[i];
            for (int j = i + 1; j < d.m; ++j) pivots[j] = pivots[j - 1] + 1;
            return true;
        };
        do {
            std::vector<bool> is_piv(amb, false);
            for (int c : pivots) is_piv[c] = true;
            std::vector<std::pair<int, int>> freepos;
            for (int i = 0; i < d.m; ++i)
                for (int j = pivots[i] + 1; j < amb; ++j)
                    if (!is_piv[j]) freepos.emplace_back(i, j);
            std::vector<Elt> vals(freepos.size(), 0);
            while (true) {
                Matrix m(f, d.m, amb);
                for (int i = 0; i < d.m; ++i) m.set(i, pivots[i], 1);
                for (std::size_t s = 0; s < freepos.size(); ++s)
                    m.set(freepos[s].first, freepos[s].second, vals[s]);
                pts.push_back(std::move(m));
                int s = static_cast<int>(vals.size()) - 1;
                while (s >= 0 && vals[s] == q - 1) vals[s--] = 0;
                if (s < 0) break;
                ++vals[s];
            }
        } while (next_combo());
    }

    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i - 1] < pts[i])) throw Error("duplicate point in enumeration");
    if (static_cast<long long>(pts.size()) != count)
        throw Error("enumeration produced " + std::to_string(pts.size()) + " points, expected " +
                    std::to_string(count));
    return PointSet(d, std::move(pts));
}

int PointSet::index_of(const Matrix& m) const {
    auto opt = find(m);
    if (!opt) throw Error("matrix " + m.to_text() + " is not a point of " + desc_.to_string());
    return *opt;
}

std::optional<int> PointSet::find(const Matrix& m) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), m);
    if (it == points_.end() || !(*it == m)) return std::nullopt;
    return static_cast<int>(it - points_.begin());
}

bool PointSet::contains_shape(const Matrix& m) const {
    if (m.empty() || &m.field() != desc_.field) return false;
    switch (desc_.kind) {
        case SpaceKind::Rectangular:
            return m.rows() == desc_.m && m.cols() == desc_.n;
        case SpaceKind::Hermitian:
            return m.rows() == desc_.n && m.cols() == desc_.n && is_hermitian(m, *desc_.sigma);
        case SpaceKind::Grassmann:
            return m.rows() == desc_.m && m.cols() == desc_.ambient() && rank(m) == desc_.m &&
                   rref(m) == m;
    }
    return false;
}

bool PointSet::adjacent(int i, int j) const {
    if (i < 0 || j < 0 || i >= size() || j >= size()) throw Error("vertex id out of range");
    if (i == j) return false;
    if (desc_.kind == SpaceKind::Grassmann)
        return 2 * desc_.m - rank(vstack(points_[i], points_[j])) == desc_.m - 1;
    return rank(points_[i] - points_[j]) == 1;
}

bool PointSet::adjacent(const Matrix& a, const Matrix& b) const {
    if (!contains_shape(a)) throw Error("matrix " + a.to_text() + " is not in " + desc_.to_string());
    if (!contains_shape(b)) throw Error("matrix " + b.to_text() + " is not in " + desc_.to_string());
    if (a == b) return false;
    if (desc_.kind == SpaceKind::Grassmann) return intersection_dim(a, b) == desc_.m - 1;
    return rank(a - b) == 1;
}

}  // namespace matgeo
