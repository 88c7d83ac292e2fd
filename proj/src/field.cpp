#include "matgeo/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace matgeo {

namespace {

// Polynomials over GF(p): vector of coefficients in [0,p), constant term first.
using Poly = std::vector<int>;

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

// Remainder of a modulo monic-normalized m.
Poly poly_mod(Poly a, const Poly& m, int p) {
    int dm = poly_deg(m);
    int lead = m[dm];
    int lead_inv = 1;
    for (int x = 1; x < p; ++x)
        if (lead * x % p == 1) { lead_inv = x; break; }
    for (int da = poly_deg(a); da >= dm; da = poly_deg(a)) {
        int f = a[da] * lead_inv % p;
        for (int i = 0; i <= dm; ++i)
            a[da - dm + i] = ((a[da - dm + i] - f * m[i]) % p + p) % p;
    }
    a.resize(dm > 0 ? dm : 1, 0);
    return a;
}

int encode(const Poly& a, int p, int k) {
    int v = 0;
    for (int i = k - 1; i >= 0; --i)
        v = v * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
    return v;
}

Poly decode(int v, int p, int k) {
    Poly a(k, 0);
    for (int i = 0; i < k; ++i) { a[i] = v % p; v /= p; }
    return a;
}

const std::map<std::pair<int, int>, Poly>& modulus_table() {
    // One fixed irreducible modulus per supported extension, constant term first.
    static const std::map<std::pair<int, int>, Poly> tab = {
        {{2, 2}, {1, 1, 1}},        // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},     // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
        {{3, 2}, {1, 0, 1}},        // x^2 + 1
        {{3, 3}, {1, 2, 0, 1}},     // x^3 + 2x + 1
        {{5, 2}, {2, 0, 1}},        // x^2 + 2
    };
    return tab;
}

}  // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool poly_irreducible(const std::vector<int>& coeffs, int p) {
    int deg = poly_deg(coeffs);
    if (deg < 1) return false;
    // Enumerate monic divisor candidates of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int v = 0; v < count; ++v) {
            Poly cand = decode(v, p, d);
            cand.push_back(1);
            Poly rem = poly_mod(coeffs, cand, p);
            if (poly_deg(rem) < 0) return false;
        }
    }
    return true;
}

FieldSpec::FieldSpec(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(1), mod_(std::move(modulus)) {
    for (int i = 0; i < k; ++i) q_ *= p;
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = decode(a, p_, k_);
        Poly na(k_, 0);
        for (int i = 0; i < k_; ++i) na[i] = (p_ - pa[i]) % p_;
        neg_[a] = static_cast<Elt>(encode(na, p_, k_));
        for (int b = 0; b < q_; ++b) {
            Poly pb = decode(b, p_, k_);
            Poly s(k_, 0);
            for (int i = 0; i < k_; ++i) s[i] = (pa[i] + pb[i]) % p_;
            add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<Elt>(encode(s, p_, k_));
            Poly prod = poly_mod(poly_mul(pa, pb, p_), mod_, p_);
            mul_[static_cast<std::size_t>(a) * q_ + b] = static_cast<Elt>(encode(prod, p_, k_));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[static_cast<std::size_t>(a) * q_ + b] == 1) { inv_[a] = static_cast<Elt>(b); break; }
}

Elt FieldSpec::inv(Elt a) const {
    id(a);
    if (a == 0) throw Error("inversion of zero in " + name());
    return inv_[a];
}

Elt FieldSpec::pow(Elt a, long long e) const {
    id(a);
    if (e < 0) throw Error("negative exponent");
    Elt r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Elt FieldSpec::arith(FieldOp op, Elt a, Elt b) const {
    switch (op) {
        case FieldOp::Add: return add(a, b);
        case FieldOp::Sub: return sub(a, b);
        case FieldOp::Mul: return mul(a, b);
        case FieldOp::Div:
            if (b == 0) throw Error("division by zero in " + name());
            return div(a, b);
        case FieldOp::Neg: return neg(a);
        case FieldOp::Inv: return inv(a);
    }
    throw Error("unknown field operation");
}

const FieldSpec& field_make(int p, int k, int cap) {
    if (cap < 2 || cap > 256) throw Error("field cap must be in [2, 256]");
    if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw Error("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > cap)
            throw Error("GF(" + std::to_string(p) + "^" + std::to_string(k) + ") exceeds cap " +
                        std::to_string(cap));
    }

    std::vector<int> modulus;
    if (k == 1) {
        modulus = {0, 1};  // x itself; reduction mod x is reduction mod p
    } else {
        auto it = modulus_table().find({p, k});
        if (it == modulus_table().end())
            throw Error("unsupported field GF(" + std::to_string(p) + "^" + std::to_string(k) +
                        "): no tabulated modulus");
        modulus = it->second;
        if (!poly_irreducible(modulus, p))
            throw Error("tabulated modulus for GF(" + std::to_string(q) + ") is reducible");
    }

    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<FieldSpec>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, k}];
    if (!slot) slot.reset(new FieldSpec(p, k, std::move(modulus)));
    return *slot;
}

Involution::Involution(const FieldSpec& f, InvolutionKind kind) : field_(&f), kind_(kind) {
    int q = f.order();
    tab_.resize(q);
    if (kind == InvolutionKind::Identity) {
        for (int a = 0; a < q; ++a) tab_[a] = static_cast<Elt>(a);
        return;
    }
    if (f.k() % 2 != 0)
        throw Error("Frobenius involution needs even extension degree, got " + f.name());
    long long e = 1;
    for (int i = 0; i < f.k() / 2; ++i) e *= f.p();
    for (int a = 0; a < q; ++a) tab_[a] = f.pow(static_cast<Elt>(a), e);
    for (int a = 0; a < q; ++a)
        if (tab_[tab_[a]] != a) throw Error("involution table is not self-inverse");
}

std::size_t Involution::throw_range(Elt a) const {
    throw Error("element " + std::to_string(a) + " out of range for " + field_->name());
}

std::vector<Elt> Involution::fixed_elements() const {
    std::vector<Elt> out;
    for (Elt a = 0; a < tab_.size(); ++a)
        if (tab_[a] == a) out.push_back(a);
    return out;
}

Involution::Restrictions Involution::check_restrictions() const {
    Restrictions r;
    r.fixed_field_large_enough = fixed_elements().size() > 3;
    r.not_identity_in_char2 = !(kind_ == InvolutionKind::Identity && field_->p() == 2);
    return r;
}

}  // namespace matgeo
