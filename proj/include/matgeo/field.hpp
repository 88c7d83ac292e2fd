#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace matgeo {

// Every error raised by this library. Messages name the offending value.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A field element is its canonical integer encoding in [0, q): the base-p
// value of the residue polynomial's coefficient vector, least significant
// coefficient first. For prime fields this is just the residue itself.
using Elt = std::uint16_t;

enum class FieldOp { Add, Sub, Mul, Div, Neg, Inv };

// Tabulated arithmetic for GF(p^k), q = p^k <= 256. Instances are immutable
// singletons owned by field_make(); pointer identity doubles as field identity.
// Extension fields use a fixed irreducible modulus per (p, k); the modulus is
// re-verified irreducible at construction by trial division.
class FieldSpec {
public:
    int p() const { return p_; }
    int k() const { return k_; }
    int order() const { return q_; }
    // k+1 coefficients, constant term first. For k = 1 this is the polynomial x.
    const std::vector<int>& modulus() const { return mod_; }
    std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

    Elt add(Elt a, Elt b) const { return add_[id(a) * q_ + id(b)]; }
    Elt sub(Elt a, Elt b) const { return add_[id(a) * q_ + id(neg_[id(b)])]; }
    Elt mul(Elt a, Elt b) const { return mul_[id(a) * q_ + id(b)]; }
    Elt neg(Elt a) const { return neg_[id(a)]; }
    Elt inv(Elt a) const;
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    Elt pow(Elt a, long long e) const;
    Elt arith(FieldOp op, Elt a, Elt b = 0) const;

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

private:
    FieldSpec(int p, int k, std::vector<int> modulus);
    friend const FieldSpec& field_make(int p, int k, int cap);

    Elt id(Elt a) const {
        if (a >= q_)
            throw Error("element " + std::to_string(a) + " out of range for " + name() +
                        " (mixed fields?)");
        return a;
    }

    int p_, k_, q_;
    std::vector<int> mod_;
    std::vector<Elt> add_, mul_;  // q*q tables
    std::vector<Elt> neg_, inv_;  // q tables, inv_[0] unused
};

// Returns the unique FieldSpec for GF(p^k). Throws if p is not prime, q
// exceeds the cap, or no modulus is tabulated for an extension degree k >= 2.
const FieldSpec& field_make(int p, int k, int cap = 256);

bool is_prime(int n);

// Irreducibility over GF(p) by trial division against every monic polynomial
// of degree 1..deg/2. Coefficients constant-term-first, leading coeff nonzero.
bool poly_irreducible(const std::vector<int>& coeffs, int p);

enum class InvolutionKind { Identity, Frobenius };

// A field involution: the identity, or x -> x^(p^(k/2)) for even k. The
// Frobenius case squares to the identity because (p^(k/2))^2 = q and x^q = x.
class Involution {
public:
    Involution(const FieldSpec& f, InvolutionKind kind);

    Elt operator()(Elt a) const { return tab_[a < tab_.size() ? a : throw_range(a)]; }
    InvolutionKind kind() const { return kind_; }
    const FieldSpec& field() const { return *field_; }
    std::string name() const { return kind_ == InvolutionKind::Identity ? "id" : "frob"; }

    // Elements with sigma(x) = x, ascending. Always a subfield of size p^(k/2)
    // for Frobenius, or the whole field for the identity.
    std::vector<Elt> fixed_elements() const;

    struct Restrictions {
        bool fixed_field_large_enough;  // more than three fixed elements
        bool not_identity_in_char2;     // rules out identity involution over char 2
        bool both() const { return fixed_field_large_enough && not_identity_in_char2; }
    };
    Restrictions check_restrictions() const;

    bool operator==(const Involution& o) const {
        return field_ == o.field_ && kind_ == o.kind_;
    }

private:
    std::size_t throw_range(Elt a) const;

    const FieldSpec* field_;
    InvolutionKind kind_;
    std::vector<Elt> tab_;
};

}  // namespace matgeo
