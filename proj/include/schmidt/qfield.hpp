#ifndef SCHMIDT_QFIELD_HPP
#define SCHMIDT_QFIELD_HPP

#include <optional>
#include <vector>

#include "schmidt/numeric.hpp"

namespace schmidt {

// The field Q(sqrt(delta)) for a negative fundamental discriminant delta,
// with ring of integers O = Z + Z*omega.
struct FieldCtx {
    Int delta = 0;      // negative fundamental discriminant
    Int abs_delta = 0;
    bool omega_half = false; // delta = 1 mod 4: omega = (1+sqrt(delta))/2, else omega = sqrt(delta)/2
    int unit_count = 2;      // |O*|: 4 for delta=-4, 6 for delta=-3, else 2

    Int omega_trace() const { return omega_half ? 1 : 0; }
    Int omega_norm() const { return omega_half ? (1 - delta) / 4 : -delta / 4; }
};

FieldCtx make_field(Int delta);
bool is_fundamental_discriminant(Int delta);

// Element (u + v*sqrt(delta))/2 of O; requires u = v*delta (mod 2).
struct OElem {
    Int u = 0, v = 0;

    OElem() = default;
    OElem(Int u_, Int v_) : u(u_), v(v_) {}

    static OElem zero() { return {0, 0}; }
    static OElem one() { return {2, 0}; }
    static OElem from_int(Int n) { return {2 * n, 0}; }
    static OElem sqrt_delta() { return {0, 2}; }
    static OElem omega(const FieldCtx& f) { return f.omega_half ? OElem{1, 1} : OElem{0, 1}; }
    // x + y*omega
    static OElem from_xy(const FieldCtx& f, Int x, Int y) {
        return f.omega_half ? OElem{2 * x + y, y} : OElem{2 * x, y};
    }

    bool valid(const FieldCtx& f) const { return mod_floor(u - v * f.delta, 2) == 0; }
    bool is_zero() const { return u == 0 && v == 0; }
    // coordinates over (1, omega); both integral for valid elements
    Int x_coord(const FieldCtx& f) const { return f.omega_half ? (u - v) / 2 : u / 2; }
    Int y_coord(const FieldCtx& f) const { return v; }

    OElem operator+(const OElem& o) const { return {u + o.u, v + o.v}; }
    OElem operator-(const OElem& o) const { return {u - o.u, v - o.v}; }
    OElem operator-() const { return {-u, -v}; }
    OElem conj() const { return {u, -v}; }
    Int trace() const { return u; }
    Int norm(const FieldCtx& f) const { return (u * u - f.delta * v * v) / 4; }
    OElem mul(const OElem& o, const FieldCtx& f) const {
        return {(u * o.u + f.delta * v * o.v) / 2, (u * o.v + v * o.u) / 2};
    }
    bool operator==(const OElem& o) const { return u == o.u && v == o.v; }
    bool operator!=(const OElem& o) const { return !(*this == o); }
};

// num/den with num in O and den > 0, gcd-reduced.
struct KElem {
    OElem num;
    Int den = 1;

    KElem() = default;
    KElem(OElem n, Int d) : num(n), den(d) {}
    static KElem zero() { return {OElem::zero(), 1}; }
    static KElem one() { return {OElem::one(), 1}; }
    static KElem from_int(Int n) { return {OElem::from_int(n), 1}; }
    static KElem from_oelem(const OElem& o) { return {o, 1}; }
    // exact value x + y*sqrt(delta) from rational coordinates
    static KElem from_rat_pair(const FieldCtx& f, const Rat& x, const Rat& y);

    bool is_zero() const { return num.is_zero(); }
    KElem reduced(const FieldCtx& f) const;
    KElem operator-() const { return {-num, den}; }
    KElem conj() const { return {num.conj(), den}; }
    KElem add(const KElem& o, const FieldCtx& f) const;
    KElem sub(const KElem& o, const FieldCtx& f) const;
    KElem mul(const KElem& o, const FieldCtx& f) const;
    KElem div(const KElem& o, const FieldCtx& f) const;
    Rat norm(const FieldCtx& f) const { return Rat(Big(num.norm(f)), Big(den) * den); }
    Rat trace() const { return Rat(Big(num.trace()), Big(den)); }
    Rat re() const { return Rat(Big(num.u), 2 * Big(den)); }
    // imaginary part = im_coef() * sqrt(|delta|)
    Rat im_coef() const { return Rat(Big(num.v), 2 * Big(den)); }
    bool equals(const KElem& o, const FieldCtx& f) const;
};

// Fractional ideal (1/den)(a*Z + (b + c*omega)*Z) in Hermite normal form:
// c | a, c | b, a*c | norm(b + c*omega), 0 <= b < a, den > 0, content-reduced.
struct IdealHNF {
    Int a = 1, b = 0, c = 1, den = 1;

    static IdealHNF whole_ring() { return {1, 0, 1, 1}; }
    Rat norm() const { return Rat(Big(a) * c, Big(den) * den); }
    bool is_whole_ring() const { return a == 1 && b == 0 && c == 1 && den == 1; }
    bool operator==(const IdealHNF& o) const {
        return a == o.a && b == o.b && c == o.c && den == o.den;
    }
    bool operator<(const IdealHNF& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        if (c != o.c) return c < o.c;
        return den < o.den;
    }
    // Z-basis as field elements
    KElem basis1(const FieldCtx& f) const;
    KElem basis2(const FieldCtx& f) const;
};

IdealHNF ideal_from_generators(const FieldCtx& f, const std::vector<KElem>& gens);
IdealHNF ideal_from_oelems(const FieldCtx& f, const std::vector<OElem>& gens);
IdealHNF ideal_mul(const FieldCtx& f, const IdealHNF& I, const IdealHNF& J);
IdealHNF ideal_conj(const FieldCtx& f, const IdealHNF& I);
IdealHNF ideal_scale(const FieldCtx& f, const IdealHNF& I, const Rat& s); // multiply by rational s
bool ideal_contains(const FieldCtx& f, const IdealHNF& I, const KElem& x);
IdealHNF principal_ideal(const FieldCtx& f, const KElem& x);

struct PrimeSplit {
    enum Kind { Split, Inert, Ramified } kind;
    IdealHNF p1;                 // prime above p
    std::optional<IdealHNF> p2;  // conjugate prime when split
};
PrimeSplit factor_prime(const FieldCtx& f, Int p);
int kronecker_symbol(Int a, Int n);

std::vector<IdealHNF> ideals_of_norm(const FieldCtx& f, Int n);

// Shortest-vector search by Lagrange-Gauss reduction; returns a generator iff
// I is principal, canonicalized to nonnegative imaginary part then
// nonnegative real part (maximal (u, v) among qualifying associates).
std::optional<KElem> principal_generator(const FieldCtx& f, const IdealHNF& I);

// Units of O as OElems (2, 4, or 6 of them).
std::vector<OElem> unit_group(const FieldCtx& f);

// H(a,b) = +1 iff a*x^2 + b*y^2 = z^2 has a nontrivial rational solution.
int hilbert_symbol(const Rat& a, const Rat& b);
int hilbert_local(Int a, Int b, Int p); // p = 0 means the real place

// For tests: the first place (0 for infinity, else a prime) whose local
// symbol is -1, if any.
std::optional<Int> hilbert_obstruction_place(const Rat& a, const Rat& b);

std::vector<Int> trial_factor(Int n); // prime factors with multiplicity, n > 0
bool is_prime_ll(Int n);

} // namespace schmidt

#endif
