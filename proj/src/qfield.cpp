#include "schmidt/qfield.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace schmidt {

bool is_prime_ll(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<Int> trial_factor(Int n) {
    std::vector<Int> out;
    if (n <= 0) fail(ErrorKind::Internal, "trial_factor of nonpositive");
    for (Int d = 2; d * d <= n; ++d)
        while (n % d == 0) { out.push_back(d); n /= d; }
    if (n > 1) out.push_back(n);
    return out;
}

static bool squarefree(Int n) {
    if (n <= 0) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

bool is_fundamental_discriminant(Int delta) {
    if (delta >= 0) return false;
    Int m = mod_floor(delta, 4);
    if (m == 1) return squarefree(-delta);
    if (m == 0) {
        Int q = delta / 4;
        Int qm = mod_floor(q, 4);
        return (qm == 2 || qm == 3) && squarefree(-q);
    }
    return false;
}

FieldCtx make_field(Int delta) {
    if (!is_fundamental_discriminant(delta))
        fail(ErrorKind::NotFundamental, std::to_string(delta) + " is not a negative fundamental discriminant");
    FieldCtx f;
    f.delta = delta;
    f.abs_delta = -delta;
    f.omega_half = mod_floor(delta, 4) == 1;
    f.unit_count = delta == -4 ? 4 : (delta == -3 ? 6 : 2);
    return f;
}

// --- KElem -------------------------------------------------------------

KElem KElem::from_rat_pair(const FieldCtx& f, const Rat& x, const Rat& y) {
    // value (u + v*sqrt(delta))/(2L) with u = 2Lx, v = 2Ly
    Big dx = rat_den(x), dy = rat_den(y);
    Big L = boost::multiprecision::lcm(dx, dy);
    Big u = 2 * rat_num(x) * (L / dx);
    Big v = 2 * rat_num(y) * (L / dy);
    KElem k{OElem{static_cast<Int>(u), static_cast<Int>(v)}, static_cast<Int>(L)};
    return k.reduced(f);
}

KElem KElem::reduced(const FieldCtx& f) const {
    KElem k = *this;
    if (k.den < 0) { k.den = -k.den; k.num = -k.num; }
    if (k.num.is_zero()) { k.den = 1; return k; }
    // odd common factors
    Int g = gcd_ll(gcd_ll(k.num.u, k.num.v), k.den);
    while (g % 2 == 0) g /= 2;
    k.num.u /= g; k.num.v /= g; k.den /= g;
    // factor 2: num/2 must stay in O
    while (k.den % 2 == 0 && k.num.u % 2 == 0 && k.num.v % 2 == 0 &&
           mod_floor(k.num.u / 2 - (k.num.v / 2) * f.delta, 2) == 0) {
        k.num.u /= 2; k.num.v /= 2; k.den /= 2;
    }
    return k;
}

KElem KElem::add(const KElem& o, const FieldCtx& f) const {
    Int L = den / gcd_ll(den, o.den) * o.den;
    OElem n{num.u * (L / den) + o.num.u * (L / o.den), num.v * (L / den) + o.num.v * (L / o.den)};
    return KElem{n, L}.reduced(f);
}

KElem KElem::sub(const KElem& o, const FieldCtx& f) const { return add(-o, f); }

KElem KElem::mul(const KElem& o, const FieldCtx& f) const {
    // ((u1+v1 s)/2)((u2+v2 s)/2) = ((u1u2 + v1v2 delta)/2 + (u1v2+v1u2)/2 s)/2
    OElem n{(num.u * o.num.u + f.delta * num.v * o.num.v) / 2, (num.u * o.num.v + num.v * o.num.u) / 2};
    return KElem{n, den * o.den}.reduced(f);
}

KElem KElem::div(const KElem& o, const FieldCtx& f) const {
    if (o.is_zero()) fail(ErrorKind::ZeroArgument, "division by zero in K");
    // x / y = x * conj(y) / norm(y); norm(y) = N(num_y) / den_y^2
    KElem t = mul(KElem{o.num.conj(), 1}, f);
    Int ny = o.num.norm(f);
    // t * den_y / ny
    KElem r{OElem{t.num.u * o.den, t.num.v * o.den}, t.den * ny};
    return r.reduced(f);
}

bool KElem::equals(const KElem& o, const FieldCtx& f) const {
    KElem d = sub(o, f);
    return d.is_zero();
}

// --- ideal HNF ---------------------------------------------------------

namespace {

struct Vec2 { Int x, y; }; // x + y*omega

// HNF of the Z-span of vecs (assumed O-stable of rank 2):
// returns (A, B, C) with span = A*Z + (B + C*omega)*Z, 0 <= B < A.
void hnf2(std::vector<Vec2> vecs, Int& A, Int& B, Int& C) {
    bool nonzero = false;
    for (auto& v : vecs) nonzero |= (v.x != 0 || v.y != 0);
    if (!nonzero) fail(ErrorKind::ZeroIdeal, "all generators are zero");
    Int wx = 0, wy = 0;
    for (auto& v : vecs) {
        if (v.y == 0) continue;
        Int s, t;
        Int g = xgcd_ll(wy, v.y, s, t);
        wx = s * wx + t * v.x;
        wy = g;
    }
    C = wy;
    if (C == 0) fail(ErrorKind::ZeroIdeal, "generators span rank < 2");
    Int Ag = 0;
    for (auto& v : vecs) {
        Int xr = v.x - (v.y / C) * wx;
        Ag = gcd_ll(Ag, xr);
    }
    if (Ag == 0) fail(ErrorKind::ZeroIdeal, "generators span rank < 2");
    A = Ag;
    B = mod_floor(wx, A);
}

IdealHNF finish_ideal(const FieldCtx& f, Int A, Int B, Int C, Int den) {
    IdealHNF I;
    Int g = gcd_ll(gcd_ll(A, B), gcd_ll(C, den));
    I.a = A / g; I.b = B / g; I.c = C / g; I.den = den / g;
    if (I.a % I.c != 0 || I.b % I.c != 0)
        fail(ErrorKind::Internal, "HNF not O-stable");
    Int t = f.omega_trace(), N = f.omega_norm();
    Int nb = I.b * I.b + I.b * I.c * t + I.c * I.c * N; // norm(b + c*omega)
    if (nb % (I.a * I.c) != 0) fail(ErrorKind::Internal, "HNF norm divisibility failed");
    return I;
}

Vec2 mul_omega(const FieldCtx& f, Vec2 v) {
    // omega*(x + y*omega) = -N*y + (x + t*y)*omega
    return {-f.omega_norm() * v.y, v.x + f.omega_trace() * v.y};
}

} // namespace

KElem IdealHNF::basis1(const FieldCtx& f) const {
    return KElem{OElem::from_int(a), den}.reduced(f);
}
KElem IdealHNF::basis2(const FieldCtx& f) const {
    return KElem{OElem::from_xy(f, b, c), den}.reduced(f);
}

IdealHNF ideal_from_generators(const FieldCtx& f, const std::vector<KElem>& gens) {
    if (gens.empty()) fail(ErrorKind::ZeroIdeal, "no generators");
    Int L = 1;
    for (auto& g : gens) L = L / gcd_ll(L, g.den) * g.den;
    std::vector<Vec2> vecs;
    for (auto& g : gens) {
        Int s = L / g.den;
        Vec2 v{g.num.x_coord(f) * s, g.num.y_coord(f) * s};
        vecs.push_back(v);
        vecs.push_back(mul_omega(f, v));
    }
    Int A, B, C;
    hnf2(std::move(vecs), A, B, C);
    return finish_ideal(f, A, B, C, L);
}

IdealHNF ideal_from_oelems(const FieldCtx& f, const std::vector<OElem>& gens) {
    std::vector<KElem> ks;
    for (auto& g : gens) ks.push_back(KElem::from_oelem(g));
    return ideal_from_generators(f, ks);
}

IdealHNF ideal_mul(const FieldCtx& f, const IdealHNF& I, const IdealHNF& J) {
    std::vector<KElem> gens;
    KElem i1 = I.basis1(f), i2 = I.basis2(f), j1 = J.basis1(f), j2 = J.basis2(f);
    gens.push_back(i1.mul(j1, f));
    gens.push_back(i1.mul(j2, f));
    gens.push_back(i2.mul(j1, f));
    gens.push_back(i2.mul(j2, f));
    return ideal_from_generators(f, gens);
}

IdealHNF ideal_conj(const FieldCtx& f, const IdealHNF& I) {
    return ideal_from_generators(f, {I.basis1(f).conj(), I.basis2(f).conj()});
}

IdealHNF ideal_scale(const FieldCtx& f, const IdealHNF& I, const Rat& s) {
    if (s == 0) fail(ErrorKind::ZeroIdeal, "scaling ideal by zero");
    Int sn = static_cast<Int>(rat_num(s)), sd = static_cast<Int>(rat_den(s));
    std::vector<KElem> gens;
    for (auto g : {I.basis1(f), I.basis2(f)}) {
        KElem h{OElem{g.num.u * sn, g.num.v * sn}, g.den * sd};
        gens.push_back(h.reduced(f));
    }
    return ideal_from_generators(f, gens);
}

bool ideal_contains(const FieldCtx& f, const IdealHNF& I, const KElem& x) {
    if (x.is_zero()) return true;
    // den*x must lie in a*Z + (b + c*omega)*Z
    Int X = x.num.x_coord(f), Y = x.num.y_coord(f);
    // coordinates of den*x: (den*X/xden, den*Y/xden)
    Int num_x = I.den * X, num_y = I.den * Y;
    if (num_x % x.den != 0 || num_y % x.den != 0) return false;
    Int cx = num_x / x.den, cy = num_y / x.den;
    if (cy % I.c != 0) return false;
    Int k = cy / I.c;
    return (cx - k * I.b) % I.a == 0;
}

IdealHNF principal_ideal(const FieldCtx& f, const KElem& x) {
    return ideal_from_generators(f, {x});
}

// --- prime splitting ---------------------------------------------------

int kronecker_symbol(Int a, Int n) {
    // standard Kronecker symbol (a|n)
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        Int am = mod_floor(a, 8);
        if (am % 2 == 0) return 0;
        if (am == 3 || am == 5) result = -result;
    }
    a = mod_floor(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int nm = n % 8;
            if (nm == 3 || nm == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a = mod_floor(a, n);
    }
    return n == 1 ? result : 0;
}

PrimeSplit factor_prime(const FieldCtx& f, Int p) {
    if (!is_prime_ll(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    Int t = f.omega_trace(), N = f.omega_norm();
    std::vector<Int> roots;
    for (Int r = 0; r < p; ++r)
        if (mod_floor(r * r - t * r + N, p) == 0) roots.push_back(r);
    PrimeSplit out;
    auto prime_ideal = [&](Int r) {
        // (p, omega - r) = p*Z + (-r + omega)*Z
        IdealHNF I;
        I.a = p; I.b = mod_floor(-r, p); I.c = 1; I.den = 1;
        return I;
    };
    if (roots.size() == 2) {
        out.kind = PrimeSplit::Split;
        out.p1 = prime_ideal(roots[0]);
        out.p2 = prime_ideal(roots[1]);
    } else if (roots.size() == 1) {
        out.kind = PrimeSplit::Ramified;
        out.p1 = prime_ideal(roots[0]);
    } else {
        out.kind = PrimeSplit::Inert;
        IdealHNF I;
        I.a = p; I.b = 0; I.c = p; I.den = 1;
        out.p1 = I;
    }
    return out;
}

std::vector<IdealHNF> ideals_of_norm(const FieldCtx& f, Int n) {
    if (n < 1) fail(ErrorKind::InvalidD, "norm must be positive");
    std::map<Int, int> fac;
    if (n > 1)
        for (Int p : trial_factor(n)) fac[p]++;
    std::vector<IdealHNF> acc{IdealHNF::whole_ring()};
    for (auto& [p, e] : fac) {
        PrimeSplit sp = factor_prime(f, p);
        std::vector<IdealHNF> options;
        if (sp.kind == PrimeSplit::Split) {
            for (int i = 0; i <= e; ++i) {
                IdealHNF I = IdealHNF::whole_ring();
                for (int k = 0; k < i; ++k) I = ideal_mul(f, I, sp.p1);
                for (int k = i; k < e; ++k) I = ideal_mul(f, I, *sp.p2);
                options.push_back(I);
            }
        } else if (sp.kind == PrimeSplit::Ramified) {
            IdealHNF I = IdealHNF::whole_ring();
            for (int k = 0; k < e; ++k) I = ideal_mul(f, I, sp.p1);
            options.push_back(I);
        } else {
            if (e % 2 != 0) { options.clear(); }
            else {
                IdealHNF I = IdealHNF::whole_ring();
                for (int k = 0; k < e / 2; ++k) I = ideal_mul(f, I, sp.p1);
                options.push_back(I);
            }
        }
        std::vector<IdealHNF> next;
        for (auto& A : acc)
            for (auto& B : options) next.push_back(ideal_mul(f, A, B));
        acc = std::move(next);
        if (acc.empty()) return {};
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
}

// --- principal generators ----------------------------------------------

std::vector<OElem> unit_group(const FieldCtx& f) {
    std::vector<OElem> units{OElem::one(), -OElem::one()};
    if (f.delta == -4) {
        OElem i{0, 1}; // sqrt(-4)/2
        units.push_back(i);
        units.push_back(-i);
    } else if (f.delta == -3) {
        OElem w = OElem::omega(f); // primitive 6th root
        OElem w2 = w.mul(w, f);
        units.push_back(w);
        units.push_back(-w);
        units.push_back(w2);
        units.push_back(-w2);
    }
    return units;
}

static Int round_div(Int num, Int den) {
    // nearest integer to num/den, den > 0, ties toward +infinity
    if (den < 0) { num = -num; den = -den; }
    Int q = (num >= 0) ? (2 * num + den) / (2 * den) : -((-2 * num + den - 1) / (2 * den));
    return q;
}

std::optional<KElem> principal_generator(const FieldCtx& f, const IdealHNF& I) {
    OElem e1 = OElem::from_int(I.a);
    OElem e2 = OElem::from_xy(f, I.b, I.c);
    // Lagrange-Gauss reduction under the norm form
    for (int iter = 0; iter < 256; ++iter) {
        if (e1.norm(f) > e2.norm(f)) std::swap(e1, e2);
        Int tr = e2.mul(e1.conj(), f).trace(); // 2*<e1,e2>
        Int q = round_div(tr, 2 * e1.norm(f));
        if (q == 0) break;
        e2 = e2 - OElem{q * e1.u, q * e1.v};
    }
    OElem shortest = e1.norm(f) <= e2.norm(f) ? e1 : e2;
    if (shortest.norm(f) != I.a * I.c) return std::nullopt;
    // canonical associate: nonneg imaginary part, then nonneg real part
    OElem best = shortest;
    bool found = false;
    for (auto& u : unit_group(f)) {
        OElem cand = shortest.mul(u, f);
        if (cand.v > 0 || (cand.v == 0 && cand.u >= 0)) {
            if (!found || cand.u > best.u || (cand.u == best.u && cand.v > best.v)) {
                best = cand;
                found = true;
            }
        }
    }
    return KElem{best, I.den}.reduced(f);
}

// --- Hilbert symbol ------------------------------------------------------

namespace {

Int powmod(Int base, Int exp, Int mod) {
    __int128 r = 1, b = mod_floor(base, mod);
    while (exp > 0) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<Int>(r);
}

int legendre(Int a, Int p) {
    a = mod_floor(a, p);
    if (a == 0) return 0;
    Int r = powmod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

void split_val(Int n, Int p, Int& val, Int& unit) {
    val = 0;
    unit = n;
    while (unit % p == 0) { unit /= p; ++val; }
}

} // namespace

int hilbert_local(Int a, Int b, Int p) {
    if (a == 0 || b == 0) fail(ErrorKind::ZeroArgument, "hilbert symbol of zero");
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    if (p == 2) {
        Int al, u, be, w;
        split_val(a, 2, al, u);
        split_val(b, 2, be, w);
        auto eps = [](Int x) { return mod_floor((x - 1) / 2, 2); };
        auto om = [](Int x) { return mod_floor((x * x - 1) / 8, 2); };
        Int e = eps(u) * eps(w) + al * om(w) + be * om(u);
        return e % 2 == 0 ? 1 : -1;
    }
    Int al, u, be, w;
    split_val(a, p, al, u);
    split_val(b, p, be, w);
    Int s = ((p - 1) / 2) % 2;
    int sym = 1;
    if ((al * be * s) % 2 != 0) sym = -sym;
    if (be % 2 != 0 && legendre(u, p) == -1) sym = -sym;
    if (al % 2 != 0 && legendre(w, p) == -1) sym = -sym;
    return sym;
}

static void hilbert_places(Int A, Int B, std::vector<Int>& places) {
    places.push_back(0);
    places.push_back(2);
    for (Int n : {A < 0 ? -A : A, B < 0 ? -B : B})
        if (n > 1)
            for (Int p : trial_factor(n))
                if (p != 2) places.push_back(p);
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());
}

static void hilbert_ints(const Rat& a, const Rat& b, Int& A, Int& B) {
    if (a == 0 || b == 0) fail(ErrorKind::ZeroArgument, "hilbert symbol of zero");
    A = static_cast<Int>(rat_num(a) * rat_den(a)); // a times the square den^2
    B = static_cast<Int>(rat_num(b) * rat_den(b));
}

int hilbert_symbol(const Rat& a, const Rat& b) {
    Int A, B;
    hilbert_ints(a, b, A, B);
    std::vector<Int> places;
    hilbert_places(A, B, places);
    for (Int p : places)
        if (hilbert_local(A, B, p) == -1) return -1;
    return 1;
}

std::optional<Int> hilbert_obstruction_place(const Rat& a, const Rat& b) {
    Int A, B;
    hilbert_ints(a, b, A, B);
    std::vector<Int> places;
    hilbert_places(A, B, places);
    for (Int p : places)
        if (hilbert_local(A, B, p) == -1) return p;
    return std::nullopt;
}

} // namespace schmidt
