#include "schmidt/circle.hpp"

#include <cmath>

namespace schmidt {

CircleVec circle_make(const FieldCtx& f, const OElem& a, Int b, Int c) {
    if (!a.valid(f)) fail(ErrorKind::NotUnitNorm, "parity violation in curvature-center");
    Int D = a.norm(f) + f.delta * b * c;
    if (D <= 0) fail(ErrorKind::NotUnitNorm, "norm(a) + delta*b*c = " + std::to_string(D) + " <= 0");
    return CircleVec{a, b, c, D};
}

CircleVec circle_make(const FieldCtx& f, const OElem& a, Int b, Int c, Int D) {
    CircleVec C = circle_make(f, a, b, c);
    if (C.D != D) fail(ErrorKind::NotUnitNorm, "vector has D = " + std::to_string(C.D) +
                                                   ", expected " + std::to_string(D));
    return C;
}

Int pairing(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp) {
    if (C.D != Cp.D) fail(ErrorKind::MixedArrangement, "pairing across different D");
    return (C.a.u * Cp.a.u + f.abs_delta * C.a.v * Cp.a.v) / 2 -
           f.abs_delta * (C.b * Cp.c + C.c * Cp.b);
}

const char* classify_name(Classify k) {
    switch (k) {
        case Classify::Equal: return "equal";
        case Classify::Crossing: return "crossing";
        case Classify::TangentExterior: return "tangent-exterior";
        case Classify::TangentInterior: return "tangent-interior";
        case Classify::Nested: return "nested";
        case Classify::DisjointExterior: return "disjoint-exterior";
    }
    return "?";
}

namespace {

enum class Kind { Disk, CoDisk, HalfPlane };
Kind kind_of(const CircleVec& C) {
    return C.c > 0 ? Kind::Disk : (C.c < 0 ? Kind::CoDisk : Kind::HalfPlane);
}

// Squared distance between circle centers (both c != 0); exact rational.
Rat center_dist_sq(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp) {
    Rat dx = C.center_x() - Cp.center_x();
    Rat dy = C.center_y_coef() - Cp.center_y_coef();
    return dx * dx + dy * dy / f.abs_delta;
}

// (rho +- rho')^2 as exact rationals.
Rat radii_sum_sq(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp) {
    Rat r2 = C.radius_sq(f), s2 = Cp.radius_sq(f);
    Rat cross = Rat(2 * Big(C.D), Big(std::abs(C.c)) * std::abs(Cp.c) * f.abs_delta);
    return r2 + s2 + cross;
}
Rat radii_diff_sq(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp) {
    Rat r2 = C.radius_sq(f), s2 = Cp.radius_sq(f);
    Rat cross = Rat(2 * Big(C.D), Big(std::abs(C.c)) * std::abs(Cp.c) * f.abs_delta);
    return r2 + s2 - cross;
}

bool radius_leq(const CircleVec& C, const CircleVec& Cp) {
    // rho_C <= rho_Cp  iff  |c_Cp| <= |c_C|
    return std::abs(Cp.c) <= std::abs(C.c);
}

// Interior-side linear functional of line L evaluated at the center of
// circle C (c != 0), scaled so that:  sign > 0 means the center lies on the
// interior side of L, and |G| * |c| >= 2D means distance >= radius.
Rat line_center_functional(const FieldCtx& f, const CircleVec& L, const CircleVec& C) {
    Rat g = rat_frac(Big(L.a.u) * C.a.u + Big(f.abs_delta) * L.a.v * C.a.v, 2 * Big(C.c)) -
            Rat(Big(L.b) * f.abs_delta);
    return g;
}

bool lines_parallel_same(const CircleVec& L, const CircleVec& Lp) { return L.a == Lp.a; }
bool lines_parallel_opposite(const CircleVec& L, const CircleVec& Lp) { return L.a == (-Lp.a); }

} // namespace

bool interiors_disjoint(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp) {
    if (C == Cp) return false;
    if (C == Cp.reversed()) return true; // same curve, complementary interiors
    Kind k1 = kind_of(C), k2 = kind_of(Cp);
    Rat twoD = Rat(2 * Big(C.D));
    if (k1 == Kind::Disk && k2 == Kind::Disk)
        return center_dist_sq(f, C, Cp) >= radii_sum_sq(f, C, Cp);
    if (k1 == Kind::Disk && k2 == Kind::CoDisk)
        return radius_leq(Cp, C) && center_dist_sq(f, C, Cp) <= radii_diff_sq(f, C, Cp);
    if (k1 == Kind::CoDisk && k2 == Kind::Disk)
        return radius_leq(C, Cp) && center_dist_sq(f, C, Cp) <= radii_diff_sq(f, C, Cp);
    if (k1 == Kind::CoDisk || k2 == Kind::CoDisk) {
        if (k1 == Kind::CoDisk && k2 == Kind::CoDisk) return false;
        return false; // codisk vs halfplane: both unbounded, always overlap
    }
    if (k1 == Kind::HalfPlane && k2 == Kind::HalfPlane)
        return lines_parallel_opposite(C, Cp) && C.b + Cp.b >= 0;
    // one halfplane, one disk
    const CircleVec& L = (k1 == Kind::HalfPlane) ? C : Cp;
    const CircleVec& G = (k1 == Kind::HalfPlane) ? Cp : C;
    Rat g = line_center_functional(f, L, G);
    return g * std::abs(G.c) <= -twoD;
}

bool interior_contains_interior(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp) {
    if (C == Cp) return true;
    if (C == Cp.reversed()) return false;
    Kind k1 = kind_of(C), k2 = kind_of(Cp);
    Rat twoD = Rat(2 * Big(C.D));
    switch (k1) {
        case Kind::Disk:
            if (k2 != Kind::Disk) return false;
            return radius_leq(Cp, C) && center_dist_sq(f, C, Cp) <= radii_diff_sq(f, C, Cp);
        case Kind::CoDisk:
            if (k2 == Kind::Disk)
                return center_dist_sq(f, C, Cp) >= radii_sum_sq(f, C, Cp);
            if (k2 == Kind::CoDisk)
                return radius_leq(C, Cp) && center_dist_sq(f, C, Cp) <= radii_diff_sq(f, C, Cp);
            return line_center_functional(f, Cp, C) * std::abs(C.c) <= -twoD;
        case Kind::HalfPlane:
            if (k2 == Kind::Disk)
                return line_center_functional(f, C, Cp) * std::abs(Cp.c) >= twoD;
            if (k2 == Kind::HalfPlane)
                return lines_parallel_same(C, Cp) && Cp.b >= C.b;
            return false;
    }
    return false;
}

bool closed_interior_contains_curve(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp) {
    if (C == Cp || C == Cp.reversed()) return true; // curve is the boundary
    Kind k1 = kind_of(C), k2 = kind_of(Cp);
    Rat twoD = Rat(2 * Big(C.D));
    switch (k1) {
        case Kind::Disk:
            if (k2 == Kind::HalfPlane) return false;
            return radius_leq(Cp, C) && center_dist_sq(f, C, Cp) <= radii_diff_sq(f, C, Cp);
        case Kind::CoDisk:
            if (k2 == Kind::HalfPlane) {
                Rat g = line_center_functional(f, Cp, C);
                return g * std::abs(C.c) >= twoD || g * std::abs(C.c) <= -twoD;
            }
            if (center_dist_sq(f, C, Cp) >= radii_sum_sq(f, C, Cp)) return true;
            return radius_leq(C, Cp) && center_dist_sq(f, C, Cp) <= radii_diff_sq(f, C, Cp);
        case Kind::HalfPlane:
            if (k2 == Kind::HalfPlane) {
                if (lines_parallel_same(C, Cp)) return Cp.b >= C.b;
                if (lines_parallel_opposite(C, Cp)) return C.b + Cp.b <= 0;
                return false;
            }
            return line_center_functional(f, C, Cp) * std::abs(Cp.c) >= twoD;
    }
    return false;
}

Classify intersect_classify(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp) {
    if (C == Cp) return Classify::Equal;
    Int n = pairing(f, C, Cp);
    Int twoD = 2 * C.D;
    if (n > -twoD && n < twoD) return Classify::Crossing;
    if (n == twoD || n == -twoD) {
        // |n| = 2D: tangency (or the orientation-reversed twin, whose
        // interiors are exactly complementary and disjoint)
        return interiors_disjoint(f, C, Cp) ? Classify::TangentExterior
                                            : Classify::TangentInterior;
    }
    // |n| > 2D: non-intersecting curves.
    if (interiors_disjoint(f, C, Cp)) return Classify::DisjointExterior;
    if (interior_contains_interior(f, C, Cp) || interior_contains_interior(f, Cp, C))
        return Classify::Nested;
    // Exotic orientation pairs (e.g. two outward-oriented circles): fall back
    // to curve geometry: nested iff one curve lies inside the other's disk.
    if (!C.is_line() && !Cp.is_line() &&
        center_dist_sq(f, C, Cp) < radii_diff_sq(f, C, Cp))
        return Classify::Nested;
    return Classify::DisjointExterior;
}

// --- Moebius machinery ----------------------------------------------------

Matrix2 Matrix2::identity() {
    return Matrix2{KElem::one(), KElem::zero(), KElem::zero(), KElem::one()};
}
Matrix2 Matrix2::translation_one() {
    return Matrix2{KElem::one(), KElem::one(), KElem::zero(), KElem::one()};
}
Matrix2 Matrix2::translation_omega(const FieldCtx& f) {
    return Matrix2{KElem::one(), KElem::from_oelem(OElem::omega(f)), KElem::zero(), KElem::one()};
}
Matrix2 Matrix2::inversion() {
    return Matrix2{KElem::zero(), -KElem::one(), KElem::one(), KElem::zero()};
}

Matrix2 Matrix2::mul(const Matrix2& o, const FieldCtx& f) const {
    // [alpha gamma; beta delta] * [alpha' gamma'; beta' delta']
    return Matrix2{
        alpha.mul(o.alpha, f).add(gamma.mul(o.beta, f), f),
        alpha.mul(o.gamma, f).add(gamma.mul(o.delta, f), f),
        beta.mul(o.alpha, f).add(delta.mul(o.beta, f), f),
        beta.mul(o.gamma, f).add(delta.mul(o.delta, f), f),
    };
}

KElem Matrix2::det(const FieldCtx& f) const {
    return alpha.mul(delta, f).sub(gamma.mul(beta, f), f);
}

Matrix2 Matrix2::inverse_unimodular(const FieldCtx& f) const {
    KElem d = det(f);
    Matrix2 adj{delta, -gamma, -beta, alpha};
    if (d.equals(KElem::one(), f)) return adj;
    if (d.equals(-KElem::one(), f))
        return Matrix2{-adj.alpha, -adj.gamma, -adj.beta, -adj.delta};
    fail(ErrorKind::NotLatticePreserving, "inverse requires det = +-1");
}

namespace {

KElem sqrt_delta_k() { return KElem{OElem::sqrt_delta(), 1}; }

KElem scale_rat(const FieldCtx& f, const KElem& x, const Rat& s) {
    Int sn = static_cast<Int>(rat_num(s)), sd = static_cast<Int>(rat_den(s));
    return KElem{OElem{x.num.u * sn, x.num.v * sn}, x.den * sd}.reduced(f);
}

std::optional<OElem> as_oelem(const KElem& x) {
    if (x.den != 1) return std::nullopt;
    return x.num;
}

// x must equal r*sqrt(delta) with r a rational integer; returns r.
std::optional<Int> as_int_sqrt_delta(const FieldCtx& f, const KElem& x) {
    if (x.num.u != 0) return std::nullopt;
    if (x.den != 1 && x.den != 2) {
        KElem r = x.reduced(f);
        if (r.den != 1 && r.den != 2) return std::nullopt;
        return as_int_sqrt_delta(f, r);
    }
    // value = v*sqrt(delta)/(2*den): integer multiple iff 2*den | v
    if (x.num.v % (2 * x.den) != 0) return std::nullopt;
    return x.num.v / (2 * x.den);
}

} // namespace

CircleVec mobius_apply(const FieldCtx& f, const Matrix2& M, const CircleVec& C) {
    KElem det = M.det(f);
    Rat ndet = det.norm(f);
    if (ndet == 0) fail(ErrorKind::NotLatticePreserving, "singular matrix");
    Rat s;
    if (!is_square_rat(ndet, &s))
        fail(ErrorKind::NotLatticePreserving, "|det M| irrational: spin image cannot be scaled into the lattice");

    KElem w1 = KElem::from_oelem(C.a);
    KElem w2 = -w1.conj();
    KElem w3 = scale_rat(f, sqrt_delta_k(), Rat(C.b));
    KElem w4 = scale_rat(f, sqrt_delta_k(), Rat(C.c));

    const KElem &al = M.alpha, &ga = M.gamma, &be = M.beta, &de = M.delta;
    auto dot = [&](const KElem& c1, const KElem& c2, const KElem& c3, const KElem& c4) {
        return w1.mul(c1, f).add(w2.mul(c2, f), f).add(w3.mul(c3, f), f).add(w4.mul(c4, f), f);
    };
    KElem o1 = dot(al.mul(de.conj(), f), be.conj().mul(ga, f), al.mul(be.conj(), f), ga.mul(de.conj(), f));
    KElem o2 = dot(be.mul(ga.conj(), f), al.conj().mul(de, f), al.conj().mul(be, f), ga.conj().mul(de, f));
    KElem o3 = dot(al.mul(ga.conj(), f), al.conj().mul(ga, f), al.mul(al.conj(), f), ga.mul(ga.conj(), f));
    KElem o4 = dot(be.mul(de.conj(), f), be.conj().mul(de, f), be.mul(be.conj(), f), de.mul(de.conj(), f));

    Rat inv = Rat(1) / s;
    o1 = scale_rat(f, o1, inv);
    o2 = scale_rat(f, o2, inv);
    o3 = scale_rat(f, o3, inv);
    o4 = scale_rat(f, o4, inv);

    auto ap = as_oelem(o1);
    auto bp = as_int_sqrt_delta(f, o3);
    auto cp = as_int_sqrt_delta(f, o4);
    if (!ap || !bp || !cp || !o2.equals(-o1.conj(), f))
        fail(ErrorKind::NotLatticePreserving, "spin image leaves the lattice");
    CircleVec out = circle_make(f, *ap, *bp, *cp);
    if (out.D != C.D) fail(ErrorKind::NotLatticePreserving, "spin image changed D");
    return out;
}

// --- reflections ------------------------------------------------------------

RatCircleVec to_rat_vec(const CircleVec& C) {
    return RatCircleVec{Rat(C.a.u), Rat(C.a.v), Rat(C.b), Rat(C.c), C.D};
}

Rat pairing_rat(const FieldCtx& f, const RatCircleVec& C, const RatCircleVec& Cp) {
    if (C.D != Cp.D) fail(ErrorKind::MixedArrangement, "pairing across different D");
    return (C.au * Cp.au + f.abs_delta * C.av * Cp.av) / 2 -
           Rat(f.abs_delta) * (C.b * Cp.c + C.c * Cp.b);
}

bool RatCircleVec::integral(const FieldCtx& f) const {
    for (const Rat* r : {&au, &av, &b, &c})
        if (rat_den(*r) != 1) return false;
    Big parity = rat_num(au) - rat_num(av) * f.delta;
    return parity % 2 == 0;
}

CircleVec RatCircleVec::to_circle(const FieldCtx& f) const {
    if (!integral(f)) fail(ErrorKind::NotUnitNorm, "vector does not lie in the lattice");
    OElem a{static_cast<Int>(rat_num(au)), static_cast<Int>(rat_num(av))};
    return circle_make(f, a, static_cast<Int>(rat_num(b)), static_cast<Int>(rat_num(c)), D);
}

RatCircleVec reflect_rat(const FieldCtx& f, const CircleVec& mirror, const RatCircleVec& C) {
    if (mirror.D != C.D) fail(ErrorKind::MixedArrangement, "reflection across different D");
    Rat t = pairing_rat(f, to_rat_vec(mirror), C) / mirror.D;
    return RatCircleVec{C.au - t * mirror.a.u, C.av - t * mirror.a.v,
                        C.b - t * mirror.b, C.c - t * mirror.c, C.D};
}

RatCircleVec reflect(const FieldCtx& f, const CircleVec& mirror, const CircleVec& C) {
    return reflect_rat(f, mirror, to_rat_vec(C));
}

// --- matrix -> circle -------------------------------------------------------

CircleVec circle_from_matrix(const FieldCtx& f, const Matrix2& M) {
    KElem det = M.det(f);
    if (det.is_zero()) fail(ErrorKind::NotSdMatrix, "singular matrix");
    IdealHNF idm = ideal_from_generators(f, {M.alpha, M.beta, M.gamma, M.delta});
    Rat nm = idm.norm();
    Rat Dr = det.norm(f) / (nm * nm);
    if (rat_den(Dr) != 1 || Dr <= 0)
        fail(ErrorKind::NotSdMatrix, "|det M|^2/||(M)||^2 = " + rat_string(Dr) + " is not a positive integer");
    Int D = static_cast<Int>(rat_num(Dr));

    const KElem &al = M.alpha, &ga = M.gamma, &be = M.beta, &de = M.delta;
    Rat inv = Rat(1) / nm;
    KElem x1 = scale_rat(f, be.conj().mul(ga, f).sub(al.mul(de.conj(), f), f), inv);
    KElem x3 = scale_rat(f, al.conj().mul(ga, f).sub(al.mul(ga.conj(), f), f), inv);
    KElem x4 = scale_rat(f, be.conj().mul(de, f).sub(be.mul(de.conj(), f), f), inv);

    auto a = as_oelem(x1);
    auto b = as_int_sqrt_delta(f, x3);
    auto c = as_int_sqrt_delta(f, x4);
    if (!a || !b || !c) fail(ErrorKind::NotSdMatrix, "scaled vector leaves the lattice");
    return circle_make(f, *a, *b, *c, D);
}

// --- intersections ----------------------------------------------------------

Rat circle_eval_coef(const FieldCtx& f, const CircleVec& C, const KElem& z) {
    // E(z)/sqrt(delta) = c*N(z) - (v_a u_z - u_a v_z)/(2 d_z) + b
    Rat nz = z.norm(f);
    Rat cross = Rat(Big(C.a.v) * z.num.u - Big(C.a.u) * z.num.v, 2 * Big(z.den));
    return Rat(C.c) * nz - cross + Rat(C.b);
}

bool point_on_circle(const FieldCtx& f, const CircleVec& C, const PointK& p) {
    if (p.infinite) return C.is_line();
    return circle_eval_coef(f, C, p.value) == 0;
}

namespace {

KElem mul_sqrt_delta(const FieldCtx& f, const KElem& x) {
    // (u + v*sqrt)/2 * sqrt = (v*delta + u*sqrt)/2
    return KElem{OElem{x.num.v * f.delta, x.num.u}, x.den}.reduced(f);
}

std::complex<double> center_d(const FieldCtx& f, const CircleVec& C) {
    return {C.center_x_d(), C.center_y_d(f)};
}

} // namespace

IntersectionResult intersection_points(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp) {
    if (C == Cp || C == Cp.reversed())
        fail(ErrorKind::CoincidentCircles, "intersection of coincident circles");
    Int n = pairing(f, C, Cp);
    Int twoD = 2 * C.D;
    if (n > twoD || n < -twoD) fail(ErrorKind::NotIntersecting, "|n| > 2D");

    IntersectionResult out;
    if (C.is_line() && Cp.is_line()) {
        out.exact = true;
        if (n == twoD || n == -twoD) {
            out.tangent = true;
            out.p1 = out.p2 = PointK::infinity(); // parallel lines meet at infinity
            return out;
        }
        // crossing lines: one point at infinity, one finite from the 2x2 system
        Int det = C.a.u * Cp.a.v - Cp.a.u * C.a.v;
        Rat x = rat_frac(Big(C.a.u) * Cp.b - Big(Cp.a.u) * C.b, Big(det));
        Rat q = rat_frac(Big(C.a.v) * Cp.b - Big(Cp.a.v) * C.b, Big(det));
        out.p1 = PointK::finite(KElem::from_rat_pair(f, x, q));
        out.p2 = PointK::infinity();
        return out;
    }

    if (n == twoD || n == -twoD) {
        out.exact = true;
        out.tangent = true;
        Int e = n / twoD; // +-1
        OElem num = C.a - (e > 0 ? Cp.a : -Cp.a);
        Int dc = C.c - e * Cp.c;
        if (dc == 0) {
            out.p1 = out.p2 = PointK::infinity();
        } else {
            // z = num / (dc * sqrt(delta)) = num*sqrt(delta) / (dc*delta)
            KElem z = KElem{OElem{num.v * f.delta, num.u}, dc * f.delta}.reduced(f);
            out.p1 = out.p2 = PointK::finite(z);
        }
        return out;
    }

    Big W = Big(f.abs_delta) * (Big(twoD) * twoD - Big(n) * n);
    Big w;
    if (is_perfect_square(W, &w)) {
        out.exact = true;
        // e^{i theta} = n/(2D) + (w/|delta|) sqrt(delta) / (2D), |e| = 1
        Rat re = Rat(Big(n), Big(twoD));
        Rat im = Rat(w, Big(twoD) * f.abs_delta);
        KElem e = KElem::from_rat_pair(f, re, im);
        KElem ebar = e.conj();
        auto point_for = [&](const KElem& ee) {
            KElem na = KElem::from_oelem(C.a).sub(KElem::from_oelem(Cp.a).mul(ee, f), f);
            KElem dd = KElem::from_int(C.c).sub(KElem::from_int(Cp.c).mul(ee, f), f);
            dd = mul_sqrt_delta(f, dd);
            if (dd.is_zero()) return PointK::infinity();
            return PointK::finite(na.div(dd, f));
        };
        out.p1 = point_for(e);
        out.p2 = point_for(ebar);
        return out;
    }

    // numeric branch: intersection points are not in K-hat
    out.exact = false;
    double rr = C.radius_d(f), ss = Cp.radius_d(f);
    if (!C.is_line() && !Cp.is_line()) {
        std::complex<double> z0 = center_d(f, C), z1 = center_d(f, Cp);
        std::complex<double> dz = z1 - z0;
        double d = std::abs(dz);
        double al = (d * d + rr * rr - ss * ss) / (2 * d);
        double h2 = rr * rr - al * al;
        double h = h2 > 0 ? std::sqrt(h2) : 0.0;
        std::complex<double> base = z0 + al * dz / d;
        std::complex<double> perp = std::complex<double>(0, 1) * dz / d;
        out.q1 = base + h * perp;
        out.q2 = base - h * perp;
        return out;
    }
    // one line, one circle
    const CircleVec& L = C.is_line() ? C : Cp;
    const CircleVec& G = C.is_line() ? Cp : C;
    double gr = G.radius_d(f);
    std::complex<double> zc = center_d(f, G);
    double sd = std::sqrt((double)f.abs_delta);
    // line: v*sqrt|d|*x - u*y = b*sqrt|d|, unit normal N = (v sd, -u)/(2 sqrt(D))
    double nx = L.a.v * sd, ny = -(double)L.a.u;
    double nn = std::hypot(nx, ny);
    nx /= nn; ny /= nn;
    double rhs = L.b * sd / nn;
    double distc = nx * zc.real() + ny * zc.imag() - rhs;
    std::complex<double> foot = zc - distc * std::complex<double>(nx, ny);
    double h2 = gr * gr - distc * distc;
    double h = h2 > 0 ? std::sqrt(h2) : 0.0;
    std::complex<double> tang(-ny, nx);
    out.q1 = foot + h * tang;
    out.q2 = foot - h * tang;
    return out;
}

} // namespace schmidt
