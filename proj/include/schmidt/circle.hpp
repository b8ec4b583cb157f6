#ifndef SCHMIDT_CIRCLE_HPP
#define SCHMIDT_CIRCLE_HPP

#include <complex>
#include <optional>

#include "schmidt/qfield.hpp"

namespace schmidt {

// Oriented circle of S_D in scaled integer coordinates:
//   i*sqrt(D) * v_C = (a, -conj(a), b*sqrt(delta), c*sqrt(delta))
// with a in O and b, c integers satisfying norm(a) + delta*b*c = D.
// Curvature c*sqrt(|delta|/D), cocurvature b*sqrt(|delta|/D); for c != 0 the
// center is a/(c*sqrt(delta)) and the radius sqrt(D)/(|c|*sqrt(|delta|)).
struct CircleVec {
    OElem a;
    Int b = 0, c = 0;
    Int D = 1;

    bool operator==(const CircleVec& o) const {
        return a == o.a && b == o.b && c == o.c && D == o.D;
    }
    // canonical ordering key: (c, b, u, v) lexicographic
    bool operator<(const CircleVec& o) const {
        if (c != o.c) return c < o.c;
        if (b != o.b) return b < o.b;
        if (a.u != o.a.u) return a.u < o.a.u;
        return a.v < o.a.v;
    }
    CircleVec reversed() const { return CircleVec{-a, -b, -c, D}; }
    bool is_line() const { return c == 0; }

    // center coordinates: x rational, y = y_coef/sqrt(|delta|)
    Rat center_x() const { return rat_frac(Big(a.v), 2 * Big(c)); }
    Rat center_y_coef() const { return rat_frac(Big(-a.u), 2 * Big(c)); }
    Rat radius_sq(const FieldCtx& f) const { return Rat(Big(D), Big(c) * c * f.abs_delta); }
    double center_x_d() const { return rat_to_double(center_x()); }
    double center_y_d(const FieldCtx& f) const {
        return rat_to_double(center_y_coef()) / std::sqrt((double)f.abs_delta);
    }
    double radius_d(const FieldCtx& f) const {
        return std::sqrt((double)D / ((double)c * c * f.abs_delta));
    }
};

// Validates the S_D membership condition and infers D = norm(a) + delta*b*c.
CircleVec circle_make(const FieldCtx& f, const OElem& a, Int b, Int c);
// Same, but D is prescribed and must match.
CircleVec circle_make(const FieldCtx& f, const OElem& a, Int b, Int c, Int D);

// n = 2*D*<v_C, v_C'> = 2*Re(a*conj(a')) - |delta|*(b*c' + c*b')
Int pairing(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp);

enum class Classify {
    Equal,
    Crossing,
    TangentExterior,
    TangentInterior,
    Nested,
    DisjointExterior,
};
const char* classify_name(Classify k);

Classify intersect_classify(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp);

// Exact oriented predicates.
bool interiors_disjoint(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp);
// curve(Cp) contained in the closure of the interior of C
bool closed_interior_contains_curve(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp);
// interior(Cp) contained in interior(C)
bool interior_contains_interior(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp);

// Moebius transformation z -> (alpha z + gamma)/(beta z + delta).
struct Matrix2 {
    KElem alpha, gamma, beta, delta;

    static Matrix2 identity();
    static Matrix2 translation_one();                 // [1 1; 0 1]
    static Matrix2 translation_omega(const FieldCtx&); // [1 w; 0 1]
    static Matrix2 inversion();                       // [0 -1; 1 0]
    Matrix2 mul(const Matrix2& o, const FieldCtx& f) const;
    Matrix2 inverse_unimodular(const FieldCtx& f) const; // adjugate; needs unit det
    KElem det(const FieldCtx& f) const;
};

// Spin action on the scaled vector; throws NotLatticePreserving when the
// image leaves the lattice.
CircleVec mobius_apply(const FieldCtx& f, const Matrix2& M, const CircleVec& C);

// Exact rational circle vector (image of reflections before the lattice test).
struct RatCircleVec {
    Rat au, av, b, c; // a = (au + av*sqrt(delta))/2
    Int D = 1;
    bool integral(const FieldCtx& f) const;
    CircleVec to_circle(const FieldCtx& f) const; // requires integral()
    bool operator==(const RatCircleVec& o) const {
        return au == o.au && av == o.av && b == o.b && c == o.c && D == o.D;
    }
};
RatCircleVec to_rat_vec(const CircleVec& C);
// w' = w_C - (n/D) * w_mirror
RatCircleVec reflect(const FieldCtx& f, const CircleVec& mirror, const CircleVec& C);
RatCircleVec reflect_rat(const FieldCtx& f, const CircleVec& mirror, const RatCircleVec& C);
Rat pairing_rat(const FieldCtx& f, const RatCircleVec& C, const RatCircleVec& Cp);

// Circle of M * extended-real-line; throws NotSdMatrix unless
// |det M|^2 / ||(M)||^2 is a positive integer.
CircleVec circle_from_matrix(const FieldCtx& f, const Matrix2& M);

struct PointK {
    bool infinite = false;
    KElem value; // meaningful when finite
    static PointK infinity() { return PointK{true, KElem::zero()}; }
    static PointK finite(const KElem& v) { return PointK{false, v}; }
    bool equals(const PointK& o, const FieldCtx& f) const {
        if (infinite || o.infinite) return infinite == o.infinite;
        return value.equals(o.value, f);
    }
};

struct IntersectionResult {
    bool exact = false;   // points lie in K-hat
    bool tangent = false; // single point
    PointK p1, p2;        // exact branch
    std::complex<double> q1, q2; // numeric branch
};

IntersectionResult intersection_points(const FieldCtx& f, const CircleVec& C, const CircleVec& Cp);

// Exact membership of a K-point (value of equation (scaled) must vanish).
bool point_on_circle(const FieldCtx& f, const CircleVec& C, const PointK& p);
// The scaled equation value E(z)/sqrt(delta) as a rational; zero iff z on C.
Rat circle_eval_coef(const FieldCtx& f, const CircleVec& C, const KElem& z);

} // namespace schmidt

#endif
