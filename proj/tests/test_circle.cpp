#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "schmidt/circle.hpp"

using namespace schmidt;

namespace {

// Floating-point oracle for the oriented interior predicates: sample the
// plane on a grid and compare membership of the two interiors.
struct GeoOracle {
    double cx, cy, r; // r = 0: line with unit normal (nx, ny) and offset d
    double nx, ny, d;
    bool line;
    int orient; // +1 interior = disk/d-side, -1 = complement

    static GeoOracle of(const FieldCtx& f, const CircleVec& C) {
        GeoOracle g{};
        if (C.is_line()) {
            g.line = true;
            double sd = std::sqrt((double)f.abs_delta);
            double nx = C.a.v * sd, ny = -(double)C.a.u;
            double nn = std::hypot(nx, ny);
            g.nx = nx / nn; g.ny = ny / nn;
            g.d = C.b * sd / nn;
            g.orient = 1;
        } else {
            g.line = false;
            g.cx = C.center_x_d();
            g.cy = C.center_y_d(f);
            g.r = C.radius_d(f);
            g.orient = C.c > 0 ? 1 : -1;
        }
        return g;
    }
    double signed_val(double x, double y) const {
        if (line) return nx * x + ny * y - d;
        double dd = std::hypot(x - cx, y - cy);
        return orient > 0 ? (r - dd) : (dd - r);
    }
    bool interior(double x, double y) const { return signed_val(x, y) > 1e-9; }
};

CircleVec random_circle(const FieldCtx& f, Int D, std::mt19937& rng) {
    std::uniform_int_distribution<Int> dc(-4, 4), dv(-8, 8);
    for (int tries = 0; tries < 2000; ++tries) {
        Int c = dc(rng);
        Int u = dv(rng), v = dv(rng);
        if (mod_floor(u - v * f.delta, 2) != 0) continue;
        OElem a{u, v};
        Int num = a.norm(f) - D;
        if (c == 0) {
            if (num == 0) return CircleVec{a, dv(rng), 0, D};
            continue;
        }
        if (num % (f.abs_delta * c) != 0) continue;
        return CircleVec{a, num / (f.abs_delta * c), c, D};
    }
    // fall back to a seed circle
    return circle_make(f, OElem{-2, 0}, (4 - D) / f.abs_delta, 1, D);
}

} // namespace

TEST_CASE("circle_make: spec examples") {
    FieldCtx f4 = make_field(-4);
    CircleVec c1 = circle_make(f4, OElem{-2, 0}, 0, 1);
    CHECK(c1.D == 1);
    CHECK(c1.center_x() == 0);
    CHECK(c1.center_y_coef() == 1);     // y = 1/sqrt(4) = 1/2
    CHECK(c1.radius_sq(f4) == Rat(1, 4));

    FieldCtx f39 = make_field(-39);
    CircleVec c2 = circle_make(f39, OElem{-4, 0}, 0, 1);
    CHECK(c2.D == 4);

    CHECK_THROWS_AS(circle_make(f4, OElem::zero(), 1, 1), Error);
    CHECK_THROWS_AS(circle_make(f39, OElem{1, 0}, 0, 1), Error); // parity
}

TEST_CASE("pairing: self-pairing, BL examples, symmetry/bilinearity") {
    FieldCtx f4 = make_field(-4);
    // Baragar-Lautzenheiser D=1 vectors
    CircleVec L1 = circle_make(f4, OElem{0, -1}, 0, 0, 1);
    CircleVec L2 = circle_make(f4, OElem{0, 1}, 1, 0, 1);
    CircleVec C3 = circle_make(f4, OElem{0, 1}, 0, 1, 1);
    CHECK(pairing(f4, C3, C3) == 2);
    CHECK(pairing(f4, L1, C3) == -2);
    CHECK(pairing(f4, L1, L2) == -2);

    FieldCtx f8 = make_field(-8);
    CircleVec B3 = circle_make(f8, OElem{0, 1}, 0, 1, 2);
    CircleVec B4 = circle_make(f8, OElem{-8, 1}, 2, 1, 2);
    CHECK(pairing(f8, B3, B4) == -12);
    CHECK(intersect_classify(f8, B3, B4) == Classify::DisjointExterior);

    CircleVec other{OElem{0, 1}, 3, 0, 2};
    CHECK(pairing(f8, B3, other) == pairing(f8, other, B3));
    CHECK_THROWS_AS(pairing(f8, B3, circle_make(f8, OElem{0, 2}, 0, 1)), Error);

    // bilinearity at the raw-vector level
    std::mt19937 rng(23);
    FieldCtx f = make_field(-39);
    for (int i = 0; i < 50; ++i) {
        CircleVec A = random_circle(f, 4, rng);
        CircleVec B = random_circle(f, 4, rng);
        CircleVec C = random_circle(f, 4, rng);
        RatCircleVec sum{Rat(B.a.u) + C.a.u, Rat(B.a.v) + C.a.v, Rat(B.b) + C.b, Rat(B.c) + C.c, 4};
        CHECK(pairing_rat(f, to_rat_vec(A), sum) ==
              Rat(pairing(f, A, B)) + Rat(pairing(f, A, C)));
    }
}

TEST_CASE("intersect_classify: tangencies and spec examples") {
    FieldCtx f4 = make_field(-4);
    CircleVec L1 = circle_make(f4, OElem{0, -1}, 0, 0, 1);
    CircleVec L2 = circle_make(f4, OElem{0, 1}, 1, 0, 1);
    CircleVec C3 = circle_make(f4, OElem{0, 1}, 0, 1, 1);
    CHECK(intersect_classify(f4, L1, L2) == Classify::TangentExterior);
    CHECK(intersect_classify(f4, L1, C3) == Classify::TangentExterior);
    CHECK(intersect_classify(f4, C3, C3) == Classify::Equal);
    CHECK(pairing(f4, C3, C3.reversed()) == -2);
    CHECK(intersect_classify(f4, C3, C3.reversed()) == Classify::TangentExterior);
    CHECK(interiors_disjoint(f4, C3, C3.reversed()));
}

TEST_CASE("interior predicates agree with a floating-point oracle") {
    std::mt19937 rng(41);
    FieldCtx f = make_field(-39);
    int checked = 0;
    for (int rep = 0; rep < 10000 && checked < 4000; ++rep) {
        CircleVec A = random_circle(f, 4, rng);
        CircleVec B = random_circle(f, 4, rng);
        if (A == B || A == B.reversed()) continue;
        Int n = pairing(f, A, B);
        if (std::abs(n) <= 2 * A.D) continue; // oracle only for non-intersecting pairs
        ++checked;
        GeoOracle ga = GeoOracle::of(f, A), gb = GeoOracle::of(f, B);
        // sample clouds around each object plus far points, so tiny disks and
        // neighborhoods of infinity are all represented
        std::vector<std::pair<double, double>> pts;
        auto add_cloud = [&](const GeoOracle& g) {
            if (g.line) {
                for (double off : {-12.0, -3.0, -0.4, 0.4, 3.0, 12.0})
                    for (double t = -30; t <= 30; t += 0.8)
                        pts.push_back({-g.ny * t + g.nx * (g.d + off),
                                       g.nx * t + g.ny * (g.d + off)});
            } else {
                pts.push_back({g.cx, g.cy});
                for (double fac : {0.3, 0.7, 0.95, 1.05, 1.5, 3.0, 8.0})
                    for (int k = 0; k < 48; ++k) {
                        double th = 2 * M_PI * k / 48;
                        pts.push_back({g.cx + fac * g.r * std::cos(th),
                                       g.cy + fac * g.r * std::sin(th)});
                    }
            }
        };
        add_cloud(ga);
        add_cloud(gb);
        for (double s : {-900.0, -37.0, 0.0, 41.0, 900.0})
            for (double t : {-900.0, -43.0, 0.0, 39.0, 900.0}) pts.push_back({s, t});
        bool overlap = false, a_in_b = true, b_in_a = true;
        for (auto& [x, y] : pts) {
            bool ia = ga.interior(x, y), ib = gb.interior(x, y);
            if (ia && ib) overlap = true;
            if (ia && !ib) a_in_b = false;
            if (ib && !ia) b_in_a = false;
        }
        bool disjoint = interiors_disjoint(f, A, B);
        CHECK(disjoint == !overlap);
        CHECK(interior_contains_interior(f, A, B) == b_in_a);
        CHECK(interior_contains_interior(f, B, A) == a_in_b);
        Classify cl = intersect_classify(f, A, B);
        if (disjoint) CHECK(cl == Classify::DisjointExterior);
        if (cl == Classify::Nested) CHECK(overlap);
    }
    CHECK(checked >= 1000);
}

TEST_CASE("mobius_apply: T1, S, identity on explicit vectors") {
    FieldCtx f4 = make_field(-4);
    CircleVec C = circle_make(f4, OElem{-2, 0}, 0, 1, 1);
    CircleVec T1C = mobius_apply(f4, Matrix2::translation_one(), C);
    CHECK(T1C == circle_make(f4, OElem{-2, 2}, 1, 1, 1)); // center 1 + i/2
    CHECK(T1C.center_x() == 1);

    CircleVec SC = mobius_apply(f4, Matrix2::inversion(), C);
    CHECK(SC.a == C.a.conj());
    CHECK(SC.b == C.c);
    CHECK(SC.c == C.b);

    CHECK(mobius_apply(f4, Matrix2::identity(), C) == C);

    // generic translation rule: a' = a + c*sqrt(delta), b' = b + c + v, c' = c
    FieldCtx f39 = make_field(-39);
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
        CircleVec X = random_circle(f39, 4, rng);
        CircleVec TX = mobius_apply(f39, Matrix2::translation_one(), X);
        CHECK(TX.a == X.a + OElem{0, 2 * X.c});
        CHECK(TX.b == X.b + X.c + X.a.v);
        CHECK(TX.c == X.c);
    }
}

TEST_CASE("mobius_apply preserves pairing and composes") {
    FieldCtx f = make_field(-39);
    std::mt19937 rng(67);
    std::vector<Matrix2> gens{Matrix2::translation_one(), Matrix2::translation_omega(f),
                              Matrix2::inversion()};
    std::uniform_int_distribution<int> pick(0, 2);
    for (int rep = 0; rep < 30; ++rep) {
        Matrix2 M = Matrix2::identity();
        for (int k = 0; k < 4; ++k) M = M.mul(gens[pick(rng)], f);
        Matrix2 M2 = gens[pick(rng)];
        CircleVec A = random_circle(f, 4, rng);
        CircleVec B = random_circle(f, 4, rng);
        CHECK(pairing(f, mobius_apply(f, M, A), mobius_apply(f, M, B)) == pairing(f, A, B));
        CHECK(mobius_apply(f, M2, mobius_apply(f, M, A)) == mobius_apply(f, M2.mul(M, f), A));
    }
    // z -> 2z is not in the symmetry group: with odd curvature index the
    // spin image leaves the lattice and the assertion fires
    Matrix2 bad{KElem::from_int(2), KElem::zero(), KElem::zero(), KElem::one()};
    CircleVec A = circle_make(f, OElem{-4, 0}, 0, 1, 4);
    CHECK_THROWS_AS(mobius_apply(f, bad, A), Error);
    // ... while a matrix with irrational |det| is always rejected
    Matrix2 bad2{KElem::from_oelem(OElem::omega(f)), KElem::zero(), KElem::zero(), KElem::one()};
    CHECK_THROWS_AS(mobius_apply(f, bad2, A), Error);
}

TEST_CASE("reflect: involution, self-reflection, integrality") {
    FieldCtx f = make_field(-39);
    std::mt19937 rng(99);
    CircleVec C = random_circle(f, 4, rng);
    RatCircleVec self = reflect(f, C, C);
    CHECK(self == RatCircleVec{Rat(-C.a.u), Rat(-C.a.v), Rat(-C.b), Rat(-C.c), C.D});

    for (int rep = 0; rep < 60; ++rep) {
        CircleVec M = random_circle(f, 4, rng);
        CircleVec X = random_circle(f, 4, rng);
        RatCircleVec once = reflect(f, M, X);
        RatCircleVec twice = reflect_rat(f, M, once);
        CHECK(twice == to_rat_vec(X));
        // Q-norm preserved
        CHECK(pairing_rat(f, once, once) == Rat(2 * X.D));
    }

    // superintegral field: D | delta forces integral reflections
    FieldCtx f8 = make_field(-8);
    for (int rep = 0; rep < 60; ++rep) {
        CircleVec M = random_circle(f8, 2, rng);
        CircleVec X = random_circle(f8, 2, rng);
        CHECK(reflect(f8, M, X).integral(f8));
    }
}

TEST_CASE("circle_from_matrix: identity, stabilizer invariance, rejection") {
    FieldCtx f = make_field(-39);
    CircleVec R = circle_from_matrix(f, Matrix2::identity());
    CHECK(R.a == OElem{-2, 0});
    CHECK(R.b == 0);
    CHECK(R.c == 0);
    CHECK(R.D == 1);

    // M*A with A integral of det 1 fixing the real line gives the same circle
    std::mt19937 rng(3);
    std::uniform_int_distribution<Int> d(-3, 3);
    for (int rep = 0; rep < 25; ++rep) {
        Matrix2 M{KElem::from_oelem(OElem::from_xy(f, d(rng), d(rng))),
                  KElem::from_oelem(OElem::from_xy(f, d(rng), d(rng))),
                  KElem::from_oelem(OElem::from_xy(f, d(rng), d(rng))),
                  KElem::from_oelem(OElem::from_xy(f, d(rng), d(rng)))};
        KElem det = M.det(f);
        if (det.is_zero()) continue;
        IdealHNF idm = ideal_from_generators(f, {M.alpha, M.beta, M.gamma, M.delta});
        Rat Dr = det.norm(f) / (idm.norm() * idm.norm());
        if (rat_den(Dr) != 1) continue;
        CircleVec C = circle_from_matrix(f, M);
        CHECK(C.D == static_cast<Int>(rat_num(Dr)));
        // integer SL2(Z) products fixing R-hat
        Matrix2 A = Matrix2::translation_one().mul(Matrix2::inversion(), f)
                        .mul(Matrix2::translation_one(), f);
        CHECK(circle_from_matrix(f, M.mul(A, f)) == C);
    }

    // Over K the ratio |det M|^2/||(M)||^2 = ||(det M)/(M)^2|| is the norm of
    // an integral ideal (det M lies in (M)^2), so every nonsingular matrix
    // produces a circle; only the singular case rejects.
    Matrix2 m39{KElem::from_oelem(OElem::sqrt_delta()), KElem::zero(), KElem::zero(), KElem::one()};
    CHECK(circle_from_matrix(f, m39).D == 39);
    Matrix2 m10{KElem{OElem{1, 1}, 2}, KElem::zero(), KElem::zero(), KElem::one()};
    CHECK(circle_from_matrix(f, m10).D == 10); // det w/2: norm 5/2 over ||.||^2 = 1/4
    Matrix2 sing{KElem::one(), KElem::one(), KElem::one(), KElem::one()};
    CHECK_THROWS_AS(circle_from_matrix(f, sing), Error);
}

TEST_CASE("intersection_points: exact and numeric branches") {
    FieldCtx f4 = make_field(-4);
    CircleVec L1 = circle_make(f4, OElem{0, -1}, 0, 0, 1);
    CircleVec L2 = circle_make(f4, OElem{0, 1}, 1, 0, 1);
    CircleVec C3 = circle_make(f4, OElem{0, 1}, 0, 1, 1);

    auto t = intersection_points(f4, L1, C3);
    CHECK(t.exact);
    CHECK(t.tangent);
    CHECK_FALSE(t.p1.infinite);
    CHECK(t.p1.value.is_zero());

    auto par = intersection_points(f4, L1, L2);
    CHECK(par.exact);
    CHECK(par.tangent);
    CHECK(par.p1.infinite);

    CHECK_THROWS_AS(intersection_points(f4, C3, C3), Error);

    // crossing lines: vertical x=0 against horizontal real axis
    CircleVec Rpos = circle_make(f4, OElem{-2, 0}, 0, 0, 1); // real line
    auto cr = intersection_points(f4, L1, Rpos);
    CHECK(cr.exact);
    CHECK_FALSE(cr.tangent);
    bool has_origin = (!cr.p1.infinite && cr.p1.value.is_zero()) ||
                      (!cr.p2.infinite && cr.p2.value.is_zero());
    bool has_inf = cr.p1.infinite || cr.p2.infinite;
    CHECK(has_origin);
    CHECK(has_inf);
    CHECK(point_on_circle(f4, L1, PointK::finite(KElem::zero())));

    // exact crossing for delta=-39, D=4 with n = 5: residual must vanish
    FieldCtx f39 = make_field(-39);
    std::mt19937 rng(7);
    int exact_seen = 0, numeric_seen = 0;
    for (int rep = 0; rep < 4000 && (exact_seen < 5 || numeric_seen < 5); ++rep) {
        CircleVec A = random_circle(f39, 4, rng);
        CircleVec B = random_circle(f39, 4, rng);
        if (A == B || A == B.reversed()) continue;
        Int n = pairing(f39, A, B);
        if (std::abs(n) > 2 * A.D) continue;
        auto r = intersection_points(f39, A, B);
        if (r.exact) {
            ++exact_seen;
            for (auto& p : {r.p1, r.p2}) {
                CHECK(point_on_circle(f39, A, p));
                CHECK(point_on_circle(f39, B, p));
            }
        } else {
            ++numeric_seen;
            for (auto& q : {r.q1, r.q2}) {
                // numeric residual of equation (1), scaled
                double sd = std::sqrt(39.0);
                auto eval = [&](const CircleVec& C) {
                    double x = q.real(), y = q.imag();
                    double nz = x * x + y * y;
                    return C.c * sd * nz - (C.a.v * sd * x - C.a.u * y) + C.b * sd;
                };
                CHECK(std::abs(eval(A)) < 1e-9 * (1 + std::abs((double)A.D)));
                CHECK(std::abs(eval(B)) < 1e-9 * (1 + std::abs((double)B.D)));
            }
        }
    }
    CHECK(exact_seen >= 5);
}

TEST_CASE("exact intersections for the 5/8 crossing pair exist in S_4(-39)") {
    FieldCtx f = make_field(-39);
    // search a small lattice box for a crossing pair with n = 5
    std::vector<CircleVec> circles;
    for (Int c = 1; c <= 8; ++c)
        for (Int u = -60; u <= 60; ++u)
            for (Int v = -20; v <= 20; ++v) {
                if (mod_floor(u - v * f.delta, 2) != 0) continue;
                OElem a{u, v};
                Int num = a.norm(f) - 4;
                if (num % (39 * c) != 0) continue;
                circles.push_back(CircleVec{a, num / (39 * c), c, 4});
            }
    bool found = false;
    for (size_t i = 0; i < circles.size() && !found; ++i)
        for (size_t j = i + 1; j < circles.size() && !found; ++j) {
            if (pairing(f, circles[i], circles[j]) != 5) continue;
            found = true;
            auto r = intersection_points(f, circles[i], circles[j]);
            CHECK(r.exact); // 4*16 - 25 = 39 = |delta| * 1^2
            CHECK(point_on_circle(f, circles[i], r.p1));
            CHECK(point_on_circle(f, circles[j], r.p1));
            // reflection of this pair is non-integral: 4 does not divide 2*5
            RatCircleVec w = reflect(f, circles[i], circles[j]);
            CHECK_FALSE(w.integral(f));
        }
    CHECK(found);
}
