#include "schmidt/classgroup.hpp"

#include <algorithm>
#include <map>

namespace schmidt {

bool is_reduced(const QForm& f) {
    Int aB = f.B < 0 ? -f.B : f.B;
    if (!(aB <= f.A && f.A <= f.C)) return false;
    if ((aB == f.A || f.A == f.C) && f.B < 0) return false;
    return true;
}

QForm reduce_form(QForm f) {
    for (int iter = 0; iter < 4096; ++iter) {
        // normalize: -A < B <= A
        if (f.B > f.A || f.B <= -f.A) {
            Int r = f.A - mod_floor(f.A - f.B, 2 * f.A); // r in (-A, A]
            Int s = (f.B - r) / (2 * f.A);
            f.C = f.C - s * f.B + s * s * f.A;
            f.B = r;
        }
        if (f.A > f.C) {
            f = QForm{f.C, -f.B, f.A};
            continue;
        }
        if (f.A == f.C && f.B < 0) f.B = -f.B;
        break;
    }
    if (!is_reduced(f)) fail(ErrorKind::Internal, "form reduction did not converge");
    return f;
}

std::vector<QForm> enumerate_reduced_forms(const FieldCtx& f) {
    std::vector<QForm> out;
    Int D = f.delta;
    for (Int B = 0; 3 * B * B <= -D; ++B) {
        if (mod_floor(B - D, 2) != 0) continue;
        Int M = (B * B - D) / 4;
        for (Int A = std::max<Int>(B, 1); A * A <= M; ++A) {
            if (M % A != 0) continue;
            Int C = M / A;
            for (Int Bs : {B, -B}) {
                QForm q{A, Bs, C};
                if (!is_reduced(q)) continue;
                if (std::gcd(std::gcd(q.A, std::abs(q.B)), q.C) != 1) continue;
                out.push_back(q);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

QForm form_of_ideal(const FieldCtx& f, const IdealHNF& I) {
    // primitive part: a/c * Z + (b/c + omega) * Z (rational scaling does not
    // change the class); positively oriented basis (a/c, -(b/c + omega))
    Int A = I.a / I.c, bt = I.b / I.c;
    Int t = f.omega_trace(), N = f.omega_norm();
    Int Nb = bt * bt + bt * t + N; // norm(bt + omega)
    QForm q{A, -(2 * bt + t), Nb / A};
    return reduce_form(q);
}

IdealHNF ideal_of_form(const FieldCtx& f, const QForm& q) {
    // A*Z + theta*Z with theta = (-B + sqrt(delta))/2
    OElem theta{-q.B, 1};
    return ideal_from_oelems(f, {OElem::from_int(q.A), theta});
}

int ClassGroup::index_of(const QForm& q) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), q);
    if (it == elements.end() || !(*it == q))
        fail(ErrorKind::Internal, "form not in class group");
    return (int)(it - elements.begin());
}

int ClassGroup::inverse(int i) const {
    for (int j = 0; j < (int)elements.size(); ++j)
        if (table[i][j] == identity) return j;
    fail(ErrorKind::Internal, "no inverse");
}

int ClassGroup::power(int i, Int e) const {
    int r = identity;
    Int n = e >= 0 ? e : -e;
    for (Int k = 0; k < n; ++k) r = table[r][i];
    return e >= 0 ? r : inverse(r);
}

Int ClassGroup::order(int i) const {
    int x = i;
    Int n = 1;
    while (x != identity) { x = table[x][i]; ++n; }
    return n;
}

ClassGroup class_group(const FieldCtx& f) {
    ClassGroup G;
    G.ctx = f;
    G.elements = enumerate_reduced_forms(f);
    int h = (int)G.elements.size();
    std::vector<IdealHNF> ideals;
    for (auto& q : G.elements) ideals.push_back(ideal_of_form(f, q));
    G.table.assign(h, std::vector<int>(h));
    for (int i = 0; i < h; ++i)
        for (int j = i; j < h; ++j) {
            QForm p = form_of_ideal(f, ideal_mul(f, ideals[i], ideals[j]));
            int k = G.index_of(p);
            G.table[i][j] = k;
            G.table[j][i] = k;
        }
    G.identity = G.index_of(reduce_form(QForm{1, f.omega_trace(), f.omega_norm()}));
    // group axioms are exercised by the test suite; here only the basics
    for (int i = 0; i < h; ++i)
        if (G.table[G.identity][i] != i) fail(ErrorKind::Internal, "identity failed");

    // invariant factor decomposition by successive maximal-order quotients
    std::vector<ClassElem> sub{G.identity};
    auto in_sub = [&](int x) { return std::binary_search(sub.begin(), sub.end(), x); };
    while ((Int)sub.size() < h) {
        Int best_ord = 0;
        int best = -1;
        for (int x = 0; x < h; ++x) {
            // order of [x] in G / <sub>
            int y = x;
            Int n = 1;
            while (!in_sub(y)) { y = G.table[y][x]; ++n; }
            if (n > best_ord) { best_ord = n; best = x; }
        }
        G.structure.push_back(best_ord);
        G.generators.push_back(best);
        std::vector<ClassElem> next;
        for (int s : sub) {
            int y = s;
            for (Int k = 0; k < best_ord; ++k) {
                next.push_back(y);
                y = G.table[y][best];
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        sub = std::move(next);
    }
    if (G.structure.empty()) { G.structure.push_back(1); G.generators.push_back(G.identity); }
    return G;
}

ClassElem class_of_ideal(const ClassGroup& G, const IdealHNF& I) {
    return G.index_of(form_of_ideal(G.ctx, I));
}

std::vector<ClassElem> subgroup_generated(const ClassGroup& G, const std::vector<ClassElem>& gens) {
    std::vector<ClassElem> sub{G.identity};
    for (;;) {
        std::vector<ClassElem> next = sub;
        for (int s : sub)
            for (int g : gens) next.push_back(G.table[s][g]);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.size() == sub.size()) break;
        sub = std::move(next);
    }
    return sub;
}

std::vector<ClassElem> two_torsion(const ClassGroup& G) {
    std::vector<ClassElem> out;
    for (int x = 0; x < (int)G.elements.size(); ++x)
        if (G.table[x][x] == G.identity) out.push_back(x);
    return out;
}

std::vector<ClassElem> square_roots(const ClassGroup& G, ClassElem x) {
    std::vector<ClassElem> out;
    for (int y = 0; y < (int)G.elements.size(); ++y)
        if (G.table[y][y] == x) out.push_back(y);
    return out;
}

} // namespace schmidt
