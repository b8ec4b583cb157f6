#ifndef SCHMIDT_CLASSGROUP_HPP
#define SCHMIDT_CLASSGROUP_HPP

#include <vector>

#include "schmidt/qfield.hpp"

namespace schmidt {

// Primitive positive definite form A x^2 + B xy + C y^2 of discriminant delta.
struct QForm {
    Int A = 1, B = 0, C = 0;
    bool operator==(const QForm& o) const { return A == o.A && B == o.B && C == o.C; }
    bool operator<(const QForm& o) const {
        if (A != o.A) return A < o.A;
        if (B != o.B) return B < o.B;
        return C < o.C;
    }
};

QForm reduce_form(QForm f);
bool is_reduced(const QForm& f);
std::vector<QForm> enumerate_reduced_forms(const FieldCtx& f);

// Ideal <-> form correspondence. form_of_ideal maps any nonzero fractional
// ideal to the reduced form of its positively oriented norm form;
// ideal_of_form inverts it on reduced forms.
QForm form_of_ideal(const FieldCtx& f, const IdealHNF& I);
IdealHNF ideal_of_form(const FieldCtx& f, const QForm& q);

using ClassElem = int;

struct ClassGroup {
    FieldCtx ctx;
    std::vector<QForm> elements;          // reduced forms, sorted
    std::vector<std::vector<int>> table;  // composition table
    std::vector<Int> structure;           // invariant factors, largest first
    std::vector<int> generators;          // one generator index per factor
    int identity = 0;

    Int h() const { return (Int)elements.size(); }
    int mul(int i, int j) const { return table[i][j]; }
    int inverse(int i) const;
    int power(int i, Int e) const;
    Int order(int i) const;
    int index_of(const QForm& q) const;
};

ClassGroup class_group(const FieldCtx& f);
ClassElem class_of_ideal(const ClassGroup& G, const IdealHNF& I);
std::vector<ClassElem> subgroup_generated(const ClassGroup& G, const std::vector<ClassElem>& gens);
std::vector<ClassElem> two_torsion(const ClassGroup& G);
// all y with y^2 = x; empty iff x is not a square
std::vector<ClassElem> square_roots(const ClassGroup& G, ClassElem x);
inline bool is_square(const ClassGroup& G, ClassElem x) { return !square_roots(G, x).empty(); }

} // namespace schmidt

#endif
