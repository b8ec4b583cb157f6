#ifndef SCHMIDT_NUMERIC_HPP
#define SCHMIDT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "schmidt/error.hpp"

namespace schmidt {

using Int = long long;
using Big = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Big rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Big rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// boost::rational<cpp_int> rejects negative denominators; normalize first.
inline Rat rat_frac(Big num, Big den) {
    if (den == 0) fail(ErrorKind::Internal, "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rat(num, den);
}
inline Rat make_rat(Int num, Int den) { return rat_frac(Big(num), Big(den)); }

inline int sign_of(const Rat& r) { return r.sign(); }
inline int sign_of(const Big& b) { return b.sign(); }
inline int sign_of(Int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline Int gcd_ll(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Extended gcd: returns g = gcd(a,b) >= 0 with g = x*a + y*b.
inline Int xgcd_ll(Int a, Int b, Int& x, Int& y) {
    Int old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x; y = old_y;
    return old_r;
}

inline Int mod_floor(Int a, Int m) {
    Int r = a % m;
    if (r < 0) r += (m < 0 ? -m : m);
    return r;
}

// Floor of sqrt for nonnegative big integers.
inline Big isqrt_big(const Big& n) {
    if (n < 0) fail(ErrorKind::Internal, "isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Big& n, Big* root = nullptr) {
    if (n < 0) return false;
    Big r = isqrt_big(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

inline bool is_perfect_square_ll(Int n, Int* root = nullptr) {
    Big r;
    if (!is_perfect_square(Big(n), &r)) return false;
    if (root) *root = static_cast<Int>(r);
    return true;
}

// A rational square test: r = (p/q)^2 solvable with rational p/q.
inline bool is_square_rat(const Rat& r, Rat* root = nullptr) {
    if (r < 0) return false;
    Big rn, rd;
    if (!is_perfect_square(rat_num(r), &rn)) return false;
    if (!is_perfect_square(rat_den(r), &rd)) return false;
    if (root) *root = Rat(rn, rd);
    return true;
}

// Sign of p + q*sqrt(m) for rationals p, q and a nonnegative integer m.
inline int sign_p_q_sqrt(const Rat& p, const Rat& q, Int m) {
    if (m == 0 || q == 0) return sign_of(q == 0 ? p : p + q * Rat(isqrt_big(Big(m))));
    int sp = sign_of(p), sq = sign_of(q);
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // p and q have opposite signs (neither zero): compare p^2 vs q^2*m.
    Rat lhs = p * p, rhs = q * q * m;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sp : sq;
}

// Value p + q*sqrt(m), m a fixed nonnegative integer. Exact ordered field ops.
struct RQuad {
    Rat p, q;
    Int m;
    RQuad(Rat p_, Rat q_, Int m_) : p(std::move(p_)), q(std::move(q_)), m(m_) {}
    static RQuad rational(Rat v, Int m_) { return RQuad(std::move(v), Rat(0), m_); }

    RQuad operator+(const RQuad& o) const { return RQuad(p + o.p, q + o.q, m); }
    RQuad operator-(const RQuad& o) const { return RQuad(p - o.p, q - o.q, m); }
    RQuad operator-() const { return RQuad(-p, -q, m); }
    RQuad operator*(const RQuad& o) const {
        return RQuad(p * o.p + q * o.q * m, p * o.q + q * o.p, m);
    }
    RQuad operator*(const Rat& s) const { return RQuad(p * s, q * s, m); }

    int sign() const { return sign_p_q_sqrt(p, q, m); }
    bool operator<(const RQuad& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const RQuad& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const RQuad& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const RQuad& o) const { return (*this - o).sign() >= 0; }
    bool operator==(const RQuad& o) const { return p == o.p && q == o.q; }

    double to_double() const;
};

double rat_to_double(const Rat& r);

// Sign of x0 + x1*sqrt(s1) + x2*sqrt(s2) for rationals x_i and nonnegative
// rationals s1, s2. Used by exact distance-vs-bound comparisons where two
// independent radicals meet.
int sign_two_radicals(const Rat& x0, const Rat& x1, const Rat& s1, const Rat& x2, const Rat& s2);

// Decimal expansion of p + q*sqrt(m), rounded to `digits` places, as a plain
// string ("-12.000000000042"). Exact integer arithmetic end to end so the
// bytes never depend on the platform's float formatting.
std::string decimal_string(const Rat& p, const Rat& q, Int m, int digits);
inline std::string decimal_string(const Rat& v, int digits) { return decimal_string(v, Rat(0), 0, digits); }

// Parse "p", "p/q", or a decimal literal "-1.25" into an exact rational.
Rat parse_rat(const std::string& s);
std::string rat_string(const Rat& r);

} // namespace schmidt

#endif
