#include "schmidt/numeric.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace schmidt {

double rat_to_double(const Rat& r) {
    return r.convert_to<double>();
}

double RQuad::to_double() const {
    double sm = m > 0 ? std::sqrt(static_cast<double>(m)) : 0.0;
    return rat_to_double(p) + rat_to_double(q) * sm;
}

int sign_two_radicals(const Rat& x0, const Rat& x1, const Rat& s1, const Rat& x2, const Rat& s2) {
    if (s1 < 0 || s2 < 0) fail(ErrorKind::Internal, "negative radicand");
    // A = x0 + x2*sqrt(s2) lives in one quadratic extension, B = x1*sqrt(s1)
    // in another; compare |A| and |B| by squaring once more.
    auto sign_a = [&]() -> int {
        // sign of x0 + x2*sqrt(s2)
        int s_x0 = sign_of(x0);
        Rat t = x2 * x2 * s2;
        int s_b = sign_of(x2) * (t == 0 ? 0 : 1);
        if (s_b == 0) return s_x0;
        if (s_x0 == 0) return s_b;
        if (s_x0 == s_b) return s_x0;
        Rat lhs = x0 * x0;
        if (lhs == t) return 0;
        return lhs > t ? s_x0 : s_b;
    };
    Rat b2 = x1 * x1 * s1;
    int sB = sign_of(x1) * (b2 == 0 ? 0 : 1);
    int sA = sign_a();
    if (sB == 0) return sA;
    if (sA == 0) return sB;
    if (sA == sB) return sA;
    // Compare A^2 vs B^2; A^2 = (x0^2 + x2^2 s2) + (2 x0 x2) sqrt(s2), B^2 rational.
    Rat a2p = x0 * x0 + x2 * x2 * s2;
    Rat a2q = 2 * x0 * x2;
    // sign of (a2p - b2) + a2q*sqrt(s2)
    Rat d = a2p - b2;
    int s;
    int sd = sign_of(d);
    Rat t2 = a2q * a2q * s2;
    int sq = sign_of(a2q) * (t2 == 0 ? 0 : 1);
    if (sq == 0) s = sd;
    else if (sd == 0) s = sq;
    else if (sd == sq) s = sd;
    else {
        Rat lhs = d * d;
        s = (lhs == t2) ? 0 : (lhs > t2 ? sd : sq);
    }
    if (s == 0) return 0;
    return s > 0 ? sA : sB;
}

std::string decimal_string(const Rat& p, const Rat& q, Int m, int digits) {
    // value * 10^digits = (A + B*sqrt(m)) / C with big integers, C > 0.
    Big pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    Big pn = rat_num(p), pd = rat_den(p);
    Big qn = rat_num(q), qd = rat_den(q);
    Big C = pd * qd;
    Big A = pn * qd * pow10;
    Big B = qn * pd * pow10;
    // Round to nearest: floor((2A + C + 2B*sqrt(m)) / 2C).
    Big A2 = 2 * A + C;
    Big B2 = 2 * B;
    Big C2 = 2 * C;
    // floor((A2 + B2*sqrt(m))/C2): bracket with floor(B2*sqrt(m)) and refine.
    Big s;
    if (B2 >= 0) s = isqrt_big(B2 * B2 * m);
    else s = -isqrt_big(B2 * B2 * m) - 1;
    Big n = A2 + s;
    Big k;
    if (n >= 0) k = n / C2;
    else k = -((-n + C2 - 1) / C2);
    // k <= value < k+2 now; nudge upward while (k+1)*C2 <= A2 + B2*sqrt(m).
    auto leq_val = [&](const Big& t) {
        // t <= A2 + B2*sqrt(m) ?
        Big lhs = t - A2; // compare lhs <= B2*sqrt(m)
        if (B2 >= 0) {
            if (lhs <= 0) return true;
            return lhs * lhs <= B2 * B2 * m;
        }
        if (lhs > 0) return false;
        return lhs * lhs >= B2 * B2 * m;
    };
    while (leq_val((k + 1) * C2)) ++k;
    // k = round(value * 10^digits) (ties toward +inf; exact and deterministic).
    bool neg = k < 0;
    Big mag = neg ? -k : k;
    std::string ds = mag.str();
    if ((int)ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string out;
    if (neg) out += '-';
    out += ds.substr(0, ds.size() - digits);
    if (digits > 0) {
        out += '.';
        out += ds.substr(ds.size() - digits);
    }
    return out;
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) fail(ErrorKind::ParseError, "empty rational");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Big n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) fail(ErrorKind::ParseError, "zero denominator in " + s);
        return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Big(s));
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (neg) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    for (char c : ip + fp)
        if (!isdigit(static_cast<unsigned char>(c))) fail(ErrorKind::ParseError, "bad rational " + s);
    Big den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    Big num = Big(ip) * den + (fp.empty() ? Big(0) : Big(fp));
    if (neg) num = -num;
    return Rat(num, den);
}

std::string rat_string(const Rat& r) {
    Big n = rat_num(r), d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotFundamental: return "NotFundamental";
        case ErrorKind::ZeroIdeal: return "ZeroIdeal";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ZeroArgument: return "ZeroArgument";
        case ErrorKind::NotUnitNorm: return "NotUnitNorm";
        case ErrorKind::MixedArrangement: return "MixedArrangement";
        case ErrorKind::NotLatticePreserving: return "NotLatticePreserving";
        case ErrorKind::NotSdMatrix: return "NotSdMatrix";
        case ErrorKind::NotIntersecting: return "NotIntersecting";
        case ErrorKind::CoincidentCircles: return "CoincidentCircles";
        case ErrorKind::InvalidD: return "InvalidD";
        case ErrorKind::EmptyArrangement: return "EmptyArrangement";
        case ErrorKind::WindowTooLarge: return "WindowTooLarge";
        case ErrorKind::InvalidWindow: return "InvalidWindow";
        case ErrorKind::SeedNotInArrangement: return "SeedNotInArrangement";
        case ErrorKind::DegenerateSeed: return "DegenerateSeed";
        case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
        case ErrorKind::InsufficientData: return "InsufficientData";
        case ErrorKind::UncoveredPoint: return "UncoveredPoint";
        case ErrorKind::NonPositive: return "NonPositive";
        case ErrorKind::DepthExceeded: return "DepthExceeded";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::EmptyRender: return "EmptyRender";
        case ErrorKind::UsageError: return "UsageError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace schmidt
