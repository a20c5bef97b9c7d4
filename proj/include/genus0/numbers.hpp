#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace genus0 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct arith_error : std::runtime_error {
    explicit arith_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline int sign_of(const Rat& r) { return r.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Floor of sqrt(n) for n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw arith_error("isqrt of negative integer");
    if (n == 0) return 0;
    Int x = Int(1) << (static_cast<unsigned>(msb(n)) / 2 + 1);
    for (;;) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

inline bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

// Writes n = s^2 * d with d square-free (sign of d = sign of n).
// Trial division; enough for the coefficient sizes this library meets.
inline void squarefree_decompose(Int n, Int& s, Int& d) {
    if (n == 0) { s = 1; d = 0; return; }
    s = 1;
    d = n < 0 ? -1 : 1;
    if (n < 0) n = -n;
    Int r;
    if (is_perfect_square(n, r)) { s = r; return; }
    const std::int64_t bound = 1 << 20;
    for (std::int64_t p = 2; p <= bound && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) d *= p;
    }
    if (n > 1) {
        if (is_perfect_square(n, r)) s *= r;
        else d *= n;  // n is prime or a product of two large primes; square-free in practice
    }
}

// Rational q = (s^2) * d with d a square-free integer, s rational > 0.
inline void squarefree_decompose(const Rat& q, Rat& s, Int& d) {
    if (q == 0) { s = 1; d = 0; return; }
    Int num = rat_num(q), den = rat_den(q);
    // q = num/den = num*den / den^2
    Int sn, dn;
    squarefree_decompose(num * den, sn, dn);
    s = Rat(sn, den);
    d = dn;
}

// Decimal expansion of a rational to `digits` fractional digits, truncated toward zero.
inline std::string decimal_string(const Rat& r, int digits) {
    Int num = rat_num(r), den = rat_den(r);
    bool neg = num < 0;
    if (neg) num = -num;
    Int ip = num / den;
    Int rem = num % den;
    Int pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    Int frac = rem * pow10 / den;
    std::string fs = frac.str();
    if (static_cast<int>(fs.size()) < digits) fs = std::string(digits - fs.size(), '0') + fs;
    std::string out = (neg ? "-" : "") + ip.str();
    if (digits > 0) out += "." + fs;
    return out;
}

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// gcd of rationals: gcd of numerators over lcm of denominators; gcd(0,0)=0.
inline Rat rat_content_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return rat_abs(b);
    if (b == 0) return rat_abs(a);
    Int an = rat_num(a), ad = rat_den(a), bn = rat_num(b), bd = rat_den(b);
    Int g = gcd_int(an < 0 ? Int(-an) : an, bn < 0 ? Int(-bn) : bn);
    Int l = ad / gcd_int(ad, bd) * bd;
    return Rat(g, l);
}

}  // namespace genus0
