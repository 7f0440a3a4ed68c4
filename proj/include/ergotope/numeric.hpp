#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace ergotope {

using cplx = std::complex<double>;

// Fractional part in [0,1). frac(k) == 0 for integers, and the result is the
// exact difference v - floor(v) whenever that is representable (it always is
// except for tiny negative v, where the guard below keeps the value < 1).
inline double frac(double v) {
    double f = v - std::floor(v);
    if (f >= 1.0) f = std::nextafter(1.0, 0.0);
    if (f < 0.0) f = 0.0;
    return f;
}

// e^{2*pi*i*t} with t in turns. The angle is folded to the nearest quarter
// turn before calling cos/sin, so quarter-turn inputs give exact results:
// unit_circle(0.5) == (-1, 0), unit_circle(0.25) == (0, 1).
inline cplx unit_circle(double turns) {
    double t = frac(turns);
    int quad = static_cast<int>(std::floor(4.0 * t + 0.5)); // 0..4
    double r = t - 0.25 * quad;                             // |r| <= 1/8, exact
    double th = 2.0 * std::numbers::pi * r;
    double c = std::cos(th), s = std::sin(th);
    double re, im;
    switch (quad & 3) {
        case 0: re = c;  im = s;  break;
        case 1: re = -s; im = c;  break;
        case 2: re = -c; im = -s; break;
        default: re = s; im = -c; break;
    }
    return {re + 0.0, im + 0.0}; // normalize -0.0
}

// --- double-double arithmetic -----------------------------------------------
//
// Orbit phases i*x for i up to 1e7 need ~1e-13 absolute accuracy after mod-1
// reduction; plain doubles only reach ~1e-9 there. A (hi, lo) pair carries
// ~32 significant digits, which is far more than enough.

struct DDouble {
    double hi = 0.0;
    double lo = 0.0;
};

inline DDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DDouble quick_two_sum(double a, double b) { // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline DDouble two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DDouble dd_add(DDouble a, DDouble b) {
    DDouble s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DDouble dd_add(DDouble a, double b) {
    DDouble s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DDouble dd_sub(DDouble a, DDouble b) { return dd_add(a, DDouble{-b.hi, -b.lo}); }

inline DDouble dd_mul(DDouble a, double b) {
    DDouble p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DDouble dd_mul(DDouble a, DDouble b) {
    DDouble p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DDouble dd_div(DDouble a, double b) {
    double q1 = a.hi / b;
    DDouble p = two_prod(q1, b);
    double r = ((a.hi - p.hi) - p.lo) + a.lo;
    double q2 = r / b;
    return quick_two_sum(q1, q2);
}

// sqrt of a nonnegative integer-valued double, one Newton step past hardware sqrt
inline DDouble dd_sqrt(double d) {
    if (d == 0.0) return {0.0, 0.0};
    double s = std::sqrt(d);
    DDouble p = two_prod(s, s);
    double resid = (d - p.hi) - p.lo;
    return quick_two_sum(s, resid / (2.0 * s));
}

// exact for |i| <= 2^53
inline DDouble dd_mul_i64(DDouble a, std::int64_t i) { return dd_mul(a, static_cast<double>(i)); }

inline DDouble dd_frac(DDouble a) {
    double f = std::floor(a.hi);
    DDouble r = quick_two_sum(a.hi - f, a.lo); // a.hi - f exact
    if (r.hi < 0.0) r = dd_add(r, 1.0);
    if (r.hi >= 1.0) r = dd_add(r, -1.0);
    return r;
}

inline double dd_to_double(DDouble a) { return a.hi + a.lo; }

// frac(a) collapsed to a double in [0,1)
inline double dd_frac_to_double(DDouble a) { return frac(dd_to_double(dd_frac(a))); }

// --- integer helpers ---------------------------------------------------------

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) { // result in [0, m)
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t mulmod_i64(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

// floor(sqrt(n)) for n >= 0
inline __int128 isqrt_i128(__int128 n) {
    if (n <= 0) return 0;
    __int128 x = static_cast<__int128>(std::sqrtl(static_cast<long double>(n)));
    while (x > 0 && x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

} // namespace ergotope
