#include "ergotope/number_theory.hpp"

#include <cmath>
#include <stdexcept>

namespace ergotope {

namespace {

constexpr std::int64_t kConvergentCap = (std::int64_t{1} << 62);

// Appends convergent p_k/q_k for quotient a, maintaining the standard
// recurrence. Returns false when the next denominator would overflow.
struct ConvergentBuilder {
    std::int64_t p_prev = 1, q_prev = 0; // p_{-1}/q_{-1}
    std::int64_t p_cur = 0, q_cur = 1;   // updated to p_k/q_k after first push
    bool first = true;

    bool push(std::int64_t a, std::vector<Rational>& out) {
        if (first) {
            p_cur = a; q_cur = 1;
            first = false;
        } else {
            __int128 pn = static_cast<__int128>(a) * p_cur + p_prev;
            __int128 qn = static_cast<__int128>(a) * q_cur + q_prev;
            if (pn > kConvergentCap || qn > kConvergentCap) return false;
            p_prev = p_cur; q_prev = q_cur;
            p_cur = static_cast<std::int64_t>(pn);
            q_cur = static_cast<std::int64_t>(qn);
        }
        out.emplace_back(p_cur, q_cur);
        return true;
    }
};

ContinuedFraction cf_rational(Rational r, int max_terms) {
    ContinuedFraction cf;
    ConvergentBuilder cb;
    std::int64_t n = r.num, d = r.den;
    for (int k = 0; k < max_terms; ++k) {
        std::int64_t a = n / d;
        std::int64_t rem = n - a * d;
        if (!cb.push(a, cf.convergents)) break;
        cf.quotients.push_back(a);
        if (rem == 0) break;
        n = d;
        d = rem;
    }
    return cf;
}

// Periodic-CF engine for (P + sqrt(D)) / Q over 128-bit integers.
ContinuedFraction cf_quadratic(const QuadraticIrrational& x, int max_terms) {
    __int128 P, D, Q;
    if (x.b > 0) {
        P = x.a;
        D = static_cast<__int128>(x.b) * x.b * x.d;
        Q = x.c;
    } else {
        P = -static_cast<__int128>(x.a);
        D = static_cast<__int128>(x.b) * x.b * x.d;
        Q = -static_cast<__int128>(x.c);
    }
    if ((D - P * P) % Q != 0) {
        __int128 aq = Q < 0 ? -Q : Q;
        P *= aq;
        D *= aq * aq;
        Q *= aq;
    }
    __int128 s = isqrt_i128(D);

    auto floor_div = [](__int128 n, __int128 d) {
        __int128 q = n / d;
        if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
        return q;
    };

    ContinuedFraction cf;
    ConvergentBuilder cb;
    for (int k = 0; k < max_terms; ++k) {
        __int128 a128 = Q > 0 ? floor_div(P + s, Q) : -(floor_div(P + s, -Q) + 1);
        auto a = static_cast<std::int64_t>(a128);
        if (!cb.push(a, cf.convergents)) break;
        cf.quotients.push_back(a);
        P = a128 * Q - P;
        Q = (D - P * P) / Q;
    }
    return cf;
}

ContinuedFraction cf_float(double v, int max_terms) {
    ContinuedFraction cf;
    ConvergentBuilder cb;
    double x = v;
    for (int k = 0; k < max_terms; ++k) {
        double fl = std::floor(x);
        if (fl >= 9.0e15) break; // quotient no longer trustworthy
        auto a = static_cast<std::int64_t>(fl);
        if (!cb.push(a, cf.convergents)) break;
        cf.quotients.push_back(a);
        double rem = x - fl;
        if (rem < 1e-12) break;
        x = 1.0 / rem;
    }
    return cf;
}

} // namespace

ContinuedFraction continued_fraction(const BaseValue& x, int max_terms) {
    if (max_terms < 1) throw std::invalid_argument("continued_fraction: need at least one term");
    switch (x.kind()) {
        case BaseValue::Kind::Rational: return cf_rational(x.as_rational(), max_terms);
        case BaseValue::Kind::Quadratic: return cf_quadratic(x.as_quadratic(), max_terms);
        default: return cf_float(x.to_double(), max_terms);
    }
}

double dist_to_integers(double x) {
    double f = frac(x);
    return std::min(f, 1.0 - f);
}

ThomaeValue thomae_eval(const BaseValue& x) {
    if (x.is_irrational()) return {0.0, ThomaeValue::Class::Irrational, 0};
    const auto& r = x.as_rational();
    ThomaeValue t;
    t.q = r.den;
    t.value = 1.0 / static_cast<double>(r.den);
    t.cls = (r.num == 0) ? ThomaeValue::Class::Zero : ThomaeValue::Class::Rational;
    return t;
}

std::optional<Rational> rationalize(double x, std::int64_t qmax) {
    if (qmax < 1) throw std::invalid_argument("rationalize: qmax must be positive");
    double v = frac(x);
    ContinuedFraction cf = continued_fraction(BaseValue::from_double(v), 64);
    const Rational* best = nullptr;
    for (const auto& c : cf.convergents) {
        if (c.den > qmax) break;
        best = &c;
    }
    if (!best) return std::nullopt;
    double err = std::abs(v - best->to_double());
    double thresh = 0.5 / (static_cast<double>(qmax) * static_cast<double>(qmax));
    if (err < thresh) return *best;
    return std::nullopt;
}

} // namespace ergotope
