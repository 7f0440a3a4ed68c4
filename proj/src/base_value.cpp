#include "ergotope/base_value.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ergotope {

namespace {

constexpr std::int64_t kCoeffLimit = 2'000'000'000'000LL; // keeps CF / phase arithmetic in range

bool is_square(std::int64_t d) {
    if (d < 0) return false;
    auto r = static_cast<std::int64_t>(isqrt_i128(d));
    return r * r == d;
}

DDouble quadratic_value(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    DDouble s = dd_sqrt(static_cast<double>(d));
    DDouble num = dd_add(dd_mul_i64(s, b), static_cast<double>(a));
    return dd_div(num, static_cast<double>(c));
}

} // namespace

Rational BaseValue::normalize(Rational r) {
    return reduce_fraction(r.num, r.den);
}

BaseValue BaseValue::quadratic(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    if (b == 0) throw std::invalid_argument("quadratic: b = 0 is rational, write p/q instead");
    if (c == 0) throw std::invalid_argument("quadratic: zero denominator");
    if (d <= 0 || is_square(d)) throw std::invalid_argument("quadratic: d must be positive and non-square");
    if (std::abs(a) > kCoeffLimit || std::abs(b) > kCoeffLimit || std::abs(c) > kCoeffLimit || d > kCoeffLimit)
        throw std::invalid_argument("quadratic: coefficient out of supported range");

    // fold square factors of d into b
    for (std::int64_t f = 2; f * f <= d; ++f) {
        while (d % (f * f) == 0) { d /= f * f; b *= f; }
    }
    if (c < 0) { a = -a; b = -b; c = -c; }
    std::int64_t g = std::gcd(std::gcd(std::abs(a), std::abs(b)), c);
    if (g > 1) { a /= g; b /= g; c /= g; }

    // shift into [0,1) by integer multiples of c
    DDouble v = quadratic_value(a, b, c, d);
    double shift = std::floor(dd_to_double(v));
    if (shift != 0.0) {
        a -= static_cast<std::int64_t>(shift) * c;
        v = quadratic_value(a, b, c, d);
        // sqrt rounding can leave the value a hair outside; fix up once
        if (dd_to_double(v) < 0.0) { a += c; v = quadratic_value(a, b, c, d); }
        if (dd_to_double(v) >= 1.0) { a -= c; v = quadratic_value(a, b, c, d); }
    }
    QuadraticIrrational qi{a, b, c, d, v};
    BaseValue out;
    out.rep_ = qi;
    return out;
}

BaseValue BaseValue::from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("float value must be finite");
    BaseValue out;
    out.rep_ = frac(v);
    return out;
}

BaseValue BaseValue::golden() { return quadratic(-1, 1, 2, 5); }
BaseValue BaseValue::sqrt2m1() { return quadratic(-1, 1, 1, 2); }

const Rational& BaseValue::as_rational() const {
    if (!is_rational()) throw std::logic_error("BaseValue is not rational");
    return std::get<Rational>(rep_);
}

const QuadraticIrrational& BaseValue::as_quadratic() const {
    if (!is_quadratic()) throw std::logic_error("BaseValue is not quadratic");
    return std::get<QuadraticIrrational>(rep_);
}

double BaseValue::to_double() const {
    switch (kind()) {
        case Kind::Rational: return std::get<Rational>(rep_).to_double();
        case Kind::Quadratic: return dd_to_double(std::get<QuadraticIrrational>(rep_).value);
        default: return std::get<double>(rep_);
    }
}

DDouble BaseValue::to_ddouble() const {
    switch (kind()) {
        case Kind::Rational: {
            const auto& r = std::get<Rational>(rep_);
            return dd_div(DDouble{static_cast<double>(r.num), 0.0}, static_cast<double>(r.den));
        }
        case Kind::Quadratic: return std::get<QuadraticIrrational>(rep_).value;
        default: return {std::get<double>(rep_), 0.0};
    }
}

std::string BaseValue::str() const {
    switch (kind()) {
        case Kind::Rational: return std::get<Rational>(rep_).str();
        case Kind::Quadratic: {
            const auto& q = std::get<QuadraticIrrational>(rep_);
            if (q == golden().as_quadratic()) return "golden";
            if (q == sqrt2m1().as_quadratic()) return "sqrt2m1";
            return "(" + std::to_string(q.a) + "+" + std::to_string(q.b) + "*sqrt(" +
                   std::to_string(q.d) + "))/" + std::to_string(q.c);
        }
        default: {
            char buf[32];
            auto res = std::to_chars(buf, buf + sizeof(buf), std::get<double>(rep_));
            return std::string(buf, res.ptr);
        }
    }
}

namespace {

const char* skip_ws(const char* p, const char* end) {
    while (p != end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    return p;
}

bool parse_i64(const char*& p, const char* end, std::int64_t& out) {
    p = skip_ws(p, end);
    auto res = std::from_chars(p, end, out);
    if (res.ec != std::errc{}) return false;
    p = res.ptr;
    return true;
}

bool expect(const char*& p, const char* end, char ch) {
    p = skip_ws(p, end);
    if (p == end || *p != ch) return false;
    ++p;
    return true;
}

bool expect_str(const char*& p, const char* end, const char* lit) {
    p = skip_ws(p, end);
    for (; *lit; ++lit, ++p)
        if (p == end || *p != *lit) return false;
    return true;
}

} // namespace

BaseValue BaseValue::parse(const std::string& text) {
    const char* p = text.data();
    const char* end = p + text.size();
    p = skip_ws(p, end);
    const char* tail = end;
    while (tail != p && std::isspace(static_cast<unsigned char>(tail[-1]))) --tail;
    std::string core(p, tail);

    if (core == "golden") return golden();
    if (core == "sqrt2m1") return sqrt2m1();

    if (!core.empty() && core.front() == '(') {
        // (a+b*sqrt(d))/c
        const char* q = core.data();
        const char* qe = q + core.size();
        std::int64_t a, b, d, c;
        if (!expect(q, qe, '(') || !parse_i64(q, qe, a)) throw std::invalid_argument("bad quadratic literal: " + core);
        q = skip_ws(q, qe);
        if (q == qe || (*q != '+' && *q != '-')) throw std::invalid_argument("bad quadratic literal: " + core);
        bool neg = (*q == '-');
        ++q;
        if (!parse_i64(q, qe, b)) throw std::invalid_argument("bad quadratic literal: " + core);
        if (neg) b = -b;
        if (!expect(q, qe, '*') || !expect_str(q, qe, "sqrt") || !expect(q, qe, '(') ||
            !parse_i64(q, qe, d) || !expect(q, qe, ')') || !expect(q, qe, ')') || !expect(q, qe, '/') ||
            !parse_i64(q, qe, c))
            throw std::invalid_argument("bad quadratic literal: " + core);
        q = skip_ws(q, qe);
        if (q != qe) throw std::invalid_argument("trailing characters in: " + core);
        return quadratic(a, b, c, d);
    }

    auto slash = core.find('/');
    if (slash != std::string::npos) {
        const char* q = core.data();
        const char* qe = q + core.size();
        std::int64_t num, den;
        if (!parse_i64(q, qe, num) || !expect(q, qe, '/') || !parse_i64(q, qe, den) || skip_ws(q, qe) != qe)
            throw std::invalid_argument("bad rational literal: " + core);
        if (den == 0) throw std::invalid_argument("zero denominator: " + core);
        if (den < 0) { num = -num; den = -den; }
        if (den > kCoeffLimit) throw std::invalid_argument("denominator out of supported range: " + core);
        return rational(num, den);
    }

    // integer -> rational mod 1; anything else numeric -> Float
    {
        const char* q = core.data();
        const char* qe = q + core.size();
        std::int64_t iv;
        auto res = std::from_chars(q, qe, iv);
        if (res.ec == std::errc{} && res.ptr == qe) return rational(iv, 1);
    }
    {
        double dv;
        auto res = std::from_chars(core.data(), core.data() + core.size(), dv);
        if (res.ec == std::errc{} && res.ptr == core.data() + core.size()) return from_double(dv);
    }
    throw std::invalid_argument("cannot parse base value: " + core);
}

double frac_multiple(const BaseValue& x, std::int64_t k) {
    switch (x.kind()) {
        case BaseValue::Kind::Rational: {
            const auto& r = x.as_rational();
            if (r.num == 0) return 0.0;
            auto rem = static_cast<std::int64_t>(mod_floor(static_cast<std::int64_t>(
                           static_cast<__int128>(k) % r.den * r.num % r.den),
                       r.den));
            return static_cast<double>(rem) / static_cast<double>(r.den);
        }
        default:
            return dd_frac_to_double(dd_mul_i64(x.to_ddouble(), k));
    }
}

double dist_to_integers_multiple(const BaseValue& x, std::int64_t k) {
    if (x.is_rational()) {
        const auto& r = x.as_rational();
        if (r.num == 0) return 0.0;
        auto rem = static_cast<std::int64_t>(mod_floor(static_cast<std::int64_t>(
                       static_cast<__int128>(k) % r.den * r.num % r.den),
                   r.den));
        std::int64_t m = std::min(rem, r.den - rem);
        return static_cast<double>(m) / static_cast<double>(r.den);
    }
    double f = frac_multiple(x, k);
    return std::min(f, 1.0 - f);
}

} // namespace ergotope
