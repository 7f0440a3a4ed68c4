#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ergotope {

// Reduced fraction num/den with den >= 1, gcd(num, den) = 1, sign in num.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num = n;
        den = d;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// p/q shifted into [0,1) mod 1 and fully reduced. Rejects q < 1.
inline Rational reduce_fraction(std::int64_t p, std::int64_t q) {
    if (q < 1) throw std::invalid_argument("reduce_fraction: denominator must be positive");
    std::int64_t r = p % q;
    if (r < 0) r += q;
    return Rational(r, q);
}

} // namespace ergotope
