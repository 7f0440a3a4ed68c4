#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "ergotope/numeric.hpp"
#include "ergotope/rational.hpp"

namespace ergotope {

// (a + b*sqrt(d)) / c with d > 0 non-square and b != 0; value normalized into
// [0,1) by shifting a by multiples of c. Canonical form: square factors of d
// folded into b, gcd(a, b, c) = 1, c > 0.
struct QuadraticIrrational {
    std::int64_t a = 0;
    std::int64_t b = 1;
    std::int64_t c = 1;
    std::int64_t d = 2;
    DDouble value{}; // cached numeric evaluation in [0,1)

    friend bool operator==(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

// The exact x-coordinate of a torus point: reduced rational, quadratic
// irrational, or a bare double. Floats are treated as irrational by all
// classification logic; rationalize() is the explicit opt-in bridge.
class BaseValue {
public:
    enum class Kind { Rational, Quadratic, Float };

    BaseValue() : rep_(Rational(0, 1)) {}
    explicit BaseValue(Rational r) : rep_(normalize(r)) {}

    static BaseValue rational(std::int64_t p, std::int64_t q) { return BaseValue(reduce_fraction(p, q)); }
    static BaseValue quadratic(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
    static BaseValue from_double(double v);
    static BaseValue golden();  // (sqrt(5)-1)/2
    static BaseValue sqrt2m1(); // sqrt(2)-1

    // Accepts "p/q", an integer, "golden", "sqrt2m1", "(a+b*sqrt(d))/c",
    // or a decimal literal (tagged Float).
    static BaseValue parse(const std::string& text);

    Kind kind() const { return static_cast<Kind>(rep_.index()); }
    bool is_rational() const { return kind() == Kind::Rational; }
    bool is_quadratic() const { return kind() == Kind::Quadratic; }
    bool is_float() const { return kind() == Kind::Float; }
    // Floats count as irrational here (see rationalize for the opt-out).
    bool is_irrational() const { return !is_rational(); }

    const Rational& as_rational() const;
    const QuadraticIrrational& as_quadratic() const;

    double to_double() const;
    DDouble to_ddouble() const;

    std::string str() const;

    friend bool operator==(const BaseValue&, const BaseValue&) = default;

private:
    static Rational normalize(Rational r);
    std::variant<Rational, QuadraticIrrational, double> rep_;
};

// frac(k * x) computed along the exact path for each kind: integer arithmetic
// for rationals, double-double for quadratics and floats. |k| must stay below
// 2^53 so k is exact as a double.
double frac_multiple(const BaseValue& x, std::int64_t k);

// ||k * x|| = distance from k*x to the nearest integer, exact path per kind.
double dist_to_integers_multiple(const BaseValue& x, std::int64_t k);

} // namespace ergotope
