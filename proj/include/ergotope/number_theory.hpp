#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ergotope/base_value.hpp"
#include "ergotope/rational.hpp"

namespace ergotope {

// Partial quotients [a0; a1, a2, ...] and the matching reduced convergents
// p_k/q_k. Finite for rationals; for irrationals as many terms as requested.
struct ContinuedFraction {
    std::vector<std::int64_t> quotients;
    std::vector<Rational> convergents;
};

// First max_terms partial quotients of x in [0,1). Exact integer arithmetic
// for Rational and QuadraticIrrational inputs; the floating Gauss map for
// Float inputs. A rational's finite expansion is returned whole when
// max_terms exceeds it. Stops early if a convergent denominator would
// overflow 64-bit range.
ContinuedFraction continued_fraction(const BaseValue& x, int max_terms);

// ||x|| = min_k |x - k|, in [0, 1/2].
double dist_to_integers(double x);

struct ThomaeValue {
    enum class Class { Irrational, Rational, Zero };
    double value = 0.0;       // 0, 1/q, or 1
    Class cls = Class::Irrational;
    std::int64_t q = 0;       // reduced denominator when rational (q = 1 at x = 0)
};

// Thomae's function with the T(0) = 1 convention (0 = 0/1 reduced, so the
// 1/q rule already yields 1 there). Floats classify as irrational.
ThomaeValue thomae_eval(const BaseValue& x);

// Best rational with denominator <= qmax if it approximates x to within
// 1/(2*qmax^2); otherwise nothing (the float keeps its irrational tag).
// Searches the convergents of x, which any fraction that close must be among.
std::optional<Rational> rationalize(double x, std::int64_t qmax);

} // namespace ergotope
