#pragma once

#include "tornzeta/rational.hpp"
#include "tornzeta/types.hpp"

namespace tornzeta {

enum class WittenKind { PositiveValue, ZeroValue, SimpleZero, DoubleZero };

struct WittenReport {
    long point = 0;
    WittenKind kind = WittenKind::PositiveValue;
    Approx value_or_deriv;
    int predicted_sign = 0;  // 0 when no prediction applies
};

/// zeta_SU(3)(s) = 2^{s+1} A(s,s;s) / (1 + 2 cos(pi s)); refuses where the
/// denominator nearly vanishes (s near +/-2/3 mod 2).
Approx witten_eval(CVal s, const EvalOptions& opt = default_options());

/// Closed form at positive integers (Prop 4.6(1)).
Approx witten_positive_int(long a, const EvalOptions& opt = default_options());

struct WittenZero {
    Rational value;     // exact 1/3
    Approx derivative;  // log(2^{4/3} pi), computed numerically
};
WittenZero witten_at_zero(const EvalOptions& opt = default_options());

/// zeta'_SU(3)(-a) for odd a >= 1, with the predicted sign (-1)^{(a-1)/2}.
WittenReport witten_deriv_neg_odd(long a, const EvalOptions& opt = default_options());

/// zeta''_SU(3)(-a) for even a >= 2, with the predicted sign (-1)^{a/2}.
WittenReport witten_dderiv_neg_even(long a, const EvalOptions& opt = default_options());

}  // namespace tornzeta
