#pragma once

#include <map>

#include "tornzeta/laurent.hpp"
#include "tornzeta/rational.hpp"
#include "tornzeta/types.hpp"

namespace tornzeta {

/// A value represented as rational + Q-linear combination of symbolic
/// constants: zeta at positive odd integers and zeta' at integers.
struct ExactValue {
    Rational rational_part{0};
    std::map<long, Rational> zeta_coeffs;        // arg (positive odd) -> coeff
    std::map<long, Rational> zeta_deriv_coeffs;  // arg -> coeff of zeta'(arg)

    bool purely_rational() const {
        return zeta_coeffs.empty() && zeta_deriv_coeffs.empty();
    }
    Approx to_approx(const EvalOptions& opt = default_options()) const;
    ExactValue& add_zeta(long arg, const Rational& coeff);
    ExactValue& add_zeta_deriv(long arg, const Rational& coeff);
};

/// F(s,t;c) = sum_{k=0}^{c} binom(c,k) zeta(s-k) zeta(t-c+k)  (Lemma 4.1).
Approx F_eval(CVal s, CVal t, long c, const EvalOptions& opt = default_options());

/// Exact F(a,b;c) for integer a,b <= 0 (every zeta-argument non-positive).
Rational F_exact(long a, long b, long c);

/// A(a,t;u) for integer a >= 0 via the closed sum of Lemma 4.1(1).
Approx lemma41_A_int(long a, CVal t, CVal u, const EvalOptions& opt = default_options());

/// A(s,-b;u) via Lemma 4.1(2).
Approx lemma41_A_negb(CVal s, long b, CVal u, const EvalOptions& opt = default_options());

/// lim_{u -> -c} A(s,-b;u) via Lemma 4.1(3).
Approx lemma41_limit_u(CVal s, long b, long c, const EvalOptions& opt = default_options());

/// lim_{t -> -b} A(s,t;-c) via Lemma 4.1(4).
Approx lemma41_limit_t(CVal s, long b, long c, const EvalOptions& opt = default_options());

/// zeta(a,b;c) for integers with odd a+b+c (the parity result, Prop 4.3).
/// Requires a+c >= 2, b+c >= 2, a+b+c >= 3.
Approx parity_eval(long a, long b, long c, const EvalOptions& opt = default_options());

/// zeta(s,t;-c) = F(s,t;c)  (Prop 4.4(1)).
Approx nonpositive_c(CVal s, CVal t, long c, const EvalOptions& opt = default_options());

/// zeta(-a,-b;u)  (Prop 4.4(2)).
Approx nonpositive_ab(long a, long b, CVal u, const EvalOptions& opt = default_options());

/// lim_{u -> -c} zeta(s,-b;u)  (Prop 4.4(3)).
Approx nonpositive_bc_limit(CVal s, long b, long c,
                            const EvalOptions& opt = default_options());

/// The four coordinate-wise limit paths of Corollary 4.5.
enum class LimitPath { JointST, UThen, SThenU, TThenU };

Rational corollary_values(long a, long b, long c, LimitPath path);

/// Exact residual of the convolution lemma; zero for all a,b,c >= 0.
Rational convolution_check(long a, long b, long c);

/// Formal-residue route: builds the truncated Laurent series P~_m, extracts
/// R = 2^{-a-b-c-2} [x^{-1}] prod (P~ - delta), and returns R minus the
/// first-path evaluation (must be zero). Requires order >= a+b+c+3.
Rational convolution_check_formal(long a, long b, long c, long order);

/// The value R itself (equals delta_{a0} delta_{b0} delta_{c0}).
Rational convolution_formal_R(long a, long b, long c, long order);

}  // namespace tornzeta
