#pragma once

#include "tornzeta/rational.hpp"
#include "tornzeta/types.hpp"

namespace tornzeta {

/// Gamma(z). Stirling series after upward recurrence into |z| >= 10;
/// reflection for Re(z) < 1/2. Aims at relative error <= 1e-13 for |z| <= 200.
/// Throws PoleError within 1e-13 of a non-positive integer.
Approx gamma(CVal z, const EvalOptions& opt = default_options());

/// Riemann zeta. Euler-Maclaurin for Re(s) >= 1/2, functional equation
/// otherwise. Throws PoleError within 1e-13 of s = 1.
Approx riemann_zeta(CVal s, const EvalOptions& opt = default_options());

/// First or second derivative of zeta, by termwise differentiation of the
/// same two branches (never finite differences).
Approx riemann_zeta_deriv(CVal s, int order, const EvalOptions& opt = default_options());

/// Bernoulli number B_n in the convention B_1 = -1/2, exact. Memoized;
/// the table is written once under a lock and read-only afterwards.
Rational bernoulli(long n);

/// Exact zeta(-n) = (-1)^n B_{n+1} / (n+1); zero for even n >= 2.
Rational zeta_nonpos_exact(long n);

/// Rising factorial (t)_k as a finite product.
Approx pochhammer(CVal t, long k);

/// Generalized binomial coefficient binom(w, k) = (w-k+1)_k / k!.
Approx binom_general(CVal w, long k);

/// d/ds prod_{j=0}^{n-1} (s + a + j) at s = 0, exact over Q.
Rational pochhammer_shift_deriv(long a, long n);

/// Divisor sum sigma_nu(k) = sum_{d | k} d^nu, exact trial division.
CVal sigma_complex(CVal nu, long k);

/// Confluent hypergeometric Psi(alpha, gamma; z) (second kind) through the
/// Laplace integral on a rotated ray; requires Re(alpha) > 0 and z != 0.
Approx confluent_psi(CVal alpha, CVal gamma_p, CVal z,
                     const EvalOptions& opt = default_options());

namespace detail {

// Internal pieces shared with the contour/tornheim modules.

/// Digamma and trigamma for the differentiated functional equation.
CVal digamma(CVal z);
CVal trigamma(CVal z);

/// chi(s) split as P(s) * sin(pi s / 2) with P = 2^s pi^{s-1} Gamma(1-s),
/// so the trivial zeros stay exact. Returns P and its first two derivatives.
struct PParts {
    CVal p, dp, ddp;
};
PParts chi_smooth_part(CVal s);

/// zeta and its first two derivatives in one Euler-Maclaurin pass,
/// valid for Re(s) >= 0.45 and away from s = 1.
struct ZetaJet {
    CVal f, df, ddf;
    double abs_err;
};
ZetaJet zeta_em_jet(CVal s, int max_order, const EvalOptions& opt);

}  // namespace detail

}  // namespace tornzeta
