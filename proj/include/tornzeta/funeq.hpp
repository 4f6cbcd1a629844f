#pragma once

#include "tornzeta/types.hpp"

namespace tornzeta {

struct FpmOptions {
    long max_terms = 2000;
    double tail_tol = 1e-4;
};

/// h(s,t) = zeta(s,t) - Gamma(1-t) Gamma(s+t-1) zeta(s+t-1) / Gamma(s).
Approx h_eval(CVal s, CVal t, const EvalOptions& opt = default_options());

/// LHS - RHS of the Appendix functional equation; magnitude is the test
/// statistic. include_sine_term = false drops the A-term (it vanishes on the
/// hyperplanes s+t = 2k+1, k != 0).
Approx funeq_residual(CVal s, CVal t, bool include_sine_term = true,
                      const EvalOptions& opt = default_options());

/// F_{+} / F_{-}(s,t) = sum_k sigma_{s+t-1}(k) Psi(t, s+t; +/-2 pi i k),
/// valid for Re(s) < -0.1, Re(t) > 1.1. The algebraic tail beyond the
/// truncation is resummed through Dirichlet series of the Psi asymptotics.
Approx F_pm(int sign, CVal s, CVal t, const FpmOptions& fopt = FpmOptions{},
            const EvalOptions& opt = default_options());

/// 2 Gamma(s) A(s,t;0) - (2 pi i)^{s+t} F_+ - (-2 pi i)^{s+t} F_-,
/// principal branches throughout.
Approx corollary_A_check(CVal s, CVal t, const FpmOptions& fopt = FpmOptions{},
                         const EvalOptions& opt = default_options());

}  // namespace tornzeta
