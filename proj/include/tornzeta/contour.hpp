#pragma once

#include <functional>
#include <vector>

#include "tornzeta/types.hpp"

namespace tornzeta {

enum class DecayClass { Exponential, SuperExponential };
enum class IndentSide { Left, Right };  // half-plane the detour bulges into

struct Indentation {
    CVal center;
    double radius = 0.25;
    IndentSide side = IndentSide::Right;
};

/// A truncated vertical Mellin-Barnes line Re(eta) = x0 with semicircular
/// detours around the listed points. Oriented upward (from x0 - iT to x0 + iT).
struct ContourSpec {
    double x0 = 0.0;
    double truncation_height = 40.0;
    std::vector<Indentation> indentations;
    double panel_target_tol = 1e-12;

    void validate() const;
};

struct IntegrandHandle {
    std::function<CVal(CVal)> eval;
    DecayClass decay = DecayClass::Exponential;
};

/// Integral of f along the contour (straight pieces plus detours), by
/// adaptive 16-node Gauss-Legendre panels. abs_err folds in an exponential
/// tail bound fitted from samples at heights T and 2T.
Approx integrate_contour(const IntegrandHandle& f, const ContourSpec& c);

/// Residue of f at eta0 by the trapezoidal rule on a small circle;
/// abs_err estimated by doubling the node count.
Approx residue_numeric(const IntegrandHandle& f, CVal eta0, int order,
                       double radius = 1e-2);

/// (1/2 pi i) Int_{L_{s,t}} Gamma(s,t;eta) d eta  -  Gamma(s+t) / (t Gamma(s) Gamma(t)),
/// the Barnes first-lemma residual; its magnitude is the test statistic.
Approx barnes_lemma_check(CVal s, CVal t, const EvalOptions& opt = default_options());

/// I(s,t;p,r): the generalized partial-fraction integral of the first kind.
Approx pfd_I(CVal s, CVal t, double p, double r,
             const EvalOptions& opt = default_options());

/// J(s,t;p,q-p): the cos-weighted variant; requires 0 < p < q.
Approx pfd_J(CVal s, CVal t, double p, double q,
             const EvalOptions& opt = default_options());

namespace detail {

/// Integral of f over the Mellin-Barnes contour that separates
/// left_poles (kept left) from right_poles (kept right), realized as the
/// vertical line Re = x0 with semicircular detours for poles near the line
/// and residue transfers (+/- 2 pi i Res) for poles on the wrong side of it.
/// Both pole lists must contain every pole with real part > x0 - 1.5
/// (left families) resp. < x0 + 1.5 (right families).
Approx mb_separated_integral(const IntegrandHandle& f, double x0, double T,
                             double tol, const std::vector<CVal>& left_poles,
                             const std::vector<CVal>& right_poles);

}  // namespace detail

}  // namespace tornzeta
