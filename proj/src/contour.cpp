#include "tornzeta/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "tornzeta/special.hpp"

namespace tornzeta {

namespace {

// 16-node Gauss-Legendre abscissas/weights on [-1, 1].
constexpr std::array<double, 8> gl_x = {
    0.09501250983763744018531933542496,
    0.28160355077925891323046050146050,
    0.45801677765722738634241944298358,
    0.61787624440264374844667176404879,
    0.75540440835500303389510119484744,
    0.86563120238783174388046789771239,
    0.94457502307323257607798841553461,
    0.98940093499164993259615417345033,
};
constexpr std::array<double, 8> gl_w = {
    0.18945061045506849628539672320828,
    0.18260341504492358886676366796922,
    0.16915651939500253818931207903033,
    0.14959598881657673208150173054748,
    0.12462897125553387205247628219202,
    0.09515851168249278480992510760225,
    0.06225352393864789286284383699438,
    0.02715245941175409485178057245602,
};

// A contour piece parametrized over [0, 1].
struct Piece {
    std::function<CVal(double)> point;
    std::function<CVal(double)> derivative;
};

CVal gl16(const IntegrandHandle& f, const Piece& pc, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    CVal acc(0.0, 0.0);
    for (size_t i = 0; i < 8; ++i) {
        for (double sgn : {-1.0, 1.0}) {
            double t = mid + sgn * half * gl_x[i];
            acc += gl_w[i] * f.eval(pc.point(t)) * pc.derivative(t);
        }
    }
    return acc * half;
}

struct PanelResult {
    CVal value;
    double err;
};

PanelResult refine(const IntegrandHandle& f, const Piece& pc, double a, double b,
                   CVal whole, double tol, int depth) {
    double mid = 0.5 * (a + b);
    CVal left = gl16(f, pc, a, mid);
    CVal right = gl16(f, pc, mid, b);
    double delta = std::abs(whole - left - right);
    if (delta <= tol || depth >= 13) {
        if (depth >= 13 && delta > 64.0 * tol)
            throw NonConvergence("integrate_contour: panel subdivision limit reached");
        return {left + right, delta};
    }
    auto l = refine(f, pc, a, mid, left, 0.5 * tol, depth + 1);
    auto r = refine(f, pc, mid, b, right, 0.5 * tol, depth + 1);
    return {l.value + r.value, l.err + r.err};
}

Piece line_piece(CVal a, CVal b) {
    return {[a, b](double t) { return a + t * (b - a); },
            [a, b](double) { return b - a; }};
}

Piece arc_piece(CVal center, double radius, double th0, double th1) {
    return {[=](double t) { return center + std::polar(radius, th0 + t * (th1 - th0)); },
            [=](double t) {
                CVal e = std::polar(radius, th0 + t * (th1 - th0));
                return CVal(0.0, 1.0) * e * (th1 - th0);
            }};
}

}  // namespace

void ContourSpec::validate() const {
    if (truncation_height < 10.0)
        throw DomainError("ContourSpec: truncation height must be >= 10");
    if (panel_target_tol <= 0.0)
        throw DomainError("ContourSpec: panel tolerance must be positive");
    for (size_t i = 0; i < indentations.size(); ++i) {
        const auto& a = indentations[i];
        if (a.radius <= 0.0) throw DomainError("ContourSpec: indentation radius <= 0");
        if (std::abs(a.center.real() - x0) >= a.radius)
            throw DomainError("ContourSpec: indentation does not reach the line");
        for (size_t j = i + 1; j < indentations.size(); ++j) {
            const auto& b = indentations[j];
            if (std::abs(a.center - b.center) <= a.radius + b.radius)
                throw DomainError("ContourSpec: indentation disks overlap");
        }
    }
}

Approx integrate_contour(const IntegrandHandle& f, const ContourSpec& c) {
    c.validate();
    const double T = c.truncation_height;

    // Assemble pieces bottom-up: vertical runs interleaved with detour arcs.
    auto indents = c.indentations;
    std::sort(indents.begin(), indents.end(),
              [](const Indentation& a, const Indentation& b) {
                  return a.center.imag() < b.center.imag();
              });
    std::vector<Piece> pieces;
    std::vector<double> lengths;
    CVal cursor(c.x0, -T);
    auto push_line = [&](CVal to) {
        double y0 = cursor.imag(), y1 = to.imag();
        if (y1 - y0 < 1e-14) { cursor = to; return; }
        // geometric split toward the ends keeps base panels small where the
        // integrand actually lives (near the real axis)
        std::vector<double> cuts{y0};
        for (double step : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0}) {
            double lo = -step, hi = step;
            if (lo > y0 && lo < y1) cuts.push_back(lo);
            if (hi > y0 && hi < y1) cuts.push_back(hi);
        }
        cuts.push_back(y1);
        std::sort(cuts.begin(), cuts.end());
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            pieces.push_back(line_piece(CVal(c.x0, cuts[i]), CVal(c.x0, cuts[i + 1])));
            lengths.push_back(cuts[i + 1] - cuts[i]);
        }
        cursor = to;
    };

    for (const auto& ind : indents) {
        double xi = (c.x0 - ind.center.real()) / ind.radius;
        double th = std::acos(std::clamp(xi, -1.0, 1.0));
        CVal lower = ind.center + std::polar(ind.radius, -th);
        CVal upper = ind.center + std::polar(ind.radius, th);
        if (lower.imag() < cursor.imag() - 1e-12 || upper.imag() > T)
            throw DomainError("ContourSpec: indentation outside the truncated line");
        push_line(lower);
        if (ind.side == IndentSide::Right)
            pieces.push_back(arc_piece(ind.center, ind.radius, -th, th));
        else
            pieces.push_back(arc_piece(ind.center, ind.radius, -th, th - 2.0 * pi));
        lengths.push_back(2.0 * pi * ind.radius);
        cursor = upper;
    }
    push_line(CVal(c.x0, T));

    // First pass for a magnitude scale, then refine against it.
    std::vector<CVal> coarse(pieces.size());
    double scale = 0.0;
    for (size_t i = 0; i < pieces.size(); ++i) {
        coarse[i] = gl16(f, pieces[i], 0.0, 1.0);
        scale += std::abs(coarse[i]);
    }
    const double abs_tol = c.panel_target_tol * std::max(scale, 1e-300);

    CVal total(0.0, 0.0);
    double err = 0.0;
    for (size_t i = 0; i < pieces.size(); ++i) {
        double share = std::max(std::abs(coarse[i]) / std::max(scale, 1e-300),
                                0.05 / static_cast<double>(pieces.size()));
        auto r = refine(f, pieces[i], 0.0, 1.0, coarse[i], abs_tol * share, 0);
        total += r.value;
        err += r.err;
    }

    // Empirical tail bound beyond +/- T from the observed decay.
    double m1 = std::max(std::abs(f.eval(CVal(c.x0, T))), std::abs(f.eval(CVal(c.x0, -T))));
    double m2 = std::max(std::abs(f.eval(CVal(c.x0, 2.0 * T))),
                         std::abs(f.eval(CVal(c.x0, -2.0 * T))));
    if (m1 > 0.0 || m2 > 0.0) {
        if (!(m2 < m1))
            throw TailDivergence("integrate_contour: no decay between T and 2T");
        double lambda = std::log(m1 / std::max(m2, 1e-300)) / T;
        err += 2.0 * m1 / lambda;
    }
    return {checked(total, "integrate_contour"), err};
}

Approx residue_numeric(const IntegrandHandle& f, CVal eta0, int order, double radius) {
    if (order < 1) throw DomainError("residue_numeric: order must be >= 1");
    if (radius <= 0.0) throw DomainError("residue_numeric: radius must be positive");
    auto ring = [&](int m) {
        CVal acc(0.0, 0.0);
        for (int j = 0; j < m; ++j) {
            double th = 2.0 * pi * (j + 0.5) / m;
            CVal e = std::polar(1.0, th);
            acc += f.eval(eta0 + radius * e) * e;
        }
        return acc * (radius / static_cast<double>(m));
    };
    CVal r32 = ring(32);
    CVal r64 = ring(64);
    double delta = std::abs(r64 - r32);
    if (delta > 1e-5 * (std::abs(r64) + 1.0))
        throw NonConvergence("residue_numeric: ring sums did not settle");
    return {checked(r64, "residue_numeric"), delta + 1e-14 * std::abs(r64)};
}

namespace detail {

Approx mb_separated_integral(const IntegrandHandle& f, double x0, double T,
                             double tol, const std::vector<CVal>& left_poles,
                             const std::vector<CVal>& right_poles) {
    // Pinch check between the families.
    std::vector<CVal> all = left_poles;
    all.insert(all.end(), right_poles.begin(), right_poles.end());
    for (const CVal& l : left_poles)
        for (const CVal& r : right_poles)
            if (std::abs(l - r) < 1e-3)
                throw ContourPinch("pole families collide within 1e-3");

    auto nearest_other = [&](CVal p) {
        double d = 1e30;
        for (const CVal& q : all)
            if (std::abs(q - p) > 1e-12) d = std::min(d, std::abs(q - p));
        return d;
    };

    ContourSpec spec;
    spec.x0 = x0;
    spec.truncation_height = T;
    spec.panel_target_tol = tol;

    struct Transfer {
        CVal pole;
        double sign;  // +1: left-family pole right of the line, -1: converse
    };
    std::vector<Transfer> transfers;

    auto place = [&](const std::vector<CVal>& poles, bool left_family) {
        for (const CVal& p : poles) {
            double dx = p.real() - x0;
            bool wrong_side = left_family ? (dx > 0.0) : (dx < 0.0);
            if (std::abs(dx) < 0.15 && std::abs(p.imag()) < T - 1.0) {
                double radius = std::min(0.25, 0.5 * nearest_other(p));
                if (radius <= std::abs(dx))
                    throw ContourPinch("indentation cannot reach pole near the line");
                spec.indentations.push_back(
                    {p, radius, left_family ? IndentSide::Right : IndentSide::Left});
            } else if (wrong_side) {
                transfers.push_back({p, left_family ? 1.0 : -1.0});
            }
        }
    };
    place(left_poles, true);
    place(right_poles, false);

    Approx line = integrate_contour(f, spec);
    CVal total = line.value;
    double err = line.abs_err;
    const CVal two_pi_i(0.0, 2.0 * pi);
    for (const auto& tr : transfers) {
        double radius = std::min(1e-2, nearest_other(tr.pole) / 3.0);
        Approx res = residue_numeric(f, tr.pole, 1, radius);
        total += tr.sign * two_pi_i * res.value;
        err += 2.0 * pi * res.abs_err;
    }
    return {checked(total, "mb_separated_integral"), err};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Section-2/3 integrals as verifiable checks.

namespace {

void require_off_positive_integers(CVal z, const char* name) {
    long n = nearest_int(z.real());
    if (n >= 1 && near_int(z, n, 0.02))
        throw DomainError(std::string(name) + " must stay away from {1,2,3,...}");
}

// Pole families of Gamma(1-s+eta)Gamma(-eta)Gamma(s-eta)Gamma(t+eta):
// left eta = s-1-m, -t-m; right eta = n, s+n.
struct PfdPoles {
    std::vector<CVal> left, right;
};

PfdPoles pfd_pole_lists(CVal s, CVal t, double x0) {
    PfdPoles pl;
    for (long m = 0;; ++m) {
        CVal p = s - 1.0 - static_cast<double>(m);
        if (p.real() < x0 - 1.5) break;
        pl.left.push_back(p);
    }
    for (long m = 0;; ++m) {
        CVal p = -t - static_cast<double>(m);
        if (p.real() < x0 - 1.5) break;
        pl.left.push_back(p);
    }
    for (long n = 0;; ++n) {
        CVal p(static_cast<double>(n), 0.0);
        if (p.real() > x0 + 1.5) break;
        pl.right.push_back(p);
    }
    for (long n = 0;; ++n) {
        CVal p = s + static_cast<double>(n);
        if (p.real() > x0 + 1.5) break;
        pl.right.push_back(p);
    }
    return pl;
}

}  // namespace

Approx barnes_lemma_check(CVal s, CVal t, const EvalOptions& opt) {
    if (s.real() <= 0.0 || t.real() <= 0.0)
        throw DomainError("barnes_lemma_check: requires Re(s), Re(t) > 0");
    if (dist_to_int(s) < 0.02 || dist_to_int(t) < 0.02)
        throw DomainError("barnes_lemma_check: s, t must stay off the integer lattice");

    const CVal inv_norm = 1.0 / (gamma(1.0 - s, opt).value * gamma(s, opt).value *
                                 gamma(t, opt).value);
    IntegrandHandle f{[=](CVal eta) {
                          return gamma(1.0 - s + eta).value * gamma(-eta).value *
                                 gamma(s - eta).value * gamma(t + eta).value * inv_norm;
                      },
                      DecayClass::Exponential};

    const double x0 = std::min(s.real(), 1.0) / 2.0;
    auto poles = pfd_pole_lists(s, t, x0);
    Approx integral = detail::mb_separated_integral(f, x0, opt.quad_height,
                                                    opt.quad_rel_tol, poles.left,
                                                    poles.right);
    const CVal two_pi_i(0.0, 2.0 * pi);
    CVal closed = gamma(s + t, opt).value /
                  (t * gamma(s, opt).value * gamma(t, opt).value);
    CVal residual = integral.value / two_pi_i - closed;
    return {residual, integral.abs_err / (2.0 * pi) + 1e-13 * std::abs(closed)};
}

Approx pfd_I(CVal s, CVal t, double p, double r, const EvalOptions& opt) {
    if (p <= 0.0 || r <= 0.0) throw DomainError("pfd_I: requires p, r > 0");
    if (s.real() <= 0.0 || t.real() <= 0.0)
        throw DomainError("pfd_I: requires Re(s), Re(t) > 0");
    require_off_positive_integers(s, "pfd_I: s");
    require_off_positive_integers(t, "pfd_I: t");

    const double lp = std::log(p), lr = std::log(r);
    const CVal inv_g1ms = 1.0 / gamma(1.0 - s, opt).value;
    IntegrandHandle f{[=](CVal eta) {
                          return gamma(1.0 - s + eta).value * gamma(-eta).value * inv_g1ms *
                                 gamma(s - eta).value * std::exp(-(s - eta) * lp) *
                                 gamma(t + eta).value * std::exp(-(t + eta) * lr);
                      },
                      DecayClass::Exponential};

    const double x0 = std::min(s.real(), 1.0) / 2.0;
    auto poles = pfd_pole_lists(s, t, x0);
    Approx integral = detail::mb_separated_integral(f, x0, opt.quad_height,
                                                    opt.quad_rel_tol, poles.left,
                                                    poles.right);
    const CVal two_pi_i(0.0, 2.0 * pi);
    return {integral.value / two_pi_i, integral.abs_err / (2.0 * pi)};
}

Approx pfd_J(CVal s, CVal t, double p, double q, const EvalOptions& opt) {
    if (!(0.0 < p && p < q)) throw DomainError("pfd_J: requires 0 < p < q");
    if (s.real() <= 0.0 || t.real() <= 0.0)
        throw DomainError("pfd_J: requires Re(s), Re(t) > 0");
    require_off_positive_integers(s, "pfd_J: s");
    require_off_positive_integers(t, "pfd_J: t");

    const double lp = std::log(p), lr = std::log(q - p);
    const CVal inv_g1ms = 1.0 / gamma(1.0 - s, opt).value;
    IntegrandHandle f{[=](CVal eta) {
                          return gamma(1.0 - s + eta).value * gamma(-eta).value * inv_g1ms *
                                 cospi(s - eta) * gamma(s - eta).value *
                                 std::exp(-(s - eta) * lp) * gamma(t + eta).value *
                                 std::exp(-(t + eta) * lr);
                      },
                      DecayClass::Exponential};

    const double x0 = std::min(s.real(), 1.0) / 2.0;
    auto poles = pfd_pole_lists(s, t, x0);
    Approx integral = detail::mb_separated_integral(f, x0, opt.quad_height,
                                                    opt.quad_rel_tol, poles.left,
                                                    poles.right);
    const CVal two_pi_i(0.0, 2.0 * pi);
    return {integral.value / two_pi_i, integral.abs_err / (2.0 * pi)};
}

}  // namespace tornzeta
