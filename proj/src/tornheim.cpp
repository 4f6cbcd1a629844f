#include "tornzeta/tornheim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "tornzeta/contour.hpp"
#include "tornzeta/special.hpp"

namespace tornzeta {

// ---------------------------------------------------------------------------
// Point classification.

TornheimPoint TornheimPoint::classify(CVal s, CVal t, CVal u, double flag_distance) {
    TornheimPoint pt{s, t, u};
    bool conv = (s + u).real() > 1.0 && (t + u).real() > 1.0 && (s + t + u).real() > 2.0;
    pt.region = conv ? Region::Convergent : Region::Continued;

    auto flag_plane = [&](CVal w, SingularFlag::Plane plane) {
        long l = nearest_int(1.0 - w.real());
        if (l < 0) l = 0;
        double d = std::abs(w - CVal(1.0 - static_cast<double>(l), 0.0));
        if (d <= flag_distance) pt.singular_flags.push_back({plane, l, d});
    };
    flag_plane(s + u, SingularFlag::Plane::SPlusU);
    flag_plane(t + u, SingularFlag::Plane::TPlusU);
    double d_total = std::abs(s + t + u - 2.0);
    if (d_total <= flag_distance)
        pt.singular_flags.push_back({SingularFlag::Plane::Total, 0, d_total});
    return pt;
}

double TornheimPoint::nearest_singular_distance() const {
    double d = 1e30;
    auto dist_plane = [&](CVal w) {
        long l = std::max(0L, nearest_int(1.0 - w.real()));
        return std::abs(w - CVal(1.0 - static_cast<double>(l), 0.0));
    };
    d = std::min(d, dist_plane(s + u));
    d = std::min(d, dist_plane(t + u));
    d = std::min(d, std::abs(s + t + u - 2.0));
    return d;
}

CVal z_matrix_determinant(CVal s, CVal t, CVal u) {
    CVal cs = cospi(s), ct = cospi(t), cu = cospi(u);
    return 1.0 - cs * cs - ct * ct - cu * cu + 2.0 * cs * ct * cu;
}

// ---------------------------------------------------------------------------
// Direct double sum.

namespace {

// Upper bound for sum_{m > M} m^{-p}, p > 1.
double power_tail(double M, double p) { return std::pow(M, 1.0 - p) / (p - 1.0); }

// Upper bound for the truncation error of the double sum, valid in the
// convergent region. Splits (m+n)^{-u} between the factors so that each
// single sum converges.
double direct_tail_bound(double sigma, double tau, double upsilon, double M,
                         const EvalOptions& opt) {
    if (upsilon < 0.0) {
        // (m+n)^{|u|} <= 2^{|u|} m^{|u|} n^{|u|}
        double a = sigma + upsilon, b = tau + upsilon;
        double za = riemann_zeta(CVal(a, 0), opt).value.real();
        double zb = riemann_zeta(CVal(b, 0), opt).value.real();
        return std::pow(2.0, -upsilon) * (power_tail(M, a) * zb + za * power_tail(M, b));
    }
    // One-sided tail sum_{m>M} m^{-sg} S(m) with the inner sum split at n = m:
    // S(m) <= m^{-upsilon} H_m^{(ta)} + m^{1-ta-upsilon}/(ta+upsilon-1).
    auto one_side = [&](double sg, double ta) {
        double p1 = sg + upsilon;             // > 1 with margin in the region
        double p2 = sg + ta + upsilon - 1.0;  // > 1 with margin in the region
        double part;
        if (ta > 1.0 + 1e-9) {
            part = riemann_zeta(CVal(ta, 0), opt).value.real() * power_tail(M, p1);
        } else if (ta >= 1.0 - 1e-9) {
            // H_m <= 1 + log m
            part = std::pow(M, 1.0 - p1) *
                   ((2.0 + std::log(M)) / (p1 - 1.0) + 1.0 / ((p1 - 1.0) * (p1 - 1.0)));
        } else {
            // H_m^{(ta)} <= 1 + m^{1-ta}/(1-ta)
            part = power_tail(M, p1) + power_tail(M, p2) / (1.0 - ta);
        }
        return part + power_tail(M, p2) / std::max(ta + upsilon - 1.0, 0.04);
    };
    return one_side(sigma, tau) + one_side(tau, sigma);
}

std::vector<CVal> power_table(CVal expnt, long n_max) {
    std::vector<CVal> tab(static_cast<size_t>(n_max) + 1);
    tab[0] = CVal(0.0, 0.0);
    for (long n = 1; n <= n_max; ++n)
        tab[static_cast<size_t>(n)] = std::exp(-expnt * std::log(static_cast<double>(n)));
    return tab;
}

}  // namespace

Approx tornheim_direct(CVal s, CVal t, CVal u, const EvalOptions& opt) {
    const double sg = (s + u).real(), ta = (t + u).real(), to = (s + t + u).real();
    if (!(sg >= 1.05 && ta >= 1.05 && to >= 2.05))
        throw OutOfDomain("tornheim_direct: point not Convergent with margin 0.05");

    const long M = opt.oracle_sum_limit;
    auto a = power_table(s, M);
    auto b = power_table(t, M);
    auto c = power_table(u, 2 * M);

    CVal sum(0.0, 0.0), comp(0.0, 0.0);
    double abs_acc = 0.0;
    for (long m = 1; m <= M; ++m) {
        const CVal am = a[static_cast<size_t>(m)];
        for (long n = 1; n <= M; ++n) {
            CVal term = am * b[static_cast<size_t>(n)] * c[static_cast<size_t>(m + n)];
            abs_acc += std::abs(term.real()) + std::abs(term.imag());
            CVal y = term - comp;
            CVal tmp = sum + y;
            comp = (tmp - sum) - y;
            sum = tmp;
        }
    }

    double tail = direct_tail_bound(s.real(), t.real(), u.real(),
                                    static_cast<double>(M), opt);
    if (tail > 0.05 * (std::abs(sum) + 1.0))
        throw SlowConvergence("tornheim_direct: tail bound exceeds sanity tolerance");
    double err = tail + 4e-16 * abs_acc;
    return {checked(sum, "tornheim_direct"), err};
}

// ---------------------------------------------------------------------------
// A(s,t;u), shifted representation.

namespace {

long auto_shift_K(CVal s, CVal t, CVal u) {
    double need = std::max({s.real() - 0.25, -t.real() - 0.25,
                            0.75 - (t + u).real(), 0.0});
    return static_cast<long>(std::floor(need)) + ((need >= 0.0) ? 1 : 0);
}

struct ATerms {
    CVal sum{0.0, 0.0};
    double err = 0.0;
};

// sum_{k=0}^{K} 2 (t)_k / k! cos^2(pi (s-k)/2) zeta(s-k) zeta(t+u+k)
ATerms a_shifted_terms(CVal s, CVal t, CVal u, long K, const EvalOptions& opt) {
    ATerms out;
    CVal poch(1.0, 0.0);  // (t)_k / k!
    for (long k = 0; k <= K; ++k) {
        if (k > 0) poch *= (t + static_cast<double>(k - 1)) / static_cast<double>(k);
        CVal c = cospi_half(s - static_cast<double>(k));
        CVal c2 = c * c;
        if (poch == CVal(0.0, 0.0) || c2 == CVal(0.0, 0.0)) continue;
        Approx z1, z2;
        try {
            z1 = riemann_zeta(s - static_cast<double>(k), opt);
            z2 = riemann_zeta(t + u + static_cast<double>(k), opt);
        } catch (const PoleError& e) {
            throw SingularPoint(std::string("A_shifted: zeta pole in collected term: ") +
                                e.what());
        }
        CVal term = 2.0 * poch * c2 * z1.value * z2.value;
        out.sum += term;
        out.err += 2.0 * std::abs(poch * c2) *
                       (z1.abs_err * std::abs(z2.value) + std::abs(z1.value) * z2.abs_err) +
                   1e-15 * std::abs(term);
    }
    return out;
}

}  // namespace

Approx A_shifted(CVal s, CVal t, CVal u, long K, const EvalOptions& opt) {
    checked(s, "A_shifted s");
    checked(t, "A_shifted t");
    checked(u, "A_shifted u");
    if (K < 0) {
        K = auto_shift_K(s, t, u);
    } else {
        if (!(s.real() < K + 0.5 && -K - 0.5 < t.real() && -K + 0.5 < (t + u).real()))
            throw NoAdmissibleK("A_shifted: explicit K violates the strip conditions");
    }

    ATerms terms = a_shifted_terms(s, t, u, K, opt);

    // sin(pi s) kills the integral at integer s; Gamma(t)^{-1} kills it at
    // non-positive integer t (the representation degenerates to the sum).
    CVal sn = sinpi(s);
    long tn = nearest_int(t.real());
    bool t_nonpos_int = (tn <= 0 && near_int(t, tn, 1e-13));
    if (sn == CVal(0.0, 0.0) || t_nonpos_int)
        return {checked(terms.sum, "A_shifted"), terms.err};

    const CVal inv_gt = 1.0 / gamma(t, opt).value;
    constexpr double log2 = 0.69314718055994530942;
    constexpr double logpi = 1.14472988584940017414;
    IntegrandHandle f{[=, &opt](CVal eta) {
                          // cot(pi(s-eta)/2) zeta(s-eta) rewritten through the
                          // functional equation; cancellation-free on L_K
                          CVal w = s - eta;
                          CVal refl = std::exp(log2 * w + logpi * (w - 1.0));
                          return cospi_half(w) * refl * gamma(1.0 - w, opt).value *
                                 riemann_zeta(1.0 - w, opt).value *
                                 gamma(t + eta, opt).value * gamma(-eta, opt).value *
                                 inv_gt * riemann_zeta(t + u + eta, opt).value;
                      },
                      DecayClass::Exponential};
    ContourSpec spec;
    spec.x0 = static_cast<double>(K) + 0.5;
    spec.truncation_height = opt.quad_height;
    spec.panel_target_tol = opt.quad_rel_tol;
    Approx integral = integrate_contour(f, spec);

    const CVal two_pi_i(0.0, 2.0 * pi);
    CVal value = terms.sum + sn * integral.value / two_pi_i;
    double err = terms.err + std::abs(sn) * integral.abs_err / (2.0 * pi);
    return {checked(value, "A_shifted"), err};
}

// ---------------------------------------------------------------------------
// A(s,t;u), Theorem contour.

Approx A_contour(CVal s, CVal t, CVal u, const EvalOptions& opt) {
    if (dist_to_int_at_least(s, 0) < 0.05 || dist_to_int_at_least(-t, 0) < 0.05 ||
        dist_to_int_at_least(1.0 - t - u, 0) < 0.05)
        throw DomainError("A_contour: s, -t, 1-t-u must stay 0.05 away from {0,1,2,...}");

    // pole families of the integrand
    std::vector<CVal> left, right;
    std::vector<double> avoid;  // cot-pole/zeta-zero cancellation abscissas
    const double x_lo = -2.5;
    for (long n = 0;; ++n) {
        CVal p = s - 2.0 * static_cast<double>(n);
        if (p.real() < x_lo) break;
        left.push_back(p);
    }
    for (long n = 0;; ++n) {
        CVal p = -t - static_cast<double>(n);
        if (p.real() < x_lo) break;
        left.push_back(p);
    }
    if ((1.0 - t - u).real() >= x_lo) left.push_back(1.0 - t - u);
    right.push_back(CVal(0.0, 0.0));
    for (long m = 1; m <= 3; ++m) avoid.push_back((s + 2.0 * m).real());

    double best_x0 = -0.25, best_score = -1.0;
    for (double cand : {-0.25, -0.4, -0.1, -0.33, -0.17, -0.48}) {
        double score = 1e30;
        for (const CVal& p : left) score = std::min(score, std::abs(p.real() - cand));
        for (const CVal& p : right) score = std::min(score, std::abs(p.real() - cand));
        for (double av : avoid) score = std::min(score, std::abs(av - cand));
        if (score > best_score) {
            best_score = score;
            best_x0 = cand;
        }
    }

    const CVal inv_gt = 1.0 / gamma(t, opt).value;
    IntegrandHandle f{[=, &opt](CVal eta) {
                          CVal w = s - eta;
                          return cospi_half(w) / sinpi_half(w) *
                                 gamma(t + eta, opt).value * gamma(-eta, opt).value *
                                 inv_gt * riemann_zeta(w, opt).value *
                                 riemann_zeta(t + u + eta, opt).value;
                      },
                      DecayClass::Exponential};

    Approx integral = detail::mb_separated_integral(f, best_x0, opt.quad_height,
                                                    opt.quad_rel_tol, left, right);
    const CVal two_pi_i(0.0, 2.0 * pi);
    CVal sn = sinpi(s);
    return {checked(sn * integral.value / two_pi_i, "A_contour"),
            std::abs(sn) * integral.abs_err / (2.0 * pi)};
}

// ---------------------------------------------------------------------------
// Z and the continuation.

Approx Z_def(CVal s, CVal t, CVal u, const EvalOptions& opt) {
    Approx z1 = tornheim_direct(s, t, u, opt);
    Approx z2 = tornheim_direct(t, u, s, opt);
    Approx z3 = tornheim_direct(u, s, t, opt);
    CVal ct = cospi(t), cs = cospi(s);
    CVal v = z1.value + ct * z2.value + cs * z3.value;
    double err = z1.abs_err + std::abs(ct) * z2.abs_err + std::abs(cs) * z3.abs_err +
                 1e-15 * std::abs(v);
    return {checked(v, "Z_def"), err};
}

ZDecomposition z_decompose(CVal s, CVal t, CVal u, const EvalOptions& opt) {
    ZDecomposition d;
    d.a_st = A_shifted(s, t, u, -1, opt);
    d.a_ts = A_shifted(t, s, u, -1, opt);
    bool all_convergent = true;
    for (auto [p, q, r] : {std::array<CVal, 3>{s, t, u}, {t, u, s}, {u, s, t}}) {
        auto cl = TornheimPoint::classify(p, q, r);
        double m1 = (p + r).real() - 1.0, m2 = (q + r).real() - 1.0,
               m3 = (p + q + r).real() - 2.0;
        if (cl.region != Region::Convergent || std::min({m1, m2, m3}) < 0.05)
            all_convergent = false;
    }
    if (all_convergent) {
        d.z_value = Z_def(s, t, u, opt);
        d.residual = std::abs(d.z_value->value - d.a_st.value - d.a_ts.value);
    }
    return d;
}

Approx tornheim_continued(CVal s, CVal t, CVal u, const EvalOptions& opt) {
    auto pt = TornheimPoint::classify(s, t, u, opt.singular_guard);
    if (!pt.singular_flags.empty())
        throw SingularPoint("tornheim_continued: within guard distance of a singular hyperplane");
    CVal delta = z_matrix_determinant(s, t, u);
    if (std::abs(delta) < 1e-6)
        throw NearSingularDenominator("tornheim_continued: |Delta(s,t,u)| < 1e-6");

    auto Z_of = [&](CVal a, CVal b, CVal c) {
        Approx x = A_shifted(a, b, c, -1, opt);
        Approx y = A_shifted(b, a, c, -1, opt);
        return Approx{x.value + y.value, x.abs_err + y.abs_err};
    };
    Approx z1 = Z_of(s, t, u);  // Z(s,t;u)
    Approx z2 = Z_of(t, u, s);  // Z(t,u;s)
    Approx z3 = Z_of(u, s, t);  // Z(u,s;t)

    CVal cs = cospi(s), ct = cospi(t), cu = cospi(u);
    CVal w1 = 1.0 - cu * cu;
    CVal w2 = cs * cu - ct;
    CVal w3 = ct * cu - cs;
    CVal num = w1 * z1.value + w2 * z2.value + w3 * z3.value;
    double num_err = std::abs(w1) * z1.abs_err + std::abs(w2) * z2.abs_err +
                     std::abs(w3) * z3.abs_err;
    CVal v = num / delta;
    return {checked(v, "tornheim_continued"),
            num_err / std::abs(delta) + 1e-15 * std::abs(v)};
}

// ---------------------------------------------------------------------------
// Euler's double zeta by its own Mellin-Barnes line.

Approx euler_double_zeta(CVal s, CVal t, const EvalOptions& opt) {
    if (near_int(s, 1, 1e-8)) throw SingularPoint("euler_double_zeta: s = 1");
    CVal w = s + t;
    if (near_int(w, 1, 1e-8)) throw SingularPoint("euler_double_zeta: s + t = 1");
    long l2 = nearest_int((2.0 - w.real()) / 2.0);
    if (l2 >= 0 && std::abs(w - (2.0 - 2.0 * static_cast<double>(l2))) < 1e-8)
        throw SingularPoint("euler_double_zeta: s + t on 2 - 2l");

    std::vector<CVal> left, right;
    const double x_lo = -2.5;
    for (long l = 0;; ++l) {
        CVal p = 1.0 - s - static_cast<double>(l);
        if (p.real() < x_lo) break;
        left.push_back(p);
    }
    right.push_back(t - 1.0);
    for (long n = 0; n <= 1; ++n) right.push_back(CVal(static_cast<double>(n), 0.0));

    double best_x0 = -0.5, best_score = -1.0;
    for (double cand : {-0.5, -0.37, -0.63, -0.25, -0.75}) {
        double score = 1e30;
        for (const CVal& p : left) score = std::min(score, std::abs(p.real() - cand));
        for (const CVal& p : right) score = std::min(score, std::abs(p.real() - cand));
        if (score > best_score) {
            best_score = score;
            best_x0 = cand;
        }
    }

    const CVal inv_gs = 1.0 / gamma(s, opt).value;
    IntegrandHandle f{[=, &opt](CVal eta) {
                          return gamma(s + eta, opt).value * gamma(-eta, opt).value *
                                 inv_gs * riemann_zeta(t - eta, opt).value *
                                 riemann_zeta(s + eta, opt).value;
                      },
                      DecayClass::Exponential};
    Approx integral = detail::mb_separated_integral(f, best_x0, opt.quad_height,
                                                    opt.quad_rel_tol, left, right);
    const CVal two_pi_i(0.0, 2.0 * pi);
    return {checked(integral.value / two_pi_i, "euler_double_zeta"),
            integral.abs_err / (2.0 * pi)};
}

}  // namespace tornzeta
