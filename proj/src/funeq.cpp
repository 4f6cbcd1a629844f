#include "tornzeta/funeq.hpp"

#include <cmath>

#include "tornzeta/special.hpp"
#include "tornzeta/tornheim.hpp"

namespace tornzeta {

namespace {

constexpr double log_two_pi = 1.83787706640934548356065947281123527;

}  // namespace

Approx h_eval(CVal s, CVal t, const EvalOptions& opt) {
    long tn = nearest_int(t.real());
    if (tn >= 1 && near_int(t, tn, 1e-8))
        throw SingularPoint("h_eval: t at a positive integer");
    if (near_int(s + t, 2, 1e-8)) throw SingularPoint("h_eval: s + t = 2");

    Approx dz = euler_double_zeta(s, t, opt);
    Approx g1 = gamma(1.0 - t, opt);
    Approx g2 = gamma(s + t - 1.0, opt);
    Approx gs = gamma(s, opt);
    Approx zv = riemann_zeta(s + t - 1.0, opt);
    CVal pole_term = g1.value * g2.value * zv.value / gs.value;
    CVal v = dz.value - pole_term;
    double err = dz.abs_err + std::abs(pole_term) * 1e-13 +
                 std::abs(g1.value * g2.value / gs.value) * zv.abs_err;
    return {checked(v, "h_eval"), err};
}

Approx funeq_residual(CVal s, CVal t, bool include_sine_term, const EvalOptions& opt) {
    Approx h1 = h_eval(s, t, opt);
    Approx h2 = h_eval(1.0 - t, 1.0 - s, opt);
    CVal g1mt = gamma(1.0 - t, opt).value;
    CVal gs = gamma(s, opt).value;
    CVal scale = std::exp(log_two_pi * (s + t - 1.0));

    CVal lhs = h1.value / (scale * g1mt);
    CVal rhs = cospi_half(s + t - 1.0) * h2.value / gs;
    double err = h1.abs_err / std::abs(scale * g1mt) +
                 std::abs(cospi_half(s + t - 1.0)) * h2.abs_err / std::abs(gs);
    if (include_sine_term) {
        CVal sn = sinpi_half(s + t - 1.0);
        if (sn != CVal(0.0, 0.0)) {
            Approx a = A_shifted(1.0 - s, 1.0 - t, CVal(0.0, 0.0), -1, opt);
            CVal g1ms = gamma(1.0 - s, opt).value;
            rhs += sn * g1ms / pi * a.value;
            err += std::abs(sn * g1ms) / pi * a.abs_err;
        }
    }
    CVal v = lhs - rhs;
    return {checked(v, "funeq_residual"), err + 1e-14 * (std::abs(lhs) + std::abs(rhs))};
}

Approx F_pm(int sign, CVal s, CVal t, const FpmOptions& fopt, const EvalOptions& opt) {
    if (sign != 1 && sign != -1) throw DomainError("F_pm: sign must be +1 or -1");
    if (!(s.real() < -0.1 && t.real() > 1.1))
        throw DomainError("F_pm: requires Re(s) < -0.1 and Re(t) > 1.1");
    if (fopt.max_terms < 10) throw DomainError("F_pm: max_terms must be >= 10");

    const CVal nu = s + t - 1.0;
    const CVal alpha = t;
    const CVal gam = s + t;

    // Psi(alpha, gam; z) ~ z^{-alpha} sum_j c_j z^{-j} for large |z|
    constexpr int J = 3;
    CVal cj[J + 1];
    cj[0] = CVal(1.0, 0.0);
    for (int j = 1; j <= J; ++j)
        cj[j] = -cj[j - 1] * (alpha + static_cast<double>(j - 1)) *
                (alpha - gam + static_cast<double>(j)) / static_cast<double>(j);

    // log(+/- 2 pi i k) = log(2 pi k) +/- i pi/2 on the principal branch
    const CVal i_half_pi(0.0, sign * 0.5 * pi);
    auto z_pow = [&](double k, CVal expnt) {
        return std::exp(expnt * (CVal(std::log(2.0 * pi * k), 0.0) + i_half_pi));
    };

    CVal acc(0.0, 0.0);
    double err = 0.0;
    long used = 0;
    int quiet = 0;
    for (long k = 1; k <= fopt.max_terms; ++k) {
        const CVal zk(0.0, sign * 2.0 * pi * static_cast<double>(k));
        Approx psi = confluent_psi(alpha, gam, zk, opt);
        CVal asym(0.0, 0.0);
        for (int j = 0; j <= J; ++j)
            asym += cj[j] * z_pow(static_cast<double>(k), -alpha - static_cast<double>(j));
        CVal sig = sigma_complex(nu, k);
        CVal term = sig * (psi.value - asym);
        acc += term;
        err += std::abs(sig) * psi.abs_err;
        used = k;
        if (k >= 24 && std::abs(term) < 0.02 * fopt.tail_tol * (std::abs(acc) + 1e-12)) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }

    // Dirichlet resummation of the asymptotic orders over all k:
    // sum_k sigma_nu(k) (2 pi i k)^{-t-j} = (2 pi i)^{-t-j} zeta(t+j) zeta(t+j-nu)
    for (int j = 0; j <= J; ++j) {
        CVal expnt = -alpha - static_cast<double>(j);
        CVal pref = std::exp(expnt * (CVal(log_two_pi, 0.0) + i_half_pi));
        Approx za = riemann_zeta(alpha + static_cast<double>(j), opt);
        Approx zb = riemann_zeta(alpha + static_cast<double>(j) - nu, opt);
        acc += cj[j] * pref * za.value * zb.value;
        err += std::abs(cj[j] * pref) *
               (za.abs_err * std::abs(zb.value) + std::abs(za.value) * zb.abs_err);
    }

    // remaining error: sum_{k>used} sigma_nu(k) |Psi - asym| ~ k^{Re(s)-2-J}
    double p = 1.0 + J + 1.0 - s.real() + 0.0;  // decay exponent of the dropped piece
    double tail = std::abs(cj[J]) * std::pow(2.0 * pi, -t.real() - J - 1.0) *
                  std::pow(static_cast<double>(used), 1.0 - p) / (p - 1.0) * 4.0;
    err += tail;
    if (tail > fopt.tail_tol * (std::abs(acc) + 1e-12))
        throw SlowConvergence("F_pm: tail estimate exceeds tail_tol at max_terms");
    return {checked(acc, "F_pm"), err};
}

Approx corollary_A_check(CVal s, CVal t, const FpmOptions& fopt, const EvalOptions& opt) {
    Approx a = A_shifted(s, t, CVal(0.0, 0.0), -1, opt);
    CVal gs = gamma(s, opt).value;
    CVal lhs = 2.0 * gs * a.value;

    Approx fp = F_pm(+1, s, t, fopt, opt);
    Approx fm = F_pm(-1, s, t, fopt, opt);
    CVal wp = std::exp((s + t) * CVal(log_two_pi, 0.5 * pi));
    CVal wm = std::exp((s + t) * CVal(log_two_pi, -0.5 * pi));
    CVal rhs = wp * fp.value + wm * fm.value;

    double err = 2.0 * std::abs(gs) * a.abs_err + std::abs(wp) * fp.abs_err +
                 std::abs(wm) * fm.abs_err;
    return {checked(lhs - rhs, "corollary_A_check"), err};
}

}  // namespace tornzeta
