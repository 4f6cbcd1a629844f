#include "tornzeta/witten.hpp"

#include <cmath>

#include "tornzeta/special.hpp"
#include "tornzeta/tornheim.hpp"

namespace tornzeta {

Approx witten_eval(CVal s, const EvalOptions& opt) {
    CVal denom = 1.0 + 2.0 * cospi(s);
    if (std::abs(denom) < 1e-6)
        throw NearSingularDenominator("witten_eval: 1 + 2 cos(pi s) vanishes");
    Approx a = A_shifted(s, s, s, -1, opt);
    CVal scale = std::exp(0.69314718055994530942 * (s + 1.0));  // 2^{s+1}
    CVal v = scale * a.value / denom;
    return {checked(v, "witten_eval"),
            std::abs(scale / denom) * a.abs_err + 1e-15 * std::abs(v)};
}

Approx witten_positive_int(long a, const EvalOptions& opt) {
    if (a < 1) throw DomainError("witten_positive_int: a must be >= 1");
    double pref = std::pow(2.0, static_cast<double>(a + 2)) /
                  ((a % 2 == 0) ? 3.0 : -1.0);
    CVal acc(0.0, 0.0);
    double err = 0.0;
    for (long k = 0; 2 * k <= a; ++k) {
        double bi = to_double(Rational(binom_big(2 * a - 2 * k - 1, a - 1)));
        Approx z1 = riemann_zeta(CVal(2.0 * static_cast<double>(k), 0.0), opt);
        Approx z2 = riemann_zeta(CVal(static_cast<double>(3 * a - k), 0.0), opt);
        acc += bi * z1.value * z2.value;
        err += bi * (z1.abs_err * std::abs(z2.value) + std::abs(z1.value) * z2.abs_err);
    }
    return {checked(pref * acc, "witten_positive_int"),
            std::abs(pref) * err + 1e-15 * std::abs(pref * acc)};
}

WittenZero witten_at_zero(const EvalOptions& opt) {
    WittenZero out;
    out.value = Rational(1, 3);
    // central differences of witten_eval around 0 with one Richardson step;
    // dyadic steps keep the shifted arguments exact
    const double h = 1.0 / 1024.0;
    auto diff = [&](double step) {
        Approx p = witten_eval(CVal(step, 0.0), opt);
        Approx m = witten_eval(CVal(-step, 0.0), opt);
        return Approx{(p.value - m.value) / (2.0 * step),
                      (p.abs_err + m.abs_err) / (2.0 * step)};
    };
    Approx d1 = diff(h);
    Approx d2 = diff(0.5 * h);
    CVal rich = (4.0 * d2.value - d1.value) / 3.0;
    double err = std::abs(d2.value - d1.value) / 3.0 + d2.abs_err + 0.5 * d1.abs_err;
    out.derivative = {checked(rich, "witten_at_zero derivative"), err};
    return out;
}

WittenReport witten_deriv_neg_odd(long a, const EvalOptions& opt) {
    if (a < 1 || a % 2 == 0)
        throw ParityError("witten_deriv_neg_odd: a must be odd and >= 1");
    CVal acc(0.0, 0.0);
    double err = 0.0;
    for (long k = 0; 2 * k <= a - 1; ++k) {
        double bi = to_double(Rational(binom_big(a, 2 * k)));
        double zv = to_double(zeta_nonpos_exact(a + 2 * k));
        Approx zd = riemann_zeta_deriv(
            CVal(static_cast<double>(-2 * a + 2 * k), 0.0), 1, opt);
        acc += bi * zv * zd.value;
        err += std::abs(bi * zv) * zd.abs_err;
    }
    double p2 = std::pow(2.0, static_cast<double>(-a + 2));
    acc *= p2;
    err *= p2;
    Rational fac = Rational(factorial_big(a) * factorial_big(a)) /
                   Rational(factorial_big(2 * a + 1));
    Approx zd = riemann_zeta_deriv(CVal(static_cast<double>(-3 * a - 1), 0.0), 1, opt);
    double coeff = std::pow(2.0, static_cast<double>(-a + 1)) * to_double(fac);
    acc += coeff * zd.value;
    err += std::abs(coeff) * zd.abs_err;

    WittenReport rep;
    rep.point = -a;
    rep.kind = WittenKind::SimpleZero;
    rep.value_or_deriv = {checked(acc, "witten_deriv_neg_odd"), err};
    rep.predicted_sign = (((a - 1) / 2) % 2 == 0) ? 1 : -1;
    return rep;
}

WittenReport witten_dderiv_neg_even(long a, const EvalOptions& opt) {
    if (a < 2 || a % 2 == 1)
        throw ParityError("witten_dderiv_neg_even: a must be even and >= 2");
    CVal acc(0.0, 0.0);
    double err = 0.0;
    for (long k = 0; k <= a / 2; ++k) {
        double bi = to_double(Rational(binom_big(a, 2 * k)));
        Approx z1 = riemann_zeta_deriv(
            CVal(static_cast<double>(-a - 2 * k), 0.0), 1, opt);
        Approx z2 = riemann_zeta_deriv(
            CVal(static_cast<double>(-2 * a + 2 * k), 0.0), 1, opt);
        acc += bi * z1.value * z2.value;
        err += bi * (z1.abs_err * std::abs(z2.value) + std::abs(z1.value) * z2.abs_err);
    }
    double p2 = std::pow(2.0, static_cast<double>(-a + 2));

    WittenReport rep;
    rep.point = -a;
    rep.kind = WittenKind::DoubleZero;
    rep.value_or_deriv = {checked(p2 * acc, "witten_dderiv_neg_even"), p2 * err};
    rep.predicted_sign = ((a / 2) % 2 == 0) ? 1 : -1;
    return rep;
}

}  // namespace tornzeta
