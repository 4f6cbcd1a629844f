#include "tornzeta/closed_forms.hpp"

#include <cmath>

#include "tornzeta/special.hpp"

namespace tornzeta {

// ---------------------------------------------------------------------------
// ExactValue

ExactValue& ExactValue::add_zeta(long arg, const Rational& coeff) {
    if (coeff != 0) {
        auto& c = zeta_coeffs[arg];
        c += coeff;
        if (c == 0) zeta_coeffs.erase(arg);
    }
    return *this;
}

ExactValue& ExactValue::add_zeta_deriv(long arg, const Rational& coeff) {
    if (coeff != 0) {
        auto& c = zeta_deriv_coeffs[arg];
        c += coeff;
        if (c == 0) zeta_deriv_coeffs.erase(arg);
    }
    return *this;
}

Approx ExactValue::to_approx(const EvalOptions& opt) const {
    CVal v(to_double(rational_part), 0.0);
    double err = 1e-16 * std::abs(v.real());
    for (const auto& [arg, coeff] : zeta_coeffs) {
        Approx z = riemann_zeta(CVal(static_cast<double>(arg), 0.0), opt);
        double c = to_double(coeff);
        v += c * z.value;
        err += std::abs(c) * (z.abs_err + 1e-16 * std::abs(z.value));
    }
    for (const auto& [arg, coeff] : zeta_deriv_coeffs) {
        Approx z = riemann_zeta_deriv(CVal(static_cast<double>(arg), 0.0), 1, opt);
        double c = to_double(coeff);
        v += c * z.value;
        err += std::abs(c) * (z.abs_err + 1e-16 * std::abs(z.value));
    }
    return {v, err};
}

// ---------------------------------------------------------------------------
// F

Approx F_eval(CVal s, CVal t, long c, const EvalOptions& opt) {
    if (c < 0) throw DomainError("F_eval: c must be >= 0");
    CVal acc(0.0, 0.0);
    double err = 0.0;
    for (long k = 0; k <= c; ++k) {
        double b = to_double(Rational(binom_big(c, k)));
        Approx z1 = riemann_zeta(s - static_cast<double>(k), opt);
        Approx z2 = riemann_zeta(t - static_cast<double>(c - k), opt);
        acc += b * z1.value * z2.value;
        err += b * (z1.abs_err * std::abs(z2.value) + std::abs(z1.value) * z2.abs_err);
    }
    return {checked(acc, "F_eval"), err + 1e-15 * std::abs(acc)};
}

Rational F_exact(long a, long b, long c) {
    if (c < 0) throw DomainError("F_exact: c must be >= 0");
    if (a > 0 || b - c > 0)
        throw DomainError("F_exact: a zeta-argument would be positive");
    Rational acc(0);
    for (long k = 0; k <= c; ++k)
        acc += Rational(binom_big(c, k)) * zeta_nonpos_exact(-(a - k)) *
               zeta_nonpos_exact(-(b - c + k));
    return acc;
}

// ---------------------------------------------------------------------------
// Lemma 4.1

namespace {

// The closed sum (1); empty (hence zero) for negative a.
Approx lemma41_sum(long a, CVal t, CVal u, const EvalOptions& opt) {
    Approx out{{0.0, 0.0}, 0.0};
    for (long k = 0; 2 * k <= a; ++k) {
        Approx bi = binom_general(t + static_cast<double>(a - 2 * k - 1),
                                  a - 2 * k);
        if (bi.value == CVal(0.0, 0.0)) continue;
        Approx z1 = riemann_zeta(CVal(2.0 * static_cast<double>(k), 0.0), opt);
        Approx z2 = riemann_zeta(t + u + static_cast<double>(a - 2 * k), opt);
        CVal term = 2.0 * bi.value * z1.value * z2.value;
        out.value += term;
        out.abs_err += 2.0 * std::abs(bi.value) *
                           (z1.abs_err * std::abs(z2.value) +
                            std::abs(z1.value) * z2.abs_err) +
                       2.0 * bi.abs_err * std::abs(z1.value * z2.value);
    }
    return out;
}

void guard_zeta_pole(CVal arg, const char* what) {
    if (near_int(arg, 1, 1e-8)) throw SingularPoint(what);
}

}  // namespace

Approx lemma41_A_int(long a, CVal t, CVal u, const EvalOptions& opt) {
    if (a < 0) throw DomainError("lemma41_A_int: a must be >= 0");
    for (long k = 0; 2 * k <= a; ++k)
        guard_zeta_pole(t + u + static_cast<double>(a - 2 * k),
                        "lemma41_A_int: t+u on a singular hyperplane");
    return lemma41_sum(a, t, u, opt);
}

Approx lemma41_A_negb(CVal s, long b, CVal u, const EvalOptions& opt) {
    if (b < 0) throw DomainError("lemma41_A_negb: b must be >= 0");
    CVal cs = cospi(s);
    Approx out{{0.0, 0.0}, 0.0};
    for (long k = 0; k <= b; ++k) {
        CVal w = cs + static_cast<double>((k % 2 == 0) ? 1 : -1);
        if (w == CVal(0.0, 0.0)) continue;
        guard_zeta_pole(s - static_cast<double>(k), "lemma41_A_negb: zeta pole");
        guard_zeta_pole(u - static_cast<double>(b - k),
                        "lemma41_A_negb: u on a singular hyperplane");
        double bi = to_double(Rational(binom_big(b, k)));
        Approx z1 = riemann_zeta(s - static_cast<double>(k), opt);
        Approx z2 = riemann_zeta(u - static_cast<double>(b - k), opt);
        out.value += bi * w * z1.value * z2.value;
        out.abs_err += bi * std::abs(w) *
                       (z1.abs_err * std::abs(z2.value) + std::abs(z1.value) * z2.abs_err);
    }
    return out;
}

Approx lemma41_limit_u(CVal s, long b, long c, const EvalOptions& opt) {
    if (b < 0 || c < 0) throw DomainError("lemma41_limit_u: b, c must be >= 0");
    CVal factor = cospi(s) - static_cast<double>(((b + c) % 2 == 0) ? 1 : -1);
    Approx out{{0.0, 0.0}, 0.0};
    if (factor != CVal(0.0, 0.0)) {
        Approx f = F_eval(s, CVal(-static_cast<double>(c), 0.0), b, opt);
        out.value = factor * f.value;
        out.abs_err = std::abs(factor) * f.abs_err;
    }
    if (c == 0) {
        Approx z = riemann_zeta(s - static_cast<double>(b), opt);
        double sgn = (b % 2 == 0) ? -1.0 : 1.0;  // (-1)^{b+1}
        out.value += sgn * z.value;
        out.abs_err += z.abs_err;
    }
    return out;
}

Approx lemma41_limit_t(CVal s, long b, long c, const EvalOptions& opt) {
    if (b < 0 || c < 0) throw DomainError("lemma41_limit_t: b, c must be >= 0");
    CVal factor = cospi(s) - static_cast<double>(((b + c) % 2 == 0) ? 1 : -1);
    Approx out{{0.0, 0.0}, 0.0};
    if (factor != CVal(0.0, 0.0)) {
        Approx f = F_eval(s, CVal(-static_cast<double>(c), 0.0), b, opt);
        Rational coeff = Rational(((c % 2 == 0) ? -1 : 1) * factorial_big(b) *
                                  factorial_big(c)) /
                         Rational(factorial_big(b + c + 1));
        Approx z = riemann_zeta(s - static_cast<double>(b + c + 1), opt);
        CVal inner = f.value + to_double(coeff) * z.value;
        out.value = factor * inner;
        out.abs_err = std::abs(factor) * (f.abs_err + std::abs(to_double(coeff)) * z.abs_err);
    }
    if (c == 0) {
        Approx z = riemann_zeta(s - static_cast<double>(b), opt);
        double sgn = (b % 2 == 0) ? -1.0 : 1.0;
        out.value += sgn * z.value;
        out.abs_err += z.abs_err;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parity result (Prop 4.3)

namespace {

// A*(c,a;b): the Lemma 4.1(1) sum for A(c,a;b) with the k = (a+b+c-1)/2 term
// removed (where zeta would hit its pole).
Approx a_star(long c, long a, long b, const EvalOptions& opt) {
    Approx out{{0.0, 0.0}, 0.0};
    const long skip = (a + b + c - 1) / 2;
    for (long k = 0; 2 * k <= c; ++k) {
        if (k == skip) continue;
        Approx bi = binom_general(CVal(static_cast<double>(a + c - 2 * k - 1), 0.0),
                                  c - 2 * k);
        if (bi.value == CVal(0.0, 0.0)) continue;
        Approx z1 = riemann_zeta(CVal(2.0 * static_cast<double>(k), 0.0), opt);
        Approx z2 = riemann_zeta(
            CVal(static_cast<double>(a + b + c - 2 * k), 0.0), opt);
        out.value += 2.0 * bi.value * z1.value * z2.value;
        out.abs_err += 2.0 * std::abs(bi.value) *
                       (z1.abs_err * std::abs(z2.value) + std::abs(z1.value) * z2.abs_err);
    }
    return out;
}

Approx a_int_or_zero(long a, long t, long u, const EvalOptions& opt) {
    if (a < 0) return {{0.0, 0.0}, 0.0};
    return lemma41_sum(a, CVal(static_cast<double>(t), 0.0),
                       CVal(static_cast<double>(u), 0.0), opt);
}

}  // namespace

Approx parity_eval(long a, long b, long c, const EvalOptions& opt) {
    if ((a + b + c) % 2 == 0)
        throw ParityViolation("parity_eval: a+b+c must be odd");
    if (!(a + c >= 2 && b + c >= 2 && a + b + c >= 3))
        throw DomainError("parity_eval: requires a+c >= 2, b+c >= 2, a+b+c >= 3");

    const double sa = (a % 2 == 0) ? 1.0 : -1.0;
    const double sb = (b % 2 == 0) ? 1.0 : -1.0;
    Approx acb = a_int_or_zero(a, c, b, opt);
    Approx bca = a_int_or_zero(b, c, a, opt);

    CVal val;
    double err;
    if (a + b >= 2) {
        Approx cab = a_int_or_zero(c, a, b, opt);
        Approx cba = a_int_or_zero(c, b, a, opt);
        val = sa * (cab.value + acb.value) + sb * (cba.value + bca.value);
        err = cab.abs_err + acb.abs_err + cba.abs_err + bca.abs_err;
    } else {
        Approx cab = a_star(c, a, b, opt);
        Approx cba = a_star(c, b, a, opt);
        long n = 1 - a - b;
        Rational dcoeff = Rational(2) * pochhammer_shift_deriv(a, n) /
                          Rational(factorial_big(n));
        Approx z = riemann_zeta(CVal(static_cast<double>(a + b + c - 1), 0.0), opt);
        val = sa * (cab.value + acb.value) + sb * (cba.value + bca.value) +
              sa * to_double(dcoeff) * z.value;
        err = cab.abs_err + acb.abs_err + cba.abs_err + bca.abs_err +
              std::abs(to_double(dcoeff)) * z.abs_err;
    }
    return {checked(0.5 * val, "parity_eval"), 0.5 * err + 1e-15 * std::abs(val)};
}

// ---------------------------------------------------------------------------
// Non-positive integer values (Prop 4.4)

Approx nonpositive_c(CVal s, CVal t, long c, const EvalOptions& opt) {
    if (c < 0) throw DomainError("nonpositive_c: c must be >= 0");
    if (near_int(s + t, c + 2, 1e-8))
        throw SingularPoint("nonpositive_c: s+t = c+2");
    try {
        return F_eval(s, t, c, opt);
    } catch (const PoleError& e) {
        throw SingularPoint(std::string("nonpositive_c: ") + e.what());
    }
}

Approx nonpositive_ab(long a, long b, CVal u, const EvalOptions& opt) {
    if (a < 0 || b < 0) throw DomainError("nonpositive_ab: a, b must be >= 0");
    if (near_int(u, a + b + 2, 1e-8))
        throw SingularPoint("nonpositive_ab: u = a+b+2");

    Approx f1, f2;
    try {
        f1 = F_eval(u, CVal(-static_cast<double>(a), 0.0), b, opt);
        f2 = F_eval(u, CVal(-static_cast<double>(b), 0.0), a, opt);
    } catch (const PoleError& e) {
        throw SingularPoint(std::string("nonpositive_ab: ") + e.what());
    }
    double s1 = (a % 2 == 0) ? -1.0 : 1.0;  // (-1)^{a+1}
    double s2 = (b % 2 == 0) ? -1.0 : 1.0;
    Rational coeff = Rational(factorial_big(a) * factorial_big(b)) /
                     Rational(factorial_big(a + b + 1));
    Approx z = riemann_zeta(u - static_cast<double>(a + b + 1), opt);
    CVal val = s1 * f1.value + s2 * f2.value + to_double(coeff) * z.value;
    double err = f1.abs_err + f2.abs_err + std::abs(to_double(coeff)) * z.abs_err;
    if (a == 0) {
        Approx za = riemann_zeta(u - static_cast<double>(b), opt);
        val -= za.value;
        err += za.abs_err;
    }
    if (b == 0) {
        Approx zb = riemann_zeta(u - static_cast<double>(a), opt);
        val -= zb.value;
        err += zb.abs_err;
    }
    return {checked(val, "nonpositive_ab"), err};
}

Approx nonpositive_bc_limit(CVal s, long b, long c, const EvalOptions& opt) {
    if (b < 0 || c < 0) throw DomainError("nonpositive_bc_limit: b, c must be >= 0");
    if (near_int(s, b + c + 2, 1e-8))
        throw SingularPoint("nonpositive_bc_limit: s = b+c+2");
    try {
        Approx f = F_eval(s, CVal(-static_cast<double>(b), 0.0), c, opt);
        Rational coeff = Rational(((b % 2 == 0) ? -1 : 1) * factorial_big(b) *
                                  factorial_big(c)) /
                         Rational(factorial_big(b + c + 1));
        Approx z = riemann_zeta(s - static_cast<double>(b + c + 1), opt);
        return {checked(f.value + to_double(coeff) * z.value, "nonpositive_bc_limit"),
                f.abs_err + std::abs(to_double(coeff)) * z.abs_err};
    } catch (const PoleError& e) {
        throw SingularPoint(std::string("nonpositive_bc_limit: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Corollary 4.5 and the convolution lemma, exact.

namespace {

Rational path_term(long x, long c) {
    // (-1)^{x+1} x! c! / (x+c+1)!
    Rational r = Rational(factorial_big(x) * factorial_big(c)) /
                 Rational(factorial_big(x + c + 1));
    return (x % 2 == 0) ? -r : r;
}

}  // namespace

Rational corollary_values(long a, long b, long c, LimitPath path) {
    if (a < 0 || b < 0 || c < 0)
        throw DomainError("corollary_values: a, b, c must be >= 0");
    Rational base = F_exact(-a, -b, c);
    Rational zv = zeta_nonpos_exact(a + b + c + 1);
    switch (path) {
        case LimitPath::JointST:
            return base;
        case LimitPath::UThen:
            return base + (path_term(a, c) + path_term(b, c)) * zv;
        case LimitPath::SThenU:
            return base + path_term(b, c) * zv;
        case LimitPath::TThenU:
            return base + path_term(a, c) * zv;
    }
    throw DomainError("corollary_values: bad path");
}

Rational convolution_check(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0)
        throw DomainError("convolution_check: a, b, c must be >= 0");
    auto sgn = [](long x) { return (x % 2 == 0) ? 1 : -1; };
    Rational lhs = Rational(sgn(a + b)) * F_exact(-a, -b, c) +
                   Rational(sgn(b + c)) * F_exact(-b, -c, a) +
                   Rational(sgn(c + a)) * F_exact(-c, -a, b);
    Rational coeff = Rational(sgn(c)) * Rational(factorial_big(a) * factorial_big(b)) /
                         Rational(factorial_big(a + b + 1)) +
                     Rational(sgn(a)) * Rational(factorial_big(b) * factorial_big(c)) /
                         Rational(factorial_big(b + c + 1)) +
                     Rational(sgn(b)) * Rational(factorial_big(c) * factorial_big(a)) /
                         Rational(factorial_big(c + a + 1));
    Rational rhs = coeff * zeta_nonpos_exact(a + b + c + 1);
    if (a == 0 && b == 0 && c == 0) rhs += 1;
    return lhs - rhs;
}

namespace {

RationalLaurent p_tilde_minus_delta(long m, long order) {
    RationalLaurent q(-m - 1, order);
    // singular part (-1)^m m! / x^{m+1}
    Rational lead = Rational(factorial_big(m));
    q.set(-m - 1, (m % 2 == 0) ? lead : -lead);
    // tail 2^{m+1} sum_k (-1)^{m+k} zeta(-m-k) 2^k x^k / k!
    BigInt two_pow = BigInt(1) << (m + 1);
    Rational kfac(1);
    BigInt two_k = 1;
    for (long k = 0; k <= order; ++k) {
        if (k > 0) {
            kfac *= k;
            two_k <<= 1;
        }
        Rational coeff = Rational(two_pow) * zeta_nonpos_exact(m + k) *
                         Rational(two_k) / kfac;
        q.set(k, ((m + k) % 2 == 0) ? coeff : -coeff);
    }
    return q;
}

Rational formal_R(long a, long b, long c, long order) {
    if (a < 0 || b < 0 || c < 0)
        throw DomainError("convolution_check_formal: a, b, c must be >= 0");
    if (order < a + b + c + 3)
        throw InsufficientOrder("convolution_check_formal: order must be >= a+b+c+3");
    RationalLaurent prod =
        p_tilde_minus_delta(a, order) * p_tilde_minus_delta(b, order) *
        p_tilde_minus_delta(c, order);
    Rational res = prod.formal_residue();
    // 2^{-a-b-c-2}
    return res / Rational(BigInt(1) << (a + b + c + 2));
}

}  // namespace

Rational convolution_formal_R(long a, long b, long c, long order) {
    return formal_R(a, b, c, order);
}

Rational convolution_check_formal(long a, long b, long c, long order) {
    Rational R = formal_R(a, b, c, order);
    // first-path value of R: the F-combination minus the zeta coefficient
    auto sgn = [](long x) { return (x % 2 == 0) ? 1 : -1; };
    Rational first = Rational(sgn(a + b)) * F_exact(-a, -b, c) +
                     Rational(sgn(b + c)) * F_exact(-b, -c, a) +
                     Rational(sgn(c + a)) * F_exact(-c, -a, b);
    Rational coeff = Rational(sgn(c)) * Rational(factorial_big(a) * factorial_big(b)) /
                         Rational(factorial_big(a + b + 1)) +
                     Rational(sgn(a)) * Rational(factorial_big(b) * factorial_big(c)) /
                         Rational(factorial_big(b + c + 1)) +
                     Rational(sgn(b)) * Rational(factorial_big(c) * factorial_big(a)) /
                         Rational(factorial_big(c + a + 1));
    first -= coeff * zeta_nonpos_exact(a + b + c + 1);
    return R - first;
}

}  // namespace tornzeta
