#include "tornzeta/special.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <vector>

namespace tornzeta {

void EvalOptions::validate() const {
    if (target_rel_tol <= 0 || series_terms <= 0 || em_correction_order <= 0 ||
        quad_height <= 0 || quad_rel_tol <= 0 || oracle_sum_limit <= 0 ||
        singular_guard <= 0)
        throw DomainError("EvalOptions: all parameters must be positive");
    if (em_correction_order % 2 != 0)
        throw DomainError("EvalOptions: em_correction_order must be even");
}

const EvalOptions& default_options() {
    static const EvalOptions opt{};
    return opt;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers, exact.

namespace {

std::vector<Rational>& bernoulli_table() {
    static std::vector<Rational> table{Rational(1), Rational(-1, 2)};
    return table;
}
std::mutex bernoulli_mutex;

}  // namespace

Rational bernoulli(long n) {
    if (n < 0) throw DomainError("bernoulli: n must be >= 0");
    if (n > 2 && n % 2 == 1) return Rational(0);
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& table = bernoulli_table();
    while (static_cast<long>(table.size()) <= n) {
        // sum_{k=0}^{m} binom(m+1, k) B_k = 0  for m >= 1
        long m = static_cast<long>(table.size());
        Rational acc(0);
        BigInt binom = 1;  // binom(m+1, 0)
        for (long k = 0; k < m; ++k) {
            acc += Rational(binom) * table[static_cast<size_t>(k)];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        table.push_back(-acc / Rational(m + 1));
    }
    return table[static_cast<size_t>(n)];
}

Rational zeta_nonpos_exact(long n) {
    if (n < 0) throw DomainError("zeta_nonpos_exact: n must be >= 0");
    // zeta(-n) = (-1)^n B_{n+1} / (n+1)
    Rational v = bernoulli(n + 1) / Rational(n + 1);
    return (n % 2 == 0) ? v : -v;
}

// ---------------------------------------------------------------------------
// Gamma and friends.

namespace {

// B_{2n} / (2n (2n-1)) for the Stirling series, n = 1..15.
const std::array<double, 15>& stirling_coeffs() {
    static const std::array<double, 15> c = [] {
        std::array<double, 15> a{};
        for (int n = 1; n <= 15; ++n)
            a[static_cast<size_t>(n - 1)] =
                to_double(bernoulli(2 * n) / Rational(2L * n * (2L * n - 1)));
        return a;
    }();
    return c;
}

// B_{2k} / (2k)! for Euler-Maclaurin corrections, k = 1..20.
const std::array<double, 20>& em_coeffs() {
    static const std::array<double, 20> c = [] {
        std::array<double, 20> a{};
        for (int k = 1; k <= 20; ++k)
            a[static_cast<size_t>(k - 1)] =
                to_double(bernoulli(2 * k) / Rational(factorial_big(2 * k)));
        return a;
    }();
    return c;
}

constexpr double half_log_two_pi = 0.91893853320467274178032973640561764;

// log Gamma on |z| >= 10, Re z > 0 (any 2*pi*i ambiguity is harmless to
// callers that exponentiate).
CVal stirling_lgamma(CVal z) {
    const auto& c = stirling_coeffs();
    CVal lg = (z - 0.5) * std::log(z) - z + half_log_two_pi;
    CVal zi = 1.0 / z;
    CVal zp = zi;
    CVal z2 = zi * zi;
    for (double cn : c) {
        lg += cn * zp;
        zp *= z2;
    }
    return lg;
}

CVal log_sinpi(CVal z) {
    const CVal i(0.0, 1.0);
    if (z.imag() > 5.0)
        return -i * pi * z + std::log(1.0 - std::exp(2.0 * i * pi * z)) +
               CVal(-0.69314718055994530942, 0.5 * pi);
    if (z.imag() < -5.0)
        return i * pi * z + std::log(1.0 - std::exp(-2.0 * i * pi * z)) +
               CVal(-0.69314718055994530942, -0.5 * pi);
    return std::log(sinpi(z));
}

CVal lgamma_main(CVal z, int& steps) {
    // upward recurrence into |z| >= 10, then Stirling
    CVal log_shift(0.0, 0.0);
    steps = 0;
    while (std::abs(z) < 10.0) {
        log_shift += std::log(z);
        z += 1.0;
        ++steps;
    }
    return stirling_lgamma(z) - log_shift;
}

CVal lgamma_complex(CVal z, int& steps) {
    if (z.real() >= 0.5) return lgamma_main(z, steps);
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    return std::log(CVal(pi)) - log_sinpi(z) - lgamma_main(1.0 - z, steps);
}

}  // namespace

Approx gamma(CVal z, const EvalOptions&) {
    checked(z, "gamma argument");
    if (z.real() < 0.5) {
        long n = nearest_int(z.real());
        if (n <= 0 && near_int(z, n, 1e-13))
            throw PoleError("gamma: pole at non-positive integer");
    }
    int steps = 0;
    CVal lg = lgamma_complex(z, steps);
    if (lg.real() > 705.0) throw NonConvergence("gamma: |Gamma(z)| overflows double");
    CVal g = std::exp(lg);
    checked(g, "gamma");
    double rel = 1e-15 * (steps + 8.0);
    if (z.real() < 0.5) rel += 2e-15 * (std::abs(z.imag()) + 1.0);
    return {g, std::abs(g) * rel};
}

namespace detail {

CVal digamma(CVal z) {
    if (z.real() < 0.5)
        return digamma(1.0 - z) - pi * cospi(z) / sinpi(z);
    CVal shift(0.0, 0.0);
    while (std::abs(z) < 12.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ log z - 1/(2z) - sum B_{2n} / (2n z^{2n})
    CVal r = std::log(z) - 0.5 / z;
    CVal z2 = 1.0 / (z * z);
    CVal zp = z2;
    for (int n = 1; n <= 10; ++n) {
        r -= to_double(bernoulli(2 * n) / Rational(2 * n)) * zp;
        zp *= z2;
    }
    return r + shift;
}

CVal trigamma(CVal z) {
    if (z.real() < 0.5) {
        CVal s = sinpi(z);
        return pi * pi / (s * s) - trigamma(1.0 - z);
    }
    CVal shift(0.0, 0.0);
    while (std::abs(z) < 12.0) {
        shift += 1.0 / (z * z);
        z += 1.0;
    }
    // psi'(z) ~ 1/z + 1/(2z^2) + sum B_{2n} / z^{2n+1}
    CVal zi = 1.0 / z;
    CVal r = zi + 0.5 * zi * zi;
    CVal z2 = zi * zi;
    CVal zp = z2 * zi;
    for (int n = 1; n <= 10; ++n) {
        r += to_double(bernoulli(2 * n)) * zp;
        zp *= z2;
    }
    return r + shift;
}

PParts chi_smooth_part(CVal s) {
    // P(s) = 2^s pi^{s-1} Gamma(1-s); valid away from s = 1, 2, 3, ...
    constexpr double log2 = 0.69314718055994530942;
    constexpr double logpi = 1.14472988584940017414;
    int steps = 0;
    CVal p = std::exp(log2 * s + logpi * (s - 1.0) + lgamma_complex(1.0 - s, steps));
    CVal q = log2 + logpi - digamma(1.0 - s);
    CVal dq = trigamma(1.0 - s);
    return {p, p * q, p * (q * q + dq)};
}

ZetaJet zeta_em_jet(CVal s, int max_order, const EvalOptions& opt) {
    const long N = std::max<long>(opt.series_terms,
                                  static_cast<long>(std::ceil(0.75 * std::abs(s.imag()))) + 20);
    const int K = std::max(2, opt.em_correction_order);
    const double logN = std::log(static_cast<double>(N));

    CVal f(0, 0), df(0, 0), ddf(0, 0);
    for (long n = 1; n < N; ++n) {
        double L = std::log(static_cast<double>(n));
        CVal t = std::exp(-s * L);
        f += t;
        if (max_order >= 1) df -= L * t;
        if (max_order >= 2) ddf += L * L * t;
    }

    // N^{1-s}/(s-1) + N^{-s}/2, with s-jets
    CVal u = std::exp((1.0 - s) * logN);           // u' = -logN u
    CVal v = 1.0 / (s - 1.0);                      // v' = -v^2, v'' = 2 v^3
    f += u * v;
    if (max_order >= 1) df += -logN * u * v - u * v * v;
    if (max_order >= 2) ddf += logN * logN * u * v + 2.0 * logN * u * v * v + 2.0 * u * v * v * v;
    CVal h = 0.5 * std::exp(-s * logN);
    f += h;
    if (max_order >= 1) df -= logN * h;
    if (max_order >= 2) ddf += logN * logN * h;

    // Bernoulli corrections: B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
    const auto& bc = em_coeffs();
    CVal P = s, dP(1, 0), ddP(0, 0);               // (s)_1 jet
    CVal W = std::exp((-s - 1.0) * logN);          // N^{-s-1}
    const double N2 = static_cast<double>(N) * static_cast<double>(N);
    double last_term_mag = 0.0;
    double fmag = std::abs(f);
    for (int k = 1; k <= K; ++k) {
        double b = bc[static_cast<size_t>(k - 1)];
        CVal term = b * P * W;
        f += term;
        if (max_order >= 1) df += b * (dP * W - logN * P * W);
        if (max_order >= 2)
            ddf += b * (ddP * W - 2.0 * logN * dP * W + logN * logN * P * W);
        last_term_mag = std::abs(term);
        if (last_term_mag < 1e-18 * std::max(1.0, fmag)) break;
        // advance (s)_{2k-1} -> (s)_{2k+1} and N-power
        for (long c : {2L * k - 1, 2L * k}) {
            CVal lin = s + static_cast<double>(c);
            ddP = ddP * lin + 2.0 * dP;
            dP = dP * lin + P;
            P = P * lin;
        }
        W /= N2;
    }

    double rem = last_term_mag *
                 (std::abs(s + CVal(2.0 * K + 1.0, 0)) / (s.real() + 2.0 * K + 1.0));
    double noise = 2e-16 * (static_cast<double>(N) * 0.02 + 4.0) * std::max(1.0, fmag);
    double deriv_factor = (max_order >= 1) ? (1.0 + logN) * (1.0 + logN) : 1.0;
    return {f, df, ddf, (rem + noise) * deriv_factor};
}

}  // namespace detail

Approx riemann_zeta(CVal s, const EvalOptions& opt) {
    checked(s, "riemann_zeta argument");
    if (near_int(s, 1, 1e-13)) throw PoleError("riemann_zeta: pole at s = 1");
    // Euler-Maclaurin holds on a strip wide enough to cover s near 0, where
    // the reflection formula would hit the zeta(1-s) pole.
    if (s.real() >= -0.6) {
        auto jet = detail::zeta_em_jet(s, 0, opt);
        return {checked(jet.f, "riemann_zeta"), jet.abs_err};
    }
    // zeta(s) = P(s) sin(pi s / 2) zeta(1 - s)
    auto parts = detail::chi_smooth_part(s);
    CVal sn = sinpi_half(s);
    auto jet = detail::zeta_em_jet(1.0 - s, 0, opt);
    CVal z = parts.p * sn * jet.f;
    double err = std::abs(parts.p * sn) * jet.abs_err +
                 std::abs(z) * 1e-14 * (std::abs(s.imag()) * 0.2 + 2.0);
    return {checked(z, "riemann_zeta"), err};
}

Approx riemann_zeta_deriv(CVal s, int order, const EvalOptions& opt) {
    checked(s, "riemann_zeta_deriv argument");
    if (order != 1 && order != 2)
        throw UnsupportedOrder("riemann_zeta_deriv: order must be 1 or 2");
    if (near_int(s, 1, 1e-13)) throw PoleError("riemann_zeta_deriv: pole at s = 1");
    if (s.real() >= -0.6) {
        auto jet = detail::zeta_em_jet(s, order, opt);
        return {checked(order == 1 ? jet.df : jet.ddf, "riemann_zeta_deriv"), jet.abs_err};
    }
    auto parts = detail::chi_smooth_part(s);
    CVal S = sinpi_half(s);
    CVal dS = 0.5 * pi * cospi_half(s);
    CVal ddS = -0.25 * pi * pi * S;
    auto jet = detail::zeta_em_jet(1.0 - s, order, opt);
    CVal Z = jet.f, dZ = -jet.df, ddZ = jet.ddf;  // chain rule through 1-s
    CVal r;
    if (order == 1) {
        r = parts.dp * S * Z + parts.p * dS * Z + parts.p * S * dZ;
    } else {
        r = parts.ddp * S * Z + parts.p * ddS * Z + parts.p * S * ddZ +
            2.0 * parts.dp * dS * Z + 2.0 * parts.dp * S * dZ + 2.0 * parts.p * dS * dZ;
    }
    double scale = std::abs(parts.p) * (std::abs(S) + std::abs(dS) + 1.0) *
                   (std::abs(Z) + std::abs(dZ) + 1.0);
    return {checked(r, "riemann_zeta_deriv"), jet.abs_err * std::abs(parts.p) * 4.0 +
                                                  scale * 1e-13};
}

// ---------------------------------------------------------------------------

Approx pochhammer(CVal t, long k) {
    if (k < 0) throw DomainError("pochhammer: k must be >= 0");
    CVal p(1.0, 0.0);
    for (long j = 0; j < k; ++j) p *= t + static_cast<double>(j);
    return {checked(p, "pochhammer"), std::abs(p) * 1e-16 * static_cast<double>(k)};
}

Approx binom_general(CVal w, long k) {
    if (k < 0) throw DomainError("binom_general: k must be >= 0");
    CVal b(1.0, 0.0);
    for (long j = 1; j <= k; ++j)
        b *= (w - static_cast<double>(k - j)) / static_cast<double>(j);
    return {checked(b, "binom_general"), std::abs(b) * 2e-16 * static_cast<double>(k)};
}

Rational pochhammer_shift_deriv(long a, long n) {
    if (n < 0) throw DomainError("pochhammer_shift_deriv: n must be >= 0");
    // d/ds prod_{j<n} (s+a+j) at 0 = sum_i prod_{j != i} (a+j)
    BigInt total = 0;
    for (long i = 0; i < n; ++i) {
        BigInt prod = 1;
        for (long j = 0; j < n; ++j)
            if (j != i) prod *= (a + j);
        total += prod;
    }
    return Rational(total);
}

CVal sigma_complex(CVal nu, long k) {
    if (k < 1) throw DomainError("sigma_complex: k must be >= 1");
    CVal acc(0.0, 0.0);
    for (long d = 1; d * d <= k; ++d) {
        if (k % d != 0) continue;
        acc += std::exp(nu * std::log(static_cast<double>(d)));
        long e = k / d;
        if (e != d) acc += std::exp(nu * std::log(static_cast<double>(e)));
    }
    return checked(acc, "sigma_complex");
}

// ---------------------------------------------------------------------------
// Confluent hypergeometric Psi via the rotated Laplace integral.

namespace {

double sign_of(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

}  // namespace

Approx confluent_psi(CVal alpha, CVal gamma_p, CVal z, const EvalOptions& opt) {
    if (alpha.real() <= 0.0)
        throw DomainError("confluent_psi: requires Re(alpha) > 0");
    if (z == CVal(0.0, 0.0)) throw DomainError("confluent_psi: z must be nonzero");

    double phi = -std::arg(z) + 0.2 * sign_of(std::arg(z));
    phi = std::clamp(phi, -0.5 * pi + 0.05, 0.5 * pi - 0.05);
    const CVal ray = std::polar(1.0, phi);
    const CVal zr = z * ray;
    if (zr.real() <= 0.0)
        throw NonConvergence("confluent_psi: rotated ray does not decay");

    const CVal expo = gamma_p - alpha - 1.0;
    auto integrand = [&](double sigma) -> CVal {
        CVal val = std::exp(-zr * sigma + (alpha - 1.0) * std::log(sigma) +
                            expo * std::log(1.0 + sigma * ray));
        return is_finite(val) ? val : CVal(0.0, 0.0);  // underflow collapses to 0
    };

    // exp-sinh quadrature: sigma = exp(lambda sinh u), refined by halving h.
    const double lambda = 0.5 * pi;
    const double U = 4.6;
    auto level_sum = [&](double hstep, bool odd_only) {
        CVal acc(0.0, 0.0);
        double start = odd_only ? hstep : 0.0;
        double stride = odd_only ? 2.0 * hstep : hstep;
        for (double u = start; u <= U; u += stride) {
            double sh = lambda * std::sinh(u);
            double ch = lambda * std::cosh(u);
            {
                double sig = std::exp(sh);
                acc += integrand(sig) * sig * ch;
            }
            if (u > 0.0) {
                double sig = std::exp(-sh);
                acc += integrand(sig) * sig * ch;
            }
        }
        return acc;
    };

    double h = 0.5;
    CVal total = level_sum(h, false) * h;
    double change = std::abs(total);
    for (int level = 0; level < 7; ++level) {
        CVal refined = 0.5 * total + level_sum(0.5 * h, true) * (0.5 * h);
        change = std::abs(refined - total);
        h *= 0.5;
        total = refined;
        if (change <= 0.25 * opt.quad_rel_tol * std::abs(total) + 1e-300) break;
    }
    if (!(change <= 1e-6 * std::abs(total) + 1e-280))
        throw NonConvergence("confluent_psi: quadrature failed to converge");

    CVal ga = gamma(alpha, opt).value;
    CVal result = std::exp(CVal(0.0, phi) * alpha) * total / ga;
    double err = (change + 1e-14 * std::abs(total)) / std::abs(ga) +
                 1e-14 * std::abs(result);
    return {checked(result, "confluent_psi"), err};
}

}  // namespace tornzeta
