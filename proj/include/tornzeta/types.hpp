#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace tornzeta {

using CVal = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// A complex value carrying an absolute-error estimate. The estimate is an
/// upper bound in the usual cases this library produces, not a guarantee.
struct Approx {
    CVal value{0.0, 0.0};
    double abs_err = 0.0;

    double re() const { return value.real(); }
    double im() const { return value.imag(); }
};

/// Global numeric policy shared by the analytic operations.
struct EvalOptions {
    double target_rel_tol = 1e-10;    // generic relative target for analytic ops
    int series_terms = 64;            // Euler-Maclaurin main-sum length (minimum)
    int em_correction_order = 12;     // number of Bernoulli correction terms (even)
    double quad_height = 40.0;        // contour truncation height T
    double quad_rel_tol = 1e-12;      // panel quadrature target
    long oracle_sum_limit = 4000;     // truncation of brute-force double sums
    double singular_guard = 0.02;     // refusal distance from singular hyperplanes

    void validate() const;
};

const EvalOptions& default_options();

// ---------------------------------------------------------------------------
// Error taxonomy. Every refusal is a typed exception deriving from Error so
// the CLI can map it to a status=refused record.

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define TORNZETA_DEFINE_ERROR(name)                                     \
    class name : public Error {                                        \
    public:                                                             \
        explicit name(const std::string& what) : Error(#name, what) {} \
    }

TORNZETA_DEFINE_ERROR(PoleError);
TORNZETA_DEFINE_ERROR(DomainError);
TORNZETA_DEFINE_ERROR(UnsupportedOrder);
TORNZETA_DEFINE_ERROR(NonConvergence);
TORNZETA_DEFINE_ERROR(TailDivergence);
TORNZETA_DEFINE_ERROR(ContourPinch);
TORNZETA_DEFINE_ERROR(OutOfDomain);
TORNZETA_DEFINE_ERROR(SlowConvergence);
TORNZETA_DEFINE_ERROR(NoAdmissibleK);
TORNZETA_DEFINE_ERROR(NearSingularDenominator);
TORNZETA_DEFINE_ERROR(SingularPoint);
TORNZETA_DEFINE_ERROR(ParityError);
TORNZETA_DEFINE_ERROR(ParityViolation);
TORNZETA_DEFINE_ERROR(InsufficientOrder);

#undef TORNZETA_DEFINE_ERROR

// ---------------------------------------------------------------------------
// Small numeric helpers used across the library.

inline bool is_finite(CVal z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws NonConvergence if z picked up a NaN/Inf; no non-finite value may
/// escape an operation.
inline CVal checked(CVal z, const char* where) {
    if (!is_finite(z))
        throw NonConvergence(std::string("non-finite value in ") + where);
    return z;
}

/// Nearest integer to a real, as long.
inline long nearest_int(double x) { return std::lround(x); }

/// Distance from z to the nearest integer in C.
inline double dist_to_int(CVal z) {
    return std::abs(z - CVal(static_cast<double>(nearest_int(z.real())), 0.0));
}

/// Distance from z to the nearest integer in the set {lo, lo+1, lo+2, ...}.
inline double dist_to_int_at_least(CVal z, long lo) {
    long n = nearest_int(z.real());
    if (n < lo) n = lo;
    return std::abs(z - CVal(static_cast<double>(n), 0.0));
}

/// True if z is within tol of the exact integer n.
inline bool near_int(CVal z, long n, double tol) {
    return std::abs(z - CVal(static_cast<double>(n), 0.0)) <= tol;
}

// sin(pi z), cos(pi z) with argument reduction so that exact integer and
// half-integer inputs give exact zeros. Plain std::sin(pi*z) loses the zeros
// (pi*n is not representable), which poisons every trivial-zero cancellation
// in this library.

inline CVal sinpi(CVal z) {
    double n = std::nearbyint(z.real());
    CVal w(z.real() - n, z.imag());
    CVal s = std::sin(pi * w);
    long ln = static_cast<long>(n);
    return (ln % 2 == 0) ? s : -s;
}

inline CVal cospi(CVal z) {
    double n = std::nearbyint(z.real());
    CVal w(z.real() - n, z.imag());
    CVal c = std::cos(pi * w);
    long ln = static_cast<long>(n);
    return (ln % 2 == 0) ? c : -c;
}

/// cos(pi z / 2) with reduction mod 4 on the real part.
inline CVal cospi_half(CVal z) {
    double n = std::nearbyint(z.real() / 2.0) * 2.0;  // nearest even integer
    CVal w(z.real() - n, z.imag());
    CVal c = std::cos(pi * w / 2.0);
    long half = static_cast<long>(n / 2.0);
    return (half % 2 == 0) ? c : -c;
}

/// sin(pi z / 2), same reduction.
inline CVal sinpi_half(CVal z) {
    double n = std::nearbyint(z.real() / 2.0) * 2.0;
    CVal w(z.real() - n, z.imag());
    CVal s = std::sin(pi * w / 2.0);
    long half = static_cast<long>(n / 2.0);
    return (half % 2 == 0) ? s : -s;
}

}  // namespace tornzeta
