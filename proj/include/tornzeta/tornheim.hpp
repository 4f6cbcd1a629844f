#pragma once

#include <optional>
#include <vector>

#include "tornzeta/types.hpp"

namespace tornzeta {

enum class Region { Convergent, Continued };

struct SingularFlag {
    enum class Plane { SPlusU, TPlusU, Total } plane;
    long l;           // s+u = 1-l / t+u = 1-l; l is unused for the total plane
    double distance;  // complex distance to the hyperplane value
};

/// A point (s,t,u) classified against the convergence region and the
/// singular hyperplanes s+u = 1-l, t+u = 1-l (l >= 0) and s+t+u = 2.
struct TornheimPoint {
    CVal s, t, u;
    Region region = Region::Continued;
    std::vector<SingularFlag> singular_flags;

    static TornheimPoint classify(CVal s, CVal t, CVal u, double flag_distance = 1e-8);
    double nearest_singular_distance() const;
};

struct ZDecomposition {
    std::optional<Approx> z_value;  // direct-sum oracle; absent outside Convergent
    Approx a_st, a_ts;
    std::optional<double> residual;  // |z - a_st - a_ts|, only when z was computed
};

/// Brute-force double sum with an integral-comparison tail bound.
Approx tornheim_direct(CVal s, CVal t, CVal u, const EvalOptions& opt = default_options());

/// A(s,t;u) as the Mellin-Barnes integral on a contour separating the pole
/// families of the integrand (line plus detours/residue transfers).
Approx A_contour(CVal s, CVal t, CVal u, const EvalOptions& opt = default_options());

/// A(s,t;u) through the shifted representation: K collected terms plus the
/// straight-line integral on Re(eta) = K + 1/2. K < 0 selects the least
/// admissible K automatically (margin 1/4).
Approx A_shifted(CVal s, CVal t, CVal u, long K = -1,
                 const EvalOptions& opt = default_options());

/// Z(s,t;u) = zeta(s,t;u) + cos(pi t) zeta(t,u;s) + cos(pi s) zeta(u,s;t),
/// each Tornheim value by direct summation (oracle side of the identity).
Approx Z_def(CVal s, CVal t, CVal u, const EvalOptions& opt = default_options());

ZDecomposition z_decompose(CVal s, CVal t, CVal u, const EvalOptions& opt = default_options());

/// Analytic continuation of zeta(s,t;u) through the Z-matrix inversion.
Approx tornheim_continued(CVal s, CVal t, CVal u, const EvalOptions& opt = default_options());

/// Euler's double zeta zeta(s,t) = sum_{N > n >= 1} n^{-t} N^{-s} by its
/// Mellin-Barnes representation, continued across the t-1 pole as needed.
Approx euler_double_zeta(CVal s, CVal t, const EvalOptions& opt = default_options());

/// Delta(s,t,u), the cosine-matrix determinant obstructing the continuation.
CVal z_matrix_determinant(CVal s, CVal t, CVal u);

}  // namespace tornzeta
