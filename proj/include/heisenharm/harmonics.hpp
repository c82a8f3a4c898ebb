// Construction of the solid L_alpha-spherical harmonics on the 3-dimensional
// Heisenberg group by independent routes:
//
//   * a power-series recurrence for the coefficients a_v of y = sum a_v (x-i)^v,
//   * the closed Pochhammer-product form of the same a_v,
//   * a terminating-hypergeometric assembly of y,
//   * a binomial double sum for the polynomial h (the canonical route: it
//     needs no division and is defined for every index),
//   * the generating function for the boundary trig polynomials H_k.
//
// All routes agree up to documented nonzero constants; verification is exact.
#pragma once

#include "heisenharm/hpoly.hpp"
#include "heisenharm/specfun.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace heisenharm {

/// Index (alpha, m, n) of one basis harmonic; k = (m - |n|)/2 is derived.
/// Requires |n| <= m and m == n (mod 2).
struct HarmonicIndex {
    int alpha;
    int m;
    int n;

    HarmonicIndex(int alpha_, int m_, int n_) : alpha(alpha_), m(m_), n(n_) {
        if (m < 0 || std::abs(n) > m || (m - n) % 2 != 0)
            throw std::invalid_argument("HarmonicIndex: need |n| <= m and m == n (mod 2)");
    }

    int k() const { return (m - std::abs(n)) / 2; }
};

/// Thrown when the recurrence leading factor i(2v - alpha - n - m + 1)(v + 1)
/// vanishes for some v < k, which happens for some negative odd alpha.
/// Callers fall back to the conjugation route (alpha, n) -> (-alpha, -n).
class RecurrenceDegenerate : public std::domain_error {
public:
    explicit RecurrenceDegenerate(const std::string& what) : std::domain_error(what) {}
};

/// True when the coefficient recurrence for this index hits a vanishing
/// leading factor before termination.
bool recurrence_degenerate(const HarmonicIndex& idx);

/// Coefficients a_0..a_k of y = sum a_v (x - i)^v from the recurrence
///   i(2v - alpha - n - m + 1)(v + 1) a_{v+1} + (v^2 - mv + (m^2 - n^2)/4) a_v = 0
/// normalized by a_0 = 1. Throws RecurrenceDegenerate when undefined.
std::vector<GaussianRational> coeffs_recurrence(const HarmonicIndex& idx);

/// The same coefficients in closed form,
///   a_v = (i/2)^v (-k)_v (-(m+|n|)/2)_v / ( (-(m+n)/2 - (alpha-1)/2)_v v! ).
/// Degenerates exactly when the recurrence does.
std::vector<GaussianRational> coeffs_closed_form(const HarmonicIndex& idx);

/// y(x) = sum a_v (x - i)^v, degree exactly k, solving the harmonicity ODE.
/// For degenerate indices the polynomial is produced by conjugating the
/// (-alpha, -n) solution, which solves the same ODE with alpha, n negated.
UnivariatePoly y_polynomial(const HarmonicIndex& idx);

/// y assembled through the terminating hypergeometric series
/// F(-k, -(m+|n|)/2; c; (1+ix)/2). Equals y_polynomial where defined;
/// throws RecurrenceDegenerate at the same indices as the closed form.
UnivariatePoly y_from_hypergeometric(const HarmonicIndex& idx);

/// Binomial double-sum polynomial
///   h(x) = sum_v C(-(|n|+n)/2-(alpha+1)/2, v) C(-(|n|-n)/2+(alpha-1)/2, k-v)
///          (x+i)^v (x-i)^{k-v},
/// of degree exactly k, proportional to y_polynomial by a nonzero constant.
/// Defined for every index; this is the canonical construction.
UnivariatePoly h_polynomial(const HarmonicIndex& idx);

/// Finite trig expansion sum_v c_v e^{i(2v-k)phi} of the boundary harmonics.
struct TrigPolynomial {
    int k = 0;
    std::vector<GaussianRational> c;  // c[v] multiplies e^{i(2v-k)phi}

    std::complex<double> eval(double phi) const;
};

/// H_k^{(alpha,n)}: c[v] = (-1)^k C(-(|n|+n)/2-(alpha+1)/2, v)
///                              C(-(|n|-n)/2+(alpha-1)/2, k-v).
TrigPolynomial H_trig(const HarmonicIndex& idx);

/// The same trig polynomials for k = 0..k_max from the generating function
///   (1 - rho e^{i phi})^{-(|n|+n)/2-(alpha+1)/2}
///   (1 - rho e^{-i phi})^{-(|n|-n)/2+(alpha-1)/2},
/// expanded via Pochhammer binomial series (an independent code path).
/// Agrees with H_trig exactly, including sign, for every (alpha, n, k).
std::vector<TrigPolynomial> H_from_generating_function(int alpha, int n, unsigned k_max);

/// The solid harmonic as an exact polynomial in (z, zbar, t):
///   z^{max(n,0)} zbar^{max(-n,0)} sum_v c_v (t + i z zbar)^v (t - i z zbar)^{k-v}
/// with c_v the H_trig coefficients. Heisenberg-homogeneous of degree m and
/// annihilated exactly by L_alpha.
HPolynomial solid_harmonic(const HarmonicIndex& idx);

/// Basis of the degree-m harmonic space: one solid harmonic for each
/// n in {-m, -m+2, ..., m}; exactly m+1 elements of exact rank m+1.
/// Supported alpha: odd integers and 0.
std::vector<HPolynomial> basis(int alpha, int m);

/// Exact Q(i)-rank of the span of a set of polynomials.
int exact_rank(const std::vector<HPolynomial>& polys);

/// Heisenberg spherical coordinates: z = rho sin^{1/2}(phi) e^{i theta},
/// t = rho^2 cos(phi), so that t + i|z|^2 = rho^2 e^{i phi}.
struct SphericalPoint {
    double rho;
    double theta;
    double phi;

    HPoint to_cartesian() const;
};

/// e^{in theta} rho^m sin^{|n|/2}(phi) H_k(e^{i phi}); finite for all phi,
/// including the coordinate-singular sets phi = 0, pi.
std::complex<double> eval_spherical(const HarmonicIndex& idx, const SphericalPoint& pt);

/// Residual of the harmonicity ODE
///   (1+x^2) h'' - (i(alpha+n) + (m-1)x) h' + (m^2-n^2)/4 h
/// as an exact polynomial; zero for every constructed solution.
UnivariatePoly ode_residual(const HarmonicIndex& idx, const UnivariatePoly& h);

/// C_alpha = Gamma((1+alpha)/2) Gamma((1-alpha)/2) / pi^2. Throws for odd
/// integer alpha (Gamma poles).
double fundamental_constant(double alpha);

/// Phi_alpha(z,t) = C_alpha (|z|^4 + t^2)^{-1/2}
///                  ((|z|^2 + it)/(|z|^2 - it))^{alpha/2},
/// principal branch for the unimodular power. Throws at the origin and for
/// odd integer alpha.
std::complex<double> eval_fundamental_solution(double alpha, const HPoint& pt);

}  // namespace heisenharm
