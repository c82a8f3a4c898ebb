// Terminating Gauss hypergeometric series, the Euler transformation, and
// Gegenbauer/Legendre polynomials with exact coefficients.
#pragma once

#include "heisenharm/rational.hpp"

#include <complex>
#include <vector>

namespace heisenharm {

/// Dense univariate polynomial over Q(i), lowest degree first, trailing
/// zeros trimmed. The zero polynomial has an empty coefficient list.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<GaussianRational> coeffs)
        : coeffs_(std::move(coeffs)) {
        trim();
    }
    static UnivariatePoly constant(GaussianRational c) {
        return UnivariatePoly({std::move(c)});
    }
    static UnivariatePoly variable() {
        return UnivariatePoly({GaussianRational(0), GaussianRational(1)});
    }

    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    GaussianRational coeff(std::size_t j) const {
        return j < coeffs_.size() ? coeffs_[j] : GaussianRational(0);
    }
    GaussianRational leading() const {
        return coeffs_.empty() ? GaussianRational(0) : coeffs_.back();
    }

    friend UnivariatePoly operator-(const UnivariatePoly& p);
    friend UnivariatePoly operator+(const UnivariatePoly& p, const UnivariatePoly& q);
    friend UnivariatePoly operator-(const UnivariatePoly& p, const UnivariatePoly& q);
    friend UnivariatePoly operator*(const UnivariatePoly& p, const UnivariatePoly& q);
    friend UnivariatePoly operator*(const GaussianRational& s, const UnivariatePoly& p);
    friend bool operator==(const UnivariatePoly& p, const UnivariatePoly& q) {
        return p.coeffs_ == q.coeffs_;
    }
    friend bool operator!=(const UnivariatePoly& p, const UnivariatePoly& q) {
        return !(p == q);
    }

    UnivariatePoly derivative() const;

    /// Substitute another polynomial for the variable (Horner scheme).
    UnivariatePoly compose(const UnivariatePoly& inner) const;

    GaussianRational eval(const GaussianRational& x) const;
    std::complex<double> eval(std::complex<double> x) const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<GaussianRational> coeffs_;
};

UnivariatePoly pow(const UnivariatePoly& base, unsigned exp);

/// Terminating 2F1: requires a = -k for a natural k. Returns the degree-<=k
/// polynomial in z with exact coefficients (a)_v (b)_v / ((c)_v v!).
/// Throws std::invalid_argument for non-terminating a and std::domain_error
/// when (c)_v vanishes for some v <= k.
UnivariatePoly hyp2f1_terminating(const Rational& a, const Rational& b, const Rational& c);

/// Checks F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)) as an exact polynomial
/// identity for a = -k. Both sides are expanded as polynomials in z (the right
/// side via (1-z)^{k-v} weights, which clears the z/(z-1) substitution).
bool euler_transform_identity_check(const Rational& a, const Rational& b, const Rational& c);

struct GegenbauerSeries {
    Rational lambda;
    std::vector<UnivariatePoly> polys;  // polys[k] = P_k^lambda
};

/// Expands (1 - 2rx + r^2)^{-lambda} as a power series in r with exact
/// rational coefficients, returning P_k^lambda for k = 0..k_max.
/// Requires lambda > -1/2, lambda != 0.
GegenbauerSeries gegenbauer_from_generating_function(const Rational& lambda, unsigned k_max);

/// Squared weighted norm of P_k^lambda on [-1,1], exact for half-integer
/// lambda = l + 1/2 (the Gamma ratio times pi^{1/2} collapses to a rational).
/// Throws std::invalid_argument for other lambda; use gegenbauer_norm_f then.
Rational gegenbauer_norm(const Rational& lambda, unsigned k);

/// Floating-point norm via gamma_real, valid for any lambda > -1/2, lambda != 0.
double gegenbauer_norm_f(double lambda, unsigned k);

/// Gamma function on the real line (Lanczos approximation, relative error
/// well below 1e-12). Throws std::domain_error at non-positive integers.
double gamma_real(double x);

}  // namespace heisenharm
