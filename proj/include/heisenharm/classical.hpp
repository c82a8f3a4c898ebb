// Classical solid spherical harmonics on R^3 with symbolic Laplacian
// verification, plus the quadrature machinery behind the orthogonality and
// norm checks.
#pragma once

#include "heisenharm/rational.hpp"
#include "heisenharm/specfun.hpp"

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <vector>

namespace heisenharm {

/// Sparse exact polynomial in the Euclidean variables (x, y, w).
class EuclidPolynomial {
public:
    using Exponents = std::array<int, 3>;  // powers of x, y, w
    using TermMap = std::map<Exponents, GaussianRational>;

    EuclidPolynomial() = default;
    explicit EuclidPolynomial(const GaussianRational& constant) {
        if (!constant.is_zero()) terms_[{0, 0, 0}] = constant;
    }
    static EuclidPolynomial monomial(Exponents e, GaussianRational coeff) {
        EuclidPolynomial p;
        if (!coeff.is_zero()) p.terms_[e] = std::move(coeff);
        return p;
    }
    static EuclidPolynomial x() { return monomial({1, 0, 0}, GaussianRational(1)); }
    static EuclidPolynomial y() { return monomial({0, 1, 0}, GaussianRational(1)); }
    static EuclidPolynomial w() { return monomial({0, 0, 1}, GaussianRational(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const GaussianRational& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend EuclidPolynomial operator+(const EuclidPolynomial& p, const EuclidPolynomial& q);
    friend EuclidPolynomial operator-(const EuclidPolynomial& p, const EuclidPolynomial& q);
    friend EuclidPolynomial operator*(const EuclidPolynomial& p, const EuclidPolynomial& q);
    friend EuclidPolynomial operator*(const GaussianRational& s, const EuclidPolynomial& p);
    friend bool operator==(const EuclidPolynomial& p, const EuclidPolynomial& q) {
        return p.terms_ == q.terms_;
    }
    friend bool operator!=(const EuclidPolynomial& p, const EuclidPolynomial& q) {
        return !(p == q);
    }

    /// Common Euclidean total degree, or nullopt if inhomogeneous.
    std::optional<int> degree() const;

    std::complex<double> eval(double xv, double yv, double wv) const;

private:
    TermMap terms_;
};

EuclidPolynomial pow(const EuclidPolynomial& base, unsigned exp);

/// Cartesian form of e^{in theta} r^m sin^{|n|}(phi) P_{m-|n|}^{|n|+1/2}(cos phi):
///   (x + iy)^n or (x - iy)^{|n|}  times  sum_q c_q w^q (x^2+y^2+w^2)^{(m-|n|-q)/2},
/// polynomial by Gegenbauer parity. Homogeneous of degree m and annihilated
/// exactly by the Laplacian. Requires |n| <= m.
EuclidPolynomial classical_solid_harmonic(int m, int n);

/// Exact d^2/dx^2 + d^2/dy^2 + d^2/dw^2.
EuclidPolynomial apply_laplacian(const EuclidPolynomial& p);

/// Exact Euler operator x d/dx + y d/dy + w d/dw (equals m*p on
/// m-homogeneous p).
EuclidPolynomial apply_euler_operator(const EuclidPolynomial& p);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int exactness_degree = 0;  // exact for polynomial integrands up to this degree
};

/// Gauss-Legendre rule on [-1,1]: nodes are the roots of the degree-n
/// Legendre polynomial (Newton iteration on the three-term recurrence, the
/// numerically stable evaluation of the exact lambda=1/2 Gegenbauer
/// polynomials), weights w_i = 2 / ((1 - x_i^2) P_n'(x_i)^2).
QuadratureRule gauss_legendre_rule(int n);

/// Integrate a smooth function over [-1,1] with the given rule.
template <typename F>
double integrate(const QuadratureRule& rule, F&& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(rule.nodes[i]);
    return sum;
}

/// Surface inner product <f, g> = integral over S^2 of f conj(g) dw(xi),
/// Gauss-Legendre in cos(phi) crossed with a trapezoid rule in theta
/// (exact for the trigonometric integrands at hand).
std::complex<double> sphere_inner_product(const EuclidPolynomial& f,
                                          const EuclidPolynomial& g,
                                          int gl_points);

/// integral_{-1}^{1} f g (1 - x^2)^{lambda - 1/2} dx through the substitution
/// x = cos(phi), which makes the integrand smooth for half-integer lambda.
double weighted_interval_integral(const UnivariatePoly& f, const UnivariatePoly& g,
                                  const Rational& lambda, int gl_points);

}  // namespace heisenharm
