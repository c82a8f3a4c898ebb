#include "heisenharm/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace heisenharm {

UnivariatePoly operator-(const UnivariatePoly& p) {
    std::vector<GaussianRational> c = p.coeffs_;
    for (auto& x : c) x = -x;
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator+(const UnivariatePoly& p, const UnivariatePoly& q) {
    std::vector<GaussianRational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = p.coeff(j) + q.coeff(j);
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator-(const UnivariatePoly& p, const UnivariatePoly& q) {
    return p + (-q);
}

UnivariatePoly operator*(const UnivariatePoly& p, const UnivariatePoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<GaussianRational> c(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t j = 0; j < p.coeffs_.size(); ++j)
        for (std::size_t l = 0; l < q.coeffs_.size(); ++l)
            c[j + l] += p.coeffs_[j] * q.coeffs_[l];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator*(const GaussianRational& s, const UnivariatePoly& p) {
    std::vector<GaussianRational> c = p.coeffs_;
    for (auto& x : c) x = s * x;
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<GaussianRational> c(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        c[j - 1] = GaussianRational(static_cast<long long>(j)) * coeffs_[j];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::compose(const UnivariatePoly& inner) const {
    UnivariatePoly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * inner + UnivariatePoly::constant(*it);
    return r;
}

GaussianRational UnivariatePoly::eval(const GaussianRational& x) const {
    GaussianRational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

std::complex<double> UnivariatePoly::eval(std::complex<double> x) const {
    std::complex<double> r = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x + it->to_complex();
    return r;
}

UnivariatePoly pow(const UnivariatePoly& base, unsigned exp) {
    UnivariatePoly r = UnivariatePoly::constant(GaussianRational(1));
    UnivariatePoly b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

namespace {

// a = -k with k natural, or throws.
unsigned terminating_order(const Rational& a) {
    if (!a.is_integer() || a.sgn() > 0)
        throw std::invalid_argument("hyp2f1_terminating: a must be a non-positive integer");
    return static_cast<unsigned>((-a.num()).convert_to<long long>());
}

}  // namespace

UnivariatePoly hyp2f1_terminating(const Rational& a, const Rational& b, const Rational& c) {
    unsigned k = terminating_order(a);
    std::vector<GaussianRational> coeffs(k + 1);
    for (unsigned v = 0; v <= k; ++v) {
        Rational cv = pochhammer(c, v);
        if (cv.is_zero())
            throw std::domain_error("hyp2f1_terminating: pole, (c)_v vanishes in range");
        coeffs[v] = GaussianRational(pochhammer(a, v) * pochhammer(b, v) / (cv * factorial(v)));
    }
    return UnivariatePoly(std::move(coeffs));
}

bool euler_transform_identity_check(const Rational& a, const Rational& b, const Rational& c) {
    unsigned k = terminating_order(a);
    UnivariatePoly lhs = hyp2f1_terminating(a, b, c);

    // (1-z)^k F(a, c-b; c; z/(z-1)) expanded as a polynomial in z:
    // the v-th series term contributes (-1)^v t_v z^v (1-z)^{k-v}.
    UnivariatePoly one_minus_z({GaussianRational(1), GaussianRational(-1)});
    UnivariatePoly z = UnivariatePoly::variable();
    UnivariatePoly rhs;
    for (unsigned v = 0; v <= k; ++v) {
        Rational cv = pochhammer(c, v);
        if (cv.is_zero())
            throw std::domain_error("euler_transform_identity_check: pole of (c)_v");
        Rational tv = pochhammer(a, v) * pochhammer(c - b, v) / (cv * factorial(v));
        GaussianRational w = GaussianRational((v % 2 == 0) ? tv : -tv);
        rhs = rhs + w * (pow(z, v) * pow(one_minus_z, k - v));
    }
    return lhs == rhs;
}

GegenbauerSeries gegenbauer_from_generating_function(const Rational& lambda, unsigned k_max) {
    if (!(lambda > Rational(-1, 2)) || lambda.is_zero())
        throw std::invalid_argument("gegenbauer: lambda must satisfy lambda > -1/2, lambda != 0");

    // (1 - u)^{-lambda} = sum_j (lambda)_j / j!  u^j  with  u = r(2x - r).
    // Powers of u carry r-degree >= j, so the series truncates at j = k_max.
    // series[d] is the r^d coefficient, a polynomial in x.
    std::vector<UnivariatePoly> series(k_max + 1);
    series[0] = UnivariatePoly::constant(GaussianRational(1));

    // u^j coefficients: u = 2x r - r^2; represent u^j by its r-slices.
    std::vector<UnivariatePoly> upow(k_max + 1);  // r-slices of u^j, updated per j
    upow[0] = UnivariatePoly::constant(GaussianRational(1));
    UnivariatePoly two_x({GaussianRational(0), GaussianRational(2)});
    for (unsigned j = 1; j <= k_max; ++j) {
        std::vector<UnivariatePoly> next(k_max + 1);
        for (unsigned d = 0; d <= k_max; ++d) {
            if (upow[d].is_zero()) continue;
            if (d + 1 <= k_max) next[d + 1] = next[d + 1] + two_x * upow[d];
            if (d + 2 <= k_max) next[d + 2] = next[d + 2] - upow[d];
        }
        upow = std::move(next);
        GaussianRational w(pochhammer(lambda, j) / factorial(j));
        for (unsigned d = 0; d <= k_max; ++d)
            if (!upow[d].is_zero()) series[d] = series[d] + w * upow[d];
    }

    return GegenbauerSeries{lambda, std::move(series)};
}

Rational gegenbauer_norm(const Rational& lambda, unsigned k) {
    if (!(lambda > Rational(-1, 2)) || lambda.is_zero())
        throw std::invalid_argument("gegenbauer_norm: lambda must satisfy lambda > -1/2, lambda != 0");
    Rational ell = lambda - Rational(1, 2);
    if (!ell.is_integer() || ell.sgn() < 0)
        throw std::invalid_argument("gegenbauer_norm: exact evaluation needs half-integer lambda");
    unsigned l = static_cast<unsigned>(ell.num().convert_to<long long>());
    // pi^{1/2} Gamma(lambda + 1/2) / Gamma(lambda) = 4^l (l!)^2 / (2l)!
    Rational gamma_ratio = pow(Rational(4), l) * factorial(l) * factorial(l) / factorial(2 * l);
    return pochhammer(Rational(2) * lambda, k) * gamma_ratio
           / ((Rational(static_cast<long long>(k)) + lambda) * factorial(k));
}

double gegenbauer_norm_f(double lambda, unsigned k) {
    double poch = 1.0, kfact = 1.0;
    for (unsigned j = 0; j < k; ++j) {
        poch *= 2.0 * lambda + j;
        kfact *= j + 1.0;
    }
    return std::sqrt(M_PI) * poch * gamma_real(lambda + 0.5)
           / ((k + lambda) * kfact * gamma_real(lambda));
}

double gamma_real(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("gamma_real: pole at non-positive integer");
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return M_PI / (std::sin(M_PI * x) * gamma_real(1.0 - x));
    }
    // Lanczos, g = 7, 9 terms.
    static const double coef[] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    double xx = x - 1.0;
    double acc = coef[0];
    for (int j = 1; j < 9; ++j) acc += coef[j] / (xx + j);
    double t = xx + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, xx + 0.5) * std::exp(-t) * acc;
}

}  // namespace heisenharm
