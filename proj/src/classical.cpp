#include "heisenharm/classical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heisenharm {

EuclidPolynomial operator+(const EuclidPolynomial& p, const EuclidPolynomial& q) {
    EuclidPolynomial r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
}

EuclidPolynomial operator-(const EuclidPolynomial& p, const EuclidPolynomial& q) {
    EuclidPolynomial r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
    return r;
}

EuclidPolynomial operator*(const EuclidPolynomial& p, const EuclidPolynomial& q) {
    EuclidPolynomial r;
    for (const auto& [ep, cp] : p.terms_)
        for (const auto& [eq, cq] : q.terms_)
            r.add_term({ep[0] + eq[0], ep[1] + eq[1], ep[2] + eq[2]}, cp * cq);
    return r;
}

EuclidPolynomial operator*(const GaussianRational& s, const EuclidPolynomial& p) {
    EuclidPolynomial r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.terms_) r.terms_[e] = s * c;
    return r;
}

std::optional<int> EuclidPolynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    int deg = terms_.begin()->first[0] + terms_.begin()->first[1] + terms_.begin()->first[2];
    for (const auto& [e, c] : terms_)
        if (e[0] + e[1] + e[2] != deg) return std::nullopt;
    return deg;
}

std::complex<double> EuclidPolynomial::eval(double xv, double yv, double wv) const {
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : terms_)
        sum += c.to_complex() * std::pow(xv, e[0]) * std::pow(yv, e[1]) * std::pow(wv, e[2]);
    return sum;
}

EuclidPolynomial pow(const EuclidPolynomial& base, unsigned exp) {
    EuclidPolynomial r(GaussianRational(1));
    EuclidPolynomial b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

EuclidPolynomial classical_solid_harmonic(int m, int n) {
    if (m < 0 || std::abs(n) > m)
        throw std::invalid_argument("classical_solid_harmonic: need |n| <= m");
    const int absn = std::abs(n);
    const int j = m - absn;  // Gegenbauer degree
    GegenbauerSeries geg = gegenbauer_from_generating_function(
        Rational(2 * absn + 1, 2), static_cast<unsigned>(j));
    const UnivariatePoly& P = geg.polys[j];

    EuclidPolynomial r2 = pow(EuclidPolynomial::x(), 2) + pow(EuclidPolynomial::y(), 2)
                          + pow(EuclidPolynomial::w(), 2);

    // r^j P(w/r) = sum_q c_q w^q r^{j-q}; parity of P makes j - q even.
    EuclidPolynomial radial;
    for (int q = 0; q <= P.degree(); ++q) {
        GaussianRational c = P.coeff(q);
        if (c.is_zero()) continue;
        radial = radial + c * (pow(EuclidPolynomial::w(), static_cast<unsigned>(q))
                               * pow(r2, static_cast<unsigned>((j - q) / 2)));
    }

    GaussianRational iunit = GaussianRational::i();
    EuclidPolynomial angular =
        n >= 0 ? EuclidPolynomial::x() + iunit * EuclidPolynomial::y()
               : EuclidPolynomial::x() - iunit * EuclidPolynomial::y();
    return pow(angular, static_cast<unsigned>(absn)) * radial;
}

EuclidPolynomial apply_laplacian(const EuclidPolynomial& p) {
    EuclidPolynomial r;
    for (const auto& [e, c] : p.terms()) {
        for (int axis = 0; axis < 3; ++axis) {
            if (e[axis] < 2) continue;
            auto d = e;
            d[axis] -= 2;
            r.add_term(d, GaussianRational(static_cast<long long>(e[axis])
                                           * (e[axis] - 1))
                              * c);
        }
    }
    return r;
}

EuclidPolynomial apply_euler_operator(const EuclidPolynomial& p) {
    EuclidPolynomial r;
    for (const auto& [e, c] : p.terms())
        r.add_term(e, GaussianRational(static_cast<long long>(e[0] + e[1] + e[2])) * c);
    return r;
}

QuadratureRule gauss_legendre_rule(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_rule: need n >= 1");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.exactness_degree = 2 * n - 1;

    // P_n and P_n' by the three-term recurrence, for Newton refinement.
    auto legendre = [n](double x) {
        double p0 = 1.0, p1 = x;
        if (n == 0) return std::pair{p0, 0.0};
        for (int j = 2; j <= n; ++j) {
            double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        return std::pair{p1, dp};
    };

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            auto [p, dp] = legendre(x);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [p, dp] = legendre(x);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -std::abs(x);
        rule.nodes[n - 1 - i] = std::abs(x);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

std::complex<double> sphere_inner_product(const EuclidPolynomial& f,
                                          const EuclidPolynomial& g,
                                          int gl_points) {
    // Trapezoid resolution: 4m+4 points are exact for trigonometric
    // polynomials of degree <= 4m+2; the integrand has theta-degree
    // at most deg(f) + deg(g) <= 2m.
    int m = 0;
    for (const auto& [e, c] : f.terms()) m = std::max(m, e[0] + e[1] + e[2]);
    for (const auto& [e, c] : g.terms()) m = std::max(m, e[0] + e[1] + e[2]);
    const int n_theta = 4 * m + 4;

    QuadratureRule gl = gauss_legendre_rule(gl_points);
    std::complex<double> sum = 0.0;
    for (int i = 0; i < gl_points; ++i) {
        double u = gl.nodes[i];  // u = cos(phi)
        double s = std::sqrt(std::max(0.0, 1.0 - u * u));
        std::complex<double> ring = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            double theta = 2.0 * M_PI * j / n_theta;
            double xv = s * std::cos(theta), yv = s * std::sin(theta);
            ring += f.eval(xv, yv, u) * std::conj(g.eval(xv, yv, u));
        }
        sum += gl.weights[i] * ring * (2.0 * M_PI / n_theta);
    }
    return sum;
}

double weighted_interval_integral(const UnivariatePoly& f, const UnivariatePoly& g,
                                  const Rational& lambda, int gl_points) {
    if (!(lambda > Rational(-1, 2)))
        throw std::invalid_argument("weighted_interval_integral: need lambda > -1/2");
    double lam = lambda.to_double();
    QuadratureRule gl = gauss_legendre_rule(gl_points);
    // x = cos(phi), phi in [0, pi]; map GL nodes from [-1,1] to [0,pi].
    double sum = 0.0;
    for (int i = 0; i < gl_points; ++i) {
        double phi = 0.5 * M_PI * (gl.nodes[i] + 1.0);
        double x = std::cos(phi);
        double weight = std::pow(std::sin(phi), 2.0 * lam);
        std::complex<double> val = f.eval(std::complex<double>(x)) *
                                   g.eval(std::complex<double>(x));
        sum += gl.weights[i] * (0.5 * M_PI) * weight * val.real();
    }
    return sum;
}

}  // namespace heisenharm
