#include "heisenharm/hpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace heisenharm {

std::string HPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (m.a) os << "*z^" << m.a;
        if (m.b) os << "*zb^" << m.b;
        if (m.c) os << "*t^" << m.c;
    }
    return os.str();
}

HPolynomial apply_Z(const HPolynomial& p) {
    // z^a zb^b t^c  ->  a z^{a-1} zb^b t^c + i c z^a zb^{b+1} t^{c-1}
    HPolynomial r;
    for (const auto& [m, coeff] : p.terms()) {
        if (m.a > 0)
            r.add_term({m.a - 1, m.b, m.c}, GaussianRational(m.a) * coeff);
        if (m.c > 0)
            r.add_term({m.a, m.b + 1, m.c - 1},
                       GaussianRational::i() * GaussianRational(m.c) * coeff);
    }
    return r;
}

HPolynomial apply_Zbar(const HPolynomial& p) {
    // z^a zb^b t^c  ->  b z^a zb^{b-1} t^c - i c z^{a+1} zb^b t^{c-1}
    HPolynomial r;
    for (const auto& [m, coeff] : p.terms()) {
        if (m.b > 0)
            r.add_term({m.a, m.b - 1, m.c}, GaussianRational(m.b) * coeff);
        if (m.c > 0)
            r.add_term({m.a + 1, m.b, m.c - 1},
                       -GaussianRational::i() * GaussianRational(m.c) * coeff);
    }
    return r;
}

HPolynomial apply_T(const HPolynomial& p) {
    HPolynomial r;
    for (const auto& [m, coeff] : p.terms())
        if (m.c > 0) r.add_term({m.a, m.b, m.c - 1}, GaussianRational(m.c) * coeff);
    return r;
}

HPolynomial apply_X(const HPolynomial& p) { return apply_Z(p) + apply_Zbar(p); }

HPolynomial apply_Y(const HPolynomial& p) {
    return GaussianRational::i() * (apply_Z(p) - apply_Zbar(p));
}

HPolynomial apply_L_alpha(const HPolynomial& p, const Rational& alpha) {
    GaussianRational factor = GaussianRational::i() * GaussianRational(alpha - Rational(1));
    return -apply_Z(apply_Zbar(p)) + factor * apply_T(p);
}

HPolynomial apply_sublaplacian_real(const HPolynomial& p) {
    return apply_X(apply_X(p)) + apply_Y(apply_Y(p));
}

std::optional<int> heisenberg_degree(const HPolynomial& p) {
    if (p.is_zero())
        throw std::domain_error("heisenberg_degree: undefined for the zero polynomial");
    int deg = p.terms().begin()->first.heisenberg_degree();
    for (const auto& [m, c] : p.terms())
        if (m.heisenberg_degree() != deg) return std::nullopt;
    return deg;
}

HPolynomial dilate(const HPolynomial& p, const Rational& lambda) {
    if (lambda.is_zero()) throw std::domain_error("dilate: lambda must be nonzero");
    HPolynomial r;
    for (const auto& [m, c] : p.terms())
        r.add_term(m, GaussianRational(pow(lambda, static_cast<unsigned>(m.heisenberg_degree()))) * c);
    return r;
}

HPolynomial conjugate_harmonic(const HPolynomial& p) {
    HPolynomial r;
    for (const auto& [m, c] : p.terms()) r.add_term({m.b, m.a, m.c}, c.conj());
    return r;
}

HPoint group_multiply(const HPoint& p, const HPoint& q) {
    return {p.z + q.z, p.t + q.t + 2.0 * std::imag(p.z * std::conj(q.z))};
}

std::complex<double> eval_cartesian(const HPolynomial& p, const HPoint& pt) {
    std::complex<double> sum = 0.0;
    std::complex<double> zb = std::conj(pt.z);
    for (const auto& [m, c] : p.terms()) {
        std::complex<double> term = c.to_complex();
        for (int j = 0; j < m.a; ++j) term *= pt.z;
        for (int j = 0; j < m.b; ++j) term *= zb;
        for (int j = 0; j < m.c; ++j) term *= pt.t;
        sum += term;
    }
    return sum;
}

}  // namespace heisenharm
