// Sparse exact polynomials in the three commuting symbols (z, zbar, t),
// together with the left-invariant vector fields of the 3-dimensional
// Heisenberg group and the sublaplacian family L_alpha.
//
// z and zbar are independent symbols; complex conjugation enters only at
// numeric evaluation, where zbar is bound to conj(z). The grading is the
// Heisenberg one: z and zbar have weight 1, t has weight 2.
#pragma once

#include "heisenharm/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <vector>

namespace heisenharm {

struct HMonomial {
    int a = 0;  // power of z
    int b = 0;  // power of zbar
    int c = 0;  // power of t

    int heisenberg_degree() const { return a + b + 2 * c; }

    // Graded lexicographic by (a+b+2c, a, b, c): deterministic, diff-stable.
    friend bool operator<(const HMonomial& x, const HMonomial& y) {
        int dx = x.heisenberg_degree(), dy = y.heisenberg_degree();
        if (dx != dy) return dx < dy;
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }
    friend bool operator==(const HMonomial& x, const HMonomial& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

/// A point of the group manifold C x R.
struct HPoint {
    std::complex<double> z;
    double t = 0.0;
};

class HPolynomial {
public:
    using TermMap = std::map<HMonomial, GaussianRational>;

    HPolynomial() = default;
    HPolynomial(const GaussianRational& constant) {
        if (!constant.is_zero()) terms_[HMonomial{}] = constant;
    }

    static HPolynomial monomial(HMonomial m, GaussianRational coeff) {
        HPolynomial p;
        if (!coeff.is_zero()) p.terms_[m] = std::move(coeff);
        return p;
    }
    static HPolynomial z() { return monomial({1, 0, 0}, GaussianRational(1)); }
    static HPolynomial zbar() { return monomial({0, 1, 0}, GaussianRational(1)); }
    static HPolynomial t() { return monomial({0, 0, 1}, GaussianRational(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const HMonomial& m, const GaussianRational& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend HPolynomial operator-(const HPolynomial& p) {
        HPolynomial r;
        for (const auto& [m, c] : p.terms_) r.terms_[m] = -c;
        return r;
    }
    friend HPolynomial operator+(const HPolynomial& p, const HPolynomial& q) {
        HPolynomial r = p;
        for (const auto& [m, c] : q.terms_) r.add_term(m, c);
        return r;
    }
    friend HPolynomial operator-(const HPolynomial& p, const HPolynomial& q) {
        HPolynomial r = p;
        for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
        return r;
    }
    friend HPolynomial operator*(const HPolynomial& p, const HPolynomial& q) {
        HPolynomial r;
        for (const auto& [mp, cp] : p.terms_)
            for (const auto& [mq, cq] : q.terms_)
                r.add_term({mp.a + mq.a, mp.b + mq.b, mp.c + mq.c}, cp * cq);
        return r;
    }
    friend HPolynomial operator*(const GaussianRational& s, const HPolynomial& p) {
        HPolynomial r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : p.terms_) r.terms_[m] = s * c;
        return r;
    }

    HPolynomial& operator+=(const HPolynomial& q) { return *this = *this + q; }
    HPolynomial& operator-=(const HPolynomial& q) { return *this = *this - q; }

    friend bool operator==(const HPolynomial& p, const HPolynomial& q) {
        return p.terms_ == q.terms_;
    }
    friend bool operator!=(const HPolynomial& p, const HPolynomial& q) { return !(p == q); }

    std::string str() const;

private:
    TermMap terms_;  // no zero coefficients stored
};

inline HPolynomial pow(const HPolynomial& base, unsigned exp) {
    HPolynomial r(GaussianRational(1));
    HPolynomial b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// Left-invariant complex vector fields at n = 1:
//   Z    = d/dz    + i zbar d/dt
//   Zbar = d/dzbar - i z    d/dt
//   T    = d/dt
HPolynomial apply_Z(const HPolynomial& p);
HPolynomial apply_Zbar(const HPolynomial& p);
HPolynomial apply_T(const HPolynomial& p);

// Real vector fields, derived as X = Z + Zbar, Y = i(Z - Zbar).
HPolynomial apply_X(const HPolynomial& p);
HPolynomial apply_Y(const HPolynomial& p);

/// The sublaplacian L_alpha = -Z Zbar + i(alpha - 1) T.
HPolynomial apply_L_alpha(const HPolynomial& p, const Rational& alpha);

/// The real form X∘X + Y∘Y, computed through the derived X, Y operators.
HPolynomial apply_sublaplacian_real(const HPolynomial& p);

/// Common Heisenberg degree of all monomials, or nullopt if inhomogeneous.
/// The zero polynomial has no degree.
std::optional<int> heisenberg_degree(const HPolynomial& p);

/// Substitute z -> lambda z, zbar -> lambda zbar, t -> lambda^2 t.
HPolynomial dilate(const HPolynomial& p, const Rational& lambda);

/// Swap z <-> zbar and conjugate all coefficients. Intertwines L_alpha with
/// L_{-alpha}: the image of an L_alpha-harmonic polynomial is
/// L_{-alpha}-harmonic.
HPolynomial conjugate_harmonic(const HPolynomial& p);

/// Group law (z,t)(z',t') = (z + z', t + t' + 2 Im(z conj(z'))).
HPoint group_multiply(const HPoint& p, const HPoint& q);

/// Numeric evaluation with zbar bound to conj(pt.z).
std::complex<double> eval_cartesian(const HPolynomial& p, const HPoint& pt);

}  // namespace heisenharm
