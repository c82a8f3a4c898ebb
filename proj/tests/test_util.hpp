// Shared helpers for the test suites: seeded random polynomials and the
// quarter-turn rotation substitution.
#pragma once

#include "heisenharm/hpoly.hpp"

#include <random>

namespace heisenharm::testutil {

/// Random polynomial of Heisenberg degree <= max_deg with small Gaussian-
/// integer coefficients. Deterministic for a given generator state.
inline HPolynomial random_hpoly(std::mt19937& rng, int max_deg, int n_terms = 6) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_deg);
    HPolynomial p;
    for (int j = 0; j < n_terms; ++j) {
        int a = deg(rng), b = deg(rng), c = deg(rng);
        while (a + b + 2 * c > max_deg) {
            a = deg(rng);
            b = deg(rng);
            c = deg(rng);
        }
        p += HPolynomial::monomial({a, b, c},
                                   GaussianRational(Rational(coeff(rng)), Rational(coeff(rng))));
    }
    return p;
}

/// Substitute z -> iz, zbar -> -i zbar (the gamma = pi/2 unitary rotation,
/// exact in Q(i)).
inline HPolynomial rotate_quarter(const HPolynomial& p) {
    HPolynomial r;
    const GaussianRational i = GaussianRational::i();
    for (const auto& [m, c] : p.terms()) {
        GaussianRational factor = pow(i, static_cast<unsigned>(m.a))
                                  * pow(-i, static_cast<unsigned>(m.b));
        r.add_term(m, factor * c);
    }
    return r;
}

}  // namespace heisenharm::testutil
