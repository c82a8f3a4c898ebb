#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heisenharm/specfun.hpp"

#include <cmath>
#include <random>

using namespace heisenharm;

TEST_CASE("univariate polynomial basics") {
    UnivariatePoly x = UnivariatePoly::variable();
    UnivariatePoly p = x * x + GaussianRational(2) * x + UnivariatePoly::constant(GaussianRational(1));
    CHECK(p.degree() == 2);
    CHECK(p.derivative() == GaussianRational(2) * x + UnivariatePoly::constant(GaussianRational(2)));
    CHECK(p.eval(GaussianRational(3)) == GaussianRational(16));
    // (x+1)^2 composed with (x-1) is x^2
    UnivariatePoly shifted = p.compose(x - UnivariatePoly::constant(GaussianRational(1)));
    CHECK(shifted == x * x);
    CHECK(UnivariatePoly({GaussianRational(1), GaussianRational(0)}).degree() == 0);
}

TEST_CASE("terminating 2F1") {
    UnivariatePoly f0 = hyp2f1_terminating(Rational(0), Rational(5, 7), Rational(3, 2));
    CHECK(f0 == UnivariatePoly::constant(GaussianRational(1)));

    Rational b(5, 7), c(3, 2);
    UnivariatePoly f1 = hyp2f1_terminating(Rational(-1), b, c);
    CHECK(f1.coeff(0) == GaussianRational(1));
    CHECK(f1.coeff(1) == GaussianRational(-(b / c)));

    CHECK(hyp2f1_terminating(Rational(-4), b, c).coeff(0) == GaussianRational(1));

    CHECK_THROWS_AS(hyp2f1_terminating(Rational(1, 2), b, c), std::invalid_argument);
    CHECK_THROWS_AS(hyp2f1_terminating(Rational(2), b, c), std::invalid_argument);
    CHECK_THROWS_AS(hyp2f1_terminating(Rational(-3), b, Rational(-1)), std::domain_error);
}

TEST_CASE("2F1 coefficients match a direct Pochhammer product") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<long long> d(-15, 15);
    for (unsigned k = 0; k <= 10; ++k) {
        for (int trial = 0; trial < 5; ++trial) {
            Rational b(d(rng), 1 + std::abs(d(rng)));
            Rational c(2 * d(rng) + 1, 2);  // half-integer, never a pole
            UnivariatePoly f = hyp2f1_terminating(Rational(-(long long)k), b, c);
            for (unsigned v = 0; v <= k; ++v) {
                Rational expect = pochhammer(Rational(-(long long)k), v) * pochhammer(b, v)
                                  / (pochhammer(c, v) * factorial(v));
                CHECK(f.coeff(v) == GaussianRational(expect));
            }
        }
    }
}

TEST_CASE("euler transformation as exact polynomial identity") {
    CHECK(euler_transform_identity_check(Rational(0), Rational(9, 4), Rational(1, 3)));
    CHECK(euler_transform_identity_check(Rational(-1), Rational(2, 5), Rational(7, 2)));
    CHECK(euler_transform_identity_check(Rational(-3), Rational(1, 2), Rational(5, 2)));

    std::mt19937 rng(59);
    std::uniform_int_distribution<long long> d(-12, 12);
    for (long long k = 0; k <= 6; ++k) {
        for (int trial = 0; trial < 4; ++trial) {
            Rational b(d(rng), 1 + std::abs(d(rng)));
            Rational c(2 * d(rng) + 1, 2);
            CHECK(euler_transform_identity_check(Rational(-k), b, c));
        }
    }
}

TEST_CASE("gegenbauer from the generating function") {
    GegenbauerSeries leg = gegenbauer_from_generating_function(Rational(1, 2), 12);
    CHECK(leg.polys[0] == UnivariatePoly::constant(GaussianRational(1)));
    CHECK(leg.polys[1] == UnivariatePoly({GaussianRational(0), GaussianRational(1)}));
    CHECK(leg.polys[2] == UnivariatePoly({GaussianRational(Rational(-1, 2)), GaussianRational(0),
                                          GaussianRational(Rational(3, 2))}));

    GegenbauerSeries g32 = gegenbauer_from_generating_function(Rational(3, 2), 6);
    CHECK(g32.polys[1] == UnivariatePoly({GaussianRational(0), GaussianRational(3)}));

    CHECK_THROWS_AS(gegenbauer_from_generating_function(Rational(0), 3), std::invalid_argument);
    CHECK_THROWS_AS(gegenbauer_from_generating_function(Rational(-2), 3), std::invalid_argument);
}

TEST_CASE("gegenbauer three-term recurrence is an exact oracle") {
    // (k+1) P_{k+1} = 2(k+lambda) x P_k - (k + 2 lambda - 1) P_{k-1}
    for (Rational lambda : {Rational(1, 2), Rational(3, 2), Rational(5, 2), Rational(7, 2)}) {
        GegenbauerSeries geg = gegenbauer_from_generating_function(lambda, 13);
        UnivariatePoly x = UnivariatePoly::variable();
        for (unsigned k = 1; k <= 12; ++k) {
            UnivariatePoly lhs = GaussianRational(Rational(k + 1)) * geg.polys[k + 1];
            UnivariatePoly rhs =
                GaussianRational(Rational(2) * (Rational(k) + lambda)) * (x * geg.polys[k])
                - GaussianRational(Rational(k) + Rational(2) * lambda - Rational(1))
                      * geg.polys[k - 1];
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("gegenbauer parity") {
    GegenbauerSeries geg = gegenbauer_from_generating_function(Rational(5, 2), 10);
    for (unsigned k = 0; k <= 10; ++k) {
        const UnivariatePoly& p = geg.polys[k];
        CHECK(p.degree() == static_cast<int>(k));
        for (int q = 0; q <= p.degree(); ++q) {
            if ((q - static_cast<int>(k)) % 2 != 0) CHECK(p.coeff(q).is_zero());
        }
    }
}

TEST_CASE("gegenbauer norm, exact half-integer form") {
    CHECK(gegenbauer_norm(Rational(1, 2), 0) == Rational(2));
    CHECK(gegenbauer_norm(Rational(1, 2), 1) == Rational(2, 3));
    CHECK(gegenbauer_norm(Rational(3, 2), 0) == Rational(4, 3));
    for (unsigned k = 0; k <= 10; ++k)
        CHECK(gegenbauer_norm(Rational(1, 2), k) == Rational(2, 2 * (long long)k + 1));
    CHECK_THROWS_AS(gegenbauer_norm(Rational(1, 3), 2), std::invalid_argument);
}

TEST_CASE("floating norm agrees with the exact one") {
    for (double lambda : {0.5, 1.5, 2.5}) {
        Rational lam(static_cast<long long>(2 * lambda), 2);
        for (unsigned k = 0; k <= 8; ++k) {
            double exact = gegenbauer_norm(lam, k).to_double();
            CHECK(std::abs(gegenbauer_norm_f(lambda, k) - exact) / exact < 1e-12);
        }
    }
}

TEST_CASE("gamma function") {
    const double sqrt_pi = std::sqrt(M_PI);
    CHECK(std::abs(gamma_real(0.5) - sqrt_pi) / sqrt_pi < 1e-13);
    CHECK(std::abs(gamma_real(5.0) - 24.0) / 24.0 < 1e-13);
    CHECK(std::abs(gamma_real(3.5) - 15.0 * sqrt_pi / 8.0) / (15.0 * sqrt_pi / 8.0) < 1e-13);
    // reflection side: Gamma(-1/2) = -2 sqrt(pi)
    CHECK(std::abs(gamma_real(-0.5) + 2.0 * sqrt_pi) / (2.0 * sqrt_pi) < 1e-12);
    // half-integer ladder against the exact recursion from Gamma(1/2)
    double exact = sqrt_pi;
    for (int j = 0; j < 12; ++j) {
        double x = 0.5 + j;
        CHECK(std::abs(gamma_real(x) - exact) / exact < 1e-12);
        exact *= x;
    }
    CHECK_THROWS_AS(gamma_real(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_real(-3.0), std::domain_error);
}
