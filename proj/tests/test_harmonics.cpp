#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heisenharm/harmonics.hpp"
#include "heisenharm/verify.hpp"
#include "test_util.hpp"

#include <cmath>
#include <random>

using namespace heisenharm;

namespace {
const GaussianRational I = GaussianRational::i();

std::vector<HarmonicIndex> index_sweep(std::initializer_list<int> alphas, int max_m) {
    std::vector<HarmonicIndex> out;
    for (int alpha : alphas)
        for (int m = 0; m <= max_m; ++m)
            for (int n = -m; n <= m; n += 2) out.emplace_back(alpha, m, n);
    return out;
}
}  // namespace

TEST_CASE("index validation") {
    CHECK_THROWS_AS(HarmonicIndex(1, 2, 1), std::invalid_argument);   // parity
    CHECK_THROWS_AS(HarmonicIndex(1, 2, 4), std::invalid_argument);   // |n| > m
    CHECK_THROWS_AS(HarmonicIndex(1, -1, 1), std::invalid_argument);  // m < 0
    CHECK(HarmonicIndex(3, 8, -4).k() == 2);
    CHECK(HarmonicIndex(3, 5, 5).k() == 0);
}

TEST_CASE("recurrence coefficients") {
    CHECK(coeffs_recurrence(HarmonicIndex(1, 4, 4)) ==
          std::vector<GaussianRational>{GaussianRational(1)});

    // alpha=1, m=2, n=0: one step, a_1 = -i/2
    auto a = coeffs_recurrence(HarmonicIndex(1, 2, 0));
    REQUIRE(a.size() == 2);
    CHECK(a[0] == GaussianRational(1));
    CHECK(a[1] == GaussianRational(Rational(0), Rational(-1, 2)));

    CHECK(coeffs_recurrence(HarmonicIndex(3, 4, 2)) == coeffs_closed_form(HarmonicIndex(3, 4, 2)));
}

TEST_CASE("closed-form coefficients") {
    auto a = coeffs_closed_form(HarmonicIndex(1, 2, 0));
    CHECK(a[0] == GaussianRational(1));
    CHECK(a[1] == GaussianRational(Rational(0), Rational(-1, 2)));
    CHECK(coeffs_closed_form(HarmonicIndex(-3, 6, 4)).size() == 2);
    CHECK(coeffs_closed_form(HarmonicIndex(5, 3, 1))[0] == GaussianRational(1));
}

TEST_CASE("recurrence and closed form agree wherever the recurrence is defined") {
    for (const auto& idx : index_sweep({-5, -3, -1, 0, 1, 3, 5}, 8)) {
        if (recurrence_degenerate(idx)) {
            CHECK_THROWS_AS(coeffs_recurrence(idx), RecurrenceDegenerate);
            CHECK_THROWS_AS(coeffs_closed_form(idx), RecurrenceDegenerate);
        } else {
            CHECK(coeffs_recurrence(idx) == coeffs_closed_form(idx));
        }
    }
}

TEST_CASE("degeneracy happens exactly where computed, only for negative odd alpha") {
    CHECK(recurrence_degenerate(HarmonicIndex(-1, 2, 0)));
    CHECK(recurrence_degenerate(HarmonicIndex(-3, 4, 0)));
    CHECK(!recurrence_degenerate(HarmonicIndex(1, 2, 0)));
    CHECK(!recurrence_degenerate(HarmonicIndex(0, 8, 0)));
    for (const auto& idx : index_sweep({0, 1, 3, 5, 7}, 10)) CHECK(!recurrence_degenerate(idx));
}

TEST_CASE("y polynomial") {
    CHECK(y_polynomial(HarmonicIndex(3, 2, 2))
          == UnivariatePoly::constant(GaussianRational(1)));

    // alpha=1, m=2, n=0: y = 1 - (i/2)(x - i) = 1/2 - (i/2) x
    UnivariatePoly y = y_polynomial(HarmonicIndex(1, 2, 0));
    CHECK(y == UnivariatePoly({GaussianRational(Rational(1, 2)),
                               GaussianRational(Rational(0), Rational(-1, 2))}));

    // degenerate index goes through the conjugation route and still solves
    // the ODE with its own (alpha, n)
    HarmonicIndex deg(-1, 2, 0);
    UnivariatePoly yd = y_polynomial(deg);
    CHECK(yd.degree() == 1);
    CHECK(ode_residual(deg, yd).is_zero());
    // proportional to (x - i)
    UnivariatePoly x_minus_i({-I, GaussianRational(1)});
    CHECK(yd.leading() * x_minus_i == GaussianRational(1) * yd);
}

TEST_CASE("hypergeometric assembly equals the series form") {
    for (const auto& idx : index_sweep({-5, -3, -1, 0, 1, 3, 5}, 8)) {
        if (recurrence_degenerate(idx)) {
            CHECK_THROWS_AS(y_from_hypergeometric(idx), RecurrenceDegenerate);
        } else {
            CHECK(y_from_hypergeometric(idx) == y_polynomial(idx));
        }
    }
}

TEST_CASE("h polynomial binomial form") {
    CHECK(h_polynomial(HarmonicIndex(5, 3, 3)) == UnivariatePoly::constant(GaussianRational(1)));

    // odd alpha, n=0, k=1: h = -(x + i alpha)
    for (int alpha : {-5, -3, -1, 1, 3, 5}) {
        UnivariatePoly h = h_polynomial(HarmonicIndex(alpha, 2, 0));
        CHECK(h == UnivariatePoly({GaussianRational(Rational(0), Rational(-alpha)),
                                   GaussianRational(-1)}));
    }
}

TEST_CASE("h has degree exactly k and is proportional to y") {
    for (const auto& idx : index_sweep({-5, -3, -1, 1, 3, 5}, 8)) {
        UnivariatePoly h = h_polynomial(idx);
        UnivariatePoly y = y_polynomial(idx);
        REQUIRE(h.degree() == idx.k());
        REQUIRE(y.degree() == idx.k());
        GaussianRational c = h.leading() / y.leading();
        CHECK(!c.is_zero());
        CHECK(h == c * y);
    }
}

TEST_CASE("ODE residual vanishes exactly for both polynomial routes") {
    for (const auto& idx : index_sweep({-5, -3, -1, 0, 1, 3, 5}, 8)) {
        CHECK(ode_residual(idx, h_polynomial(idx)).is_zero());
        CHECK(ode_residual(idx, y_polynomial(idx)).is_zero());
    }
}

TEST_CASE("trig polynomial coefficients") {
    CHECK(H_trig(HarmonicIndex(3, 4, 4)).c == std::vector<GaussianRational>{GaussianRational(1)});

    // odd alpha, n=0, k=1: ((1-alpha)/2) e^{-i phi} + ((alpha+1)/2) e^{i phi}
    for (int alpha : {-3, -1, 1, 3, 5}) {
        TrigPolynomial H = H_trig(HarmonicIndex(alpha, 2, 0));
        REQUIRE(H.c.size() == 2);
        CHECK(H.c[0] == GaussianRational(Rational(1 - alpha, 2)));
        CHECK(H.c[1] == GaussianRational(Rational(alpha + 1, 2)));
    }

    // alpha=0, n=0: Legendre P_k(cos phi); P_2 = 3/8 e^{-2i phi} + 1/4 + 3/8 e^{2i phi}
    TrigPolynomial P2 = H_trig(HarmonicIndex(0, 4, 0));
    CHECK(P2.c == std::vector<GaussianRational>{GaussianRational(Rational(3, 8)),
                                                GaussianRational(Rational(1, 4)),
                                                GaussianRational(Rational(3, 8))});
}

TEST_CASE("generating function route agrees with the binomial route exactly") {
    for (int alpha : {-5, -3, -1, 0, 1, 3, 5}) {
        for (int n = -4; n <= 4; ++n) {
            auto gf = H_from_generating_function(alpha, n, 8);
            for (int k = 0; k <= 8; ++k) {
                HarmonicIndex idx(alpha, 2 * k + std::abs(n), n);
                CHECK(H_trig(idx).c == gf[k].c);
            }
        }
    }
}

TEST_CASE("solid harmonics at the table entries") {
    for (int alpha : {-3, 0, 1, 5}) {
        CHECK(solid_harmonic(HarmonicIndex(alpha, 1, 1)) == HPolynomial::z());
    }
    // odd alpha, m=2, n=0: nonzero multiple of t + i alpha z zbar
    for (int alpha : {-5, -3, -1, 1, 3, 5}) {
        HPolynomial expect = HPolynomial::t()
                             + GaussianRational(Rational(alpha)) * I
                                   * (HPolynomial::z() * HPolynomial::zbar());
        HPolynomial got = solid_harmonic(HarmonicIndex(alpha, 2, 0));
        CHECK(exact_rank({got, expect}) == 1);
        CHECK(!got.is_zero());
    }
    // alpha=0 recovers the plain t
    CHECK(solid_harmonic(HarmonicIndex(0, 2, 0)) == HPolynomial::t());
    CHECK(apply_L_alpha(solid_harmonic(HarmonicIndex(1, 3, 1)), Rational(1)).is_zero());
}

TEST_CASE("harmonicity and homogeneity across the sweep") {
    for (const auto& idx : index_sweep({-5, -3, -1, 0, 1, 3, 5}, 8)) {
        HPolynomial p = solid_harmonic(idx);
        REQUIRE(!p.is_zero());
        CHECK(apply_L_alpha(p, Rational(idx.alpha)).is_zero());
        CHECK(heisenberg_degree(p) == idx.m);
        CHECK(dilate(p, Rational(5, 7))
              == GaussianRational(pow(Rational(5, 7), static_cast<unsigned>(idx.m))) * p);
    }
}

TEST_CASE("conjugation") {
    CHECK(conjugate_harmonic(HPolynomial::z()) == HPolynomial::zbar());
    HPolynomial p = HPolynomial::t() + GaussianRational(3) * I
                                           * (HPolynomial::z() * HPolynomial::zbar());
    HPolynomial q = conjugate_harmonic(p);
    CHECK(q == HPolynomial::t() - GaussianRational(3) * I
                                      * (HPolynomial::z() * HPolynomial::zbar()));
    CHECK(apply_L_alpha(q, Rational(-3)).is_zero());

    std::mt19937 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        HPolynomial r = testutil::random_hpoly(rng, 6);
        CHECK(conjugate_harmonic(conjugate_harmonic(r)) == r);
    }

    for (const auto& idx : index_sweep({-5, -1, 0, 3}, 6)) {
        CHECK(apply_L_alpha(conjugate_harmonic(solid_harmonic(idx)), Rational(-idx.alpha))
                  .is_zero());
    }
}

TEST_CASE("basis dimension and span") {
    CHECK(basis(7, 0).size() == 1);
    CHECK(basis(7, 0)[0] == HPolynomial(GaussianRational(1)));
    CHECK_THROWS_AS(basis(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(basis(-4, 2), std::invalid_argument);

    auto b = basis(1, 5);
    CHECK(b.size() == 6);
    CHECK(exact_rank(b) == 6);

    // basis(0,2) spans {z^2, zbar^2, t}
    auto b02 = basis(0, 2);
    std::vector<HPolynomial> table = {pow(HPolynomial::z(), 2), pow(HPolynomial::zbar(), 2),
                                      HPolynomial::t()};
    std::vector<HPolynomial> joint = b02;
    joint.insert(joint.end(), table.begin(), table.end());
    CHECK(exact_rank(b02) == 3);
    CHECK(exact_rank(table) == 3);
    CHECK(exact_rank(joint) == 3);
}

TEST_CASE("exact rank") {
    CHECK(exact_rank({HPolynomial::z(), HPolynomial::zbar(),
                      HPolynomial::z() + HPolynomial::zbar()})
          == 2);
    CHECK(exact_rank({HPolynomial()}) == 0);
    CHECK(exact_rank({I * HPolynomial::t(), HPolynomial::t()}) == 1);
}

TEST_CASE("spherical evaluation matches the table entries") {
    CHECK(eval_spherical(HarmonicIndex(3, 0, 0), {0.83, 1.2, 0.7})
          == std::complex<double>(1.0, 0.0));

    // (0,2,0): rho^2 cos phi
    SphericalPoint pt{1.3, 0.4, 1.1};
    std::complex<double> v = eval_spherical(HarmonicIndex(0, 2, 0), pt);
    CHECK(std::abs(v - std::complex<double>(1.3 * 1.3 * std::cos(1.1), 0.0)) < 1e-14);

    // (0,2,2) at (1, theta, pi/2): e^{2 i theta}
    std::complex<double> w =
        eval_spherical(HarmonicIndex(0, 2, 2), {1.0, M_PI / 4, M_PI / 2});
    CHECK(std::abs(w - std::complex<double>(0.0, 1.0)) < 1e-14);
}

TEST_CASE("spherical route equals cartesian route") {
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> rho_d(0.2, 2.0);
    std::uniform_real_distribution<double> theta_d(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> phi_d(0.15, M_PI - 0.15);
    for (const auto& idx : index_sweep({-3, 0, 1, 5}, 6)) {
        SphericalPoint pt{rho_d(rng), theta_d(rng), phi_d(rng)};
        std::complex<double> sph = eval_spherical(idx, pt);
        std::complex<double> cart = eval_cartesian(solid_harmonic(idx), pt.to_cartesian());
        double scale = std::max(1.0, std::abs(cart));
        CHECK(std::abs(sph - cart) / scale < 1e-12);
    }
}

TEST_CASE("boundary trig identity: sin^k(phi) h(cot phi) = (-1)^k H(e^{i phi})") {
    for (const auto& idx : index_sweep({-3, 0, 1, 5}, 8)) {
        UnivariatePoly h = h_polynomial(idx);
        TrigPolynomial H = H_trig(idx);
        int k = idx.k();
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        for (int j = 0; j < 20; ++j) {
            double phi = M_PI * (j + 0.5) / 20.0;
            std::complex<double> lhs =
                std::pow(std::sin(phi), k) * h.eval(std::complex<double>(1.0 / std::tan(phi)));
            std::complex<double> rhs = sign * H.eval(phi);
            double scale = std::max(1.0, std::abs(rhs));
            CHECK(std::abs(lhs - rhs) / scale < 1e-12);
        }
    }
}

TEST_CASE("verification reports") {
    VerificationReport good = verify_index(HarmonicIndex(1, 6, 2));
    CHECK(good.passed());
    CHECK(good.route_agreement);

    VerificationReport degenerate = verify_index(HarmonicIndex(-1, 4, -2));
    CHECK(degenerate.passed());
    bool fallback_seen = false;
    for (const auto& c : degenerate.checks)
        fallback_seen |= c.name == "recurrence_degenerate_conjugation_fallback";
    CHECK(fallback_seen);

    CHECK(verify_dimension(-3, 7).passed);
}

TEST_CASE("fundamental solution") {
    CHECK(std::abs(eval_fundamental_solution(0.0, {{1.0, 0.0}, 0.0})
                   - std::complex<double>(1.0 / M_PI, 0.0))
          < 1e-14);
    CHECK(std::abs(eval_fundamental_solution(0.0, {{0.0, 0.0}, 1.0})
                   - std::complex<double>(1.0 / M_PI, 0.0))
          < 1e-14);
    CHECK_THROWS_AS(eval_fundamental_solution(1.0, {{1.0, 0.0}, 0.0}), std::domain_error);
    CHECK_THROWS_AS(eval_fundamental_solution(-3.0, {{1.0, 0.0}, 0.0}), std::domain_error);
    CHECK_THROWS_AS(eval_fundamental_solution(0.5, {{0.0, 0.0}, 0.0}), std::domain_error);

    // C_alpha also equals 1/(pi cos(pi alpha / 2)) by the reflection formula
    for (double alpha : {0.0, 0.5, -0.5, 0.3, 2.0}) {
        double expect = 1.0 / (M_PI * std::cos(M_PI * alpha / 2.0));
        CHECK(std::abs(fundamental_constant(alpha) - expect) / std::abs(expect) < 1e-12);
    }

    // t -> -t conjugates Phi (principal-branch symmetry)
    std::complex<double> up = eval_fundamental_solution(0.5, {{0.7, -0.2}, 0.4});
    std::complex<double> down = eval_fundamental_solution(0.5, {{0.7, -0.2}, -0.4});
    CHECK(std::abs(up - std::conj(down)) < 1e-14);
}
