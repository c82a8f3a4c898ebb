#include "heisenharm/harmonics.hpp"

#include <cmath>

namespace heisenharm {

namespace {

// Exponents of the two generating-function factors:
//   A = (|n|+n)/2 + (alpha+1)/2,   B = (|n|-n)/2 - (alpha-1)/2.
Rational exponent_A(const HarmonicIndex& idx) {
    return Rational(std::abs(idx.n) + idx.n, 2) + Rational(idx.alpha + 1, 2);
}
Rational exponent_B(const HarmonicIndex& idx) {
    return Rational(std::abs(idx.n) - idx.n, 2) - Rational(idx.alpha - 1, 2);
}

Rational hyp_c(const HarmonicIndex& idx) {
    return Rational(-(idx.m + idx.n), 2) - Rational(idx.alpha - 1, 2);
}

}  // namespace

bool recurrence_degenerate(const HarmonicIndex& idx) {
    // The leading factor vanishes at v = (alpha + n + m - 1)/2.
    int s = idx.alpha + idx.n + idx.m - 1;
    if (s % 2 != 0) return false;
    int v = s / 2;
    return v >= 0 && v < idx.k();
}

std::vector<GaussianRational> coeffs_recurrence(const HarmonicIndex& idx) {
    const int k = idx.k();
    std::vector<GaussianRational> a;
    a.reserve(k + 1);
    a.emplace_back(1);
    for (int v = 0; v < k; ++v) {
        long long lead = 2LL * v - idx.alpha - idx.n - idx.m + 1;
        if (lead == 0)
            throw RecurrenceDegenerate("recurrence degenerate for this (alpha,n,m)");
        GaussianRational denom = GaussianRational::i()
                                 * GaussianRational(Rational(lead) * Rational(v + 1));
        Rational num = Rational(static_cast<long long>(v) * v)
                       - Rational(static_cast<long long>(idx.m) * v)
                       + Rational(static_cast<long long>(idx.m) * idx.m
                                      - static_cast<long long>(idx.n) * idx.n,
                                  4);
        a.push_back(-GaussianRational(num) * a.back() / denom);
    }
    return a;
}

std::vector<GaussianRational> coeffs_closed_form(const HarmonicIndex& idx) {
    const int k = idx.k();
    const Rational c = hyp_c(idx);
    const Rational minus_k(-k);
    const Rational minus_half_sum(-(idx.m + std::abs(idx.n)), 2);
    const GaussianRational half_i(Rational(0), Rational(1, 2));

    std::vector<GaussianRational> a;
    a.reserve(k + 1);
    for (int v = 0; v <= k; ++v) {
        Rational cv = pochhammer(c, v);
        if (cv.is_zero())
            throw RecurrenceDegenerate("recurrence degenerate for this (alpha,n,m)");
        Rational num = pochhammer(minus_k, v) * pochhammer(minus_half_sum, v);
        a.push_back(pow(half_i, static_cast<unsigned>(v))
                    * GaussianRational(num / (cv * factorial(v))));
    }
    return a;
}

UnivariatePoly y_polynomial(const HarmonicIndex& idx) {
    if (recurrence_degenerate(idx)) {
        // Conjugating the coefficients of the (-alpha, -n) solution solves
        // the ODE with alpha, n negated back; a_0 = 1 is preserved.
        HarmonicIndex mirror(-idx.alpha, idx.m, -idx.n);
        UnivariatePoly y = y_polynomial(mirror);
        std::vector<GaussianRational> conj(y.coeffs().size());
        for (std::size_t j = 0; j < conj.size(); ++j) conj[j] = y.coeffs()[j].conj();
        return UnivariatePoly(std::move(conj));
    }
    std::vector<GaussianRational> a = coeffs_closed_form(idx);
    UnivariatePoly x_minus_i({-GaussianRational::i(), GaussianRational(1)});
    UnivariatePoly y;
    for (std::size_t v = 0; v < a.size(); ++v)
        y = y + a[v] * pow(x_minus_i, static_cast<unsigned>(v));
    return y;
}

UnivariatePoly y_from_hypergeometric(const HarmonicIndex& idx) {
    if (recurrence_degenerate(idx))
        throw RecurrenceDegenerate("recurrence degenerate for this (alpha,n,m)");
    UnivariatePoly f = hyp2f1_terminating(Rational(-idx.k()),
                                          Rational(-(idx.m + std::abs(idx.n)), 2),
                                          hyp_c(idx));
    // substitute zeta = (1 + ix)/2
    UnivariatePoly zeta({GaussianRational(Rational(1, 2)),
                         GaussianRational(Rational(0), Rational(1, 2))});
    return f.compose(zeta);
}

UnivariatePoly h_polynomial(const HarmonicIndex& idx) {
    const int k = idx.k();
    const Rational neg_A = -exponent_A(idx);
    const Rational neg_B = -exponent_B(idx);
    UnivariatePoly x_plus_i({GaussianRational::i(), GaussianRational(1)});
    UnivariatePoly x_minus_i({-GaussianRational::i(), GaussianRational(1)});
    UnivariatePoly h;
    for (int v = 0; v <= k; ++v) {
        Rational w = gen_binomial(neg_A, v) * gen_binomial(neg_B, k - v);
        if (w.is_zero()) continue;
        h = h + GaussianRational(w) * (pow(x_plus_i, static_cast<unsigned>(v))
                                       * pow(x_minus_i, static_cast<unsigned>(k - v)));
    }
    return h;
}

std::complex<double> TrigPolynomial::eval(double phi) const {
    std::complex<double> sum = 0.0;
    for (int v = 0; v <= k; ++v) {
        double arg = (2.0 * v - k) * phi;
        sum += c[v].to_complex() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return sum;
}

TrigPolynomial H_trig(const HarmonicIndex& idx) {
    const int k = idx.k();
    const Rational neg_A = -exponent_A(idx);
    const Rational neg_B = -exponent_B(idx);
    const int sign = (k % 2 == 0) ? 1 : -1;
    TrigPolynomial H;
    H.k = k;
    H.c.resize(k + 1);
    for (int v = 0; v <= k; ++v)
        H.c[v] = GaussianRational(Rational(sign) * gen_binomial(neg_A, v)
                                  * gen_binomial(neg_B, k - v));
    return H;
}

std::vector<TrigPolynomial> H_from_generating_function(int alpha, int n, unsigned k_max) {
    // (1 - rho e^{i phi})^{-A} = sum_a (A)_a/a! rho^a e^{i a phi}, and the
    // mirror factor with B and e^{-i phi}; the rho^k coefficient is the
    // Cauchy convolution of the two series.
    Rational A = Rational(std::abs(n) + n, 2) + Rational(alpha + 1, 2);
    Rational B = Rational(std::abs(n) - n, 2) - Rational(alpha - 1, 2);
    std::vector<Rational> fa(k_max + 1), fb(k_max + 1);
    for (unsigned j = 0; j <= k_max; ++j) {
        fa[j] = pochhammer(A, j) / factorial(j);
        fb[j] = pochhammer(B, j) / factorial(j);
    }
    std::vector<TrigPolynomial> out(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) {
        out[k].k = static_cast<int>(k);
        out[k].c.resize(k + 1);
        for (unsigned v = 0; v <= k; ++v) out[k].c[v] = GaussianRational(fa[v] * fb[k - v]);
    }
    return out;
}

HPolynomial solid_harmonic(const HarmonicIndex& idx) {
    const int k = idx.k();
    TrigPolynomial H = H_trig(idx);

    HPolynomial zzbar = HPolynomial::z() * HPolynomial::zbar();
    HPolynomial plus = HPolynomial::t() + GaussianRational::i() * zzbar;    // t + i z zbar
    HPolynomial minus = HPolynomial::t() - GaussianRational::i() * zzbar;   // t - i z zbar

    HPolynomial radial;
    for (int v = 0; v <= k; ++v) {
        if (H.c[v].is_zero()) continue;
        radial += H.c[v] * (pow(plus, static_cast<unsigned>(v))
                            * pow(minus, static_cast<unsigned>(k - v)));
    }

    HPolynomial angular = HPolynomial::monomial(
        {idx.n > 0 ? idx.n : 0, idx.n < 0 ? -idx.n : 0, 0}, GaussianRational(1));
    return angular * radial;
}

std::vector<HPolynomial> basis(int alpha, int m) {
    if (alpha != 0 && alpha % 2 == 0)
        throw std::invalid_argument("basis: alpha must be an odd integer or 0");
    std::vector<HPolynomial> out;
    out.reserve(m + 1);
    for (int n = -m; n <= m; n += 2) out.push_back(solid_harmonic(HarmonicIndex(alpha, m, n)));
    return out;
}

int exact_rank(const std::vector<HPolynomial>& polys) {
    // Column index per monomial, then exact Gaussian elimination over Q(i).
    std::map<HMonomial, std::size_t> cols;
    for (const auto& p : polys)
        for (const auto& [mono, c] : p.terms()) cols.try_emplace(mono, 0);
    std::size_t ncols = 0;
    for (auto& [mono, idx] : cols) idx = ncols++;

    std::vector<std::vector<GaussianRational>> rows;
    for (const auto& p : polys) {
        std::vector<GaussianRational> row(ncols);
        for (const auto& [mono, c] : p.terms()) row[cols[mono]] = c;
        rows.push_back(std::move(row));
    }

    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows.size() && lead < ncols; ++lead) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][lead].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        GaussianRational inv = GaussianRational(1) / rows[r][lead];
        for (std::size_t j = lead; j < ncols; ++j) rows[r][j] = inv * rows[r][j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][lead].is_zero()) continue;
            GaussianRational f = rows[i][lead];
            for (std::size_t j = lead; j < ncols; ++j)
                rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

HPoint SphericalPoint::to_cartesian() const {
    double s = std::sqrt(std::max(0.0, std::sin(phi)));
    return {rho * s * std::complex<double>(std::cos(theta), std::sin(theta)),
            rho * rho * std::cos(phi)};
}

std::complex<double> eval_spherical(const HarmonicIndex& idx, const SphericalPoint& pt) {
    TrigPolynomial H = H_trig(idx);
    int absn = std::abs(idx.n);
    std::complex<double> angular(std::cos(idx.n * pt.theta), std::sin(idx.n * pt.theta));
    double radial = std::pow(pt.rho, idx.m)
                    * std::pow(std::max(0.0, std::sin(pt.phi)), 0.5 * absn);
    return angular * radial * H.eval(pt.phi);
}

UnivariatePoly ode_residual(const HarmonicIndex& idx, const UnivariatePoly& h) {
    UnivariatePoly one_plus_x2({GaussianRational(1), GaussianRational(0), GaussianRational(1)});
    UnivariatePoly first_coeff(
        {GaussianRational(Rational(0), Rational(idx.alpha + idx.n)),
         GaussianRational(idx.m - 1)});
    GaussianRational zero_coeff(
        Rational(static_cast<long long>(idx.m) * idx.m
                     - static_cast<long long>(idx.n) * idx.n,
                 4));
    return one_plus_x2 * h.derivative().derivative() - first_coeff * h.derivative()
           + zero_coeff * h;
}

double fundamental_constant(double alpha) {
    double r = std::round(alpha);
    if (std::abs(alpha - r) < 1e-12 && std::llround(r) % 2 != 0)
        throw std::domain_error("fundamental_constant: Gamma pole at odd integer alpha");
    return gamma_real(0.5 * (1.0 + alpha)) * gamma_real(0.5 * (1.0 - alpha)) / (M_PI * M_PI);
}

std::complex<double> eval_fundamental_solution(double alpha, const HPoint& pt) {
    double zz = std::norm(pt.z);
    if (zz == 0.0 && pt.t == 0.0)
        throw std::domain_error("eval_fundamental_solution: undefined at the origin");
    double gauge4 = zz * zz + pt.t * pt.t;  // |z|^4 + t^2
    std::complex<double> ratio = std::complex<double>(zz, pt.t)
                                 / std::complex<double>(zz, -pt.t);
    // unimodular ratio; principal branch for the alpha/2 power
    std::complex<double> power = std::exp(0.5 * alpha * std::log(ratio));
    return fundamental_constant(alpha) / std::sqrt(gauge4) * power;
}

}  // namespace heisenharm
