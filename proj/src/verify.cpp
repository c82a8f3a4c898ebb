#include "heisenharm/verify.hpp"

namespace heisenharm {

namespace {

VerificationCheck make_check(std::string name, bool passed, std::string residual) {
    return {std::move(name), passed, std::move(residual)};
}

// p == c * q for a nonzero constant c (exact).
bool proportional_nonzero(const UnivariatePoly& p, const UnivariatePoly& q) {
    if (p.is_zero() || q.is_zero()) return false;
    if (p.degree() != q.degree()) return false;
    GaussianRational c = p.leading() / q.leading();
    if (c.is_zero()) return false;
    return p == c * q;
}

}  // namespace

VerificationReport verify_index(const HarmonicIndex& idx) {
    VerificationReport report{idx, {}, false};
    const HPolynomial solid = solid_harmonic(idx);

    {
        HPolynomial res = apply_L_alpha(solid, Rational(idx.alpha));
        report.checks.push_back(
            make_check("harmonicity", res.is_zero(), res.is_zero() ? "0" : res.str()));
    }
    {
        auto deg = heisenberg_degree(solid);
        bool deg_ok = deg.has_value() && *deg == idx.m;
        HPolynomial scaled = dilate(solid, Rational(2));
        HPolynomial expect = GaussianRational(pow(Rational(2), static_cast<unsigned>(idx.m)))
                             * solid;
        bool dil_ok = scaled == expect;
        report.checks.push_back(make_check("homogeneity", deg_ok && dil_ok,
                                           deg_ok && dil_ok ? "0" : "degree mismatch"));
    }
    {
        UnivariatePoly res = ode_residual(idx, h_polynomial(idx));
        report.checks.push_back(
            make_check("ode_residual", res.is_zero(), res.is_zero() ? "0" : "nonzero"));
    }

    bool routes_ok = true;
    if (recurrence_degenerate(idx)) {
        // Both coefficient routes divide by zero here; the conjugation
        // intertwiner supplies the cross-check instead.
        HarmonicIndex mirror(-idx.alpha, idx.m, -idx.n);
        bool ok = conjugate_harmonic(solid_harmonic(mirror)) == solid;
        routes_ok &= ok;
        report.checks.push_back(
            make_check("recurrence_degenerate_conjugation_fallback", ok, ok ? "0" : "mismatch"));
    } else {
        bool ok = coeffs_recurrence(idx) == coeffs_closed_form(idx);
        routes_ok &= ok;
        report.checks.push_back(
            make_check("route_recurrence_vs_closed_form", ok, ok ? "0" : "mismatch"));

        bool hyp_ok = y_from_hypergeometric(idx) == y_polynomial(idx);
        routes_ok &= hyp_ok;
        report.checks.push_back(
            make_check("route_hypergeometric_assembly", hyp_ok, hyp_ok ? "0" : "mismatch"));
    }
    {
        bool ok = proportional_nonzero(h_polynomial(idx), y_polynomial(idx));
        routes_ok &= ok;
        report.checks.push_back(
            make_check("route_h_proportional_to_y", ok, ok ? "0" : "not proportional"));
    }
    {
        TrigPolynomial direct = H_trig(idx);
        TrigPolynomial from_gf =
            H_from_generating_function(idx.alpha, idx.n,
                                       static_cast<unsigned>(idx.k()))[idx.k()];
        bool ok = direct.c == from_gf.c;
        routes_ok &= ok;
        report.checks.push_back(
            make_check("route_trig_vs_generating_function", ok, ok ? "0" : "mismatch"));
    }
    {
        HPolynomial res = apply_L_alpha(conjugate_harmonic(solid), Rational(-idx.alpha));
        report.checks.push_back(make_check("conjugation_maps_to_minus_alpha",
                                           res.is_zero(), res.is_zero() ? "0" : res.str()));
    }

    report.route_agreement = routes_ok;
    return report;
}

VerificationCheck verify_dimension(int alpha, int m) {
    int rank = exact_rank(basis(alpha, m));
    bool ok = rank == m + 1;
    return {"dimension", ok, ok ? "0" : "rank " + std::to_string(rank)};
}

}  // namespace heisenharm
