// heisenharm: construct, verify, and evaluate solid spherical harmonics of
// the Heisenberg sublaplacian, plus their classical R^3 counterparts.
//
// All exact values are printed as strings; identical invocations produce
// byte-identical output. Exit status is 0 iff every requested check passes.

#include "heisenharm/classical.hpp"
#include "heisenharm/harmonics.hpp"
#include "heisenharm/json_io.hpp"
#include "heisenharm/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace heisenharm;

namespace {

int quad_points_from_env() {
    const char* env = std::getenv("HEISENHARM_QUAD_POINTS");
    if (!env) return 64;
    int v = std::atoi(env);
    return v >= 1 ? v : 64;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a rational like 3 or 1/2, got '" + s + "'");
    }
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + output_path);
    out << text;
}

std::string basis_csv(int alpha, int degree) {
    std::ostringstream os;
    os << "alpha,m,n,k,a,b,c,coeff_re,coeff_im\n";
    for (int n = -degree; n <= degree; n += 2) {
        HarmonicIndex idx(alpha, degree, n);
        HPolynomial p = solid_harmonic(idx);
        for (const auto& [mono, coeff] : p.terms()) {
            os << alpha << ',' << degree << ',' << n << ',' << idx.k() << ',' << mono.a
               << ',' << mono.b << ',' << mono.c << ',' << coeff.re().str() << ','
               << coeff.im().str() << '\n';
        }
    }
    return os.str();
}

int cmd_basis(int alpha, int degree, const std::string& format,
              const std::string& output_path) {
    if (alpha != 0 && alpha % 2 == 0) {
        std::cerr << "error: alpha = " << alpha
                  << " is unsupported (must be an odd integer or 0)\n";
        return 1;
    }
    if (format == "csv") {
        emit(basis_csv(alpha, degree), output_path);
        return 0;
    }
    Json records = Json::array();
    bool all_verified = true;
    for (int n = -degree; n <= degree; n += 2) {
        Json rec = harmonic_record(HarmonicIndex(alpha, degree, n), true);
        all_verified = all_verified && rec["verified"].get<bool>();
        records.push_back(std::move(rec));
    }
    emit(records.dump(2) + "\n", output_path);
    if (!all_verified) {
        std::cerr << "error: verification failed for some index of degree " << degree << "\n";
        return 1;
    }
    return 0;
}

int cmd_verify(int alpha, int max_degree, const std::string& output_path) {
    std::ostringstream os;
    bool all_ok = true;
    std::string first_failure;
    for (int m = 0; m <= max_degree; ++m) {
        for (int n = -m; n <= m; n += 2) {
            VerificationReport report = verify_index(HarmonicIndex(alpha, m, n));
            Json j = to_json(report);
            os << j.dump() << "\n";
            if (!report.passed() && first_failure.empty()) first_failure = j.dump();
            all_ok = all_ok && report.passed();
        }
        VerificationCheck dim = verify_dimension(alpha, m);
        Json j{{"index", Json{{"alpha", alpha}, {"m", m}}},
               {"checks", Json::array({Json{{"name", dim.name},
                                            {"status", dim.passed ? "pass" : "fail"},
                                            {"residual", dim.residual}}})},
               {"status", dim.passed ? "pass" : "fail"}};
        os << j.dump() << "\n";
        if (!dim.passed && first_failure.empty()) first_failure = j.dump();
        all_ok = all_ok && dim.passed;
    }
    emit(os.str(), output_path);
    if (!all_ok) {
        std::cerr << first_failure << "\n";
        return 1;
    }
    return 0;
}

int cmd_eval(int alpha, int m, int n, double rho, double theta, double phi) {
    HarmonicIndex idx(alpha, m, n);
    SphericalPoint pt{rho, theta, phi};
    std::complex<double> spherical = eval_spherical(idx, pt);
    std::complex<double> cartesian = eval_cartesian(solid_harmonic(idx), pt.to_cartesian());
    double diff = std::abs(spherical - cartesian);
    double scale = std::max(1.0, std::abs(cartesian));
    Json j{{"index", Json{{"alpha", alpha}, {"m", m}, {"n", n}, {"k", idx.k()}}},
           {"point", Json{{"rho", format_double(rho)},
                          {"theta", format_double(theta)},
                          {"phi", format_double(phi)}}},
           {"spherical", Json{{"re", format_double(spherical.real())},
                              {"im", format_double(spherical.imag())}}},
           {"cartesian", Json{{"re", format_double(cartesian.real())},
                              {"im", format_double(cartesian.imag())}}},
           {"difference", format_double(diff)}};
    std::cout << j.dump(2) << "\n";
    if (diff / scale >= 1e-12) {
        std::cerr << "error: route difference " << diff << " exceeds 1e-12 relative\n";
        return 1;
    }
    return 0;
}

int cmd_classical_gegenbauer(const std::string& lambda_str, int kmax,
                             const std::string& format, const std::string& output_path) {
    Rational lambda = parse_rational(lambda_str);
    GegenbauerSeries geg = gegenbauer_from_generating_function(lambda, kmax);
    if (format == "csv") {
        std::ostringstream os;
        os << "k,coefficients_low_to_high\n";
        for (int k = 0; k <= kmax; ++k) {
            os << k;
            for (int q = 0; q <= k; ++q) os << ',' << geg.polys[k].coeff(q).re().str();
            os << '\n';
        }
        emit(os.str(), output_path);
        return 0;
    }
    Json polys = Json::array();
    for (int k = 0; k <= kmax; ++k) {
        Json coeffs = Json::array();
        for (int q = 0; q <= k; ++q) coeffs.push_back(geg.polys[k].coeff(q).re().str());
        polys.push_back(std::move(coeffs));
    }
    emit(Json{{"lambda", lambda.str()}, {"polys", polys}}.dump(2) + "\n", output_path);
    return 0;
}

int cmd_classical_orthogonality(const std::string& lambda_str, int kmax,
                                const std::string& output_path) {
    Rational lambda = parse_rational(lambda_str);
    GegenbauerSeries geg = gegenbauer_from_generating_function(lambda, kmax);
    int points = quad_points_from_env();

    double max_offdiag = 0.0, max_diag_err = 0.0;
    Json gram = Json::array();
    for (int j = 0; j <= kmax; ++j) {
        Json row = Json::array();
        for (int k = 0; k <= kmax; ++k) {
            double val = weighted_interval_integral(geg.polys[j], geg.polys[k], lambda, points);
            row.push_back(format_double(val));
            if (j != k) max_offdiag = std::max(max_offdiag, std::abs(val));
            else max_diag_err = std::max(
                     max_diag_err, std::abs(val - gegenbauer_norm(lambda, k).to_double()));
        }
        gram.push_back(std::move(row));
    }
    Json expected = Json::array();
    for (int k = 0; k <= kmax; ++k) expected.push_back(gegenbauer_norm(lambda, k).str());

    bool ok = max_offdiag < 1e-8 && max_diag_err < 1e-8;
    Json j{{"lambda", lambda.str()},
           {"gram", gram},
           {"expected_diagonal", expected},
           {"max_offdiagonal", format_double(max_offdiag)},
           {"max_diagonal_error", format_double(max_diag_err)},
           {"quadrature", to_json(gauss_legendre_rule(points))},
           {"status", ok ? "pass" : "fail"}};
    emit(j.dump(2) + "\n", output_path);
    return ok ? 0 : 1;
}

int cmd_classical_r3_basis(int m, const std::string& output_path) {
    Json records = Json::array();
    bool all_ok = true;
    std::vector<EuclidPolynomial> harmonics;
    for (int n = -m; n <= m; ++n) {
        EuclidPolynomial h = classical_solid_harmonic(m, n);
        harmonics.push_back(h);
        EuclidPolynomial res = apply_laplacian(h);
        all_ok = all_ok && res.is_zero();
        Json terms = Json::array();
        for (const auto& [e, c] : h.terms())
            terms.push_back(Json{{"x", e[0]},
                                 {"y", e[1]},
                                 {"w", e[2]},
                                 {"coeff", to_json(c)}});
        records.push_back(Json{{"m", m},
                               {"n", n},
                               {"terms", terms},
                               {"laplacian_residual", res.is_zero() ? "0" : "nonzero"}});
    }
    emit(records.dump(2) + "\n", output_path);
    if (!all_ok) {
        std::cerr << "error: Laplacian residual nonzero for some degree-" << m
                  << " harmonic\n";
        return 1;
    }
    return 0;
}

int cmd_fundamental(double alpha, double z_re, double z_im, double t) {
    try {
        HPoint pt{{z_re, z_im}, t};
        std::complex<double> phi = eval_fundamental_solution(alpha, pt);
        Json j{{"alpha", format_double(alpha)},
               {"C_alpha", format_double(fundamental_constant(alpha))},
               {"phi", Json{{"re", format_double(phi.real())},
                            {"im", format_double(phi.imag())}}}};
        std::cout << j.dump(2) << "\n";
        return 0;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solid spherical harmonics of the Heisenberg sublaplacian"};
    app.require_subcommand(1);

    int alpha = 0, degree = 0, n = 0, max_degree = 4, kmax = 8;
    double rho = 1.0, theta = 0.0, phi = M_PI / 2, alpha_f = 0.0;
    double z_re = 1.0, z_im = 0.0, t = 0.0;
    std::string format = "json", output_path, lambda_str = "1/2";

    auto* basis_cmd = app.add_subcommand("basis", "Emit a degree-m basis of solid harmonics");
    basis_cmd->add_option("--alpha", alpha, "sublaplacian parameter (odd integer or 0)")
        ->required();
    basis_cmd->add_option("--degree,--m", degree, "Heisenberg degree m")->required();
    basis_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    basis_cmd->add_option("--output", output_path, "write to file instead of stdout");

    auto* verify_cmd = app.add_subcommand("verify", "Run exact checks for all m <= max-degree");
    verify_cmd->add_option("--alpha", alpha)->required();
    verify_cmd->add_option("--max-degree", max_degree)->required();
    verify_cmd->add_option("--output", output_path);

    auto* eval_cmd = app.add_subcommand(
        "eval", "Evaluate one harmonic by the spherical and cartesian routes");
    eval_cmd->add_option("--alpha", alpha)->required();
    eval_cmd->add_option("--degree,--m", degree)->required();
    eval_cmd->add_option("--n", n)->required();
    eval_cmd->add_option("--rho", rho)->required();
    eval_cmd->add_option("--theta", theta)->required();
    eval_cmd->add_option("--phi", phi)->required();

    auto* classical_cmd = app.add_subcommand("classical", "Classical R^3 machinery");
    classical_cmd->require_subcommand(1);
    auto* geg_cmd = classical_cmd->add_subcommand("gegenbauer", "Exact Gegenbauer coefficients");
    geg_cmd->add_option("--lambda", lambda_str, "rational weight index, e.g. 1/2");
    geg_cmd->add_option("--kmax", kmax);
    geg_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    geg_cmd->add_option("--output", output_path);
    auto* orth_cmd = classical_cmd->add_subcommand(
        "orthogonality", "Quadrature Gram matrix against the closed-form norms");
    orth_cmd->add_option("--lambda", lambda_str);
    orth_cmd->add_option("--kmax", kmax);
    orth_cmd->add_option("--output", output_path);
    auto* r3_cmd = classical_cmd->add_subcommand("r3-basis", "Degree-m harmonics on R^3");
    r3_cmd->add_option("--degree,--m", degree)->required();
    r3_cmd->add_option("--output", output_path);

    auto* fund_cmd = app.add_subcommand("fundamental", "Evaluate the fundamental solution");
    fund_cmd->add_option("--alpha", alpha_f, "real parameter, not an odd integer")->required();
    fund_cmd->add_option("--z-re", z_re)->required();
    fund_cmd->add_option("--z-im", z_im)->required();
    fund_cmd->add_option("--t", t)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (basis_cmd->parsed()) return cmd_basis(alpha, degree, format, output_path);
        if (verify_cmd->parsed()) return cmd_verify(alpha, max_degree, output_path);
        if (eval_cmd->parsed()) return cmd_eval(alpha, degree, n, rho, theta, phi);
        if (classical_cmd->parsed()) {
            if (geg_cmd->parsed())
                return cmd_classical_gegenbauer(lambda_str, kmax, format, output_path);
            if (orth_cmd->parsed())
                return cmd_classical_orthogonality(lambda_str, kmax, output_path);
            if (r3_cmd->parsed()) return cmd_classical_r3_basis(degree, output_path);
        }
        if (fund_cmd->parsed()) return cmd_fundamental(alpha_f, z_re, z_im, t);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
