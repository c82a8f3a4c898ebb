#include "heisenharm/json_io.hpp"

#include <cstdio>

namespace heisenharm {

Json to_json(const GaussianRational& g) {
    return Json{{"re", g.re().str()}, {"im", g.im().str()}};
}

Json to_json(const HPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back(Json{{"a", m.a}, {"b", m.b}, {"c", m.c}, {"coeff", to_json(c)}});
    }
    return terms;
}

Json to_json(const TrigPolynomial& t) {
    Json coeffs = Json::array();
    for (const auto& c : t.c) coeffs.push_back(to_json(c));
    return coeffs;
}

Json to_json(const QuadratureRule& rule) {
    Json nodes = Json::array(), weights = Json::array();
    for (double x : rule.nodes) nodes.push_back(format_double(x));
    for (double w : rule.weights) weights.push_back(format_double(w));
    return Json{{"nodes", nodes},
                {"weights", weights},
                {"exactness_degree", rule.exactness_degree}};
}

Json to_json(const VerificationReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(Json{{"name", c.name},
                              {"status", c.passed ? "pass" : "fail"},
                              {"residual", c.residual}});
    return Json{{"index",
                 Json{{"alpha", report.index.alpha},
                      {"m", report.index.m},
                      {"n", report.index.n},
                      {"k", report.index.k()}}},
                {"checks", checks},
                {"route_agreement", report.route_agreement},
                {"status", report.passed() ? "pass" : "fail"}};
}

Json harmonic_record(const HarmonicIndex& idx, bool run_verification) {
    bool verified = true;
    if (run_verification) verified = verify_index(idx).passed();
    return Json{{"alpha", idx.alpha},
                {"m", idx.m},
                {"n", idx.n},
                {"k", idx.k()},
                {"cartesian", to_json(solid_harmonic(idx))},
                {"trig_coeffs", to_json(H_trig(idx))},
                {"verified", verified}};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace heisenharm
