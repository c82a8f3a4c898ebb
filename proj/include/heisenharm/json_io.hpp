// JSON serialization. Exact values always serialize as strings ("p/q" form),
// never as floats, so output round-trips losslessly and is byte-stable.
#pragma once

#include "heisenharm/classical.hpp"
#include "heisenharm/harmonics.hpp"
#include "heisenharm/hpoly.hpp"
#include "heisenharm/verify.hpp"

#include <json.hpp>

namespace heisenharm {

using Json = nlohmann::ordered_json;

Json to_json(const GaussianRational& g);
Json to_json(const HPolynomial& p);
Json to_json(const TrigPolynomial& t);
Json to_json(const QuadratureRule& rule);
Json to_json(const VerificationReport& report);

/// The harmonic record {"alpha", "m", "n", "k", "cartesian", "trig_coeffs",
/// "verified"} emitted by the basis subcommand.
Json harmonic_record(const HarmonicIndex& idx, bool run_verification);

/// Float formatting used in JSON output: shortest round-trip form, fixed
/// and locale-independent, so identical invocations are byte-identical.
std::string format_double(double v);

}  // namespace heisenharm
