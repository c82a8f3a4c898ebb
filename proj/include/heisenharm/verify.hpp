// Per-index verification reports driving the `verify` subcommand and the
// acceptance suite: harmonicity, homogeneity, route equivalences, and the
// ODE residual, all as exact checks.
#pragma once

#include "heisenharm/harmonics.hpp"

#include <string>
#include <vector>

namespace heisenharm {

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string residual;  // exact "0" on success, offending value otherwise
};

struct VerificationReport {
    HarmonicIndex index;
    std::vector<VerificationCheck> checks;
    bool route_agreement = false;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Runs every per-index check for one harmonic.
VerificationReport verify_index(const HarmonicIndex& idx);

/// Exact rank of basis(alpha, m); passes iff it equals m+1.
VerificationCheck verify_dimension(int alpha, int m);

}  // namespace heisenharm
