#pragma once

#include "qhw/rational.hpp"
#include "qhw/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace qhw {

/// One asymptotic statement instantiated at concrete inputs: the claimed
/// coefficients of (variable^{-scale_power} times the quantity) by degree.
struct ExpansionClaim {
    std::string source_ref;            // identifier for the claim being checked
    Var var = Var::eps;
    long scale_power = 0;              // the d in eps^d * pf or q^{-d} * pf
    std::map<long, Rational> claimed;  // degree -> coefficient, after scaling
    std::string validity;              // stated hypotheses
};

struct TermStatus {
    std::string label;  // optional sub-identity tag ("", "eprime", "h", "mu;nu", ...)
    long degree = 0;
    bool ok = false;
    Rational claimed;
    Rational computed;
};

struct VerificationReport {
    ExpansionClaim claim;
    std::vector<TermStatus> status;
    std::string notes;

    bool all_ok() const {
        for (const auto& s : status)
            if (!s.ok) return false;
        return true;
    }

    std::map<long, Rational> computed_terms() const {
        std::map<long, Rational> out;
        for (const auto& s : status) out[s.degree] = s.computed;
        return out;
    }

    void add(std::string label, long degree, const Rational& claimed_v, const Rational& computed_v) {
        status.push_back({std::move(label), degree, claimed_v == computed_v, claimed_v, computed_v});
    }
};

/// Compares a scaled engine series against a claim, degree by degree.
inline VerificationReport compare_series(ExpansionClaim claim, const LaurentSeries& scaled,
                                         std::string notes = {}) {
    VerificationReport rep;
    rep.claim = std::move(claim);
    rep.notes = std::move(notes);
    for (const auto& [deg, want] : rep.claim.claimed)
        rep.add("", deg, want, scaled.coeff(deg));
    return rep;
}

}  // namespace qhw
