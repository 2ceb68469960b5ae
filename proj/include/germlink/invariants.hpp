#pragma once

// The analytic invariants and their report: C from the ramification ideal,
// T from the second Fitting ideal and independently from the triple point
// spaces, the double point curve d with its squarefree flag, the finite
// determinacy verdict, and the linking invariant L = C - 3T. Every staircase
// codimension can be cross-checked against the truncated-ring oracle; a
// stable oracle value is exact, so disagreement is a fatal inconsistency.

#include "germlink/macaulay.hpp"
#include "germlink/presentation.hpp"

#include <optional>

namespace germlink {

Codim invariant_C(const MapGerm& g);

// via local_codim(F_2) of the presentation; the authoritative route,
// multigerms included
Codim invariant_T_fitting(const MapGerm& g);
Codim invariant_T_fitting(const Presentation& P);

// via the triple point spaces: mono-germs of corank <= 1, plus the
// three-branch immersive multigerm case where the cross-branch triple
// ideal carries the count; everything else is unsupported
Codim invariant_T_triple_space(const MapGerm& g);

// the cross-branch triple point ideal of a three-branch multigerm, in six
// source variables
Ideal triple_cross_ideal(const MapGerm& g);

enum class Verdict { yes, no, undetermined };
std::string verdict_str(Verdict v);

struct BranchReport {
    int corank = 0;
    bool immersive = false;
    Codim C; // local codim of the ramification ideal
    std::optional<Poly> image; // monic branch image equation

    // the double point curve in the branch's original coordinates; for
    // multigerms it includes the pullbacks of the other branch images
    std::optional<Poly> d;
    bool d_squarefree = false;
    bool d_empty = false;
    std::optional<Poly> d_resultant;   // own part, prenormal coordinates
    std::optional<Poly> d_elimination; // own part, prenormal coordinates
    std::string d_error;

    std::optional<Codim> triple_codim; // local codim of I3, before the /6
};

struct OracleCheck {
    std::string subject;
    Codim local;
    OracleResult oracle;
};

struct InvariantReport {
    MapGerm germ;
    int corank = -1; // of the single branch; -1 for multigerms
    Codim C;
    std::optional<Codim> T_fitting;
    std::optional<Codim> T_triple;
    std::string T_fitting_error, T_triple_error;
    std::optional<Codim> T;     // the agreed value
    std::optional<long long> L; // C - 3T when both are finite
    Verdict verdict = Verdict::undetermined;
    std::string verdict_reason;
    std::optional<Poly> image; // product of the branch images, monic
    std::string image_error;
    std::vector<BranchReport> branches;
    std::optional<Presentation> presentation;
    std::string presentation_error;
    std::vector<OracleCheck> oracle_checks;
};

struct ReportOptions {
    bool use_oracle = true;
    unsigned oracle_cap = 12;
    bool with_presentation = true;
};

// every field populated or carrying its own error; consistency failures
// (route disagreements, oracle contradictions) propagate as exceptions
InvariantReport full_report(const MapGerm& g, const ReportOptions& opts = {});

std::optional<long long> invariant_L(const MapGerm& g);

Verdict finite_determinacy_verdict(const MapGerm& g);

} // namespace germlink
