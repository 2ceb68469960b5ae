#pragma once

// Map germs (C^2,0) -> (C^3,0), possibly multigerms. Parsing and printing,
// the differential at the origin, linear left-right coordinate changes, the
// prenormal form (s, p, q), the double and triple point spaces via iterated
// divided differences, and the double point curve d computed two ways
// (resultant and elimination, cross-checked).

#include "germlink/groebner.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace germlink {

// one holomorphic branch: three components in a two-variable source ring,
// all vanishing at the origin
struct Branch {
    Ring source;
    std::array<Poly, 3> comps;
};

struct MapGerm {
    std::vector<Branch> branches;
    std::string label; // optional display name

    bool is_mono() const { return branches.size() == 1; }
    // the unique branch; throws for multigerms
    const Branch& mono() const;
};

// grammar per branch: Ident(v1,v2) = (e1, e2, e3), branches joined by ';'.
// Component expressions follow the poly_text grammar. All branches must use
// the same source variable pair and every component must vanish at 0.
MapGerm parse_germ(const std::string& text);

// canonical one-line form; parse_germ(print_germ(g)) reproduces g
std::string print_germ(const MapGerm& g);

// rank of the 3x2 differential at the origin
int differential_rank(const Branch& b);
int corank(const Branch& b); // 2 - differential_rank
int corank(const MapGerm& g); // mono-germs only
bool is_immersive(const Branch& b);

// ideal of 2x2 minors of the Jacobian, in the source ring
Ideal ramification_ideal(const Branch& b);

using Mat2 = std::array<std::array<Scalar, 2>, 2>;
using Mat3 = std::array<std::array<Scalar, 3>, 3>;

Scalar det2(const Mat2& m);
Scalar det3(const Mat3& m);

// B . Phi . A with A, B invertible linear maps; components become
// sum_j B[i][j] * f_j(A*(s,t))
Branch change_coordinates(const Branch& b, const Mat2& A, const Mat3& B);

// prenormal form: first component is the first source coordinate, the other
// two have no linear term in it. Reached through linear changes only, so it
// requires some exactly-linear combination of the components; germs without
// one are rejected as unsupported.
struct NormalizedBranch {
    Branch germ;
    // new coordinates = source * old coordinates
    Mat2 source;
    // normalized components = target * (old components, pre-substitution)
    Mat3 target;
};

NormalizedBranch normalize_corank1(const Branch& b);

// double point space I2 = (p1, q1) in (s, t1, t2) and triple point space
// I3 = (p1, q1, p2, q2) in (s, t1, t2, t3), from iterated divided
// differences of the prenormal components p, q in the t variable
struct DoubleSpaces {
    Ring ring2;
    Poly p1, q1;
    Ring ring3;
    std::vector<Poly> triple_gens;
    std::array<std::string, 3> tnames; // t1, t2, t3
};

DoubleSpaces double_space_ideals(const NormalizedBranch& nb);

// the double point curve of one branch, in the prenormal coordinates (s, t1)
struct DoubleCurve {
    Poly d;                              // monic; constant 1 when empty
    std::optional<Poly> via_resultant;   // Res_{t2}(p1, q1), monic
    std::optional<Poly> via_elimination; // principal eliminant, monic
    bool squarefree = false;
    bool empty = false; // unit ideal: no double points
};

// both routes where defined; when both are, the eliminant must divide the
// resultant and their squarefree parts must agree, else consistency_error.
// The resultant is the reported value.
DoubleCurve double_curve(const DoubleSpaces& ds);

// pull a plane curve equation from the prenormal coordinates (s, t1) back
// to the branch's original coordinates through the source change; monic
Poly transport_plane_curve(const Poly& d_norm, const NormalizedBranch& nb);

} // namespace germlink
