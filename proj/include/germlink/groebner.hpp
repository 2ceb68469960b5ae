#pragma once

// Groebner bases (Buchberger) for global orders and standard bases (Mora's
// tangent-cone algorithm with ecart-controlled weak normal form) for the
// local order. Codimension = staircase count of the leading ideal.

#include "germlink/order.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germlink {

// a nonnegative integer or INFINITE
struct Codim {
    bool finite = false;
    unsigned long value = 0;

    static Codim inf() { return Codim{false, 0}; }
    static Codim of(unsigned long v) { return Codim{true, v}; }

    friend bool operator==(const Codim& a, const Codim& b) {
        return a.finite == b.finite && (!a.finite || a.value == b.value);
    }
    friend bool operator!=(const Codim& a, const Codim& b) { return !(a == b); }
    std::string str() const { return finite ? std::to_string(value) : "infinite"; }
};

struct StandardBasis {
    Ideal input;
    bool local = false;
    std::vector<Poly> basis;        // monic, deterministically sorted
    std::vector<Monomial> leading;  // minimal generators of the leading ideal
};

// reduced Groebner basis; ord must be global
StandardBasis groebner_basis(const Ideal& I, const MonomialOrder& ord);

// standard basis w.r.t. negdegrevlex (no tail reduction; minimal, monic)
StandardBasis standard_basis_local(const Ideal& I);

// full normal form for global orders
Poly normal_form(const Poly& f, const std::vector<Poly>& G, const MonomialOrder& ord);

// Mora weak normal form: u*f = sum a_i g_i + result for a unit u
Poly mora_normal_form(const Poly& f, const std::vector<Poly>& G);

// membership in the ideal (global) resp. its localization at 0 (local)
bool ideal_member(const Poly& f, const StandardBasis& sb, const MonomialOrder& ord);

// monomials under the staircase of the leading ideal; nullopt if infinite
std::optional<std::vector<Monomial>> staircase(const std::vector<Monomial>& leading,
                                               size_t nvars);

// dim_C O/(I) at the origin via a local standard basis
Codim local_codim(const Ideal& I);

// staircase monomials of the local quotient, ascending degrevlex; error if infinite
std::vector<Monomial> local_basis_monomials(const Ideal& I);

// generators of the intersection of I with k[vars minus drop]; the result
// lives in the reduced ring
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop);

const MonomialOrder& degrevlex_order();

} // namespace germlink
