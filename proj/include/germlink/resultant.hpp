#pragma once

// Determinant-based elimination tools: exact division, fraction-free
// determinants, Sylvester resultants, and a primitive-PRS gcd. Everything
// works over Q(i)[vars] with no floating point anywhere.

#include "germlink/poly.hpp"

#include <string>
#include <vector>

namespace germlink {

// exact quotient a / b; throws consistency_error if b does not divide a
Poly poly_exact_div(const Poly& a, const Poly& b);

// fraction-free (Bareiss) determinant; the empty matrix has determinant 1
Poly bareiss_det(const Ring& ring, std::vector<std::vector<Poly>> M);

// resultant of f and g with respect to var, from the Sylvester matrix.
// deg_var(f) = 0 gives f^(deg_var g) and symmetrically; both degrees zero
// leave the resultant undefined and throw, as does a zero input.
Poly sylvester_resultant(const Poly& f, const Poly& g, const std::string& var);

// gcd up to units, returned monic; primitive polynomial remainder sequences
Poly poly_gcd(Poly a, Poly b);

// true iff p has no repeated factor; over characteristic zero this is
// gcd(p, all first partials) being a unit. The zero polynomial is not
// squarefree.
bool squarefree_test(const Poly& p);

// product of the distinct irreducible factors, monic: p / gcd(p, partials).
// Throws on the zero polynomial; constants give 1.
Poly squarefree_part(const Poly& p);

} // namespace germlink
