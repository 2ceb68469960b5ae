#pragma once

// Groebner machinery over free modules R^k. The one consumer is the
// presentation builder: it needs every relation among chosen generators
// modulo the graph ideal whose coefficients avoid the source variables.

#include "germlink/poly.hpp"

#include <string>
#include <vector>

namespace germlink {

// element of a free module R^k, one Poly per slot
using Vec = std::vector<Poly>;

// The first lead_slots slots dominate every other slot, which makes them
// eliminated components. Inside the lead region: earlier slot wins, then
// degrevlex. Among the remaining slots: degree in the designated variable
// block decides first (block-touching monomials are larger), then the slot
// (earlier wins), then degrevlex. With a nonempty block this eliminates the
// block variables from the non-leading components as well.
class ModuleOrder {
  public:
    ModuleOrder(const Ring& ring, const std::vector<std::string>& block,
                size_t lead_slots = 1);

    // +1 if monomial ma in slot pa is larger than mb in slot pb
    int cmp(size_t pa, const Monomial& ma, size_t pb, const Monomial& mb) const;
    unsigned block_degree(const Monomial& m) const;

  private:
    std::vector<char> mask_;
    size_t lead_slots_ = 1;
};

struct ModuleTerm {
    size_t slot = 0;
    Monomial mono;
    Scalar coeff;
};

bool vec_is_zero(const Vec& v);

// leading term of a nonzero vector; throws on zero
ModuleTerm module_lead(const Vec& v, const ModuleOrder& ord);

// Buchberger over the free module (no product criterion, it is unsound for
// modules); result is the reduced basis, monic leads, deterministic order
std::vector<Vec> module_groebner(const Ring& ring, std::vector<Vec> gens,
                                 const ModuleOrder& ord);

Vec module_normal_form(Vec f, const std::vector<Vec>& G, const ModuleOrder& ord);

// v in the submodule spanned by rows?
bool module_member(const Vec& v, const std::vector<Vec>& rows, const Ring& ring);

// Generators of the module of polynomial syzygies among the rows: every
// returned s satisfies sum_i s[i] * rows[i] = 0, and every syzygy is a
// combination of the returned ones. A syzygy whose slot i carries a unit
// constant term certifies that rows[i] is redundant over the local ring.
std::vector<Vec> row_syzygies(const std::vector<Vec>& rows, const Ring& ring);

// All rows (a_1..a_m) with coefficients free of source_vars such that
// sum_j a_j * module_gens[j] lies in the ideal spanned by graph_gens.
// Rows come back in the full ring; projecting them down is the caller's job.
std::vector<Vec> syzygy_relations(const std::vector<Poly>& module_gens,
                                  const std::vector<Poly>& graph_gens,
                                  const std::vector<std::string>& source_vars);

} // namespace germlink
