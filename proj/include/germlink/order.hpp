#pragma once

// Monomial orders. degrevlex and lex are global (1 is the smallest
// monomial), negdegrevlex is local (1 is the largest; the leading monomial
// of a unit is 1), and the elimination order makes every monomial touching
// the block larger than every monomial that avoids it.

#include "germlink/poly.hpp"

namespace germlink {

class MonomialOrder {
  public:
    enum class Kind { DegRevLex, NegDegRevLex, Lex, Elim };

    static MonomialOrder global_degrevlex() { return MonomialOrder(Kind::DegRevLex); }
    static MonomialOrder local_negdegrevlex() { return MonomialOrder(Kind::NegDegRevLex); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    // block = indices of variables to eliminate
    static MonomialOrder elimination(const Ring& r, const std::vector<std::string>& block);

    Kind kind() const { return kind_; }
    bool is_global() const { return kind_ != Kind::NegDegRevLex; }

    // +1 if a > b, 0 if equal, -1 if a < b
    int cmp(const Monomial& a, const Monomial& b) const;

  private:
    explicit MonomialOrder(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<char> block_; // elim mask, indexed by variable

    unsigned block_degree(const Monomial& m) const;
};

const Monomial& leading_monomial(const Poly& p, const MonomialOrder& ord);
Scalar leading_coeff(const Poly& p, const MonomialOrder& ord);

} // namespace germlink
