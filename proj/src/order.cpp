#include "germlink/order.hpp"

namespace germlink {

MonomialOrder MonomialOrder::elimination(const Ring& r,
                                         const std::vector<std::string>& block) {
    MonomialOrder o(Kind::Elim);
    o.block_.assign(r.nvars(), 0);
    for (const auto& name : block) o.block_[r.index(name)] = 1;
    return o;
}

unsigned MonomialOrder::block_degree(const Monomial& m) const {
    unsigned d = 0;
    for (size_t i = 0; i < m.size(); ++i)
        if (block_[i]) d += m[i];
    return d;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::DegRevLex:
            return degrevlex_cmp(a, b);
        case Kind::NegDegRevLex: {
            unsigned da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db ? 1 : -1; // smaller degree is larger
            for (size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            return 0;
        }
        case Kind::Lex: {
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        }
        case Kind::Elim: {
            unsigned da = block_degree(a), db = block_degree(b);
            if (da != db) return da > db ? 1 : -1;
            return degrevlex_cmp(a, b);
        }
    }
    return 0;
}

const Monomial& leading_monomial(const Poly& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw error("leading_monomial: zero polynomial");
    if (ord.kind() == MonomialOrder::Kind::DegRevLex)
        return p.terms().begin()->first; // storage order
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || ord.cmp(m, *best) > 0) best = &m;
    return *best;
}

Scalar leading_coeff(const Poly& p, const MonomialOrder& ord) {
    return p.coeff(leading_monomial(p, ord));
}

} // namespace germlink
