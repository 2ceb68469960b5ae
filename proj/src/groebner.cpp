#include "germlink/groebner.hpp"

#include <algorithm>
#include <map>

namespace germlink {

const MonomialOrder& degrevlex_order() {
    static const MonomialOrder o = MonomialOrder::global_degrevlex();
    return o;
}

namespace {

// deg(f) - deg(LM(f)); zero for global orders, >= 0 for local ones
int ecart(const Poly& f, const MonomialOrder& ord) {
    return f.degree() - (int)total_degree(leading_monomial(f, ord));
}

Poly make_monic(const Poly& f, const MonomialOrder& ord) {
    return f * leading_coeff(f, ord).inverse();
}

// f - (LT(f)/LT(g)) * g, assumes LM(g) | LM(f)
Poly head_reduce(const Poly& f, const Poly& g, const MonomialOrder& ord) {
    const Monomial& mf = leading_monomial(f, ord);
    const Monomial& mg = leading_monomial(g, ord);
    Scalar c = f.coeff(mf) / g.coeff(mg);
    Monomial q = mono_div(mf, mg);
    Poly mult(f.ring());
    mult.add_term(q, c);
    return f - mult * g;
}

Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
    const Monomial& mf = leading_monomial(f, ord);
    const Monomial& mg = leading_monomial(g, ord);
    Monomial l = mono_lcm(mf, mg);
    Poly a(f.ring()), b(f.ring());
    a.add_term(mono_div(l, mf), Scalar(1) / f.coeff(mf));
    b.add_term(mono_div(l, mg), Scalar(1) / g.coeff(mg));
    return a * f - b * g;
}

struct Pair {
    size_t i, j;
    Monomial lcm;
};

// deterministic normal strategy: smallest lcm first
void sort_pairs(std::vector<Pair>& pairs, const MonomialOrder& ord) {
    std::stable_sort(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
        int c = ord.cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Mora's weak normal form. T grows by intermediate remainders whose ecart
// exceeded the chosen reducer's; this is what makes the loop terminate for
// local orders.
Poly mora_weak_nf(const Poly& f, const std::vector<Poly>& G,
                  const MonomialOrder& ord) {
    Poly h = f;
    std::vector<Poly> T = G;
    while (!h.is_zero()) {
        const Monomial& mh = leading_monomial(h, ord);
        int best = -1, best_ecart = 0;
        for (size_t k = 0; k < T.size(); ++k) {
            if (!mono_divides(leading_monomial(T[k], ord), mh)) continue;
            int e = ecart(T[k], ord);
            if (best < 0 || e < best_ecart) {
                best = (int)k;
                best_ecart = e;
            }
        }
        if (best < 0) break;
        if (best_ecart > ecart(h, ord)) T.push_back(h);
        h = head_reduce(h, T[best], ord);
    }
    return h;
}

// shared driver: Buchberger with Mora's weak normal form. For global
// orders the ecart branch never fires and this is plain Buchberger.
std::vector<Poly> basis_loop(std::vector<Poly> G, const MonomialOrder& ord) {
    for (auto& g : G) g = make_monic(g, ord);
    std::vector<Pair> pairs;
    auto add_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Monomial l = mono_lcm(leading_monomial(G[i], ord), leading_monomial(G[j], ord));
            pairs.push_back(Pair{i, j, std::move(l)});
        }
        sort_pairs(pairs, ord);
    };
    for (size_t j = 1; j < G.size(); ++j) add_pairs(j);

    while (!pairs.empty()) {
        Pair p = pairs.front();
        pairs.erase(pairs.begin());
        // Buchberger's product criterion, valid for local orders as well
        if (coprime(leading_monomial(G[p.i], ord), leading_monomial(G[p.j], ord)))
            continue;
        Poly h = mora_weak_nf(s_poly(G[p.i], G[p.j], ord), G, ord);
        if (h.is_zero()) continue;
        G.push_back(make_monic(h, ord));
        add_pairs(G.size() - 1);
    }
    return G;
}

} // namespace

Poly mora_normal_form(const Poly& f, const std::vector<Poly>& G) {
    return mora_weak_nf(f, G, MonomialOrder::local_negdegrevlex());
}

Poly normal_form(const Poly& f, const std::vector<Poly>& G, const MonomialOrder& ord) {
    if (!ord.is_global()) throw error("normal_form: order must be global");
    Poly rest = f, out(f.ring());
    while (!rest.is_zero()) {
        const Monomial& m = leading_monomial(rest, ord);
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            if (mono_divides(leading_monomial(g, ord), m)) {
                rest = head_reduce(rest, g, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move the leading term to the remainder
            Poly t(f.ring());
            t.add_term(m, rest.coeff(m));
            out += t;
            rest -= t;
        }
    }
    return out;
}

namespace {

// drop elements whose leading monomial is divisible by another's
std::vector<Poly> minimalize(std::vector<Poly> G, const MonomialOrder& ord) {
    std::vector<Poly> out;
    for (size_t i = 0; i < G.size(); ++i) {
        const Monomial& mi = leading_monomial(G[i], ord);
        bool keep = true;
        for (size_t j = 0; j < G.size() && keep; ++j) {
            if (i == j) continue;
            const Monomial& mj = leading_monomial(G[j], ord);
            if (mono_divides(mj, mi) && (mj != mi || j < i)) keep = false;
        }
        if (keep) out.push_back(G[i]);
    }
    return out;
}

void sort_basis(std::vector<Poly>& G, const MonomialOrder& ord) {
    std::stable_sort(G.begin(), G.end(), [&](const Poly& a, const Poly& b) {
        return ord.cmp(leading_monomial(a, ord), leading_monomial(b, ord)) < 0;
    });
}

StandardBasis finish(const Ideal& I, const MonomialOrder& ord, std::vector<Poly> G,
                     bool local, bool tail_reduce) {
    G = minimalize(std::move(G), ord);
    if (tail_reduce) {
        // unique reduced basis: no term of g is divisible by another LM
        for (size_t i = 0; i < G.size(); ++i) {
            std::vector<Poly> others;
            for (size_t j = 0; j < G.size(); ++j)
                if (j != i) others.push_back(G[j]);
            G[i] = normal_form(G[i], others, ord);
        }
        std::erase_if(G, [](const Poly& g) { return g.is_zero(); });
        for (auto& g : G) g = make_monic(g, ord);
        G = minimalize(std::move(G), ord);
    }
    sort_basis(G, ord);
    StandardBasis sb;
    sb.input = I;
    sb.local = local;
    sb.basis = G;
    for (const auto& g : G) sb.leading.push_back(leading_monomial(g, ord));
    return sb;
}

} // namespace

StandardBasis groebner_basis(const Ideal& I, const MonomialOrder& ord) {
    if (!ord.is_global()) throw error("groebner_basis: order must be global");
    if (I.gens.empty()) return finish(I, ord, {}, false, false);
    return finish(I, ord, basis_loop(I.gens, ord), false, true);
}

StandardBasis standard_basis_local(const Ideal& I) {
    MonomialOrder ord = MonomialOrder::local_negdegrevlex();
    if (I.gens.empty()) return finish(I, ord, {}, true, false);
    // no tail reduction: it need not terminate in the local ring
    return finish(I, ord, basis_loop(I.gens, ord), true, false);
}

bool ideal_member(const Poly& f, const StandardBasis& sb, const MonomialOrder& ord) {
    if (f.is_zero()) return true;
    if (sb.local) return mora_weak_nf(f, sb.basis, ord).is_zero();
    return normal_form(f, sb.basis, ord).is_zero();
}

std::optional<std::vector<Monomial>> staircase(const std::vector<Monomial>& leading,
                                               size_t nvars) {
    // quotient is finite iff the leading ideal contains a pure power of
    // every variable
    std::vector<unsigned> bound(nvars, 0);
    std::vector<bool> have(nvars, false);
    for (const auto& m : leading) {
        size_t support = 0, var = 0;
        for (size_t i = 0; i < nvars; ++i)
            if (m[i] > 0) { ++support; var = i; }
        if (support == 0) return std::vector<Monomial>{}; // unit ideal
        if (support == 1) {
            if (!have[var] || m[var] < bound[var]) bound[var] = m[var];
            have[var] = true;
        }
    }
    for (size_t i = 0; i < nvars; ++i)
        if (!have[i]) return std::nullopt;

    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    while (true) {
        bool under = true;
        for (const auto& lm : leading)
            if (mono_divides(lm, cur)) { under = false; break; }
        if (under) out.push_back(cur);
        // odometer over the box
        size_t i = 0;
        while (i < nvars) {
            if (++cur[i] < bound[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == nvars) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) < 0; });
    return out;
}

Codim local_codim(const Ideal& I) {
    if (I.gens.empty()) return Codim::inf();
    for (const auto& g : I.gens)
        if (g.has_unit_term()) return Codim::of(0);
    StandardBasis sb = standard_basis_local(I);
    auto st = staircase(sb.leading, I.ring.nvars());
    if (!st) return Codim::inf();
    return Codim::of(st->size());
}

std::vector<Monomial> local_basis_monomials(const Ideal& I) {
    StandardBasis sb = standard_basis_local(I);
    auto st = staircase(sb.leading, I.ring.nvars());
    if (!st) throw error("local_basis_monomials: infinite codimension");
    return *st;
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop) {
    std::vector<std::string> present;
    for (const auto& v : drop)
        if (I.ring.has(v)) present.push_back(v);

    std::vector<std::string> keep;
    for (const auto& v : I.ring.vars())
        if (std::find(present.begin(), present.end(), v) == present.end())
            keep.push_back(v);
    Ring small(keep);

    std::vector<Poly> kept;
    if (present.empty()) {
        kept = I.gens;
    } else {
        MonomialOrder ord = MonomialOrder::elimination(I.ring, present);
        StandardBasis gb = groebner_basis(I, ord);
        std::vector<char> mask(I.ring.nvars(), 0);
        for (const auto& v : present) mask[I.ring.index(v)] = 1;
        for (const auto& g : gb.basis) {
            bool free = true;
            for (const auto& [m, c] : g.terms())
                for (size_t k = 0; k < m.size() && free; ++k)
                    if (mask[k] && m[k] > 0) free = false;
            if (free) kept.push_back(g);
        }
    }
    std::vector<Poly> small_gens;
    for (const auto& g : kept) small_gens.push_back(rename_into(g, small));
    // canonicalize in the reduced ring so eliminate is idempotent
    StandardBasis out = groebner_basis(Ideal(small, small_gens), degrevlex_order());
    return Ideal(small, out.basis);
}

} // namespace germlink
