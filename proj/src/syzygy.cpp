#include "germlink/syzygy.hpp"

#include "germlink/groebner.hpp"

#include <algorithm>
#include <deque>

namespace germlink {

ModuleOrder::ModuleOrder(const Ring& ring, const std::vector<std::string>& block,
                         size_t lead_slots)
    : lead_slots_(lead_slots) {
    mask_.assign(ring.nvars(), 0);
    for (const auto& name : block) mask_[ring.index(name)] = 1;
}

unsigned ModuleOrder::block_degree(const Monomial& m) const {
    unsigned d = 0;
    for (size_t i = 0; i < mask_.size() && i < m.size(); ++i)
        if (mask_[i]) d += m[i];
    return d;
}

int ModuleOrder::cmp(size_t pa, const Monomial& ma, size_t pb, const Monomial& mb) const {
    const bool la = pa < lead_slots_;
    const bool lb = pb < lead_slots_;
    if (la != lb) return la ? 1 : -1;
    if (!la) {
        const unsigned ba = block_degree(ma);
        const unsigned bb = block_degree(mb);
        if (ba != bb) return ba > bb ? 1 : -1;
    }
    if (pa != pb) return pa < pb ? 1 : -1;
    return degrevlex_cmp(ma, mb);
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

ModuleTerm module_lead(const Vec& v, const ModuleOrder& ord) {
    ModuleTerm best;
    bool found = false;
    for (size_t p = 0; p < v.size(); ++p) {
        for (const auto& [m, c] : v[p].terms()) {
            if (!found || ord.cmp(p, m, best.slot, best.mono) > 0) {
                best = {p, m, c};
                found = true;
            }
        }
    }
    if (!found) throw error("module_lead: zero vector");
    return best;
}

namespace {

// v -= (c * x^m) * g
void axpy(Vec& v, const Scalar& c, const Monomial& m, const Vec& g, const Ring& ring) {
    Poly t(ring);
    t.add_term(m, c);
    for (size_t k = 0; k < v.size(); ++k) v[k] -= t * g[k];
}

Vec scale_monic(Vec v, const ModuleOrder& ord) {
    const Scalar inv = module_lead(v, ord).coeff.inverse();
    for (auto& p : v) p = p * inv;
    return v;
}

struct MPair {
    size_t i, j;
    size_t slot;
    Monomial lcm;
};

} // namespace

Vec module_normal_form(Vec f, const std::vector<Vec>& G, const ModuleOrder& ord) {
    if (f.empty()) return f;
    const Ring ring = f[0].ring();
    std::vector<ModuleTerm> leads;
    leads.reserve(G.size());
    for (const auto& g : G) leads.push_back(module_lead(g, ord));

    Vec rem(f.size(), Poly(ring));
    while (!vec_is_zero(f)) {
        const ModuleTerm lt = module_lead(f, ord);
        bool reduced = false;
        for (size_t gi = 0; gi < G.size(); ++gi) {
            if (leads[gi].slot != lt.slot) continue;
            if (!mono_divides(leads[gi].mono, lt.mono)) continue;
            axpy(f, lt.coeff / leads[gi].coeff, mono_div(lt.mono, leads[gi].mono),
                 G[gi], ring);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem[lt.slot].add_term(lt.mono, lt.coeff);
            f[lt.slot].add_term(lt.mono, -lt.coeff);
        }
    }
    return rem;
}

std::vector<Vec> module_groebner(const Ring& ring, std::vector<Vec> gens,
                                 const ModuleOrder& ord) {
    std::vector<Vec> G;
    std::vector<ModuleTerm> leads;
    for (auto& v : gens) {
        if (vec_is_zero(v)) continue;
        G.push_back(scale_monic(std::move(v), ord));
        leads.push_back(module_lead(G.back(), ord));
    }

    std::deque<MPair> pairs;
    auto enqueue_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (leads[i].slot != leads[j].slot) continue;
            pairs.push_back({i, j, leads[j].slot, mono_lcm(leads[i].mono, leads[j].mono)});
        }
        // normal strategy: smallest lcm first, ties by generator indices
        std::stable_sort(pairs.begin(), pairs.end(), [&](const MPair& a, const MPair& b) {
            int c = ord.cmp(a.slot, a.lcm, b.slot, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
    };
    for (size_t j = 1; j < G.size(); ++j) enqueue_pairs(j);

    // chain criterion (sound for modules, unlike the product criterion):
    // skip the pair when a third lead divides its lcm and both sub-pairs
    // have strictly smaller lcms, so their standard representations exist
    // by induction on divisibility
    auto chain_skip = [&](const MPair& pr) {
        for (size_t k = 0; k < G.size(); ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (leads[k].slot != pr.slot) continue;
            if (!mono_divides(leads[k].mono, pr.lcm)) continue;
            if (mono_lcm(leads[pr.i].mono, leads[k].mono) == pr.lcm) continue;
            if (mono_lcm(leads[pr.j].mono, leads[k].mono) == pr.lcm) continue;
            return true;
        }
        return false;
    };

    while (!pairs.empty()) {
        const MPair pr = pairs.front();
        pairs.pop_front();
        if (chain_skip(pr)) continue;
        // leads are monic, so the S-vector needs no coefficient scaling
        Vec s = G[pr.i];
        for (auto& p : s) {
            Poly t(ring);
            t.add_term(mono_div(pr.lcm, leads[pr.i].mono), Scalar(1));
            p = t * p;
        }
        axpy(s, Scalar(1), mono_div(pr.lcm, leads[pr.j].mono), G[pr.j], ring);
        Vec r = module_normal_form(std::move(s), G, ord);
        if (vec_is_zero(r)) continue;
        G.push_back(scale_monic(std::move(r), ord));
        leads.push_back(module_lead(G.back(), ord));
        enqueue_pairs(G.size() - 1);
    }

    // minimalize: drop any element whose lead another kept element divides
    std::vector<bool> drop(G.size(), false);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = 0; j < G.size() && !drop[i]; ++j) {
            if (i == j || drop[j]) continue;
            if (leads[j].slot != leads[i].slot) continue;
            if (!mono_divides(leads[j].mono, leads[i].mono)) continue;
            if (leads[j].mono == leads[i].mono && j > i) continue; // keep the first
            drop[i] = true;
        }
    }
    std::vector<Vec> kept;
    for (size_t i = 0; i < G.size(); ++i)
        if (!drop[i]) kept.push_back(std::move(G[i]));

    // tail-reduce for a canonical basis
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Vec> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        if (!others.empty()) kept[i] = module_normal_form(std::move(kept[i]), others, ord);
    }

    std::sort(kept.begin(), kept.end(), [&](const Vec& a, const Vec& b) {
        const ModuleTerm la = module_lead(a, ord);
        const ModuleTerm lb = module_lead(b, ord);
        return ord.cmp(la.slot, la.mono, lb.slot, lb.mono) > 0;
    });
    return kept;
}

bool module_member(const Vec& v, const std::vector<Vec>& rows, const Ring& ring) {
    if (vec_is_zero(v)) return true;
    if (rows.empty()) return false;
    const ModuleOrder ord(ring, {});
    const auto G = module_groebner(ring, rows, ord);
    return vec_is_zero(module_normal_form(v, G, ord));
}

std::vector<Vec> row_syzygies(const std::vector<Vec>& rows, const Ring& ring) {
    if (rows.empty()) return {};
    const size_t m = rows[0].size();
    const size_t k = rows.size();

    // tag each row with a unit slot; syzygies are the basis elements whose
    // row part reduces to zero under an order where row slots dominate tags
    std::vector<Vec> gens;
    gens.reserve(k);
    for (size_t i = 0; i < k; ++i) {
        if (rows[i].size() != m) throw error("row_syzygies: ragged rows");
        Vec v(m + k, Poly(ring));
        for (size_t j = 0; j < m; ++j) v[j] = rows[i][j];
        v[m + i] = Poly::constant(ring, Scalar(1));
        gens.push_back(std::move(v));
    }
    const ModuleOrder ord(ring, {}, m);
    const auto G = module_groebner(ring, std::move(gens), ord);

    std::vector<Vec> syz;
    for (const auto& g : G) {
        bool head_zero = true;
        for (size_t j = 0; j < m && head_zero; ++j) head_zero = g[j].is_zero();
        if (!head_zero) continue;
        syz.emplace_back(g.begin() + static_cast<long>(m), g.end());
    }
    for (const Vec& s : syz) {
        Vec acc(m, Poly(ring));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < m; ++j) acc[j] += s[i] * rows[i][j];
        if (!vec_is_zero(acc))
            throw consistency_error("row_syzygies: candidate fails to annihilate the rows");
    }
    return syz;
}

std::vector<Vec> syzygy_relations(const std::vector<Poly>& module_gens,
                                  const std::vector<Poly>& graph_gens,
                                  const std::vector<std::string>& source_vars) {
    if (module_gens.empty()) throw error("syzygy_relations: no module generators");
    const Ring ring = module_gens[0].ring();
    for (const auto& g : module_gens)
        if (g.ring() != ring) throw ring_mismatch("syzygy_relations: generator ring mismatch");
    for (const auto& h : graph_gens)
        if (h.ring() != ring) throw ring_mismatch("syzygy_relations: graph ring mismatch");

    const size_t m = module_gens.size();
    std::vector<Vec> gens;
    for (size_t j = 0; j < m; ++j) {
        Vec v(1 + m, Poly(ring));
        v[0] = module_gens[j];
        v[1 + j] = Poly::constant(ring, Scalar(1));
        gens.push_back(std::move(v));
    }

    // the graph generators only interact in the leading slot, where the
    // order restricts to plain degrevlex; handing over their reduced basis
    // spares the module loop from rediscovering it pair by pair
    std::vector<Poly> hs;
    for (const auto& h : graph_gens)
        if (!h.is_zero()) hs.push_back(h);
    if (!hs.empty())
        hs = groebner_basis(Ideal(ring, hs), MonomialOrder::global_degrevlex()).basis;
    for (const auto& h : hs) {
        Vec v(1 + m, Poly(ring));
        v[0] = h;
        gens.push_back(std::move(v));
    }

    const ModuleOrder ord(ring, source_vars);
    const auto G = module_groebner(ring, std::move(gens), ord);

    std::vector<size_t> src;
    for (const auto& name : source_vars) src.push_back(ring.index(name));
    auto source_free = [&](const Poly& p) {
        // degree_in is -1 on the zero polynomial, which is source-free
        for (size_t si : src)
            if (p.degree_in(si) > 0) return false;
        return true;
    };

    std::vector<Vec> rows;
    for (const auto& g : G) {
        if (!g[0].is_zero()) continue;
        bool ok = true;
        for (size_t k = 1; k <= m && ok; ++k) ok = source_free(g[k]);
        if (!ok) continue;
        rows.emplace_back(g.begin() + 1, g.end());
    }
    return rows;
}

} // namespace germlink
