#include "germlink/macaulay.hpp"

#include <algorithm>
#include <map>

namespace germlink {

namespace {

// all monomials of total degree <= cap, graded, deterministically ordered
std::vector<Monomial> monomials_up_to(size_t nvars, unsigned cap) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    // odometer over the degree-capped box, filtered by total degree
    while (true) {
        if (total_degree(cur) <= cap) out.push_back(cur);
        size_t i = 0;
        while (i < nvars) {
            if (++cur[i] <= cap) break;
            cur[i] = 0;
            ++i;
        }
        if (i == nvars) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) < 0; });
    return out;
}

// sparse row: column index -> coefficient
using Row = std::map<size_t, Scalar>;

unsigned long quotient_dim(const Ideal& I, unsigned d) {
    const size_t n = I.ring.nvars();
    std::vector<Monomial> cols = monomials_up_to(n, d);
    std::map<Monomial, size_t> index;
    for (size_t k = 0; k < cols.size(); ++k) index[cols[k]] = k;

    // rows span (I + m^(d+1)) / m^(d+1): every u*g with deg u <= d,
    // truncated at degree d
    std::vector<Row> rows;
    for (const auto& g : I.gens) {
        // order of g = least total degree among its terms; u*g vanishes in the
        // truncation once deg u + ord g exceeds d
        unsigned ord = 0;
        bool first = true;
        for (const auto& [m, c] : g.terms()) {
            unsigned td = total_degree(m);
            if (first || td < ord) ord = td;
            first = false;
        }
        for (const auto& u : cols) {
            if (total_degree(u) + ord > d) continue;
            Row r;
            for (const auto& [m, c] : g.terms()) {
                Monomial um = mono_mul(u, m);
                if (total_degree(um) > d) continue;
                auto it = index.find(um);
                r[it->second] += c;
            }
            std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
            if (!r.empty()) rows.push_back(std::move(r));
        }
    }

    // forward elimination, pivot = smallest column index
    std::map<size_t, Row> pivots;
    unsigned long rank = 0;
    for (auto& r : rows) {
        while (!r.empty()) {
            size_t col = r.begin()->first;
            auto p = pivots.find(col);
            if (p == pivots.end()) {
                Scalar inv = r.begin()->second.inverse();
                for (auto& [c, v] : r) v *= inv;
                pivots.emplace(col, std::move(r));
                ++rank;
                break;
            }
            Scalar f = r.begin()->second;
            for (const auto& [c, v] : p->second) {
                auto it = r.find(c);
                if (it == r.end()) {
                    Scalar nv = -(f * v);
                    if (!nv.is_zero()) r.emplace(c, std::move(nv));
                } else {
                    it->second -= f * v;
                    if (it->second.is_zero()) r.erase(it);
                }
            }
        }
    }
    return cols.size() - rank;
}

} // namespace

OracleResult macaulay_codim_oracle(const Ideal& I, unsigned cap) {
    if (cap < 1) throw error("macaulay_codim_oracle: cap must be >= 1");
    OracleResult res;
    res.cap = cap;
    if (I.gens.empty()) {
        res.stable = false; // dim of the full ring keeps growing with the cap
        res.value = quotient_dim(I, cap);
        return res;
    }
    unsigned long prev = quotient_dim(I, cap - 1);
    unsigned long at = quotient_dim(I, cap);
    res.value = at;
    res.stable = (prev == at);
    return res;
}

} // namespace germlink
