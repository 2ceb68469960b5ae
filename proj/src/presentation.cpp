#include "germlink/presentation.hpp"

#include "germlink/resultant.hpp"
#include "germlink/syzygy.hpp"

#include <optional>

namespace germlink {

namespace {

Ring full_ring(const Ring& source, const std::array<std::string, 3>& tn) {
    return Ring({source.var(0), source.var(1), tn[0], tn[1], tn[2]});
}

// the graph ideal (x - f1, y - f2, z - f3) in the combined ring
std::vector<Poly> graph_gens(const Branch& b, const Ring& full,
                             const std::array<std::string, 3>& tn) {
    std::vector<Poly> h;
    for (size_t i = 0; i < 3; ++i)
        h.push_back(Poly::variable(full, tn[i]) - rename_into(b.comps[i], full));
    return h;
}

std::optional<Poly> try_exact_div(const Poly& a, const Poly& b) {
    try {
        return poly_exact_div(a, b);
    } catch (const consistency_error&) {
        return std::nullopt;
    }
}

PresentationBlock branch_block(const Branch& b, const Ring& target) {
    const Ring& src = b.source;
    Ideal comps(src, {b.comps[0], b.comps[1], b.comps[2]});
    if (!local_codim(comps).finite)
        throw not_supported("presentation_matrix: branch multiplicity is not finite");

    PresentationBlock blk;
    for (const Monomial& m : local_basis_monomials(comps)) {
        Poly g(src);
        g.add_term(m, Scalar(1));
        blk.gens.push_back(g);
    }

    std::array<std::string, 3> tn{target.var(0), target.var(1), target.var(2)};
    Ring full = full_ring(src, tn);
    std::vector<Poly> lifted;
    lifted.reserve(blk.gens.size());
    for (const Poly& g : blk.gens) lifted.push_back(rename_into(g, full));
    auto relations = syzygy_relations(lifted, graph_gens(b, full, tn),
                                      {src.var(0), src.var(1)});

    std::vector<Vec> rows;
    rows.reserve(relations.size());
    for (const Vec& r : relations) {
        Vec row;
        row.reserve(r.size());
        for (const Poly& e : r) row.push_back(rename_into(e, target));
        rows.push_back(std::move(row));
    }

    // A row is redundant over the local ring exactly when some polynomial
    // syzygy carries it with a unit coefficient (clear the denominators of a
    // local dependence). Nakayama guarantees pruning these reaches the
    // minimal count. Deterministic choice: first syzygy, first unit slot.
    for (bool changed = true; changed && rows.size() > 1;) {
        changed = false;
        for (const Vec& s : row_syzygies(rows, target)) {
            for (size_t i = 0; i < rows.size(); ++i) {
                if (s[i].constant_term().is_zero()) continue;
                rows.erase(rows.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    if (rows.size() != blk.gens.size())
        throw consistency_error("presentation_matrix: relation module did not minimize to a square block (" +
                                std::to_string(rows.size()) + " rows for " +
                                std::to_string(blk.gens.size()) + " generators)");

    // the defining property: rows annihilate the generators after pullback
    std::vector<Poly> images(b.comps.begin(), b.comps.end());
    for (const Vec& row : rows) {
        Poly acc(src);
        for (size_t j = 0; j < row.size(); ++j)
            acc += substitute(row[j], src, images) * blk.gens[j];
        if (!acc.is_zero())
            throw consistency_error("presentation_matrix: a relation row fails to annihilate the generators");
    }
    blk.rows = rows;

    blk.det = bareiss_det(target, rows);
    if (blk.det.is_zero())
        throw consistency_error("presentation_matrix: singular presentation block");
    blk.image = image_equation(b, target);

    Poly rest = blk.det;
    while (auto q = try_exact_div(rest, blk.image)) {
        rest = *q;
        ++blk.cover_degree;
    }
    if (!rest.has_unit_term())
        throw consistency_error(
            "presentation_matrix: det is not a unit multiple of an image power");
    return blk;
}

} // namespace

std::array<std::string, 3> target_names(const Ring& source) {
    const std::array<std::array<std::string, 3>, 2> fixed{
        {{"x", "y", "z"}, {"X", "Y", "Z"}}};
    for (const auto& c : fixed)
        if (!source.has(c[0]) && !source.has(c[1]) && !source.has(c[2])) return c;
    std::string suffix = "_";
    while (true) {
        std::array<std::string, 3> c{"x" + suffix, "y" + suffix, "z" + suffix};
        if (!source.has(c[0]) && !source.has(c[1]) && !source.has(c[2])) return c;
        suffix += "_";
    }
}

Poly image_equation(const Branch& b, const Ring& target) {
    std::array<std::string, 3> tn{target.var(0), target.var(1), target.var(2)};
    Ring full = full_ring(b.source, tn);
    Ideal graph(full, graph_gens(b, full, tn));
    Ideal E = eliminate(graph, {b.source.var(0), b.source.var(1)});
    if (E.gens.size() != 1)
        throw consistency_error("image_equation: eliminated graph ideal is not principal (" +
                                std::to_string(E.gens.size()) + " generators)");
    return monic(rename_into(E.gens[0], target));
}

Presentation presentation_matrix(const MapGerm& g) {
    if (g.branches.empty()) throw error("presentation_matrix: no branches");
    const Ring& src = g.branches[0].source;
    for (const Branch& b : g.branches)
        if (b.source != src)
            throw ring_mismatch("presentation_matrix: branches disagree on the source ring");

    Presentation P;
    auto tn = target_names(src);
    P.target = Ring({tn[0], tn[1], tn[2]});
    for (const Branch& b : g.branches) P.blocks.push_back(branch_block(b, P.target));

    P.m = 0;
    for (const auto& blk : P.blocks) P.m += blk.gens.size();
    P.lambda.assign(P.m, std::vector<Poly>(P.m, Poly(P.target)));
    size_t off = 0;
    for (const auto& blk : P.blocks) {
        const size_t n = blk.gens.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) P.lambda[off + i][off + j] = blk.rows[i][j];
        off += n;
    }

    P.det = Poly::constant(P.target, Scalar(1));
    P.image = Poly::constant(P.target, Scalar(1));
    for (const auto& blk : P.blocks) {
        P.det *= blk.det;
        P.image *= blk.image;
    }
    P.image = monic(P.image);
    return P;
}

Ideal fitting_ideal(const Presentation& P, unsigned k) {
    if (P.m <= k) return Ideal(P.target, {Poly::constant(P.target, Scalar(1))});
    const size_t n = P.m - k;

    // all size-n index subsets of 0..m-1, lexicographically
    std::vector<std::vector<size_t>> subsets;
    std::vector<size_t> pick(n);
    for (size_t i = 0; i < n; ++i) pick[i] = i;
    while (true) {
        subsets.push_back(pick);
        size_t i = n;
        while (i > 0 && pick[i - 1] == P.m - n + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }

    std::vector<Poly> minors;
    for (const auto& rs : subsets)
        for (const auto& cs : subsets) {
            std::vector<std::vector<Poly>> sub(n, std::vector<Poly>(n, Poly(P.target)));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) sub[i][j] = P.lambda[rs[i]][cs[j]];
            minors.push_back(bareiss_det(P.target, std::move(sub)));
        }
    return Ideal(P.target, std::move(minors));
}

} // namespace germlink
