#include "germlink/resultant.hpp"

#include <map>
#include <utility>

namespace germlink {

Poly poly_exact_div(const Poly& a, const Poly& b) {
    if (a.ring() != b.ring()) throw ring_mismatch("poly_exact_div: ring mismatch");
    if (b.is_zero()) throw error("poly_exact_div: division by zero");
    Poly q(a.ring());
    Poly r = a;
    const auto& lt_b = *b.terms().begin(); // storage order is degrevlex-descending
    while (!r.is_zero()) {
        const auto& lt_r = *r.terms().begin();
        if (!mono_divides(lt_b.first, lt_r.first))
            throw consistency_error("poly_exact_div: not divisible");
        Poly t(a.ring());
        t.add_term(mono_div(lt_r.first, lt_b.first), lt_r.second / lt_b.second);
        q += t;
        r -= t * b;
    }
    return q;
}

Poly bareiss_det(const Ring& ring, std::vector<std::vector<Poly>> M) {
    const size_t n = M.size();
    for (const auto& row : M) {
        if (row.size() != n) throw error("bareiss_det: matrix not square");
        for (const auto& e : row)
            if (e.ring() != ring) throw ring_mismatch("bareiss_det: entry ring mismatch");
    }
    if (n == 0) return Poly::constant(ring, Scalar(1));

    int sign = 1;
    Poly prev = Poly::constant(ring, Scalar(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && M[p][k].is_zero()) ++p;
            if (p == n) return Poly(ring);
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                // one-step Bareiss: the division by the previous pivot is exact
                Poly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = num.is_zero() ? std::move(num) : poly_exact_div(num, prev);
            }
            M[i][k] = Poly(ring);
        }
        prev = M[k][k];
    }
    Poly det = M[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

namespace {

// p viewed in D[v]: exponent of v -> coefficient (v removed from monomials)
std::map<unsigned, Poly> coeffs_in(const Poly& p, size_t vi) {
    std::map<unsigned, Poly> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        unsigned e = rest[vi];
        rest[vi] = 0;
        auto it = out.find(e);
        if (it == out.end()) it = out.emplace(e, Poly(p.ring())).first;
        it->second.add_term(rest, c);
    }
    return out;
}

Poly coeff_in(const Poly& p, size_t vi, unsigned e) {
    Poly out(p.ring());
    for (const auto& [m, c] : p.terms()) {
        if (m[vi] != e) continue;
        Monomial rest = m;
        rest[vi] = 0;
        out.add_term(rest, c);
    }
    return out;
}

// pseudo-remainder of f by g in the variable vi (both nonzero,
// deg_vi g >= 1); normalization by powers of lc(g) is dropped because every
// caller strips content immediately afterwards
Poly prem(Poly f, const Poly& g, size_t vi) {
    const int dg = g.degree_in(vi);
    const Poly lcg = coeff_in(g, vi, static_cast<unsigned>(dg));
    const Poly v = Poly::variable(f.ring(), f.ring().var(vi));
    while (!f.is_zero() && f.degree_in(vi) >= dg) {
        const int df = f.degree_in(vi);
        const Poly lcf = coeff_in(f, vi, static_cast<unsigned>(df));
        f = lcg * f - lcf * v.pow(static_cast<unsigned>(df - dg)) * g;
    }
    return f;
}

Poly content_in(const Poly& p, size_t vi) {
    Poly g(p.ring());
    for (const auto& [e, c] : coeffs_in(p, vi)) g = poly_gcd(g, c);
    return g;
}

} // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.ring() != b.ring()) throw ring_mismatch("poly_gcd: ring mismatch");
    const Ring& ring = a.ring();
    if (a.is_zero()) return b.is_zero() ? b : monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(ring, Scalar(1));

    // main variable: first one occurring in either argument; coefficients
    // then involve later variables only, so the recursion loses a variable
    // at every level
    size_t vi = 0;
    while (a.degree_in(vi) == 0 && b.degree_in(vi) == 0) ++vi;

    const Poly ca = content_in(a, vi);
    const Poly cb = content_in(b, vi);
    Poly A = poly_exact_div(a, ca);
    Poly B = poly_exact_div(b, cb);
    const Poly cg = poly_gcd(ca, cb);

    if (A.degree_in(vi) < B.degree_in(vi)) std::swap(A, B);
    Poly G(ring);
    while (true) {
        if (B.is_zero()) {
            G = A;
            break;
        }
        if (B.degree_in(vi) == 0) {
            G = Poly::constant(ring, Scalar(1));
            break;
        }
        Poly r = prem(A, B, vi);
        A = B;
        B = r.is_zero() ? r : poly_exact_div(r, content_in(r, vi));
    }
    return monic(cg * G);
}

namespace {

// gcd(p, all first partials in variables p actually uses)
Poly repeated_factor_gcd(const Poly& p) {
    Poly g = p;
    for (size_t vi = 0; vi < p.ring().nvars(); ++vi) {
        if (p.degree_in(vi) == 0) continue;
        g = poly_gcd(g, partial_derivative(p, p.ring().var(vi)));
        if (g.is_constant()) break;
    }
    return g;
}

} // namespace

bool squarefree_test(const Poly& p) {
    if (p.is_zero()) return false;
    if (p.is_constant()) return true;
    return repeated_factor_gcd(p).is_constant();
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw error("squarefree_part: zero polynomial");
    if (p.is_constant()) return Poly::constant(p.ring(), Scalar(1));
    return monic(poly_exact_div(p, repeated_factor_gcd(p)));
}

Poly sylvester_resultant(const Poly& f, const Poly& g, const std::string& var) {
    if (f.ring() != g.ring()) throw ring_mismatch("sylvester_resultant: ring mismatch");
    if (f.is_zero() || g.is_zero())
        throw error("sylvester_resultant: zero polynomial");
    const Ring& ring = f.ring();
    const size_t vi = ring.index(var);
    const int df = f.degree_in(vi);
    const int dg = g.degree_in(vi);
    if (df == 0 && dg == 0)
        throw error("sylvester_resultant: neither argument involves " + var);
    if (df == 0) return f.pow(static_cast<unsigned>(dg));
    if (dg == 0) return g.pow(static_cast<unsigned>(df));

    const auto fc = coeffs_in(f, vi);
    const auto gc = coeffs_in(g, vi);
    auto at = [&ring](const std::map<unsigned, Poly>& cs, unsigned e) {
        auto it = cs.find(e);
        return it == cs.end() ? Poly(ring) : it->second;
    };

    // (df+dg) x (df+dg) Sylvester matrix: dg shifted copies of f's
    // coefficient row, then df of g's
    const size_t n = static_cast<size_t>(df + dg);
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, Poly(ring)));
    for (size_t r = 0; r < static_cast<size_t>(dg); ++r)
        for (int e = df; e >= 0; --e)
            M[r][r + static_cast<size_t>(df - e)] = at(fc, static_cast<unsigned>(e));
    for (size_t r = 0; r < static_cast<size_t>(df); ++r)
        for (int e = dg; e >= 0; --e)
            M[static_cast<size_t>(dg) + r][r + static_cast<size_t>(dg - e)] =
                at(gc, static_cast<unsigned>(e));
    return bareiss_det(ring, std::move(M));
}

} // namespace germlink
