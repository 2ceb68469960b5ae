#include "germlink/germ.hpp"

#include "germlink/poly_text.hpp"
#include "germlink/resultant.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace germlink {

const Branch& MapGerm::mono() const {
    if (branches.size() != 1)
        throw error("expected a mono-germ, found " +
                    std::to_string(branches.size()) + " branches");
    return branches[0];
}

// ---------------------------------------------------------------- parsing

namespace {

std::pair<size_t, size_t> linecol(const std::string& s, size_t pos) {
    size_t line = 1, col = 1;
    for (size_t k = 0; k < pos && k < s.size(); ++k) {
        if (s[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void fail_at(const std::string& text, size_t pos, const std::string& msg) {
    auto [l, c] = linecol(text, pos);
    throw parse_error(msg, l, c);
}

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

void expect(const std::string& s, size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        fail_at(s, i, std::string("expected '") + c + "'");
    ++i;
}

std::string read_ident(const std::string& s, size_t& i) {
    skip_ws(s, i);
    size_t start = i;
    auto alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto alnum = [&](char c) { return alpha(c) || std::isdigit(static_cast<unsigned char>(c)); };
    if (i >= s.size() || !alpha(s[i])) fail_at(s, i, "expected an identifier");
    while (i < s.size() && alnum(s[i])) ++i;
    return s.substr(start, i - start);
}

// parse one expression of the component tuple, with positions reported
// relative to the whole germ text
Poly component_expr(const std::string& text, size_t begin, size_t end, const Ring& ring) {
    // blank out the prefix so parse_poly reports global line/column
    std::string padded = text.substr(0, begin);
    for (char& c : padded)
        if (c != '\n') c = ' ';
    padded += text.substr(begin, end - begin);
    return parse_poly(padded, ring);
}

} // namespace

MapGerm parse_germ(const std::string& text) {
    MapGerm g;
    size_t i = 0;
    std::vector<std::string> vars;
    while (true) {
        read_ident(text, i); // branch head name, e.g. Phi
        expect(text, i, '(');
        size_t vpos1 = i;
        std::string v1 = read_ident(text, i);
        expect(text, i, ',');
        size_t vpos2 = i;
        std::string v2 = read_ident(text, i);
        expect(text, i, ')');
        if (v1 == "i" || v2 == "i")
            fail_at(text, vpos1, "'i' is the imaginary unit, not a variable");
        if (v1 == v2) fail_at(text, vpos2, "source variables must be distinct");
        if (vars.empty()) {
            vars = {v1, v2};
        } else if (vars[0] != v1 || vars[1] != v2) {
            fail_at(text, vpos1, "all branches must use the same source variables");
        }
        expect(text, i, '=');
        expect(text, i, '(');

        // split the tuple at top-level commas
        std::vector<std::pair<size_t, size_t>> spans;
        size_t start = i;
        int depth = 0;
        for (;; ++i) {
            if (i >= text.size()) fail_at(text, i, "unterminated component tuple");
            char c = text[i];
            if (c == '(') ++depth;
            else if (c == ')' && depth > 0) --depth;
            else if (c == ')') {
                spans.emplace_back(start, i);
                ++i;
                break;
            } else if (c == ',' && depth == 0) {
                spans.emplace_back(start, i);
                start = i + 1;
            }
        }
        if (spans.size() != 3)
            fail_at(text, i - 1, "a branch needs exactly three components, found " +
                                     std::to_string(spans.size()));

        Ring ring(vars);
        Branch b{ring, {Poly(ring), Poly(ring), Poly(ring)}};
        for (size_t k = 0; k < 3; ++k) {
            b.comps[k] = component_expr(text, spans[k].first, spans[k].second, ring);
            if (!b.comps[k].coeff(Monomial(2, 0)).is_zero()) {
                auto [l, c] = linecol(text, spans[k].first);
                throw error("component " + std::to_string(k + 1) + " at " +
                            std::to_string(l) + ":" + std::to_string(c) +
                            " has a nonzero constant term; a germ must send the origin to the origin");
            }
        }
        g.branches.push_back(std::move(b));

        skip_ws(text, i);
        if (i >= text.size()) break;
        if (text[i] != ';') fail_at(text, i, "expected ';' between branches or end of input");
        ++i;
    }
    return g;
}

std::string print_germ(const MapGerm& g) {
    std::ostringstream os;
    for (size_t b = 0; b < g.branches.size(); ++b) {
        const Branch& br = g.branches[b];
        if (b) os << "; ";
        os << "Phi(" << br.source.var(0) << "," << br.source.var(1) << ") = ("
           << br.comps[0].str() << ", " << br.comps[1].str() << ", "
           << br.comps[2].str() << ")";
    }
    return os.str();
}

// ----------------------------------------------------- differential, minors

namespace {

Scalar linear_coeff(const Poly& p, size_t var) {
    Monomial m(p.ring().nvars(), 0);
    m[var] = 1;
    return p.coeff(m);
}

} // namespace

int differential_rank(const Branch& b) {
    // 3x2 matrix of linear coefficients, exact Gaussian elimination
    std::array<std::array<Scalar, 2>, 3> m;
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 2; ++c) m[r][c] = linear_coeff(b.comps[r], c);
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < 2 && row < 3; ++col) {
        size_t pr = row;
        while (pr < 3 && m[pr][col].is_zero()) ++pr;
        if (pr == 3) continue;
        std::swap(m[row], m[pr]);
        for (size_t r = row + 1; r < 3; ++r) {
            if (m[r][col].is_zero()) continue;
            Scalar f = m[r][col] / m[row][col];
            for (size_t c = col; c < 2; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

int corank(const Branch& b) { return 2 - differential_rank(b); }

int corank(const MapGerm& g) { return corank(g.mono()); }

bool is_immersive(const Branch& b) { return differential_rank(b) == 2; }

Ideal ramification_ideal(const Branch& b) {
    const Ring& r = b.source;
    std::array<std::array<Poly, 2>, 3> jac;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 2; ++j)
            jac[i][j] = partial_derivative(b.comps[i], r.var(j));
    std::vector<Poly> minors;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            minors.push_back(jac[i][0] * jac[j][1] - jac[i][1] * jac[j][0]);
    return Ideal(r, std::move(minors));
}

// ------------------------------------------------------ coordinate changes

Scalar det2(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Scalar det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

// the two source variables sent through the rows of M
std::vector<Poly> linear_images(const Ring& r, const Mat2& M) {
    Poly s = Poly::variable(r, r.var(0));
    Poly t = Poly::variable(r, r.var(1));
    return {s * M[0][0] + t * M[0][1], s * M[1][0] + t * M[1][1]};
}

} // namespace

Branch change_coordinates(const Branch& b, const Mat2& A, const Mat3& B) {
    if (det2(A).is_zero()) throw error("change_coordinates: singular source change");
    if (det3(B).is_zero()) throw error("change_coordinates: singular target change");
    const Ring& r = b.source;
    auto img = linear_images(r, A);
    std::array<Poly, 3> precomposed;
    for (size_t j = 0; j < 3; ++j) precomposed[j] = substitute(b.comps[j], r, img);
    std::array<Poly, 3> out{Poly(r), Poly(r), Poly(r)};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) out[i] += precomposed[j] * B[i][j];
    return Branch{r, std::move(out)};
}

// ------------------------------------------------------------- prenormal

namespace {

// kernel of the matrix whose rows are the degree >= 2 coefficient triples;
// alpha in the kernel means alpha . Phi is exactly linear
std::vector<std::array<Scalar, 3>> exact_linear_combinations(const Branch& b) {
    std::map<Monomial, std::array<Scalar, 3>, MonoGreater> rows;
    for (size_t j = 0; j < 3; ++j)
        for (const auto& [m, c] : b.comps[j].terms())
            if (total_degree(m) >= 2) rows[m][j] = c;
    std::vector<std::array<Scalar, 3>> mat;
    mat.reserve(rows.size());
    for (auto& [m, row] : rows) mat.push_back(row);

    // reduced row echelon form over Q(i)
    std::array<int, 3> pivot_row{-1, -1, -1};
    size_t row = 0;
    for (size_t col = 0; col < 3 && row < mat.size(); ++col) {
        size_t pr = row;
        while (pr < mat.size() && mat[pr][col].is_zero()) ++pr;
        if (pr == mat.size()) continue;
        std::swap(mat[row], mat[pr]);
        Scalar inv = mat[row][col].inverse();
        for (size_t c = 0; c < 3; ++c) mat[row][c] *= inv;
        for (size_t r = 0; r < mat.size(); ++r) {
            if (r == row || mat[r][col].is_zero()) continue;
            Scalar f = mat[r][col];
            for (size_t c = 0; c < 3; ++c) mat[r][c] -= f * mat[row][c];
        }
        pivot_row[col] = static_cast<int>(row);
        ++row;
    }
    std::vector<std::array<Scalar, 3>> kernel;
    for (size_t free_col = 0; free_col < 3; ++free_col) {
        if (pivot_row[free_col] >= 0) continue;
        std::array<Scalar, 3> v{Scalar(0), Scalar(0), Scalar(0)};
        v[free_col] = Scalar(1);
        for (size_t col = 0; col < 3; ++col)
            if (pivot_row[col] >= 0) v[col] = -mat[static_cast<size_t>(pivot_row[col])][free_col];
        kernel.push_back(v);
    }
    return kernel;
}

} // namespace

NormalizedBranch normalize_corank1(const Branch& b) {
    if (corank(b) == 2)
        throw not_supported("normalize_corank1: corank 2 germ has no prenormal form here");
    const Ring& r = b.source;

    std::array<Scalar, 3> alpha{};
    Scalar a, bb;
    bool found = false;
    for (const auto& v : exact_linear_combinations(b)) {
        Scalar ls(0), lt(0);
        for (size_t j = 0; j < 3; ++j) {
            ls += v[j] * linear_coeff(b.comps[j], 0);
            lt += v[j] * linear_coeff(b.comps[j], 1);
        }
        if (!ls.is_zero() || !lt.is_zero()) {
            alpha = v;
            a = ls;
            bb = lt;
            found = true;
            break;
        }
    }
    if (!found)
        throw not_supported(
            "normalize_corank1: no linear combination of the components is exactly linear");

    // new coordinates = S * old, chosen so that alpha . Phi becomes new s
    Mat2 S;
    std::vector<Poly> old_in_new(2, Poly(r));
    Poly ns = Poly::variable(r, r.var(0));
    Poly nt = Poly::variable(r, r.var(1));
    if (!a.is_zero()) {
        S = Mat2{{{a, bb}, {Scalar(0), Scalar(1)}}};
        old_in_new[0] = ns * a.inverse() - nt * (bb / a);
        old_in_new[1] = nt;
    } else {
        S = Mat2{{{Scalar(0), bb}, {Scalar(1), Scalar(0)}}};
        old_in_new[0] = nt;
        old_in_new[1] = ns * bb.inverse();
    }

    std::array<Poly, 3> sub;
    for (size_t j = 0; j < 3; ++j) sub[j] = substitute(b.comps[j], r, old_in_new);

    size_t pivot = 0;
    while (alpha[pivot].is_zero()) ++pivot;
    std::array<size_t, 2> rest{};
    for (size_t j = 0, k = 0; j < 3; ++j)
        if (j != pivot) rest[k++] = j;

    Poly first = sub[0] * alpha[0] + sub[1] * alpha[1] + sub[2] * alpha[2];
    if (first != ns)
        throw consistency_error("normalize_corank1: prenormal first component is not the coordinate");

    Mat3 T{};
    for (size_t c = 0; c < 3; ++c) T[0][c] = alpha[c];
    std::array<Poly, 3> comps{first, sub[rest[0]], sub[rest[1]]};
    for (size_t k = 0; k < 2; ++k) {
        Scalar c = linear_coeff(comps[k + 1], 0);
        comps[k + 1] -= first * c;
        for (size_t col = 0; col < 3; ++col) T[k + 1][col] = -c * alpha[col];
        T[k + 1][rest[k]] += Scalar(1);
    }
    return NormalizedBranch{Branch{r, std::move(comps)}, S, T};
}

// ---------------------------------------------------- double point spaces

namespace {

std::array<std::string, 3> divided_difference_names(const Ring& r) {
    const std::string& tv = r.var(1);
    std::string sep;
    while (true) {
        std::array<std::string, 3> n{tv + sep + "1", tv + sep + "2", tv + sep + "3"};
        if (!r.has(n[0]) && !r.has(n[1]) && !r.has(n[2])) return n;
        sep += "_";
    }
}

} // namespace

DoubleSpaces double_space_ideals(const NormalizedBranch& nb) {
    const Branch& g = nb.germ;
    const std::string sv = g.source.var(0);
    const std::string tv = g.source.var(1);
    auto tn = divided_difference_names(g.source);

    DoubleSpaces ds;
    ds.tnames = tn;
    ds.ring2 = Ring({sv, tn[0], tn[1]});
    ds.ring3 = Ring({sv, tn[0], tn[1], tn[2]});
    ds.p1 = rename_into(divided_difference(g.comps[1], tv, tn[0], tn[1]), ds.ring2);
    ds.q1 = rename_into(divided_difference(g.comps[2], tv, tn[0], tn[1]), ds.ring2);
    Poly p2 = divided_difference(ds.p1, tn[1], tn[1], tn[2]);
    Poly q2 = divided_difference(ds.q1, tn[1], tn[1], tn[2]);
    ds.triple_gens = {rename_into(ds.p1, ds.ring3), rename_into(ds.q1, ds.ring3),
                      rename_into(p2, ds.ring3), rename_into(q2, ds.ring3)};
    return ds;
}

// ---------------------------------------------------------- double curve

DoubleCurve double_curve(const DoubleSpaces& ds) {
    const std::string sv = ds.ring2.var(0);
    const std::string t1 = ds.tnames[0];
    const std::string t2 = ds.tnames[1];
    Ring curve_ring({sv, t1});
    const size_t vt2 = ds.ring2.index(t2);

    DoubleCurve out;

    // resultant route; deg 0 in t2 on both sides or a zero input leaves it
    // undefined and the elimination route decides alone
    if (ds.p1.has_unit_term() || ds.q1.has_unit_term()) {
        out.via_resultant = Poly::constant(curve_ring, Scalar(1));
    } else if (!ds.p1.is_zero() && !ds.q1.is_zero() &&
               (ds.p1.degree_in(vt2) > 0 || ds.q1.degree_in(vt2) > 0)) {
        Poly res = sylvester_resultant(ds.p1, ds.q1, t2);
        if (!res.is_zero()) out.via_resultant = monic(rename_into(res, curve_ring));
    }

    // elimination route; kept only when the eliminant is principal
    Ideal elim = eliminate(Ideal(ds.ring2, {ds.p1, ds.q1}), {t2});
    if (elim.gens.size() == 1)
        out.via_elimination = monic(rename_into(elim.gens[0], curve_ring));

    if (out.via_resultant && out.via_elimination) {
        // the resultant may carry honest multiplicity; it must still be a
        // multiple of the eliminant and share its squarefree part
        Poly g = poly_gcd(*out.via_resultant, *out.via_elimination);
        if (g != *out.via_elimination ||
            squarefree_part(*out.via_resultant) != squarefree_part(*out.via_elimination))
            throw consistency_error(
                "double_curve: resultant and elimination routes disagree: " +
                out.via_resultant->str() + " vs " + out.via_elimination->str());
    }

    if (out.via_resultant) out.d = *out.via_resultant;
    else if (out.via_elimination) out.d = *out.via_elimination;
    else throw not_supported("double_curve: the double point locus is not a curve");

    out.empty = out.d.has_unit_term();
    out.squarefree = squarefree_test(out.d);
    return out;
}

Poly transport_plane_curve(const Poly& d_norm, const NormalizedBranch& nb) {
    const Ring& r = nb.germ.source;
    Poly s = Poly::variable(r, r.var(0));
    Poly t = Poly::variable(r, r.var(1));
    const Mat2& S = nb.source;
    std::vector<Poly> img{s * S[0][0] + t * S[0][1], s * S[1][0] + t * S[1][1]};
    return monic(substitute(d_norm, r, img));
}

} // namespace germlink
