#include "germlink/poly.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace germlink {

Ring::Ring(std::vector<std::string> vars) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw error("Ring: empty variable name");
        if (!seen.insert(v).second)
            throw error("Ring: duplicate variable '" + v + "'");
    }
    vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
}

size_t Ring::index(const std::string& name) const {
    for (size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i] == name) return i;
    throw error("Ring: unknown variable '" + name + "'");
}

bool Ring::has(const std::string& name) const {
    for (const auto& v : *vars_)
        if (v == name) return true;
    return false;
}

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.size(); ++i) {
        if (b[i] > r[i]) throw error("mono_div: not divisible");
        r[i] -= b[i];
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
    return r;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

Poly::Poly(Ring r, const Scalar& c) : ring_(std::move(r)) {
    if (!c.is_zero()) terms_.emplace(Monomial(ring_.nvars(), 0), c);
}

Poly Poly::variable(const Ring& r, const std::string& name) {
    Poly p(r);
    Monomial m(r.nvars(), 0);
    m[r.index(name)] = 1;
    p.terms_.emplace(std::move(m), Scalar(1));
    return p;
}

bool Poly::has_unit_term() const {
    if (terms_.empty()) return false;
    // the constant monomial is the smallest, i.e. the last stored term
    return total_degree(terms_.rbegin()->first) == 0;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && has_unit_term());
}

Scalar Poly::constant_term() const {
    if (!has_unit_term()) return Scalar(0);
    return terms_.rbegin()->second;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    // first term has maximal total degree under degrevlex
    return (int)total_degree(terms_.begin()->first);
}

int Poly::degree_in(size_t var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, (int)m[var]);
    return d;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    if (m.size() != ring_.nvars()) throw error("Poly: monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (ring_ != o.ring_) throw ring_mismatch("Poly +: ring mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (ring_ != o.ring_) throw ring_mismatch("Poly -: ring mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.ring() != b.ring()) throw ring_mismatch("Poly *: ring mismatch");
    Poly r(a.ring());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(ring_, Scalar(1));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

Ideal::Ideal(Ring r, std::vector<Poly> gs) : ring(std::move(r)) {
    for (auto& g : gs) {
        if (g.is_zero()) continue;
        if (g.ring() != ring) throw ring_mismatch("Ideal: generator ring mismatch");
        gens.push_back(std::move(g));
    }
}

Poly partial_derivative(const Poly& p, const std::string& v) {
    size_t idx = p.ring().index(v);
    Poly r(p.ring());
    for (const auto& [m, c] : p.terms()) {
        if (m[idx] == 0) continue;
        Monomial d(m);
        unsigned e = d[idx]--;
        r.add_term(d, c * Scalar((long)e));
    }
    return r;
}

Poly conjugate_coeffs(const Poly& p) {
    Poly r(p.ring());
    for (const auto& [m, c] : p.terms()) r.add_term(m, c.conj());
    return r;
}

Poly substitute(const Poly& p, const Ring& target,
                const std::vector<Poly>& images) {
    if (images.size() != p.ring().nvars())
        throw error("substitute: need one image per variable");
    for (const auto& im : images)
        if (im.ring() != target) throw ring_mismatch("substitute: image ring mismatch");
    Poly r(target);
    for (const auto& [m, c] : p.terms()) {
        Poly t = Poly::constant(target, c);
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) t = t * images[i].pow(m[i]);
        r += t;
    }
    return r;
}

Poly substitute_partial(const Poly& p,
                        const std::map<std::string, Poly>& images) {
    const Ring& r = p.ring();
    std::vector<Poly> imgs;
    imgs.reserve(r.nvars());
    for (size_t i = 0; i < r.nvars(); ++i) {
        auto it = images.find(r.var(i));
        if (it == images.end()) {
            imgs.push_back(Poly::variable(r, r.var(i)));
        } else {
            if (it->second.ring() != r)
                throw ring_mismatch("substitute_partial: image ring mismatch");
            imgs.push_back(it->second);
        }
    }
    return substitute(p, r, imgs);
}

Poly divided_difference(const Poly& p, const std::string& v,
                        const std::string& v1, const std::string& v2) {
    const Ring& src = p.ring();
    size_t vi = src.index(v);
    std::vector<std::string> names;
    for (size_t i = 0; i < src.nvars(); ++i) {
        if (i == vi) {
            names.push_back(v1);
            names.push_back(v2);
        } else {
            names.push_back(src.var(i));
        }
    }
    Ring target(names);
    size_t i1 = target.index(v1), i2 = target.index(v2);
    // index of source var i inside target
    auto tgt_idx = [&](size_t i) { return i < vi ? i : i + 1; };

    Poly r(target);
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m[vi];
        if (e == 0) continue; // cancels in the difference
        Monomial base(target.nvars(), 0);
        for (size_t i = 0; i < m.size(); ++i)
            if (i != vi) base[tgt_idx(i)] = m[i];
        for (unsigned a = 0; a < e; ++a) {
            Monomial t(base);
            t[i1] += a;
            t[i2] += e - 1 - a;
            r.add_term(t, c);
        }
    }
    return r;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * p.terms().begin()->second.inverse();
}

Poly rename_into(const Poly& p, const Ring& target) {
    const Ring& src = p.ring();
    // only variables that actually occur need a slot in the target
    constexpr size_t unmapped = static_cast<size_t>(-1);
    std::vector<size_t> map(src.nvars(), unmapped);
    Poly r(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial t(target.nvars(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (map[i] == unmapped) map[i] = target.index(src.var(i));
            t[map[i]] = m[i];
        }
        r.add_term(t, c);
    }
    return r;
}

} // namespace germlink
