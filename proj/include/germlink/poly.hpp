#pragma once

// Sparse multivariate polynomials over the Gaussian rationals.
// A Ring is an ordered list of distinct variable names; two rings are the
// same ring iff the lists are equal. Terms are stored descending in
// degree-reverse-lexicographic order, so iteration order (and printing)
// is canonical.

#include "germlink/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace germlink {

class Ring {
  public:
    Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}
    explicit Ring(std::vector<std::string> vars);

    size_t nvars() const { return vars_->size(); }
    const std::string& var(size_t i) const { return (*vars_)[i]; }
    const std::vector<std::string>& vars() const { return *vars_; }
    // index of a variable name; throws if absent
    size_t index(const std::string& name) const;
    bool has(const std::string& name) const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

  private:
    std::shared_ptr<const std::vector<std::string>> vars_;
};

using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b); // a / b, assumes b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// +1 if a > b in degrevlex, 0 if equal, -1 otherwise
int degrevlex_cmp(const Monomial& a, const Monomial& b);

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return degrevlex_cmp(a, b) > 0;
    }
};

class Poly {
  public:
    using TermMap = std::map<Monomial, Scalar, MonoGreater>;

    Poly() = default;
    explicit Poly(Ring r) : ring_(std::move(r)) {}
    Poly(Ring r, const Scalar& c);

    static Poly variable(const Ring& r, const std::string& name);
    static Poly constant(const Ring& r, const Scalar& c) { return Poly(r, c); }

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // unit of the local ring: nonzero constant term
    bool has_unit_term() const;
    bool is_constant() const;
    Scalar constant_term() const;
    // total degree, -1 for the zero polynomial
    int degree() const;
    int degree_in(size_t var) const;

    void add_term(const Monomial& m, const Scalar& c);
    Scalar coeff(const Monomial& m) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Scalar& c) const;
    friend Poly operator*(const Scalar& c, const Poly& p) { return p * c; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;

    // canonical text form (descending degrevlex); parseable back
    std::string str() const;

  private:
    Ring ring_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

struct Ideal {
    Ring ring;
    std::vector<Poly> gens; // zero polynomials removed

    Ideal() = default;
    Ideal(Ring r, std::vector<Poly> gs);
};

// d/dv
Poly partial_derivative(const Poly& p, const std::string& v);

// conjugate all coefficients, variables untouched
Poly conjugate_coeffs(const Poly& p);

// substitute every variable of p's ring; images must all live in `target`
Poly substitute(const Poly& p, const Ring& target,
                const std::vector<Poly>& images);

// substitute a subset of variables by polynomials of the same ring
Poly substitute_partial(const Poly& p,
                        const std::map<std::string, Poly>& images);

// exact quotient (p(v -> v1) - p(v -> v2)) / (v1 - v2), computed without
// division: each term c*m*v^e contributes c*m*sum_{a+b=e-1} v1^a v2^b.
// The result ring replaces v by v1 and inserts v2 right after it.
Poly divided_difference(const Poly& p, const std::string& v,
                        const std::string& v1, const std::string& v2);

// p / lc(p) in the storage order; canonical representative up to units
Poly monic(const Poly& p);

// map p into a ring containing all of p's variables (by name)
Poly rename_into(const Poly& p, const Ring& target);

} // namespace germlink
