#include "germlink/poly_text.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace germlink {

// ---- canonical printer ----

static void print_monomial(std::ostream& os, const Ring& r, const Monomial& m) {
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "*";
        os << r.var(i);
        if (m[i] > 1) os << "^" << m[i];
        first = false;
    }
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool constant = total_degree(m) == 0;
        if (c.is_real()) {
            mpq_class q = c.re();
            if (first) {
                if (q < 0) { os << "-"; q = -q; }
            } else {
                os << (q < 0 ? " - " : " + ");
                if (q < 0) q = -q;
            }
            Scalar a{q};
            if (constant) {
                os << a;
            } else {
                if (!a.is_one()) os << a << "*";
                print_monomial(os, p.ring(), m);
            }
        } else {
            if (!first) os << " + ";
            if (constant && first) {
                os << c;
            } else {
                os << "(" << c << ")";
                if (!constant) {
                    os << "*";
                    print_monomial(os, p.ring(), m);
                }
            }
        }
        first = false;
    }
    return os;
}

std::string Poly::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

// ---- lexer ----

namespace {

enum class Tok { End, Plus, Minus, Star, Caret, LParen, RParen, Ident, Rat, Imag };

struct Lexer {
    const std::string& s;
    size_t pos = 0, line = 1, col = 1;
    Tok tok = Tok::End;
    std::string ident;
    mpq_class rat;
    size_t tok_line = 1, tok_col = 1;

    explicit Lexer(const std::string& text) : s(text) { advance(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, tok_line, tok_col);
    }

    void bump(size_t n = 1) {
        for (size_t k = 0; k < n; ++k) {
            if (pos < s.size() && s[pos] == '\n') { ++line; col = 1; }
            else ++col;
            ++pos;
        }
    }

    void advance() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) bump();
        tok_line = line; tok_col = col;
        if (pos >= s.size()) { tok = Tok::End; return; }
        char c = s[pos];
        switch (c) {
            case '+': tok = Tok::Plus; bump(); return;
            case '-': tok = Tok::Minus; bump(); return;
            case '*': tok = Tok::Star; bump(); return;
            case '^': tok = Tok::Caret; bump(); return;
            case '(': tok = Tok::LParen; bump(); return;
            case ')': tok = Tok::RParen; bump(); return;
            default: break;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) bump();
            std::string num = s.substr(start, pos - start);
            std::string den = "1";
            if (pos < s.size() && s[pos] == '/') {
                bump();
                size_t dstart = pos;
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) bump();
                if (dstart == pos) throw parse_error("expected denominator", line, col);
                den = s.substr(dstart, pos - dstart);
            }
            rat = mpq_class(num + "/" + den);
            if (rat.get_den() == 0) throw parse_error("zero denominator", tok_line, tok_col);
            rat.canonicalize();
            tok = Tok::Rat;
            return;
        }
        if (std::isalpha((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
                bump();
            ident = s.substr(start, pos - start);
            tok = ident == "i" ? Tok::Imag : Tok::Ident;
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line, col);
    }
};

struct Parser {
    Lexer lx;
    const Ring& ring;

    Parser(const std::string& text, const Ring& r) : lx(text), ring(r) {}

    Poly parse() {
        Poly p = expr();
        if (lx.tok != Tok::End) lx.fail("trailing input");
        return p;
    }

    Poly expr() {
        bool neg = false;
        if (lx.tok == Tok::Minus) { neg = true; lx.advance(); }
        else if (lx.tok == Tok::Plus) { lx.advance(); }
        Poly p = term();
        if (neg) p = -p;
        while (lx.tok == Tok::Plus || lx.tok == Tok::Minus) {
            bool minus = lx.tok == Tok::Minus;
            lx.advance();
            Poly t = term();
            if (minus) p -= t; else p += t;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (lx.tok == Tok::Star) {
            lx.advance();
            p = p * factor();
        }
        return p;
    }

    Poly factor() {
        Poly p = atom();
        if (lx.tok == Tok::Caret) {
            lx.advance();
            if (lx.tok != Tok::Rat || lx.rat.get_den() != 1 || lx.rat < 0)
                lx.fail("exponent must be a nonnegative integer");
            unsigned long e = lx.rat.get_num().get_ui();
            if (e > 64) lx.fail("exponent too large");
            lx.advance();
            p = p.pow((unsigned)e);
        }
        return p;
    }

    Poly atom() {
        switch (lx.tok) {
            case Tok::LParen: {
                lx.advance();
                Poly p = expr();
                if (lx.tok != Tok::RParen) lx.fail("expected ')'");
                lx.advance();
                return p;
            }
            case Tok::Ident: {
                if (!ring.has(lx.ident))
                    lx.fail("unknown variable '" + lx.ident + "'");
                Poly p = Poly::variable(ring, lx.ident);
                lx.advance();
                return p;
            }
            case Tok::Rat: {
                Poly p = Poly::constant(ring, Scalar(lx.rat));
                lx.advance();
                return p;
            }
            case Tok::Imag: {
                lx.advance();
                return Poly::constant(ring, Scalar::i());
            }
            default:
                lx.fail("expected '(', variable, number, or i");
        }
    }
};

} // namespace

Poly parse_poly(const std::string& text, const Ring& ring) {
    return Parser(text, ring).parse();
}

} // namespace germlink
