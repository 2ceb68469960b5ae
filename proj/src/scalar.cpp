#include "germlink/scalar.hpp"

#include <ostream>
#include <sstream>

namespace germlink {

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw error("Scalar: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("Scalar: division by zero");
    mpq_class n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

static void print_rat(std::ostream& os, const mpq_class& q) {
    os << q.get_num().get_str();
    if (q.get_den() != 1) os << "/" << q.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    if (s.im() == 0) {
        print_rat(os, s.re());
        return os;
    }
    if (s.re() == 0) {
        if (s.im() == 1) return os << "i";
        if (s.im() == -1) return os << "-i";
        print_rat(os, s.im());
        return os << "*i";
    }
    print_rat(os, s.re());
    os << (s.im() > 0 ? "+" : "-");
    mpq_class a = abs(s.im());
    if (a != 1) {
        print_rat(os, a);
        os << "*";
    }
    return os << "i";
}

std::string Scalar::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

} // namespace germlink
