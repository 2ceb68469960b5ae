#pragma once

// Exact Gaussian-rational arithmetic: a + b*i with a, b arbitrary-precision
// rationals. mpq_class keeps numerators/denominators in lowest terms with a
// positive denominator, which is exactly the canonical form we promise.

#include <gmpxx.h>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace germlink {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// raised when two objects from different rings meet
struct ring_mismatch : error {
    using error::error;
};

// raised when an internal cross-check fails (CLI exit code 2)
struct consistency_error : error {
    using error::error;
};

// raised for inputs outside the supported class
struct not_supported : error {
    using error::error;
};

class Scalar {
  public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(const mpq_class& re) : re_(re), im_(0) {}
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar rational(long num, long den);
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    // nonzero rational-real scalars are the units we normalize by
    bool is_positive_real() const { return im_ == 0 && re_ > 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar conj() const { return Scalar(re_, -im_); }
    // |z|^2, a rational
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // total order for deterministic containers (not a field order)
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    // "3/4", "-1/2+i", "i", "2-3i" style; used by printers, parsing happens
    // at the polynomial level
    std::string str() const;

  private:
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace germlink
