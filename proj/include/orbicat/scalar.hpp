#pragma once

// Exact scalars over the session ground field: either Q or the Gaussian
// rationals Q(i). All arithmetic is exact; there is no floating point in
// this library. The field is chosen once per session (before any
// computation) and conj() is the identity on Q, complex conjugation on Q(i).

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "orbicat/errors.hpp"

namespace orbicat {

enum class Field { Q, Qi };

// Session-global ground field. Fixed before computation starts; values of
// one session must not be mixed into another.
void set_field(Field f);
Field current_field();

// RAII helper for tests that switch fields.
struct FieldGuard {
    explicit FieldGuard(Field f) : saved_(current_field()) { set_field(f); }
    ~FieldGuard() { set_field(saved_); }
    FieldGuard(const FieldGuard&) = delete;
    FieldGuard& operator=(const FieldGuard&) = delete;

  private:
    Field saved_;
};

class Scalar {
  public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {} // NOLINT: implicit by design
    Scalar(long num, long den);
    explicit Scalar(const mpq_class& re) : re_(re), im_(0) {}
    Scalar(mpq_class re, mpq_class im);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i(); // throws FieldError when the session field is Q

    // Parses "p/q", "p", "p/q+r/s i", "p/q-r/s i" (and "i"-only forms).
    static Scalar parse(const std::string& text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const;
    Scalar inverse() const; // throws FieldError on zero
    Scalar operator-() const { return Scalar(-re_, -im_, internal_tag{}); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical serialization: "p/q" (denominator omitted when 1) or
    // "p/q+r/s i" / "p/q-r/s i". Stable byte-for-byte.
    std::string str() const;

  private:
    struct internal_tag {};
    Scalar(mpq_class re, mpq_class im, internal_tag) : re_(std::move(re)), im_(std::move(im)) {}
    static void require_real_field_zero_im(const mpq_class& im);

    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace orbicat
