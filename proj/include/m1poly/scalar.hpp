#pragma once

/**
 * Exact scalar arithmetic over Q and Q(i).
 *
 * Rational is a thin value wrapper around GMP's mpq_class, kept canonical at
 * all times: gcd(|num|, den) = 1, den > 0, zero is 0/1.  Equality is therefore
 * plain structural comparison.
 *
 * Scalar is an element of Q(i): a pair of Rationals (re, im).  Plain
 * rationals embed with im = 0, so every module works over one scalar type and
 * the imaginary unit is available where a construction calls for it.
 */

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "m1poly/errors.hpp"

namespace m1poly {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}   // NOLINT: implicit by design
    Rational(long num, long den) {
        if (den == 0) throw division_by_zero();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_), already_canonical{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_), already_canonical{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_), already_canonical{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw division_by_zero();
        return Rational(mpq_class(a.v_ / b.v_), already_canonical{});
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const { return v_.get_str(); }

private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}
    mpq_class v_;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : re_(n) {}                // NOLINT: implicit by design
    Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_real() const { return im_.is_zero(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    /// The real value of a scalar known to be real.
    const Rational& real_value() const {
        if (!is_real()) throw invalid_params("scalar is not real: " + to_string());
        return re_;
    }

    Scalar conjugate() const { return Scalar(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.re_ + b.re_, a.im_ + b.im_); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(a.re_ - b.re_, a.im_ - b.im_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        Rational n = b.norm();
        if (n.is_zero()) throw division_by_zero();
        return Scalar((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    Rational re_, im_;
};

/// Parses `int | int/uint | <re>(+|-)<im>i`; also accepts the pure-imaginary
/// shorthands "i", "-i" and "<rational>i".  Throws parse_error with the
/// offending position.
Scalar parse_scalar(std::string_view text);

/// render(parse(s)) == canonical form; parse(render(x)) == x.
std::string render_scalar(const Scalar& s);

} // namespace m1poly
