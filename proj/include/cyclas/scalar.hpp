#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclas {

/// Arbitrary-precision binary float (MPFR), round-to-nearest everywhere.
/// Precision is fixed per value and explicit at construction; binary
/// operations produce results at the wider of the two operand precisions.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        v_[0] = o.v_[0];
        mpfr_init2(o.v_, MPFR_PREC_MIN);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long n, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }
    static Real of(const mpq_class& q, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    /// Parses a decimal string ("1.5", "-3.25e-10", "7/3" is not accepted).
    static Real of_decimal(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("Real: cannot parse decimal '" + s + "'");
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    /// 2^e, exact.
    static Real pow2(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sgn() const { return mpfr_sgn(v_); }
    double approx() const { return mpfr_get_d(v_, MPFR_RNDN); }

    Real& operator+=(const Real& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Real& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(const Real& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(long n) {
        mpfr_mul_si(v_, v_, n, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(long n) {
        mpfr_div_si(v_, v_, n, MPFR_RNDN);
        return *this;
    }
    void negate() { mpfr_neg(v_, v_, MPFR_RNDN); }
    void set_zero() { mpfr_set_zero(v_, 1); }

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    friend Real operator-(Real a) {
        a.negate();
        return a;
    }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

    friend Real abs(const Real& a) {
        Real r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real log(const Real& a) {
        Real r(a.prec());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real hypot(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real atan2(const Real& y, const Real& x) {
        Real r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }

    friend void sin_cos(Real& s, Real& c, const Real& angle) {
        mpfr_sin_cos(s.v_, c.v_, angle.v_, MPFR_RNDN);
    }

    /// Full-precision decimal rendering; round-trips through of_decimal at the
    /// same precision. Digit count covers the mantissa plus guard digits.
    std::string to_decimal() const {
        if (mpfr_zero_p(v_)) return "0";
        long digits = static_cast<long>(static_cast<double>(prec()) * 0.30103) + 3;
        std::vector<char> buf(static_cast<size_t>(digits) + 32);
        mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1), v_);
        return std::string(buf.data());
    }

  private:
    mpfr_t v_;
};

/// Complex scalar over Real. No MPC dependency: the handful of operations the
/// series kernels need are spelled out here, with in-place accumulation
/// entry points so hot loops avoid temporaries.
class Complex {
  public:
    explicit Complex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

    static Complex of(long re, long im, mpfr_prec_t prec) {
        return Complex(Real::of(re, prec), Real::of(im, prec));
    }
    static Complex of(const mpq_class& re, const mpq_class& im, mpfr_prec_t prec) {
        return Complex(Real::of(re, prec), Real::of(im, prec));
    }
    static Complex one(mpfr_prec_t prec) { return of(1, 0, prec); }

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    void set_zero() {
        re_.set_zero();
        im_.set_zero();
    }
    void negate() {
        re_.negate();
        im_.negate();
    }

    Complex& operator+=(const Complex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Complex& operator*=(const Real& s) {
        re_ *= s;
        im_ *= s;
        return *this;
    }
    Complex& operator*=(long n) {
        re_ *= n;
        im_ *= n;
        return *this;
    }
    Complex& operator/=(long n) {
        re_ /= n;
        im_ /= n;
        return *this;
    }

    /// acc += a*b. acc must not alias a or b.
    static void addmul(Complex& acc, const Complex& a, const Complex& b) {
        mpfr_fma(acc.re_.raw(), a.re_.raw(), b.re_.raw(), acc.re_.raw(), MPFR_RNDN);
        mpfr_fms(acc.re_.raw(), a.im_.raw(), b.im_.raw(), acc.re_.raw(), MPFR_RNDN);
        acc.re_.negate();
        mpfr_fma(acc.im_.raw(), a.re_.raw(), b.im_.raw(), acc.im_.raw(), MPFR_RNDN);
        mpfr_fma(acc.im_.raw(), a.im_.raw(), b.re_.raw(), acc.im_.raw(), MPFR_RNDN);
    }
    /// acc += s*a with real s. acc must not alias a.
    static void addmul(Complex& acc, const Real& s, const Complex& a) {
        mpfr_fma(acc.re_.raw(), s.raw(), a.re_.raw(), acc.re_.raw(), MPFR_RNDN);
        mpfr_fma(acc.im_.raw(), s.raw(), a.im_.raw(), acc.im_.raw(), MPFR_RNDN);
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        Complex r(std::max(a.prec(), b.prec()));
        addmul(r, a, b);
        return r;
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real n = b.re_ * b.re_ + b.im_ * b.im_;
        Complex conj(b.re_, -b.im_);
        Complex r = a * conj;
        r.re_ /= n;
        r.im_ /= n;
        return r;
    }
    friend Complex operator-(Complex a) {
        a.negate();
        return a;
    }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend Real abs(const Complex& a) { return hypot(a.re_, a.im_); }

    bool on_closed_negative_real_axis() const { return im_.is_zero() && re_.sgn() <= 0; }

    /// Principal logarithm, imaginary part in (-pi, pi). The closed negative
    /// real axis (including 0) is outside the domain.
    friend Complex log_principal(const Complex& a) {
        if (a.on_closed_negative_real_axis())
            throw std::domain_error("log_principal: argument on the closed negative real axis");
        return Complex(log(abs(a)), atan2(a.im(), a.re()));
    }

    std::string to_string() const {
        return "(" + re_.to_decimal() + ", " + im_.to_decimal() + ")";
    }

  private:
    Real re_, im_;
};

/// Resource-limit violation (table sizes, truncation degrees). Maps to its
/// own process exit status in the CLI.
class resource_error : public std::runtime_error {
  public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cyclas
