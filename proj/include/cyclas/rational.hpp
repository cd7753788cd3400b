#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "cyclas/scalar.hpp"

namespace cyclas {

/// Gaussian rational a + b*i with exact rational parts. Used wherever
/// exactness matters: Moebius matrices, scalar-power bases, alias and
/// substitution coefficients.
struct GaussRat {
    mpq_class re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRat of(long r, long i = 0) { return GaussRat(mpq_class(r), mpq_class(i)); }
    static GaussRat unit_i() { return of(0, 1); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_rational() const { return im == 0; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re + b.re, a.im + b.im);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re - b.re, a.im - b.im);
    }
    friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        mpq_class n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("GaussRat: division by zero");
        return GaussRat((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }

    bool on_closed_negative_real_axis() const { return im == 0 && re <= 0; }

    Complex to_complex(mpfr_prec_t prec) const { return Complex::of(re, im, prec); }

    /// "2", "-1/3", "i", "2i", "1/2i" style; purely for diagnostics and the
    /// relation-DSL printer.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        if (re != 0) s += re.get_str();
        if (im != 0) {
            if (im > 0 && !s.empty()) s += "+";
            if (im == -1)
                s += "-";
            else if (im != 1)
                s += im.get_str();
            s += "i";
        }
        return s;
    }
};

} // namespace cyclas
