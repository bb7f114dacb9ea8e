#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pkahler {

/// Complex number with rational real and imaginary parts, kept in lowest
/// terms with positive denominators (mpq_class canonicalizes after every
/// arithmetic operation). This is the coefficient field for all symbolic
/// form computations.
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(mpq_class r) : re(std::move(r)), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational unit_imaginary() { return {mpq_class(0), mpq_class(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 as a rational.
    mpq_class norm() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re * o.re - im * o.im;
        mpq_class i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        mpq_class n = o.norm();
        if (sgn(n) == 0) throw std::domain_error("GaussianRational: division by zero");
        mpq_class r = (re * o.re + im * o.im) / n;
        mpq_class i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

/// i^k for any integer k.
inline GaussianRational imaginary_power(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {mpq_class(1), mpq_class(0)};
        case 1: return {mpq_class(0), mpq_class(1)};
        case 2: return {mpq_class(-1), mpq_class(0)};
        default: return {mpq_class(0), mpq_class(-1)};
    }
}

/// sigma_p = i^{p^2} 2^{-p}, the normalizing factor that makes
/// sigma_p eta /\ conj(eta) a real nonnegative (p,p)-form for simple eta.
inline GaussianRational sigma_factor(int p) {
    mpq_class half_pow(1);
    half_pow >>= p;  // 2^{-p}
    GaussianRational s = imaginary_power(static_cast<long>(p) * p);
    s.re *= half_pow;
    s.im *= half_pow;
    return s;
}

/// Canonical "a/b" rendering; integers keep an explicit "/1" so the textual
/// form is unambiguous and round-trips bit-exactly.
inline std::string to_fraction_string(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "a/b" or a bare integer "a".
inline mpq_class parse_fraction(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad fraction string: " + s);
    q.canonicalize();
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    return q;
}

/// Best rational approximation with denominator <= max_den, by the
/// continued-fraction convergents of x.
inline mpq_class rationalize(double x, unsigned long max_den = 1000000UL) {
    if (!std::isfinite(x)) throw std::domain_error("rationalize: non-finite input");
    bool neg = x < 0;
    double v = neg ? -x : x;

    // convergents p_k/q_k of the continued fraction of v
    mpz_class p0(0), q0(1), p1(1), q1(0);
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e18) break;
        mpz_class a(static_cast<unsigned long>(fl));
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        if (q2 > mpz_class(max_den)) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    mpq_class q(p1, q1);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

inline GaussianRational rationalize(std::complex<double> z, unsigned long max_den = 1000000UL) {
    return {rationalize(z.real(), max_den), rationalize(z.imag(), max_den)};
}

}  // namespace pkahler
