#pragma once

#include <gmpxx.h>

#include <vector>

#include "ellck/padic.hpp"

namespace ellck {

/// Dense polynomial over Q (exact arithmetic).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }
    static RatPoly constant(const mpq_class& v) { return RatPoly({v}); }
    static RatPoly x();

    long degree() const { return (long)c_.size() - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const mpq_class& coeff(long i) const;
    mpq_class& at(long i);
    void set_coeff(long i, const mpq_class& v);

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const mpq_class& s) const;
    RatPoly derivative() const;
    mpq_class eval(const mpq_class& v) const;

    /// Quotient and remainder; divisor must have invertible leading coeff.
    static void divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
    /// g = gcd, plus u,v with u*a + v*b = g (monic g).
    static RatPoly xgcd(const RatPoly& a, const RatPoly& b, RatPoly& u, RatPoly& v);

    const std::vector<mpq_class>& coeffs() const { return c_; }

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Dense polynomial / truncated power series over Q_p.
class Poly {
public:
    Poly() : p_(0) {}
    explicit Poly(long p) : p_(p) {}
    Poly(long p, std::vector<PadicNumber> c) : p_(p), c_(std::move(c)) { trim(); }
    static Poly constant(const PadicNumber& v);
    static Poly from_rat(long p, const RatPoly& q, long prec);

    long prime() const { return p_; }
    bool is_zero() const;
    /// Degree counting all stored coefficients (trailing at-precision zeros trimmed).
    long degree() const { return (long)c_.size() - 1; }
    PadicNumber coeff(long i) const;
    void set_coeff(long i, const PadicNumber& v);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scale(const PadicNumber& s) const;
    Poly shift_x(long k) const;  // multiply by x^k
    Poly derivative() const;
    PadicNumber eval(const PadicNumber& v) const;

    /// Truncate to terms of degree < n (power-series use).
    Poly trunc(long n) const;
    Poly& trim_self() { trim(); return *this; }

    /// divisor with unit leading coefficient
    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);

    /// Series helpers (self = power series, constant term as required).
    Poly series_inverse(long n) const;         // constant term a unit
    Poly series_sqrt(long n) const;            // constant term 1
    Poly series_log1p(long n) const;           // constant term 0: log(1+S)
    Poly series_integrate() const;             // zero constant term
    Poly series_compose(const Poly& inner, long n) const;  // inner(0) = 0

    const std::vector<PadicNumber>& coeffs() const { return c_; }

private:
    void trim();
    long p_;
    std::vector<PadicNumber> c_;
};

/// Dense matrix over Q_p with valuation-aware elimination.
class PadicMatrix {
public:
    PadicMatrix(long rows, long cols, const PadicNumber& fill);
    long rows() const { return r_; }
    long cols() const { return c_; }
    PadicNumber& at(long i, long j) { return m_[i * c_ + j]; }
    const PadicNumber& at(long i, long j) const { return m_[i * c_ + j]; }

    /// Gaussian elimination with valuation-maximal pivoting.
    /// Throws PrecisionError if a pivot cannot be certified nonzero.
    static std::vector<PadicNumber> solve(PadicMatrix a, std::vector<PadicNumber> b);
    PadicNumber det() const;
    /// Rank as certified at the entries' precision.
    long rank() const;

private:
    long r_, c_;
    std::vector<PadicNumber> m_;
};

/// Sylvester resultant with declared formal degrees.
PadicNumber resultant(const Poly& f, const Poly& g, long deg_f, long deg_g);

}  // namespace ellck
