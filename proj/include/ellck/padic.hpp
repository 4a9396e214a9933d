#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "ellck/errors.hpp"

namespace ellck {

mpz_class mpz_pow(const mpz_class& base, unsigned long e);
mpz_class mpz_pow_ui(long base, unsigned long e);

/// Element of Q_p at capped absolute precision.
///
/// A nonzero value is unit * p^val with unit coprime to p, known modulo
/// p^prec (so the unit is stored modulo p^(prec-val)).  Arithmetic
/// propagates precision pessimistically: addition keeps the minimum of the
/// absolute precisions, multiplication the minimum of N1+v2 and N2+v1.
/// A value indistinguishable from zero is stored with unit == 0 and
/// val == prec; an exact zero has a separate flag.
class PadicNumber {
public:
    /// Hard cap on stored absolute precision; callers may pass any larger
    /// value to mean "exact", it is clamped here.  Far above any working
    /// precision this library uses.
    static constexpr long kPrecCap = 400;

    PadicNumber() : prime_(0), exact_zero_(true), val_(0), prec_(0), unit_(0) {}

    /// Exact zero of Q_p (infinite valuation for comparison purposes).
    static PadicNumber zero(long p);
    /// Zero known only modulo p^prec.
    static PadicNumber zero_at(long p, long prec);
    static PadicNumber from_int(long p, const mpz_class& n, long prec);
    static PadicNumber from_rational(long p, const mpq_class& q, long prec);
    /// unit * p^val with unit given modulo p^(prec-val); unit may carry
    /// factors of p, they are normalized away.
    static PadicNumber from_unit_val(long p, const mpz_class& unit, long val, long prec);

    long prime() const { return prime_; }
    bool is_exact_zero() const { return exact_zero_; }
    /// True when the value cannot be distinguished from zero at its precision.
    bool is_zero() const { return exact_zero_ || unit_ == 0; }
    /// True when the value is provably nonzero at its precision.
    bool is_nonzero() const { return !is_zero(); }

    /// Valuation; for at-precision zeros this is the precision (a lower
    /// bound), for exact zeros a large sentinel.
    long valuation() const;
    long precision() const { return prec_; }
    /// Digits of relative precision (prec - val); 0 for zeros.
    long rel_precision() const;
    const mpz_class& unit() const { return unit_; }

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const;
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator/(const PadicNumber& o) const;
    PadicNumber& operator+=(const PadicNumber& o) { return *this = *this + o; }
    PadicNumber& operator-=(const PadicNumber& o) { return *this = *this - o; }
    PadicNumber& operator*=(const PadicNumber& o) { return *this = *this * o; }
    PadicNumber& operator/=(const PadicNumber& o) { return *this = *this / o; }

    PadicNumber inverse() const;
    PadicNumber pow(long e) const;
    /// Multiply by p^k (exact shift; absolute precision moves with it).
    PadicNumber shift(long k) const;
    /// Cap absolute precision at n (no-op if already lower).
    PadicNumber truncate(long n) const;

    /// a == b modulo p^min(prec) (compares the overlapping known digits).
    bool equals(const PadicNumber& o) const;
    /// Valuation of a - b, at least min(prec); convenience for tests.
    long agreement(const PadicNumber& o) const;

    /// Square root with the chosen residue mod p (odd p, unit argument).
    PadicNumber sqrt(const mpz_class& residue_mod_p) const;
    /// Square root whose residue equals the canonical one in [1,(p-1)/2]
    /// unless hint says otherwise.  Throws MathError on non-residues.
    PadicNumber sqrt() const;

    /// Teichmuller representative: omega^(p-1) = 1, omega = this mod p.
    PadicNumber teichmuller() const;

    /// Iwasawa logarithm (branch log p = 0) of a nonzero value: the p-power
    /// part is discarded and the unit part is fed to the log series.
    PadicNumber iwasawa_log() const;

    /// digit(i) in [0,p) of the value, for val <= i < prec.
    long digit(long i) const;

    /// Rendering in the "d0 + d1*p + d2*p^2 + O(p^N)" style.
    std::string str() const;
    /// Compact machine form "p;v;d0,d1,...;N".
    std::string machine_str() const;

    /// Centered lift of the value to a rational p^val * (unit lift), using
    /// the symmetric residue prior to p^rel.  Handy for recognizing small
    /// rationals in tests.
    mpq_class centered_lift() const;

private:
    PadicNumber(long p, bool xz, long v, long n, mpz_class u)
        : prime_(p), exact_zero_(xz), val_(v), prec_(n), unit_(std::move(u)) {}

    void normalize();
    static void check_prime(long p);

    long prime_;
    bool exact_zero_;
    long val_;
    long prec_;
    mpz_class unit_;
};

/// Iwasawa logarithm of a nonzero rational, to absolute precision prec.
PadicNumber iwasawa_log_rational(long p, const mpq_class& x, long prec);

}  // namespace ellck
