#include "ellck/padic.hpp"

#include <algorithm>
#include <sstream>

namespace ellck {

namespace {
constexpr long kExactZeroVal = 1L << 40;
long clamp_prec(long n) {
    return std::min(n, PadicNumber::kPrecCap);
}
}

mpz_class mpz_pow(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpz_class mpz_pow_ui(long base, unsigned long e) {
    mpz_class b = base;
    return mpz_pow(b, e);
}

void PadicNumber::check_prime(long p) {
    if (p < 3) throw UnsupportedError("prime must be odd and >= 3");
    mpz_class pz = p;
    if (mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0)
        throw UnsupportedError("p is not prime");
}

PadicNumber PadicNumber::zero(long p) {
    check_prime(p);
    return PadicNumber(p, true, 0, 1L << 40, 0);
}

PadicNumber PadicNumber::zero_at(long p, long prec) {
    check_prime(p);
    prec = clamp_prec(prec);
    return PadicNumber(p, false, prec, prec, 0);
}

PadicNumber PadicNumber::from_unit_val(long p, const mpz_class& unit, long val, long prec) {
    check_prime(p);
    prec = clamp_prec(prec);
    PadicNumber r(p, false, val, prec, unit);
    r.normalize();
    return r;
}

PadicNumber PadicNumber::from_int(long p, const mpz_class& n, long prec) {
    return from_unit_val(p, n, 0, prec);
}

PadicNumber PadicNumber::from_rational(long p, const mpq_class& q, long prec) {
    check_prime(p);
    prec = clamp_prec(prec);
    if (q == 0) return zero(p);
    mpz_class num = q.get_num(), den = q.get_den();
    long v = 0;
    mpz_class pz = p, r;
    while (mpz_divisible_p(num.get_mpz_t(), pz.get_mpz_t())) {
        num /= pz;
        ++v;
    }
    while (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t())) {
        den /= pz;
        --v;
    }
    long rel = prec - v;
    if (rel <= 0) return zero_at(p, prec);
    mpz_class mod = mpz_pow(pz, rel);
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw MathError("denominator not invertible");
    mpz_class u = (num % mod) * dinv % mod;
    if (u < 0) u += mod;
    return PadicNumber(p, false, v, prec, u);
}

void PadicNumber::normalize() {
    if (exact_zero_) return;
    if (val_ >= prec_) {
        val_ = prec_;
        unit_ = 0;
        return;
    }
    mpz_class pz = prime_;
    mpz_class mod = mpz_pow(pz, prec_ - val_);
    unit_ %= mod;
    if (unit_ < 0) unit_ += mod;
    while (unit_ != 0 && mpz_divisible_p(unit_.get_mpz_t(), pz.get_mpz_t())) {
        unit_ /= pz;
        ++val_;
    }
    if (unit_ == 0) {
        val_ = prec_;
    } else {
        // re-reduce: the unit lives modulo p^(prec-val)
        mod = mpz_pow(pz, prec_ - val_);
        unit_ %= mod;
    }
}

long PadicNumber::valuation() const {
    if (exact_zero_) return kExactZeroVal;
    return val_;
}

long PadicNumber::rel_precision() const {
    if (is_zero()) return 0;
    return prec_ - val_;
}

PadicNumber PadicNumber::operator-() const {
    if (is_zero()) return *this;
    PadicNumber r = *this;
    mpz_class mod = mpz_pow(mpz_class(prime_), prec_ - val_);
    r.unit_ = (mod - unit_) % mod;
    return r;
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    if (exact_zero_) return o;
    if (o.exact_zero_) return *this;
    if (prime_ != o.prime_) throw MathError("prime mismatch");
    long n = std::min(prec_, o.prec_);
    long v = std::min(val_, o.val_);
    if (v >= n) return zero_at(prime_, n);
    mpz_class pz = prime_;
    mpz_class mod = mpz_pow(pz, n - v);
    mpz_class a = unit_ == 0 ? mpz_class(0) : unit_ * mpz_pow(pz, val_ - v) % mod;
    mpz_class b = o.unit_ == 0 ? mpz_class(0) : o.unit_ * mpz_pow(pz, o.val_ - v) % mod;
    PadicNumber r(prime_, false, v, n, (a + b) % mod);
    r.normalize();
    return r;
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    if (prime_ != o.prime_ && !exact_zero_ && !o.exact_zero_) throw MathError("prime mismatch");
    if (exact_zero_ || o.exact_zero_) return zero(exact_zero_ ? (o.exact_zero_ ? prime_ : o.prime_) : prime_);
    // min(N1 + v2, N2 + v1) = v1 + v2 + min(rel1, rel2)
    long v = val_ + o.val_;
    long rel = std::min(prec_ - val_, o.prec_ - o.val_);
    if (unit_ == 0 || o.unit_ == 0) return zero_at(prime_, v + std::max(rel, 0L));
    long n = v + rel;
    mpz_class mod = mpz_pow(mpz_class(prime_), rel);
    PadicNumber r(prime_, false, v, n, unit_ * o.unit_ % mod);
    r.normalize();
    return r;
}

PadicNumber PadicNumber::inverse() const {
    if (is_zero()) throw MathError("inverse of (indistinguishable-from-)zero");
    long rel = prec_ - val_;
    mpz_class mod = mpz_pow(mpz_class(prime_), rel);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw MathError("unit not invertible");
    return PadicNumber(prime_, false, -val_, -val_ + rel, inv);
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const { return *this * o.inverse(); }

PadicNumber PadicNumber::pow(long e) const {
    if (e == 0) {
        long n = is_exact_zero() ? kPrecCap : prec_ - val_;
        return from_int(prime_, 1, n);
    }
    if (e < 0) return inverse().pow(-e);
    if (is_zero()) {
        if (exact_zero_) return *this;
        return zero_at(prime_, clamp_prec(val_ * e));
    }
    long rel = prec_ - val_;
    mpz_class mod = mpz_pow(mpz_class(prime_), rel);
    mpz_class u;
    mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), (unsigned long)e, mod.get_mpz_t());
    long v = val_ * e;
    return PadicNumber(prime_, false, v, v + rel, u);
}

PadicNumber PadicNumber::shift(long k) const {
    if (exact_zero_) return *this;
    PadicNumber r = *this;
    r.val_ += k;
    r.prec_ = clamp_prec(r.prec_ + k);
    if (r.val_ >= r.prec_) { r.val_ = r.prec_; r.unit_ = 0; }
    return r;
}

PadicNumber PadicNumber::truncate(long n) const {
    n = clamp_prec(n);
    if (exact_zero_) {
        return zero_at(prime_, n);
    }
    if (n >= prec_) return *this;
    PadicNumber r = *this;
    r.prec_ = n;
    if (r.val_ >= n) {
        r.val_ = n;
        r.unit_ = 0;
        return r;
    }
    r.unit_ %= mpz_pow(mpz_class(prime_), n - r.val_);
    r.normalize();
    return r;
}

bool PadicNumber::equals(const PadicNumber& o) const {
    return (*this - o).is_zero();
}

long PadicNumber::agreement(const PadicNumber& o) const {
    return (*this - o).valuation();
}

PadicNumber PadicNumber::sqrt(const mpz_class& residue_mod_p) const {
    if (is_zero()) throw MathError("sqrt of zero-at-precision");
    if (val_ % 2 != 0) throw MathError("sqrt: odd valuation");
    long rel = prec_ - val_;
    mpz_class pz = prime_;
    mpz_class mod = mpz_pow(pz, rel);
    mpz_class r0 = residue_mod_p % pz;
    if (r0 < 0) r0 += pz;
    if ((r0 * r0 - unit_) % pz != 0) throw MathError("sqrt: residue is not a root mod p");
    if (r0 == 0) throw MathError("sqrt: residue 0 is not a unit");
    // Newton iteration x <- (x + a/x)/2 on the unit part.
    mpz_class x = r0;
    long known = 1;
    mpz_class inv2;
    mpz_class two = 2;
    while (known < rel) {
        known = std::min(2 * known, rel);
        mpz_class m = mpz_pow(pz, known);
        mpz_class xinv;
        if (mpz_invert(xinv.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
            throw MathError("sqrt: lost invertibility");
        mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), m.get_mpz_t());
        x = (x + (unit_ % m) * xinv) % m * inv2 % m;
    }
    return PadicNumber(prime_, false, val_ / 2, val_ / 2 + rel, x);
}

PadicNumber PadicNumber::sqrt() const {
    if (is_zero()) throw MathError("sqrt of zero-at-precision");
    mpz_class pz = prime_;
    mpz_class u0 = unit_ % pz;
    // find a square root mod p by exhaustion (p is tiny here)
    for (long r = 1; r < prime_; ++r) {
        if ((mpz_class(r) * r - u0) % pz == 0) return sqrt(mpz_class(r));
    }
    throw MathError("sqrt: not a quadratic residue mod p");
}

PadicNumber PadicNumber::teichmuller() const {
    if (is_zero()) throw MathError("teichmuller of zero");
    if (val_ != 0) throw MathError("teichmuller needs a unit");
    long rel = prec_;
    mpz_class mod = mpz_pow(mpz_class(prime_), rel);
    // x -> x^p gains one digit of agreement with the Teichmuller lift per step
    mpz_class x = unit_ % mod;
    for (long i = 0; i <= rel; ++i) {
        mpz_class nx;
        mpz_powm_ui(nx.get_mpz_t(), x.get_mpz_t(), (unsigned long)prime_, mod.get_mpz_t());
        if (nx == x) break;
        x = nx;
    }
    return PadicNumber(prime_, false, 0, rel, x);
}

PadicNumber PadicNumber::iwasawa_log() const {
    if (is_zero()) throw MathError("log of zero");
    // Discard p^val (Iwasawa branch), kill the Teichmuller part with the
    // (p-1)-st power, then run the 1-unit series.
    long n = prec_ - val_;  // relative digits available -> absolute digits of log
    PadicNumber u(prime_, false, 0, n, unit_);
    PadicNumber w = u.pow(prime_ - 1);
    PadicNumber z = w - from_int(prime_, 1, n);
    if (z.is_zero() && !z.is_exact_zero()) {
        // w = 1 to full precision: log is 0 at that precision
        return zero_at(prime_, n);
    }
    if (z.is_exact_zero()) return zero_at(prime_, n);
    // log(1+z) = sum (-1)^(k+1) z^k / k ; v(z) >= 1
    long vz = z.valuation();
    long terms = n / vz + 8;
    PadicNumber acc = zero_at(prime_, n);
    PadicNumber zk = from_int(prime_, 1, n + 4);
    for (long k = 1; k <= terms; ++k) {
        zk = zk * z;
        if (zk.is_zero() && zk.valuation() >= n + 2) break;
        PadicNumber term = zk / from_int(prime_, k, n + 40);
        if (k % 2 == 0) term = -term;
        acc = acc + term.truncate(n);
    }
    return acc / from_int(prime_, prime_ - 1, n + 8);
}

long PadicNumber::digit(long i) const {
    if (is_zero() || i < val_) return 0;
    if (i >= prec_) throw PrecisionError("digit beyond known precision");
    mpz_class pz = prime_;
    mpz_class q = unit_ / mpz_pow(pz, i - val_);
    mpz_class d = q % pz;
    return d.get_si();
}

std::string PadicNumber::str() const {
    if (is_exact_zero()) return "0";
    std::ostringstream os;
    if (is_zero()) {
        os << "O(" << prime_ << "^" << prec_ << ")";
        return os.str();
    }
    bool first = true;
    for (long i = val_; i < prec_; ++i) {
        long d = digit(i);
        if (d == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << d;
        } else {
            if (d != 1) os << d << "*";
            os << prime_;
            if (i != 1) os << "^" << i;
        }
    }
    if (!first) os << " + ";
    os << "O(" << prime_ << "^" << prec_ << ")";
    return os.str();
}

std::string PadicNumber::machine_str() const {
    std::ostringstream os;
    if (is_exact_zero()) return "0";
    os << prime_ << ";" << val_ << ";";
    if (!is_zero()) {
        for (long i = val_; i < prec_; ++i) {
            if (i > val_) os << ",";
            os << digit(i);
        }
    }
    os << ";" << prec_;
    return os.str();
}

mpq_class PadicNumber::centered_lift() const {
    if (is_zero()) return mpq_class(0);
    mpz_class pz = prime_;
    mpz_class mod = mpz_pow(pz, prec_ - val_);
    mpz_class u = unit_;
    if (u * 2 > mod) u -= mod;
    mpq_class r(u);
    if (val_ >= 0) {
        r *= mpz_pow(pz, val_);
    } else {
        r /= mpz_pow(pz, -val_);
    }
    return r;
}

PadicNumber iwasawa_log_rational(long p, const mpq_class& x, long prec) {
    if (x == 0) throw MathError("log of zero");
    return PadicNumber::from_rational(p, x, prec + 2).iwasawa_log().truncate(prec);
}

}  // namespace ellck
