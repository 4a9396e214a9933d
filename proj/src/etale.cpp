#include "ellck/etale.hpp"

#include <numeric>

namespace ellck {

namespace {
// minimal F_p[x] helpers for the mod-p inverse seed
using FpPoly = std::vector<long>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    fp_trim(r);
    return r;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, long p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    fp_trim(a);
    return a;
}

long fp_inv_scalar(long a, long p) {
    long r = 1, b = ((a % p) + p) % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

void fp_divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r, long p) {
    r = a;
    q.assign(a.size(), 0);
    long linv = fp_inv_scalar(b.back(), p);
    while (r.size() >= b.size() && !r.empty()) {
        long f = r.back() * linv % p;
        size_t d = r.size() - b.size();
        if (q.size() <= d) q.resize(d + 1, 0);
        q[d] = (q[d] + f) % p;
        for (size_t i = 0; i < b.size(); ++i)
            r[i + d] = ((r[i + d] - f * b[i]) % p + p) % p;
        fp_trim(r);
    }
    fp_trim(q);
}

// inverse of a modulo m in F_p[x] (gcd must be 1)
FpPoly fp_invmod(const FpPoly& a, const FpPoly& m, long p) {
    FpPoly r0 = m, r1 = a, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        FpPoly q, r;
        fp_divrem(r0, r1, q, r, p);
        FpPoly t = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = r1; r1 = r;
        t0 = t1; t1 = t;
    }
    if (r0.size() != 1) throw MathError("etale: element not invertible mod p");
    long linv = fp_inv_scalar(r0[0], p);
    for (auto& c : t0) c = c * linv % p;
    fp_trim(t0);
    return t0;
}
}  // namespace

EtaleAlgebra::EtaleAlgebra(long p, const RatPoly& f, long prec) : p_(p), prec_(prec) {
    if (f.degree() != 3 || f.coeff(3) != 1)
        throw UnsupportedError("etale algebra expects a monic cubic");
    f_ = Poly::from_rat(p, f, prec + 8);
    fprime_ = Poly::from_rat(p, f.derivative(), prec + 8);
    // exponent of (F_p[x]/(fbar))^x divides lcm(p-1, p^2-1, p^3-1)
    mpz_class e1 = mpz_pow_ui(p, 1) - 1, e2 = mpz_pow_ui(p, 2) - 1, e3 = mpz_pow_ui(p, 3) - 1;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), e1.get_mpz_t(), e2.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e3.get_mpz_t());
    unit_group_exp_ = l;
    // power sums of the roots of x^3 + a x^2 + b x + c
    mpq_class a = f.coeff(2), b = f.coeff(1);
    s1_ = PadicNumber::from_rational(p, -a, prec + 8);
    s2_ = PadicNumber::from_rational(p, a * a - 2 * b, prec + 8);
}

Poly EtaleAlgebra::reduce(const Poly& a) const {
    if (a.degree() < 3) return a;
    Poly q, r;
    Poly::divrem(a, f_, q, r);
    return r;
}

Poly EtaleAlgebra::mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

Poly EtaleAlgebra::inverse(const Poly& a) const {
    // seed: inverse mod p, then Newton-lift b <- b(2 - ab)
    FpPoly abar;
    for (long i = 0; i <= a.degree(); ++i) {
        PadicNumber c = a.coeff(i);
        long d = (c.is_zero() || c.valuation() > 0) ? 0 : c.digit(0);
        abar.push_back(d);
    }
    fp_trim(abar);
    FpPoly fbar;
    for (long i = 0; i <= 3; ++i) {
        PadicNumber c = f_.coeff(i);
        fbar.push_back(c.is_zero() ? 0 : (c.valuation() > 0 ? 0 : c.digit(0)));
    }
    if (abar.empty()) throw MathError("etale inverse: element is 0 mod p");
    FpPoly binv = fp_invmod(abar, fbar, p_);
    Poly b(p_);
    for (size_t i = 0; i < binv.size(); ++i)
        b.set_coeff(i, PadicNumber::from_int(p_, binv[i], prec_ + 8));
    Poly two = Poly::constant(PadicNumber::from_int(p_, 2, prec_ + 8));
    long digits = 1;
    while (digits < prec_ + 8) {
        b = reduce(b * (two - mul(a, b)));
        digits *= 2;
    }
    return b;
}

Poly EtaleAlgebra::pow_mod(const Poly& a, const mpz_class& e) const {
    Poly r = Poly::constant(PadicNumber::from_int(p_, 1, prec_ + 8));
    Poly base = reduce(a);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

PadicNumber EtaleAlgebra::trace(const Poly& a) const {
    PadicNumber three = PadicNumber::from_int(p_, 3, prec_ + 8);
    return a.coeff(0) * three + a.coeff(1) * s1_ + a.coeff(2) * s2_;
}

Poly EtaleAlgebra::log_unit(const Poly& a) const {
    Poly one = Poly::constant(PadicNumber::from_int(p_, 1, prec_ + 8));
    Poly w = pow_mod(a, unit_group_exp_);
    Poly z = w - one;
    // all coefficients of z have positive valuation; run log(1+z)
    for (long i = 0; i <= z.degree(); ++i)
        if (!z.coeff(i).is_zero() && z.coeff(i).valuation() < 1)
            throw MathError("etale log: element not congruent to 1 after exponent");
    Poly acc(p_);
    Poly zk = one;
    long terms = prec_ + 10;
    for (long k = 1; k <= terms; ++k) {
        zk = mul(zk, z);
        Poly term = zk.scale(PadicNumber::from_rational(
            p_, mpq_class((k % 2 == 0) ? -1 : 1, k), prec_ + 40));
        acc = acc + term;
    }
    PadicNumber expn = PadicNumber::from_rational(
        p_, mpq_class(1) / mpq_class(unit_group_exp_), prec_ + 8);
    return acc.scale(expn);
}

Poly EtaleAlgebra::log_linear_shift(const PadicNumber& c) const {
    Poly x(p_);
    x.set_coeff(1, PadicNumber::from_int(p_, 1, prec_ + 8));
    if (c.valuation() < 0) {
        // log(c - theta) = log(c) + log(1 - theta/c)
        Poly one = Poly::constant(PadicNumber::from_int(p_, 1, prec_ + 8));
        Poly u = one - x.scale(c.inverse());
        Poly lg = log_unit(u);
        return lg + Poly::constant(c.iwasawa_log());
    }
    Poly a = Poly::constant(c) - x;
    return log_unit(a);
}

Poly EtaleAlgebra::residue_vector(const Poly& g) const {
    return mul(reduce(g), inverse(fprime_));
}

}  // namespace ellck
