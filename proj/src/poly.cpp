#include "ellck/poly.hpp"

#include <algorithm>

namespace ellck {

// ---------------------------------------------------------------- RatPoly

RatPoly RatPoly::x() { return RatPoly({mpq_class(0), mpq_class(1)}); }

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& RatPoly::coeff(long i) const {
    static const mpq_class z(0);
    if (i < 0 || i >= (long)c_.size()) return z;
    return c_[i];
}

mpq_class& RatPoly::at(long i) {
    if (i >= (long)c_.size()) c_.resize(i + 1, mpq_class(0));
    return c_[i];
}

void RatPoly::set_coeff(long i, const mpq_class& v) {
    at(i) = v;
    trim();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const mpq_class& s) const {
    std::vector<mpq_class> r = c_;
    for (auto& v : r) v *= s;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<mpq_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * (long)i;
    return RatPoly(std::move(r));
}

mpq_class RatPoly::eval(const mpq_class& v) const {
    mpq_class acc(0);
    for (long i = degree(); i >= 0; --i) acc = acc * v + c_[i];
    return acc;
}

void RatPoly::divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw MathError("RatPoly division by zero");
    r = a;
    q = RatPoly();
    mpq_class lead = b.c_.back();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        long d = r.degree() - b.degree();
        mpq_class f = r.c_.back() / lead;
        q.at(d) += f;
        for (long i = 0; i <= b.degree(); ++i) r.at(i + d) -= f * b.coeff(i);
        r.trim();
    }
    q.trim();
}

RatPoly RatPoly::xgcd(const RatPoly& a, const RatPoly& b, RatPoly& u, RatPoly& v) {
    RatPoly r0 = a, r1 = b;
    RatPoly u0 = RatPoly::constant(1), u1 = RatPoly();
    RatPoly v0 = RatPoly(), v1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        RatPoly q, r;
        divrem(r0, r1, q, r);
        RatPoly nu = u0 - q * u1, nv = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = nu;
        v0 = v1; v1 = nv;
    }
    if (!r0.is_zero()) {
        mpq_class lead = r0.coeffs().back();
        r0 = r0 * (1 / lead);
        u0 = u0 * (1 / lead);
        v0 = v0 * (1 / lead);
    }
    u = u0;
    v = v0;
    return r0;
}

// ------------------------------------------------------------------ Poly

Poly Poly::constant(const PadicNumber& v) {
    Poly r(v.prime());
    r.c_.push_back(v);
    r.trim();
    return r;
}

Poly Poly::from_rat(long p, const RatPoly& q, long prec) {
    Poly r(p);
    r.c_.reserve(q.degree() + 1);
    for (long i = 0; i <= q.degree(); ++i)
        r.c_.push_back(PadicNumber::from_rational(p, q.coeff(i), prec));
    r.trim();
    return r;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_exact_zero()) c_.pop_back();
}

bool Poly::is_zero() const {
    for (auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

PadicNumber Poly::coeff(long i) const {
    if (i < 0 || i >= (long)c_.size()) return PadicNumber::zero(p_ ? p_ : 3);
    return c_[i];
}

void Poly::set_coeff(long i, const PadicNumber& v) {
    if (i >= (long)c_.size()) c_.resize(i + 1, PadicNumber::zero(p_));
    c_[i] = v;
    trim();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(p_ ? p_ : o.p_);
    size_t n = std::max(c_.size(), o.c_.size());
    r.c_.resize(n, PadicNumber::zero(r.p_));
    for (size_t i = 0; i < n; ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(p_ ? p_ : o.p_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, PadicNumber::zero(r.p_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_exact_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_exact_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly Poly::scale(const PadicNumber& s) const {
    Poly r = *this;
    for (auto& v : r.c_) v = v * s;
    r.trim();
    return r;
}

Poly Poly::shift_x(long k) const {
    if (c_.empty()) return *this;
    Poly r(p_);
    r.c_.assign(c_.size() + k, PadicNumber::zero(p_));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

Poly Poly::derivative() const {
    Poly r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1, PadicNumber::zero(p_));
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = c_[i] * PadicNumber::from_int(p_, (long)i, c_[i].precision() + 8);
    r.trim();
    return r;
}

PadicNumber Poly::eval(const PadicNumber& v) const {
    PadicNumber acc = PadicNumber::zero(p_ ? p_ : v.prime());
    for (long i = degree(); i >= 0; --i) acc = acc * v + c_[i];
    return acc;
}

Poly Poly::trunc(long n) const {
    Poly r(p_);
    r.c_.assign(c_.begin(), c_.begin() + std::min((size_t)std::max(n, 0L), c_.size()));
    r.trim();
    return r;
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw MathError("Poly division by zero");
    long db = b.degree();
    while (db >= 0 && b.coeff(db).is_zero()) --db;
    if (db < 0) throw PrecisionError("Poly division: divisor vanishes at precision");
    PadicNumber lead = b.coeff(db);
    r = a;
    q = Poly(a.p_);
    while (r.degree() >= db) {
        long dr = r.degree();
        PadicNumber top = r.coeff(dr);
        if (top.is_zero()) {
            // drop an at-precision-zero leading coefficient
            r.c_.pop_back();
            r.trim();
            continue;
        }
        PadicNumber fct = top / lead;
        q.set_coeff(dr - db, q.coeff(dr - db) + fct);
        for (long i = 0; i <= db; ++i)
            r.set_coeff(i + dr - db, r.coeff(i + dr - db) - fct * b.coeff(i));
        // force exact cancellation of the top coefficient
        if (dr < (long)r.c_.size()) {
            r.c_.resize(dr);
            r.trim();
        }
    }
}

Poly Poly::series_inverse(long n) const {
    PadicNumber a0 = coeff(0);
    if (a0.is_zero()) throw MathError("series_inverse: constant term zero");
    Poly r = Poly::constant(a0.inverse());
    long k = 1;
    while (k < n) {
        k = std::min(2 * k, n);
        // r <- r*(2 - a*r) mod x^k
        Poly ar = ((*this).trunc(k) * r).trunc(k);
        Poly two = Poly::constant(PadicNumber::from_int(p_, 2, a0.precision() + 8));
        r = (r * (two - ar)).trunc(k);
    }
    return r;
}

Poly Poly::series_sqrt(long n) const {
    PadicNumber one = PadicNumber::from_int(p_, 1, coeff(0).precision() + 8);
    if (!(coeff(0) - one).is_zero())
        throw MathError("series_sqrt: constant term must be 1");
    // Newton: r <- (r + a/r)/2
    Poly r = Poly::constant(one);
    PadicNumber half = PadicNumber::from_rational(p_, mpq_class(1, 2), one.precision() + 8);
    long k = 1;
    while (k < n) {
        k = std::min(2 * k, n);
        Poly rinv = r.series_inverse(k);
        r = ((r + ((*this).trunc(k) * rinv).trunc(k)).scale(half)).trunc(k);
    }
    return r;
}

Poly Poly::series_log1p(long n) const {
    if (!coeff(0).is_zero()) throw MathError("series_log1p: constant term must be 0");
    // log(1+s) = integral of s' / (1+s)
    Poly one = Poly::constant(PadicNumber::from_int(p_, 1, PadicNumber::kPrecCap));
    Poly d = derivative().trunc(n - 1);
    Poly denom = (one + *this).series_inverse(n - 1);
    return (d * denom).trunc(n - 1).series_integrate().trunc(n);
}

Poly Poly::series_integrate() const {
    Poly r(p_);
    if (c_.empty()) return r;
    r.c_.assign(c_.size() + 1, PadicNumber::zero(p_));
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[i + 1] = c_[i] / PadicNumber::from_int(p_, (long)i + 1, c_[i].precision() + 40);
    r.trim();
    return r;
}

Poly Poly::series_compose(const Poly& inner, long n) const {
    if (!inner.coeff(0).is_zero())
        throw MathError("series_compose: inner constant term must be 0");
    Poly acc(p_);
    for (long i = std::min(degree(), n - 1); i >= 0; --i) {
        acc = (acc * inner).trunc(n);
        acc = acc + Poly::constant(coeff(i));
    }
    return acc.trunc(n);
}

// ----------------------------------------------------------- PadicMatrix

PadicMatrix::PadicMatrix(long rows, long cols, const PadicNumber& fill)
    : r_(rows), c_(cols), m_(rows * cols, fill) {}

namespace {
// pivot choice: smallest valuation among provably nonzero entries
long pick_pivot(const PadicMatrix& a, long col, long start, const std::vector<bool>& used) {
    long best = -1, bestv = 0;
    for (long i = start; i < a.rows(); ++i) {
        if (used[i]) continue;
        const PadicNumber& v = a.at(i, col);
        if (v.is_zero()) continue;
        if (best < 0 || v.valuation() < bestv) {
            best = i;
            bestv = v.valuation();
        }
    }
    return best;
}
}  // namespace

std::vector<PadicNumber> PadicMatrix::solve(PadicMatrix a, std::vector<PadicNumber> b) {
    long n = a.rows();
    if (a.cols() != n || (long)b.size() != n) throw MathError("solve: shape mismatch");
    std::vector<long> perm(n);
    std::vector<bool> used(n, false);
    for (long col = 0; col < n; ++col) {
        long piv = -1, bestv = 0;
        for (long i = 0; i < n; ++i) {
            if (used[i] || a.at(i, col).is_zero()) continue;
            long v = a.at(i, col).valuation();
            if (piv < 0 || v < bestv) { piv = i; bestv = v; }
        }
        if (piv < 0) throw PrecisionError("solve: singular system at working precision");
        used[piv] = true;
        perm[col] = piv;
        PadicNumber inv = a.at(piv, col).inverse();
        for (long i = 0; i < n; ++i) {
            if (i == piv || a.at(i, col).is_zero()) continue;
            PadicNumber f = a.at(i, col) * inv;
            for (long j = col; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(piv, j);
            b[i] = b[i] - f * b[piv];
        }
    }
    std::vector<PadicNumber> x(n, PadicNumber());
    for (long col = 0; col < n; ++col) x[col] = b[perm[col]] / a.at(perm[col], col);
    return x;
}

PadicNumber PadicMatrix::det() const {
    PadicMatrix a = *this;
    long n = r_;
    if (c_ != n) throw MathError("det: not square");
    long p = 0;
    for (long i = 0; i < n * n; ++i)
        if (!m_[i].is_exact_zero()) { p = m_[i].prime(); break; }
    if (p == 0) return PadicNumber();
    PadicNumber d = PadicNumber::from_int(p, 1, 1L << 30);
    std::vector<bool> used(n, false);
    long sign = 1;
    std::vector<long> order;
    for (long col = 0; col < n; ++col) {
        long piv = -1, bestv = 0;
        for (long i = 0; i < n; ++i) {
            if (used[i] || a.at(i, col).is_zero()) continue;
            long v = a.at(i, col).valuation();
            if (piv < 0 || v < bestv) { piv = i; bestv = v; }
        }
        if (piv < 0) {
            // a column with no certified-nonzero entries: det is 0 at the
            // precision of the remaining entries
            long vmin = 1L << 30;
            for (long i = 0; i < n; ++i)
                if (!used[i]) vmin = std::min(vmin, a.at(i, col).precision());
            return PadicNumber::zero_at(p, std::max(vmin, 1L));
        }
        used[piv] = true;
        order.push_back(piv);
        PadicNumber inv = a.at(piv, col).inverse();
        d = d * a.at(piv, col);
        for (long i = 0; i < n; ++i) {
            if (i == piv || used[i] || a.at(i, col).is_zero()) continue;
            PadicNumber f = a.at(i, col) * inv;
            for (long j = col; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(piv, j);
        }
    }
    // parity of the pivot permutation
    std::vector<long> pos = order;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            if (pos[i] > pos[j]) { std::swap(pos[i], pos[j]); sign = -sign; }
    return sign > 0 ? d : -d;
}

long PadicMatrix::rank() const {
    PadicMatrix a = *this;
    long rank = 0;
    std::vector<bool> used(r_, false);
    for (long col = 0; col < c_; ++col) {
        long piv = -1, bestv = 0;
        for (long i = 0; i < r_; ++i) {
            if (used[i] || a.at(i, col).is_zero()) continue;
            long v = a.at(i, col).valuation();
            if (piv < 0 || v < bestv) { piv = i; bestv = v; }
        }
        if (piv < 0) continue;
        used[piv] = true;
        ++rank;
        PadicNumber inv = a.at(piv, col).inverse();
        for (long i = 0; i < r_; ++i) {
            if (i == piv || used[i] || a.at(i, col).is_zero()) continue;
            PadicNumber f = a.at(i, col) * inv;
            for (long j = col; j < c_; ++j) a.at(i, j) = a.at(i, j) - f * a.at(piv, j);
        }
    }
    return rank;
}

PadicNumber resultant(const Poly& f, const Poly& g, long deg_f, long deg_g) {
    if (deg_f < 0 || deg_g < 0) throw MathError("resultant: negative formal degree");
    long p = f.prime() ? f.prime() : g.prime();
    if (deg_f == 0 && deg_g == 0) return PadicNumber::from_int(p, 1, 1L << 30);
    bool fz = true, gz = true;
    for (long i = 0; i <= deg_f; ++i) fz = fz && f.coeff(i).is_zero();
    for (long i = 0; i <= deg_g; ++i) gz = gz && g.coeff(i).is_zero();
    if (fz && gz) throw MathError("resultant: both polynomials vanish at precision");
    long n = deg_f + deg_g;
    PadicMatrix s(n, n, PadicNumber::zero_at(p, 1L << 30));
    for (long i = 0; i < deg_g; ++i)
        for (long j = 0; j <= deg_f; ++j) s.at(i, i + j) = f.coeff(deg_f - j);
    for (long i = 0; i < deg_f; ++i)
        for (long j = 0; j <= deg_g; ++j) s.at(deg_g + i, i + j) = g.coeff(deg_g - j);
    return s.det();
}

}  // namespace ellck
