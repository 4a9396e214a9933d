#include "ellck/curve.hpp"

#include <algorithm>

namespace ellck {

// ------------------------------------------------------------ SourceModel

bool SourceModel::contains(const QPoint& P) const {
    if (P.infinity) return true;
    mpq_class lhs = P.y * P.y + a1 * P.x * P.y + a3 * P.y;
    mpq_class rhs = P.x * P.x * P.x + a2 * P.x * P.x + a4 * P.x + a6;
    return lhs == rhs;
}

QPoint SourceModel::neg(const QPoint& P) const {
    if (P.infinity) return P;
    return QPoint(P.x, -P.y - a1 * P.x - a3);
}

QPoint SourceModel::add(const QPoint& P, const QPoint& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    mpq_class lambda;
    if (P.x == Q.x) {
        if (P.y + Q.y + a1 * Q.x + a3 == 0) return QPoint();  // P = -Q
        // tangent
        lambda = (3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y) /
                 (2 * P.y + a1 * P.x + a3);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    mpq_class nu = P.y - lambda * P.x;
    mpq_class x3 = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
    mpq_class y3 = -(lambda + a1) * x3 - nu - a3;
    return QPoint(x3, y3);
}

QPoint SourceModel::mul(long n, const QPoint& P) const {
    if (n == 0) return QPoint();
    if (n < 0) return neg(mul(-n, P));
    QPoint acc;  // infinity
    QPoint base = P;
    long k = n;
    while (k) {
        if (k & 1) acc = add(acc, base);
        base = add(base, base);
        k >>= 1;
    }
    return acc;
}

// ------------------------------------------------------------- CurveModel

CurveModel::CurveModel(const SourceModel& src, long p, long prec, long e, const mpq_class& r)
    : src_(src), e_(e), r_(r), p_(p), prec_(prec) {
    if (p < 3) throw UnsupportedError("odd prime required");
    order_ = 2 * prec + 10;
    // y'^2 = (x'-r)^3 + (b2 e^2/4)(x'-r)^2 + (b4 e^4/2)(x'-r) + b6 e^6/4
    mpq_class b2 = src.a1 * src.a1 + 4 * src.a2;
    mpq_class b4 = 2 * src.a4 + src.a1 * src.a3;
    mpq_class b6 = src.a3 * src.a3 + 4 * src.a6;
    mpq_class e2 = mpq_class(e) * e;
    mpq_class q2 = b2 * e2 / 4;
    mpq_class q1 = b4 * e2 * e2 / 2;
    mpq_class q0 = b6 * e2 * e2 * e2 / 4;
    // expand (X - r)^3 + q2 (X - r)^2 + q1 (X - r) + q0
    mpq_class rr = r;
    mpq_class C2 = q2 - 3 * rr;
    mpq_class C1 = 3 * rr * rr - 2 * q2 * rr + q1;
    mpq_class C0 = -rr * rr * rr + q2 * rr * rr - q1 * rr + q0;
    if (C2.get_den() != 1 || C1.get_den() != 1 || C0.get_den() != 1)
        throw UnsupportedError("model transformation does not yield an integral cubic");
    c2_ = C2.get_num();
    c1_ = C1.get_num();
    c0_ = C0.get_num();
    // disc(x^3 + a x^2 + b x + c)
    mpz_class a = c2_, b = c1_, c = c0_;
    disc_ = 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
    if (disc_ == 0) throw UnsupportedError("singular cubic");
    if (mpz_divisible_ui_p(disc_.get_mpz_t(), (unsigned long)p))
        throw UnsupportedError("bad reduction at p");
    fp_ = Poly::from_rat(p, f_rat(), prec + 40);
    fpp_ = Poly::from_rat(p, f_rat().derivative(), prec + 40);
    build_reduction_data();
    charts_.resize(disks_.size());
}

RatPoly CurveModel::f_rat() const {
    return RatPoly({mpq_class(c0_), mpq_class(c1_), mpq_class(c2_), mpq_class(1)});
}

PadicNumber CurveModel::log_delta() const {
    return iwasawa_log_rational(p_, mpq_class(disc_), prec_);
}

void CurveModel::build_reduction_data() {
    auto sq = [&](long v) { return ((v % p_) + p_) % p_; };
    std::vector<long> fval(p_);
    for (long x = 0; x < p_; ++x) {
        mpz_class v = ((mpz_class(x) * x * x + c2_ * x * x + c1_ * x + c0_) % p_ + p_) % p_;
        fval[x] = v.get_si();
    }
    std::vector<bool> is_sq(p_, false);
    for (long y = 0; y < p_; ++y) is_sq[sq(y * y)] = true;
    long count = 1;  // point at infinity
    for (long x = 0; x < p_; ++x) {
        if (fval[x] == 0) {
            disks_.push_back({DiskType::weierstrass, x, 0});
            count += 1;
        } else if (is_sq[fval[x]]) {
            for (long y = 1; y < p_; ++y)
                if (sq(y * y) == fval[x]) disks_.push_back({DiskType::generic, x, y});
            count += 2;
        }
    }
    card_ = count;
    ap_ = p_ + 1 - count;
    std::sort(disks_.begin(), disks_.end(), [](const Disk& a, const Disk& b) {
        if (a.xbar != b.xbar) return a.xbar < b.xbar;
        return a.ybar < b.ybar;
    });
}

Disk CurveModel::disk_of(const PPoint& P) const {
    if (P.infinity) return {DiskType::infinity, 0, 0};
    if (P.x.valuation() < 0) return {DiskType::infinity, 0, 0};
    long xbar = P.x.is_zero() ? 0 : (P.x.valuation() > 0 ? 0 : P.x.digit(0));
    long ybar = P.y.is_zero() ? 0 : (P.y.valuation() > 0 ? 0 : P.y.digit(0));
    if (ybar == 0) return {DiskType::weierstrass, xbar, 0};
    return {DiskType::generic, xbar, ybar};
}

Disk CurveModel::negate(const Disk& d) const {
    if (d.type != DiskType::generic) return d;
    return {DiskType::generic, d.xbar, (p_ - d.ybar) % p_};
}

QPoint CurveModel::to_monic(const QPoint& P) const {
    if (P.infinity) return P;
    mpq_class e2 = mpq_class(e_) * e_;
    mpq_class x = e2 * P.x + r_;
    mpq_class y = e2 * e_ * (P.y + (src_.a1 * P.x + src_.a3) / 2);
    return QPoint(x, y);
}

QPoint CurveModel::to_source(const QPoint& P) const {
    if (P.infinity) return P;
    mpq_class e2 = mpq_class(e_) * e_;
    mpq_class x = (P.x - r_) / e2;
    mpq_class y = P.y / (e2 * e_) - (src_.a1 * x + src_.a3) / 2;
    return QPoint(x, y);
}

bool CurveModel::monic_contains(const QPoint& P) const {
    if (P.infinity) return true;
    mpq_class rhs = P.x * P.x * P.x + mpq_class(c2_) * P.x * P.x + mpq_class(c1_) * P.x + c0_;
    return P.y * P.y == rhs;
}

QPoint CurveModel::monic_add(const QPoint& P, const QPoint& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    mpq_class lambda;
    if (P.x == Q.x) {
        if (P.y + Q.y == 0) return QPoint();
        lambda = (3 * P.x * P.x + 2 * mpq_class(c2_) * P.x + c1_) / (2 * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    mpq_class x3 = lambda * lambda - c2_ - P.x - Q.x;
    mpq_class y3 = lambda * (P.x - x3) - P.y;
    return QPoint(x3, y3);
}

QPoint CurveModel::monic_neg(const QPoint& P) const {
    if (P.infinity) return P;
    return QPoint(P.x, -P.y);
}

QPoint CurveModel::monic_mul(long n, const QPoint& P) const {
    if (n == 0) return QPoint();
    if (n < 0) return monic_neg(monic_mul(-n, P));
    QPoint acc, base = P;
    long k = n;
    while (k) {
        if (k & 1) acc = monic_add(acc, base);
        base = monic_add(base, base);
        k >>= 1;
    }
    return acc;
}

PPoint CurveModel::to_padic(const QPoint& P) const {
    if (P.infinity) return PPoint();
    return PPoint(PadicNumber::from_rational(p_, P.x, prec_ + 40),
                  PadicNumber::from_rational(p_, P.y, prec_ + 40));
}

PPoint CurveModel::padic_neg(const PPoint& P) const {
    if (P.infinity) return P;
    return PPoint(P.x, -P.y);
}

bool CurveModel::on_curve(const PPoint& P) const {
    if (P.infinity) return true;
    PadicNumber rhs = fp_.eval(P.x);
    return (P.y * P.y - rhs).is_zero();
}

PPoint CurveModel::teichmuller_point(const Disk& d) const {
    if (d.type != DiskType::generic)
        throw UnsupportedError("teichmuller point: generic disk required");
    PadicNumber x0 = d.xbar == 0
                         ? PadicNumber::zero(p_)
                         : PadicNumber::from_int(p_, d.xbar, prec_ + 40).teichmuller();
    PadicNumber fx = fp_.eval(x0);
    PadicNumber y0 = fx.sqrt(mpz_class(d.ybar));
    return PPoint(x0, y0);
}

PPoint CurveModel::weierstrass_point(const Disk& d) const {
    if (d.type != DiskType::weierstrass)
        throw UnsupportedError("weierstrass point: weierstrass disk required");
    // Hensel-lift the simple root of f at xbar
    PadicNumber x = PadicNumber::from_int(p_, d.xbar, prec_ + 40);
    for (int it = 0; it < 64; ++it) {
        PadicNumber fx = fp_.eval(x);
        if (fx.is_zero()) break;
        x = x - fx / fpp_.eval(x);
    }
    return PPoint(x, PadicNumber::zero(p_));
}

const Chart& CurveModel::chart(const Disk& d) const {
    if (d.type == DiskType::infinity) return infinity_chart();
    for (size_t i = 0; i < disks_.size(); ++i) {
        if (disks_[i].type == d.type && disks_[i].xbar == d.xbar && disks_[i].ybar == d.ybar) {
            if (!charts_[i]) charts_[i] = make_chart(disks_[i]);
            return *charts_[i];
        }
    }
    throw MathError("chart: unknown disk");
}

const Chart& CurveModel::infinity_chart() const {
    if (!inf_chart_) inf_chart_ = make_infinity_chart();
    return *inf_chart_;
}

PadicNumber Chart::parameter_of(const PPoint& P) const {
    switch (type) {
        case DiskType::infinity:
            return -P.x / P.y;  // t = -x/y
        case DiskType::generic:
            return P.x - x0;
        case DiskType::weierstrass:
            return P.y;
    }
    throw MathError("parameter_of: bad chart");
}

PPoint Chart::point_at(const PadicNumber& t) const {
    return PPoint(x.eval(t), y.eval(t));
}

const LaurentLog& Chart::basis_form(int letter) const {
    switch (letter) {
        case 0: return omega0;
        case 1: return omega1;
        default: return even_forms.at(letter - 2);
    }
}

Chart CurveModel::make_chart(const Disk& d) const {
    Chart ch;
    ch.type = d.type;
    ch.p = p_;
    ch.order = order_;
    long n = order_;
    long workprec = prec_ + 40;
    Poly f = fp_, fd = fpp_;
    if (d.type == DiskType::generic) {
        PPoint c = teichmuller_point(d);
        ch.x0 = c.x;
        ch.y0 = c.y;
        // x(s) = x0 + s
        Poly xs(p_);
        xs.set_coeff(0, c.x);
        xs.set_coeff(1, PadicNumber::from_int(p_, 1, workprec));
        // f(x0+s) = y0^2 (1 + h(s)), y = y0 sqrt(1+h)
        Poly fx(p_);
        for (long i = 3; i >= 0; --i) {
            fx = fx * xs;
            fx = fx + Poly::constant(f.coeff(i));
        }
        PadicNumber inv = (c.y * c.y).inverse();
        Poly h = fx.scale(inv);  // 1 + (f(x0+s)-f(x0))/y0^2
        Poly ys = (Poly::constant(c.y) * h.series_sqrt(n)).trunc(n);
        ch.x = LaurentLog::from_series(xs, n);
        ch.y = LaurentLog::from_series(ys, n);
        // omega0 = dx/2y = ds / (2 y(s))
        Poly om0 = (ys.scale(PadicNumber::from_int(p_, 2, workprec))).series_inverse(n);
        ch.omega0 = LaurentLog::from_series(om0, n);
        ch.omega1 = ch.x * ch.omega0;
        // even forms x^j dx / f = x^j / y^2 ds
        Poly finv = fx.series_inverse(n);
        LaurentLog e0 = LaurentLog::from_series(finv, n);
        ch.even_forms.push_back(e0);
        ch.even_forms.push_back(ch.x * e0);
        ch.even_forms.push_back(ch.x * ch.x * e0);
        return ch;
    }
    if (d.type == DiskType::weierstrass) {
        PPoint c = weierstrass_point(d);
        ch.x0 = c.x;
        ch.y0 = PadicNumber::zero(p_);
        // solve f(x(s)) = s^2 with x(0) = root, by Newton on series
        Poly xs(p_);
        xs.set_coeff(0, c.x);
        Poly s2(p_);
        s2.set_coeff(2, PadicNumber::from_int(p_, 1, workprec));
        for (long known = 1; known < n; known *= 2) {
            long m = std::min(2 * known, n);
            // x <- x - (f(x) - s^2)/f'(x)  computed to order m
            Poly fx(p_);
            for (long i = 3; i >= 0; --i) {
                fx = (fx * xs).trunc(m);
                fx = fx + Poly::constant(f.coeff(i));
            }
            Poly fdx(p_);
            for (long i = 2; i >= 0; --i) {
                fdx = (fdx * xs).trunc(m);
                fdx = fdx + Poly::constant(fd.coeff(i));
            }
            xs = (xs - ((fx - s2) * fdx.series_inverse(m)).trunc(m)).trunc(m);
        }
        Poly ys(p_);
        ys.set_coeff(1, PadicNumber::from_int(p_, 1, workprec));  // y = s
        ch.x = LaurentLog::from_series(xs, n);
        ch.y = LaurentLog::from_series(ys, n);
        // omega0 = dx/2y = ds / f'(x(s))
        Poly fdx(p_);
        for (long i = 2; i >= 0; --i) {
            fdx = (fdx * xs).trunc(n);
            fdx = fdx + Poly::constant(fd.coeff(i));
        }
        ch.omega0 = LaurentLog::from_series(fdx.series_inverse(n), n);
        ch.omega1 = ch.x * ch.omega0;
        // even forms x^j/s^2 * dx = x^j/s^2 * x'(s) ds; x' has a simple s factor
        Poly xp = xs.derivative();
        LaurentLog xpl = LaurentLog::from_series(xp, n);
        LaurentLog sinv2 = LaurentLog::monomial(p_, PadicNumber::from_int(p_, 1, workprec), -2, 0, n);
        LaurentLog e0 = xpl * sinv2;
        ch.even_forms.push_back(e0);
        ch.even_forms.push_back(ch.x * e0);
        ch.even_forms.push_back(ch.x * ch.x * e0);
        return ch;
    }
    throw MathError("make_chart: use infinity_chart");
}

Chart CurveModel::make_infinity_chart() const {
    Chart ch;
    ch.type = DiskType::infinity;
    ch.p = p_;
    ch.order = order_;
    long n = order_ + 8;
    long workprec = prec_ + 40;
    PadicNumber one = PadicNumber::from_int(p_, 1, workprec);
    // w = t^3 + c2 t^2 w + c1 t w^2 + c0 w^3  (w = -1/y, x = t/w)
    Poly t3(p_);
    t3.set_coeff(3, one);
    Poly c2p = Poly::constant(PadicNumber::from_int(p_, c2_, workprec));
    Poly c1p = Poly::constant(PadicNumber::from_int(p_, c1_, workprec));
    Poly c0p = Poly::constant(PadicNumber::from_int(p_, c0_, workprec));
    Poly t2(p_);
    t2.set_coeff(2, one);
    Poly t1(p_);
    t1.set_coeff(1, one);
    Poly w = t3;
    for (int it = 0; it < 64; ++it) {
        Poly w2 = (w * w).trunc(n);
        Poly w3 = (w2 * w).trunc(n);
        Poly nw = (t3 + (c2p * t2 * w + c1p * t1 * w2 + c0p * w3).trunc(n)).trunc(n);
        if ((nw - w).is_zero()) {
            w = nw;
            break;
        }
        w = nw;
    }
    // w = t^3 (1 + u(t)); x = t/w; y = -1/w
    Poly u(p_);
    for (long i = 3; i <= w.degree(); ++i) u.set_coeff(i - 3, w.coeff(i));
    Poly winv_shift = u.series_inverse(n);  // = t^3 / w
    LaurentLog tm3 = LaurentLog::monomial(p_, one, -3, 0, n);
    LaurentLog winv = LaurentLog::from_series(winv_shift, n) * tm3;  // 1/w
    LaurentLog tt = LaurentLog::monomial(p_, one, 1, 0, n);
    ch.x = tt * winv;        // x = t/w
    ch.y = -winv;            // y = -1/w
    // omega0 = x'(t) dt / (2 y)
    LaurentLog xp = ch.x.derivative();
    // 1/y = -w
    LaurentLog wl = LaurentLog::from_series(w, n);
    PadicNumber half = PadicNumber::from_rational(p_, mpq_class(1, 2), workprec);
    ch.omega0 = (xp * wl).scale(-half);
    ch.omega1 = ch.x * ch.omega0;
    // even forms x^j x'(t) / f(x) dt, f(x) = y^2 = 1/w^2
    LaurentLog w2 = wl * wl;
    LaurentLog e0 = xp * w2;
    ch.even_forms.push_back(e0);
    ch.even_forms.push_back(ch.x * e0);
    ch.even_forms.push_back(ch.x * ch.x * e0);
    return ch;
}

}  // namespace ellck
