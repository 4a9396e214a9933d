#include "ellck/series.hpp"

#include <algorithm>

namespace ellck {

LaurentLog LaurentLog::from_series(const Poly& s, long order) {
    LaurentLog r(s.prime(), order);
    for (long i = 0; i <= s.degree() && i < order; ++i) {
        PadicNumber c = s.coeff(i);
        if (!c.is_exact_zero()) r.add_term(i, 0, c);
    }
    return r;
}

LaurentLog LaurentLog::monomial(long p, const PadicNumber& c, long k, int j, long order) {
    LaurentLog r(p, order);
    r.add_term(k, j, c);
    return r;
}

void LaurentLog::ensure(long k) {
    if (row_[0].empty()) {
        off_ = k;
        for (auto& v : row_) v.resize(1, PadicNumber::zero(p_));
        return;
    }
    if (k < off_) {
        long grow = off_ - k;
        if (-k > kMaxTail) throw CapacityError("LaurentLog: tail capacity exceeded");
        for (auto& v : row_) v.insert(v.begin(), grow, PadicNumber::zero(p_));
        off_ = k;
    } else if (k >= off_ + (long)row_[0].size()) {
        for (auto& v : row_) v.resize(k - off_ + 1, PadicNumber::zero(p_));
    }
}

long LaurentLog::tail() const {
    long t = order_;
    for (int j = 0; j < 4; ++j)
        for (long i = 0; i < (long)row_[j].size(); ++i)
            if (!row_[j][i].is_exact_zero()) {
                t = std::min(t, off_ + i);
                break;
            }
    return t >= order_ ? 0 : t;
}

PadicNumber LaurentLog::coeff(long k, int j) const {
    if (j < 0 || j > kMaxLog || row_[j].empty() || k < off_ ||
        k >= off_ + (long)row_[j].size())
        return PadicNumber::zero(p_ ? p_ : 3);
    return row_[j][k - off_];
}

void LaurentLog::add_term(long k, int j, const PadicNumber& c) {
    if (j > kMaxLog) throw CapacityError("LaurentLog: log degree capacity exceeded");
    if (k >= order_) return;
    if (c.is_exact_zero()) return;
    ensure(k);
    row_[j][k - off_] += c;
}

bool LaurentLog::has_log() const {
    for (int j = 1; j < 4; ++j)
        for (auto& c : row_[j])
            if (!c.is_zero()) return true;
    return false;
}

bool LaurentLog::is_zero() const {
    for (int j = 0; j < 4; ++j)
        for (auto& c : row_[j])
            if (!c.is_zero()) return false;
    return true;
}

LaurentLog LaurentLog::operator+(const LaurentLog& o) const {
    LaurentLog r(p_ ? p_ : o.p_, std::min(order_ ? order_ : o.order_, o.order_ ? o.order_ : order_));
    for (int j = 0; j < 4; ++j) {
        for (long i = 0; i < (long)row_[j].size(); ++i)
            if (!row_[j][i].is_exact_zero() && off_ + i < r.order_)
                r.add_term(off_ + i, j, row_[j][i]);
        for (long i = 0; i < (long)o.row_[j].size(); ++i)
            if (!o.row_[j][i].is_exact_zero() && o.off_ + i < r.order_)
                r.add_term(o.off_ + i, j, o.row_[j][i]);
    }
    return r;
}

LaurentLog LaurentLog::operator-() const {
    LaurentLog r = *this;
    for (int j = 0; j < 4; ++j)
        for (auto& c : r.row_[j]) c = -c;
    return r;
}

LaurentLog LaurentLog::operator-(const LaurentLog& o) const { return *this + (-o); }

LaurentLog LaurentLog::scale(const PadicNumber& s) const {
    LaurentLog r = *this;
    for (int j = 0; j < 4; ++j)
        for (auto& c : r.row_[j]) c = c * s;
    return r;
}

LaurentLog LaurentLog::operator*(const LaurentLog& o) const {
    long t1 = tail(), t2 = o.tail();
    long ord = std::min(order_ + t2, o.order_ + t1);
    LaurentLog r(p_ ? p_ : o.p_, ord);
    for (int j1 = 0; j1 < 4; ++j1) {
        for (long i1 = 0; i1 < (long)row_[j1].size(); ++i1) {
            const PadicNumber& a = row_[j1][i1];
            if (a.is_exact_zero()) continue;
            for (int j2 = 0; j2 + j1 < 4; ++j2) {
                for (long i2 = 0; i2 < (long)o.row_[j2].size(); ++i2) {
                    const PadicNumber& b = o.row_[j2][i2];
                    if (b.is_exact_zero()) continue;
                    long k = off_ + i1 + o.off_ + i2;
                    if (k < ord) r.add_term(k, j1 + j2, a * b);
                }
            }
            // log-degree overflow check: only an error if both coeffs nonzero
            for (int j2 = 4 - j1; j2 < 4; ++j2)
                for (long i2 = 0; i2 < (long)o.row_[j2].size(); ++i2)
                    if (!o.row_[j2][i2].is_zero() && !a.is_zero())
                        throw CapacityError("LaurentLog: log degree overflow in product");
        }
    }
    return r;
}

LaurentLog LaurentLog::derivative() const {
    LaurentLog r(p_, order_ - 1);
    for (int j = 0; j < 4; ++j) {
        for (long i = 0; i < (long)row_[j].size(); ++i) {
            const PadicNumber& c = row_[j][i];
            if (c.is_exact_zero()) continue;
            long k = off_ + i;
            if (k != 0)
                r.add_term(k - 1, j, c * PadicNumber::from_int(p_, k, PadicNumber::kPrecCap));
            if (j > 0)
                r.add_term(k - 1, j - 1, c * PadicNumber::from_int(p_, j, PadicNumber::kPrecCap));
        }
    }
    return r;
}

LaurentLog LaurentLog::integrate_form() const {
    LaurentLog r(p_, order_ + 1);
    for (int j = 0; j < 4; ++j) {
        for (long i = 0; i < (long)row_[j].size(); ++i) {
            PadicNumber c = row_[j][i];
            if (c.is_exact_zero()) continue;
            long k = off_ + i;
            if (k == -1) {
                if (j + 1 > kMaxLog)
                    throw CapacityError("integrate_form: log degree overflow");
                r.add_term(0, j + 1,
                           c / PadicNumber::from_int(p_, j + 1, PadicNumber::kPrecCap));
                continue;
            }
            // t^k log^j dt -> t^(k+1) sum_{i<=j} (-1)^(j-i) j!/(i!) (k+1)^(i-j-1) log^i
            PadicNumber kp1 = PadicNumber::from_int(p_, k + 1, PadicNumber::kPrecCap);
            PadicNumber factor = c / kp1;
            for (int jj = j; jj >= 0; --jj) {
                r.add_term(k + 1, jj, factor);
                if (jj > 0) {
                    factor = -(factor * PadicNumber::from_int(p_, jj, PadicNumber::kPrecCap)) / kp1;
                }
            }
        }
    }
    return r;
}

PadicNumber LaurentLog::eval(const PadicNumber& t) const {
    if (t.valuation() < 1) throw MathError("LaurentLog::eval: |t| must be < 1");
    long p = p_ ? p_ : t.prime();
    PadicNumber logt = t.iwasawa_log();
    // worst stored coefficient valuation, for the truncation-error bound
    long worst = 0;
    for (int j = 0; j < 4; ++j)
        for (auto& c : row_[j])
            if (!c.is_zero()) worst = std::min(worst, c.valuation());
    PadicNumber total = PadicNumber::zero(p);
    PadicNumber logpow = PadicNumber::from_int(p, 1, PadicNumber::kPrecCap);
    for (int j = 0; j < 4; ++j) {
        if (j > 0) logpow = logpow * logt;
        if (row_[j].empty()) continue;
        // Horner over k from high to low, then multiply by t^off
        PadicNumber acc = PadicNumber::zero(p);
        for (long i = (long)row_[j].size() - 1; i >= 0; --i) acc = acc * t + row_[j][i];
        if (off_ > 0)
            acc = acc * t.pow(off_);
        else if (off_ < 0)
            acc = acc / t.pow(-off_);
        total += acc * logpow;
    }
    long tail_bound = order_ * t.valuation() + worst;
    return total.truncate(tail_bound);
}

Poly LaurentLog::power_part() const {
    Poly r(p_);
    for (long i = 0; i < (long)row_[0].size(); ++i) {
        if (row_[0][i].is_exact_zero()) continue;
        if (off_ + i < 0) throw MathError("power_part: negative exponent present");
        r.set_coeff(off_ + i, row_[0][i]);
    }
    return r;
}

LaurentLog iterated_primitive(const std::vector<LaurentLog>& word) {
    if (word.empty()) throw MathError("iterated_primitive: empty word");
    LaurentLog acc;
    for (long i = (long)word.size() - 1; i >= 0; --i) {
        if (i == (long)word.size() - 1)
            acc = word[i].integrate_form();
        else
            acc = (word[i] * acc).integrate_form();
    }
    return acc;
}

PadicNumber tiny_word_integral(const std::vector<LaurentLog>& word,
                               const PadicNumber& t_from, const PadicNumber& t_to) {
    long n = (long)word.size();
    long p = t_from.prime();
    // anchored primitives of all prefixes/suffixes
    // I_u for prefixes u = word[0..m), J_v for suffixes with reversal
    std::vector<PadicNumber> pre(n + 1), suf(n + 1);
    pre[0] = PadicNumber::from_int(p, 1, PadicNumber::kPrecCap);
    suf[0] = pre[0];
    for (long m = 1; m <= n; ++m) {
        std::vector<LaurentLog> u(word.begin(), word.begin() + m);
        pre[m] = iterated_primitive(u).eval(t_to);
        std::vector<LaurentLog> v(word.begin() + (n - m), word.end());
        std::reverse(v.begin(), v.end());
        PadicNumber val = iterated_primitive(v).eval(t_from);
        suf[m] = (m % 2 == 0) ? val : -val;
    }
    PadicNumber total = PadicNumber::zero(p);
    for (long m = 0; m <= n; ++m) total += pre[m] * suf[n - m];
    return total;
}

}  // namespace ellck
