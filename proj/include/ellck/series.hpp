#pragma once

#include <array>
#include <vector>

#include "ellck/poly.hpp"

namespace ellck {

/// Finite-tail Laurent series with polynomial log terms:
///   sum over k >= tail, 0 <= j <= 3 of  c_{k,j} t^k log(t)^j,
/// truncated at t-order `order` (coefficients with k >= order are unknown).
/// Hosts the formal expansions at the tangential basepoint; with no log
/// terms and tail 0 it doubles as a plain truncated power series.
class LaurentLog {
public:
    static constexpr int kMaxLog = 3;
    static constexpr long kMaxTail = 16;  // capacity bound on pole depth

    LaurentLog() : p_(0), order_(0) {}
    LaurentLog(long p, long order) : p_(p), order_(order) {}
    static LaurentLog from_series(const Poly& s, long order);
    static LaurentLog monomial(long p, const PadicNumber& c, long k, int j, long order);

    long prime() const { return p_; }
    long order() const { return order_; }
    /// lowest exponent with a stored coefficient (0 if none)
    long tail() const;

    PadicNumber coeff(long k, int j) const;
    void add_term(long k, int j, const PadicNumber& c);

    bool has_log() const;
    bool is_zero() const;

    LaurentLog operator+(const LaurentLog& o) const;
    LaurentLog operator-(const LaurentLog& o) const;
    LaurentLog operator*(const LaurentLog& o) const;
    LaurentLog operator-() const;
    LaurentLog scale(const PadicNumber& s) const;

    /// d/dt of the series (as a function; result is the dt-coefficient).
    LaurentLog derivative() const;

    /// Treat self as the dt-coefficient of a one-form and return the unique
    /// primitive with zero constant term; t^-1 log^j integrates to
    /// log^{j+1}/(j+1), which throws CapacityError past log degree 3.
    LaurentLog integrate_form() const;

    /// Evaluate at t with v(t) >= 1, Iwasawa log for the log terms.
    /// The reported precision accounts for the truncation tail.
    PadicNumber eval(const PadicNumber& t) const;

    /// j = 0 part as a Poly in t (requires tail >= 0 and no log terms).
    Poly power_part() const;

private:
    void ensure(long k);
    long p_;
    long order_;
    long off_ = 0;                                   // exponent of row_[j][0]
    std::array<std::vector<PadicNumber>, 4> row_;    // per log degree
};

/// Primitive of the iterated integral of a word of one-forms
/// (outermost first):  I_w = integral of w[0] * (integral of w[1] * ...).
/// Forms are given by their dt-coefficient series.
LaurentLog iterated_primitive(const std::vector<LaurentLog>& word);

/// Iterated integral between two parameter values in one disk, via the
/// composition-with-reversal formula through the expansion basepoint.
PadicNumber tiny_word_integral(const std::vector<LaurentLog>& word,
                               const PadicNumber& t_from, const PadicNumber& t_to);

}  // namespace ellck
