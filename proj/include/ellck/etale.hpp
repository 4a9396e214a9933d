#pragma once

#include "ellck/poly.hpp"

namespace ellck {

/// Q_p[x]/(f) for a monic integral cubic f, squarefree mod p, as a product
/// of unramified local fields.  Supplies the trace/log arithmetic behind
/// integrals of one-forms G(x)/f(x) dx: the primitive is the trace of
/// (G(theta)/f'(theta)) log(x - theta).
class EtaleAlgebra {
public:
    EtaleAlgebra(long p, const RatPoly& f, long prec);

    long prime() const { return p_; }
    long prec() const { return prec_; }

    Poly reduce(const Poly& a) const;  // mod f
    Poly mul(const Poly& a, const Poly& b) const;
    Poly inverse(const Poly& a) const;  // a invertible mod p
    Poly pow_mod(const Poly& a, const mpz_class& e) const;
    PadicNumber trace(const Poly& a) const;

    /// Iwasawa log of an element that is a unit of the integral model
    /// (all residue components nonzero mod p).
    Poly log_unit(const Poly& a) const;

    /// log(c - theta) for a scalar c in Q_p: a unit when v(c) = 0 and
    /// c mod p avoids the roots of f; when v(c) < 0 this is
    /// log_p(c) + log(1 - theta/c).
    Poly log_linear_shift(const PadicNumber& c) const;

    /// G(theta)/f'(theta) for deg G <= 2.
    Poly residue_vector(const Poly& g) const;

    const Poly& f() const { return f_; }

private:
    long p_;
    long prec_;
    Poly f_;          // monic cubic over Q_p at working precision
    Poly fprime_;
    mpz_class unit_group_exp_;  // exponent of (A/p)^x
    PadicNumber s1_, s2_;       // power sums of the roots
};

}  // namespace ellck
