#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellck/series.hpp"

namespace ellck {

/// Affine rational point or the point at infinity.
struct QPoint {
    bool infinity = true;
    mpq_class x, y;
    QPoint() = default;
    QPoint(mpq_class xx, mpq_class yy) : infinity(false), x(std::move(xx)), y(std::move(yy)) {}
    bool operator==(const QPoint& o) const {
        return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
    }
};

/// General Weierstrass source model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct SourceModel {
    mpq_class a1, a2, a3, a4, a6;
    bool contains(const QPoint& P) const;
    QPoint add(const QPoint& P, const QPoint& Q) const;
    QPoint neg(const QPoint& P) const;
    QPoint mul(long n, const QPoint& P) const;
};

/// Point coordinates over Q_p on the monic model.
struct PPoint {
    bool infinity = true;
    PadicNumber x, y;
    PPoint() = default;
    PPoint(PadicNumber xx, PadicNumber yy) : infinity(false), x(std::move(xx)), y(std::move(yy)) {}
};

enum class DiskType { generic, weierstrass, infinity };

struct Disk {
    DiskType type = DiskType::generic;
    long xbar = 0, ybar = 0;  // reduction of the points in this disk
};

/// Local chart of a residue disk: expansions of x, y and the working
/// one-forms in the disk parameter (dt-coefficients).  For the infinity
/// disk the parameter is t = -x/y; for a generic disk x = x0 + s with x0
/// the Teichmueller lift; for a Weierstrass disk y = s.
struct Chart {
    DiskType type;
    long p = 0;
    long order = 0;
    PadicNumber x0, y0;           // center (generic/weierstrass); unused at infinity
    LaurentLog x, y;              // coordinate expansions
    LaurentLog omega0, omega1;    // dx/2y and x dx/2y, as dt-coefficients
    std::vector<LaurentLog> even_forms;  // x^j dx / f(x), j = 0..2

    /// parameter value of a point lying in this disk
    PadicNumber parameter_of(const PPoint& P) const;
    /// point at a parameter value
    PPoint point_at(const PadicNumber& t) const;
    const LaurentLog& basis_form(int letter) const;  // 0,1 odd; 2,3,4 even
};

/// Elliptic curve bundle: source model, transformation to an integral
/// monic cubic y^2 = f(x), reduction data at p, local charts.
class CurveModel {
public:
    /// Transformation x' = e^2 x + r, y' = e^3 (y + (a1 x + a3)/2).
    /// The resulting cubic must be integral with unit discriminant mod p.
    CurveModel(const SourceModel& src, long p, long prec, long e = 2,
               const mpq_class& r = mpq_class(0));

    long prime() const { return p_; }
    long prec() const { return prec_; }
    long series_order() const { return order_; }

    const SourceModel& source() const { return src_; }
    const mpz_class& c2() const { return c2_; }
    const mpz_class& c1() const { return c1_; }
    const mpz_class& c0() const { return c0_; }
    RatPoly f_rat() const;
    const Poly& f() const { return fp_; }
    const Poly& fprime() const { return fpp_; }

    /// discriminant of the cubic f
    const mpz_class& disc() const { return disc_; }
    PadicNumber log_delta() const;

    long a_p() const { return ap_; }
    long group_order_mod_p() const { return card_; }  // #E(F_p)

    const std::vector<Disk>& disks() const { return disks_; }
    Disk disk_of(const PPoint& P) const;
    Disk negate(const Disk& d) const;

    const Chart& chart(const Disk& d) const;
    const Chart& infinity_chart() const;

    /// Monic-model coordinates of a source-model rational point.
    QPoint to_monic(const QPoint& src_pt) const;
    QPoint to_source(const QPoint& monic_pt) const;

    /// exact arithmetic on the monic model
    bool monic_contains(const QPoint& P) const;
    QPoint monic_add(const QPoint& P, const QPoint& Q) const;
    QPoint monic_neg(const QPoint& P) const;
    QPoint monic_mul(long n, const QPoint& P) const;

    PPoint to_padic(const QPoint& monic_pt) const;
    PPoint padic_neg(const PPoint& P) const;
    bool on_curve(const PPoint& P) const;

    /// Frobenius-fixed point of a generic disk (Teichmueller x, matching y).
    PPoint teichmuller_point(const Disk& d) const;

    /// Hensel-lifted Weierstrass point of a weierstrass disk.
    PPoint weierstrass_point(const Disk& d) const;

private:
    void build_reduction_data();
    Chart make_chart(const Disk& d) const;
    Chart make_infinity_chart() const;

    SourceModel src_;
    long e_;
    mpq_class r_;
    long p_, prec_, order_;
    mpz_class c2_, c1_, c0_;
    mpz_class disc_;
    Poly fp_, fpp_;
    long ap_ = 0, card_ = 0;
    std::vector<Disk> disks_;
    mutable std::vector<std::optional<Chart>> charts_;
    mutable std::optional<Chart> inf_chart_;
};

}  // namespace ellck
