// SPDX-License-Identifier: Apache-2.0
#ifndef INOSE_ELLIPTIC_HPP
#define INOSE_ELLIPTIC_HPP

#include <string>

#include "inose/ratfunc.hpp"

namespace inose {

/// Elliptic curve over Q in the form y^2 = x^3 + a2 x^2 + a4 x + a6.
struct EllipticCurve {
    Rational a2, a4, a6;

    /// 16(a2^2 a4^2 - 4 a4^3 - 4 a2^3 a6 + 18 a2 a4 a6 - 27 a6^2);
    /// nonzero iff the cubic is smooth.
    Rational discriminant() const;

    Rational j_invariant() const;

    /// x^3 + a2 x^2 + a4 x + a6 as a polynomial in the given indeterminate.
    UniPoly rhs(Var v) const;
};

/// Isogeny data in the shape (x, y) -> (xn/xd (x), yn/yd (x) * y), reduced,
/// with deg xn = d and deg xd = d - 1.
class RationalMap {
public:
    RationalMap(UniPoly x_num, UniPoly x_den, UniPoly y_num, UniPoly y_den,
                int degree);

    const UniPoly& x_num() const { return xn_; }
    const UniPoly& x_den() const { return xd_; }
    const UniPoly& y_num() const { return yn_; }
    const UniPoly& y_den() const { return yd_; }
    int degree() const { return degree_; }

private:
    UniPoly xn_, xd_, yn_, yd_;
    int degree_;
};

struct IsogenyReport {
    bool identity_holds = false;
    bool degree_matches = false;
    std::string detail;

    bool pass() const { return identity_holds && degree_matches; }
};

/// Checks the defining identity of an isogeny between the two curves:
/// the pullback of E2's Weierstrass relation along the map must reduce to
/// E1's relation, as an exact polynomial identity.
IsogenyReport verify_isogeny(const EllipticCurve& e1, const EllipticCurve& e2,
                             const RationalMap& phi);

/// Short Weierstrass model Y^2 = X^3 + a X + b over a function field.
class WeierstrassModel {
public:
    WeierstrassModel(RatFunc a, RatFunc b);

    const RatFunc& a() const { return a_; }
    const RatFunc& b() const { return b_; }
    Var var() const { return a_.var(); }

    RatFunc rhs(const RatFunc& x) const { return x * x * x + a_ * x + b_; }

private:
    RatFunc a_, b_;
};

/// Point on a short Weierstrass model: infinity or exact affine coordinates.
class ECPoint {
public:
    static ECPoint infinity(Var v) { return ECPoint(v); }
    ECPoint(RatFunc x, RatFunc y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    bool is_infinity() const { return inf_; }
    const RatFunc& x() const;
    const RatFunc& y() const;
    Var var() const { return x_.var(); }

    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const ECPoint& a, const ECPoint& b) { return !(a == b); }

    std::string str() const;

private:
    explicit ECPoint(Var v) : inf_(true), x_(v), y_(v) {}

    bool inf_;
    RatFunc x_, y_;
};

bool on_curve(const WeierstrassModel& m, const ECPoint& p);

/// Chord-tangent group law; infinity is the identity.
ECPoint ec_add(const WeierstrassModel& m, const ECPoint& p, const ECPoint& q);
ECPoint ec_neg(const WeierstrassModel& m, const ECPoint& p);
ECPoint ec_sub(const WeierstrassModel& m, const ECPoint& p, const ECPoint& q);

}  // namespace inose

#endif
