// SPDX-License-Identifier: Apache-2.0
#include "inose/elliptic.hpp"

namespace inose {

Rational EllipticCurve::discriminant() const {
    const Rational s16(16);
    return s16 * (a2 * a2 * a4 * a4 - Rational(4) * a4 * a4 * a4 -
                  Rational(4) * a2 * a2 * a2 * a6 + Rational(18) * a2 * a4 * a6 -
                  Rational(27) * a6 * a6);
}

Rational EllipticCurve::j_invariant() const {
    const Rational disc = discriminant();
    if (disc.is_zero()) throw SingularInput("singular curve has no j-invariant");
    const Rational c4 = Rational(16) * (a2 * a2 - Rational(3) * a4);
    return c4 * c4 * c4 / disc;
}

UniPoly EllipticCurve::rhs(Var v) const {
    return UniPoly(v, {a6, a4, a2, Rational(1)});
}

RationalMap::RationalMap(UniPoly x_num, UniPoly x_den, UniPoly y_num,
                         UniPoly y_den, int degree)
    : xn_(std::move(x_num)), xd_(std::move(x_den)), yn_(std::move(y_num)),
      yd_(std::move(y_den)), degree_(degree) {
    if (xd_.is_zero() || yd_.is_zero())
        throw DegreeMismatch("zero denominator in rational map");
    const UniPoly gx = UniPoly::gcd(xn_, xd_);
    if (gx.degree() > 0) {
        xn_ = UniPoly::exact_div(xn_, gx);
        xd_ = UniPoly::exact_div(xd_, gx);
    }
    const UniPoly gy = UniPoly::gcd(yn_, yd_);
    if (gy.degree() > 0) {
        yn_ = UniPoly::exact_div(yn_, gy);
        yd_ = UniPoly::exact_div(yd_, gy);
    }
    if (degree_ < 2)
        throw DegreeMismatch("isogeny degree must be at least 2");
    if (xn_.degree() != degree_ || xd_.degree() != degree_ - 1)
        throw DegreeMismatch("x-coordinate map has degree " +
                             std::to_string(xn_.degree()) + "/" +
                             std::to_string(xd_.degree()) +
                             ", expected " + std::to_string(degree_) + "/" +
                             std::to_string(degree_ - 1));
}

IsogenyReport verify_isogeny(const EllipticCurve& e1, const EllipticCurve& e2,
                             const RationalMap& phi) {
    IsogenyReport rep;
    const UniPoly& xn = phi.x_num();
    const UniPoly& xd = phi.x_den();
    const UniPoly& yn = phi.y_num();
    const UniPoly& yd = phi.y_den();

    // (xn^3 + a2' xn^2 xd + a4' xn xd^2 + a6' xd^3) yd^2
    //   == yn^2 (x^3 + a2 x^2 + a4 x + a6) xd^3
    const UniPoly lhs_inner = xn.pow(3) + xn.pow(2) * xd * e2.a2 +
                              xn * xd.pow(2) * e2.a4 + xd.pow(3) * e2.a6;
    const UniPoly lhs = lhs_inner * yd.pow(2);
    const UniPoly rhs = yn.pow(2) * e1.rhs(xn.var()) * xd.pow(3);
    rep.identity_holds = (lhs == rhs);
    rep.degree_matches = (xn.degree() == phi.degree()) &&
                         (xd.degree() == phi.degree() - 1);
    if (!rep.identity_holds)
        rep.detail = "pullback identity fails";
    else if (!rep.degree_matches)
        rep.detail = "degree shape mismatch";
    else
        rep.detail = "isogeny of degree " + std::to_string(phi.degree());
    return rep;
}

WeierstrassModel::WeierstrassModel(RatFunc a, RatFunc b)
    : a_(std::move(a)), b_(std::move(b)) {
    const RatFunc four_a3 = a_ * a_ * a_ * RatFunc::constant(a_.var(), Rational(4));
    const RatFunc disc = four_a3 + b_ * b_ * RatFunc::constant(a_.var(), Rational(27));
    if (disc.is_zero())
        throw SingularInput("Weierstrass model with vanishing discriminant");
}

const RatFunc& ECPoint::x() const {
    if (inf_) throw InternalError("coordinates of the point at infinity");
    return x_;
}

const RatFunc& ECPoint::y() const {
    if (inf_) throw InternalError("coordinates of the point at infinity");
    return y_;
}

std::string ECPoint::str() const {
    if (inf_) return "infinity";
    return "(" + x_.str() + ", " + y_.str() + ")";
}

bool on_curve(const WeierstrassModel& m, const ECPoint& p) {
    if (p.is_infinity()) return true;
    return p.y() * p.y() == m.rhs(p.x());
}

ECPoint ec_add(const WeierstrassModel& m, const ECPoint& p, const ECPoint& q) {
    if (!on_curve(m, p) || !on_curve(m, q))
        throw PointNotOnCurve("group law operand not on the model");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;

    RatFunc lambda(m.var());
    if (p.x() == q.x()) {
        if (p.y() == -q.y()) return ECPoint::infinity(m.var());
        // Tangent slope; p.y() == q.y() != 0 here.
        const RatFunc three(UniPoly::constant(m.var(), Rational(3)));
        const RatFunc two(UniPoly::constant(m.var(), Rational(2)));
        lambda = (three * p.x() * p.x() + m.a()) / (two * p.y());
    } else {
        lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    const RatFunc x3 = lambda * lambda - p.x() - q.x();
    const RatFunc y3 = lambda * (p.x() - x3) - p.y();
    return ECPoint(x3, y3);
}

ECPoint ec_neg(const WeierstrassModel& m, const ECPoint& p) {
    if (!on_curve(m, p)) throw PointNotOnCurve("negation operand not on the model");
    if (p.is_infinity()) return p;
    return ECPoint(p.x(), -p.y());
}

ECPoint ec_sub(const WeierstrassModel& m, const ECPoint& p, const ECPoint& q) {
    return ec_add(m, p, ec_neg(m, q));
}

}  // namespace inose
