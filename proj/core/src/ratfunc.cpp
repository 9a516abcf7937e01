// SPDX-License-Identifier: Apache-2.0
#include "inose/ratfunc.hpp"

namespace inose {

RatFunc::RatFunc(UniPoly numerator, UniPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::constant(num_.var(), Rational(1));
        return;
    }
    if (den_.is_constant()) {
        if (!den_.leading().is_one()) {
            num_ = num_ * den_.leading().inverse();
            den_ = UniPoly::constant(num_.var(), Rational(1));
        }
        return;
    }

    // Reduce primitive integer parts, then restore the scalar and make the
    // denominator monic.
    const Rational cn = num_.content();
    const Rational cd = den_.content();
    UniPoly n = num_ * cn.inverse();
    UniPoly d = den_ * cd.inverse();
    const UniPoly g = UniPoly::gcd_primitive(n, d);
    if (g.degree() > 0) {
        n = UniPoly::exact_div(n, g);
        d = UniPoly::exact_div(d, g);
    }
    const Rational scale = cn / (cd * d.leading());
    num_ = n * scale;
    den_ = d.monic();
}

Rational RatFunc::as_rational() const {
    if (!is_constant()) throw InternalError("not a constant rational function");
    return num_.constant_term();
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    RatFunc r(var());
    const Rational lead = num_.leading();
    r.num_ = den_ * lead.inverse();
    r.den_ = num_ * lead.inverse();
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFunc r(a.var());
    if (a.den_ == b.den_) {
        // Common factor of the sum can only come from the shared denominator.
        return RatFunc(a.num_ + b.num_, a.den_);
    }
    const UniPoly g = UniPoly::gcd(a.den_, b.den_);
    if (g.degree() == 0) {
        // Coprime denominators: the result is already reduced.
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        const Rational lead = r.den_.leading();
        if (!lead.is_one()) {
            r.num_ = r.num_ * lead.inverse();
            r.den_ = r.den_.monic();
        }
        return r;
    }
    const UniPoly da = UniPoly::exact_div(a.den_, g);
    const UniPoly db = UniPoly::exact_div(b.den_, g);
    UniPoly num = a.num_ * db + b.num_ * da;
    // Any surviving common factor divides g.
    const UniPoly h = UniPoly::gcd(num, g);
    UniPoly den = a.den_ * db;
    if (h.degree() > 0) {
        num = UniPoly::exact_div(num, h);
        den = UniPoly::exact_div(den, h);
    }
    const Rational lead = den.leading();
    r.num_ = num * lead.inverse();
    r.den_ = den.monic();
    return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.var());
    RatFunc r(a.var());
    if (a.den_.is_one() && b.den_.is_one()) {
        r.num_ = a.num_ * b.num_;
        return r;
    }
    const UniPoly g1 = UniPoly::gcd(a.num_, b.den_);
    const UniPoly g2 = UniPoly::gcd(b.num_, a.den_);
    const UniPoly an = g1.degree() > 0 ? UniPoly::exact_div(a.num_, g1) : a.num_;
    const UniPoly bd = g1.degree() > 0 ? UniPoly::exact_div(b.den_, g1) : b.den_;
    const UniPoly bn = g2.degree() > 0 ? UniPoly::exact_div(b.num_, g2) : b.num_;
    const UniPoly ad = g2.degree() > 0 ? UniPoly::exact_div(a.den_, g2) : a.den_;
    UniPoly num = an * bn;
    UniPoly den = ad * bd;
    const Rational lead = den.leading();
    r.num_ = num * lead.inverse();
    r.den_ = den.monic();
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return a * b.inverse();
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc::constant(var(), Rational(1));
    const RatFunc base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    // num and den are coprime, so powers need no re-reduction.
    RatFunc r(var());
    r.num_ = base.num_.pow(static_cast<unsigned>(k));
    r.den_ = base.den_.pow(static_cast<unsigned>(k));
    return r;
}

Rational RatFunc::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes at evaluation point");
    return num_.eval(x) / d;
}

RatFunc RatFunc::reflected() const {
    return RatFunc(num_.reflected(), den_.reflected());
}

RatFunc RatFunc::substituted(const RatFunc& value) const {
    auto horner = [&value](const UniPoly& p) {
        RatFunc acc = RatFunc::constant(value.var(), Rational(0));
        for (int i = p.degree(); i >= 0; --i)
            acc = acc * value + RatFunc::constant(value.var(), p.coeff(i));
        return acc;
    };
    const RatFunc n = horner(num_);
    const RatFunc d = horner(den_);
    if (d.is_zero()) throw DivisionByZero("substitution denominator vanishes");
    return n / d;
}

RatFunc RatFunc::descended(Var newvar, unsigned k) const {
    RatFunc r(newvar);
    r.num_ = num_.descend_power(newvar, k);
    r.den_ = den_.descend_power(newvar, k);
    return r;
}

RatFunc descend_to_s(const RatFunc& f) { return f.descended(Var::s, 6); }

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace inose
