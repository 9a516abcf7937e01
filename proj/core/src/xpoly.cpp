// SPDX-License-Identifier: Apache-2.0
#include "inose/xpoly.hpp"

#include <sstream>

namespace inose {

namespace {
const RatFunc kZeroByVar[5] = {RatFunc(Var::u), RatFunc(Var::s), RatFunc(Var::x1),
                               RatFunc(Var::x2), RatFunc(Var::t)};
}  // namespace

XPoly::XPoly(Var coeff_var, std::vector<RatFunc> ascending)
    : cvar_(coeff_var), c_(std::move(ascending)) {
    trim();
}

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::constant(Var coeff_var, RatFunc c) {
    XPoly p(coeff_var);
    if (!c.is_zero()) p.c_ = {std::move(c)};
    return p;
}

XPoly XPoly::variable(Var coeff_var) {
    return monomial(coeff_var, RatFunc::constant(coeff_var, Rational(1)), 1);
}

XPoly XPoly::monomial(Var coeff_var, RatFunc c, std::size_t deg) {
    XPoly p(coeff_var);
    if (!c.is_zero()) {
        p.c_.assign(deg + 1, RatFunc(coeff_var));
        p.c_[deg] = std::move(c);
    }
    return p;
}

XPoly XPoly::lift(const UniPoly& p, Var coeff_var) {
    std::vector<RatFunc> c;
    c.reserve(p.term_count());
    for (int i = 0; i <= p.degree(); ++i)
        c.push_back(RatFunc::constant(coeff_var, p.coeff(static_cast<std::size_t>(i))));
    return XPoly(coeff_var, std::move(c));
}

const RatFunc& XPoly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return kZeroByVar[static_cast<unsigned>(cvar_)];
}

const RatFunc& XPoly::leading() const { return coeff(c_.size() - 1); }

XPoly XPoly::operator-() const {
    XPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), RatFunc(cvar_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), RatFunc(cvar_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly(a.cvar_);
    std::vector<RatFunc> r(a.c_.size() + b.c_.size() - 1, RatFunc(a.cvar_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return XPoly(a.cvar_, std::move(r));
}

XPoly operator*(const XPoly& a, const RatFunc& c) {
    if (c.is_zero()) return XPoly(a.cvar_);
    XPoly r(a);
    for (auto& x : r.c_) x *= c;
    return r;
}

std::pair<XPoly, XPoly> XPoly::divrem(const XPoly& f, const XPoly& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (f.degree() < g.degree()) return {XPoly(f.cvar_), f};
    std::vector<RatFunc> rem(f.c_);
    std::vector<RatFunc> quo(f.c_.size() - g.c_.size() + 1, RatFunc(f.cvar_));
    const RatFunc lg_inv = g.leading().inverse();
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
        RatFunc c = rem[k + g.c_.size() - 1] * lg_inv;
        if (c.is_zero()) continue;
        quo[k] = c;
        for (std::size_t j = 0; j < g.c_.size(); ++j) rem[k + j] -= c * g.c_[j];
    }
    return {XPoly(f.cvar_, std::move(quo)), XPoly(f.cvar_, std::move(rem))};
}

XPoly XPoly::exact_div(const XPoly& f, const XPoly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw InternalError("x-polynomial division expected exact");
    return q;
}

XPoly XPoly::gcd(const XPoly& f, const XPoly& g) {
    XPoly a = f, b = g;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // Keep remainders primitive to tame coefficient growth.
        XPoly r = divrem(a, b).second.primitive();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) throw InternalError("gcd(0, 0)");
    return a.monic();
}

XPoly XPoly::derivative() const {
    if (c_.size() <= 1) return XPoly(cvar_);
    std::vector<RatFunc> c;
    c.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c.push_back(c_[i] * RatFunc::constant(cvar_, Rational(static_cast<long>(i))));
    return XPoly(cvar_, std::move(c));
}

RatFunc XPoly::eval(const RatFunc& x) const {
    RatFunc acc(cvar_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

XPoly XPoly::pow(unsigned e) const {
    XPoly base(*this);
    XPoly acc = XPoly::constant(cvar_, RatFunc::constant(cvar_, Rational(1)));
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

XPoly XPoly::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return *this * leading().inverse();
}

XPoly XPoly::coeff_reflected() const {
    XPoly r(*this);
    for (auto& c : r.c_) c = c.reflected();
    return r;
}

XPoly XPoly::primitive() const {
    if (is_zero()) return *this;
    // Clear coefficient denominators.
    UniPoly den_lcm = UniPoly::constant(cvar_, Rational(1));
    for (const auto& c : c_) {
        if (c.is_zero() || c.is_polynomial()) continue;
        const UniPoly g = UniPoly::gcd(den_lcm, c.den());
        den_lcm = UniPoly::exact_div(den_lcm * c.den(), g);
    }
    std::vector<UniPoly> nums;
    nums.reserve(c_.size());
    for (const auto& c : c_) {
        RatFunc scaled = c * RatFunc(den_lcm);
        if (!scaled.is_polynomial())
            throw InternalError("denominator clearing failed");
        nums.push_back(scaled.num());
    }
    // Joint polynomial gcd and rational content.
    UniPoly g(cvar_);
    for (const auto& n : nums) {
        if (n.is_zero()) continue;
        g = g.is_zero() ? n : UniPoly::gcd_primitive(g, n);
        if (g.degree() == 0) break;
    }
    Rational content(0);
    Integer num_gcd(0), den_lcm_q(1);
    for (auto& n : nums) {
        if (n.is_zero()) continue;
        if (g.degree() > 0) n = UniPoly::exact_div(n, g);
        const Rational c = n.content();
        num_gcd = gcd(num_gcd, c.num());
        den_lcm_q = lcm(den_lcm_q, c.den());
    }
    const Rational scale(den_lcm_q, num_gcd);
    std::vector<RatFunc> out;
    out.reserve(nums.size());
    for (auto& n : nums) out.emplace_back(n * scale);
    XPoly r(cvar_, std::move(out));
    // Sign convention: leading coefficient has positive leading rational.
    if (!r.is_zero() && r.leading().num().leading().sign() < 0)
        r = -r;
    return r;
}

bool XPoly::proportional(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    const RatFunc lambda = a.leading() / b.leading();
    return a == b * lambda;
}

std::string XPoly::str(const char* aux_name) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const RatFunc& c = coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (i > 0) {
            os << "*" << aux_name;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace inose
