// SPDX-License-Identifier: Apache-2.0
#ifndef INOSE_XPOLY_HPP
#define INOSE_XPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "inose/ratfunc.hpp"

namespace inose {

/// Dense polynomial in an auxiliary variable (x1 or x2) with coefficients in
/// the rational function field tagged by coeff_var. The auxiliary variable is
/// positional; the coefficient field's indeterminate is checked on mixing.
class XPoly {
public:
    explicit XPoly(Var coeff_var = Var::u) : cvar_(coeff_var) {}
    XPoly(Var coeff_var, std::vector<RatFunc> ascending);

    static XPoly constant(Var coeff_var, RatFunc c);
    static XPoly variable(Var coeff_var);
    static XPoly monomial(Var coeff_var, RatFunc c, std::size_t deg);

    /// Lifts a polynomial over Q (in any indeterminate) to constant
    /// coefficients over Q(coeff_var); the auxiliary variable takes the role
    /// of the lifted polynomial's indeterminate.
    static XPoly lift(const UniPoly& p, Var coeff_var);

    Var coeff_var() const { return cvar_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const RatFunc& coeff(std::size_t i) const;
    const RatFunc& leading() const;
    const std::vector<RatFunc>& coeffs() const { return c_; }

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const RatFunc& c);

    friend bool operator==(const XPoly& a, const XPoly& b) {
        return a.cvar_ == b.cvar_ && a.c_ == b.c_;
    }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    static std::pair<XPoly, XPoly> divrem(const XPoly& f, const XPoly& g);
    static XPoly exact_div(const XPoly& f, const XPoly& g);
    static XPoly gcd(const XPoly& f, const XPoly& g);  // monic

    XPoly derivative() const;
    RatFunc eval(const RatFunc& x) const;
    XPoly pow(unsigned e) const;
    XPoly monic() const;

    /// Applies x -> -x to every coefficient's indeterminate.
    XPoly coeff_reflected() const;

    /// Unit-normalizes over Q(u): coefficients become polynomials with joint
    /// integer content 1 and the leading coefficient's leading rational
    /// positive. The result differs from *this by a nonzero element of Q(u).
    XPoly primitive() const;

    /// True when a = lambda * b for some nonzero lambda in Q(u).
    static bool proportional(const XPoly& a, const XPoly& b);

    std::string str(const char* aux_name) const;

private:
    void trim();

    Var cvar_;
    std::vector<RatFunc> c_;
};

}  // namespace inose

#endif
