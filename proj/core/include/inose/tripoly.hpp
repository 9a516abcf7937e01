// SPDX-License-Identifier: Apache-2.0
#ifndef INOSE_TRIPOLY_HPP
#define INOSE_TRIPOLY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "inose/xpoly.hpp"

namespace inose {

class ProjPoint;

/// Homogeneous polynomial over Q(u) in the projective coordinates
/// (x1 : x2 : z). Only nonzero coefficients are stored; every exponent
/// triple sums to the fixed total degree.
class TriPoly {
public:
    using Exponents = std::array<int, 3>;

    explicit TriPoly(int degree, Var coeff_var = Var::u);

    int degree() const { return degree_; }
    Var coeff_var() const { return cvar_; }
    bool is_zero() const { return terms_.empty(); }

    const RatFunc& coeff(int i, int j, int k) const;
    void set_coeff(int i, int j, int k, RatFunc c);
    const std::map<Exponents, RatFunc>& terms() const { return terms_; }

    TriPoly operator-() const;
    TriPoly& operator+=(const TriPoly& o);
    TriPoly& operator-=(const TriPoly& o);
    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(const TriPoly& a, const RatFunc& c);

    friend bool operator==(const TriPoly& a, const TriPoly& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    RatFunc evaluate(const ProjPoint& p) const;
    RatFunc evaluate(const RatFunc& X1, const RatFunc& X2, const RatFunc& Z) const;

    /// Partial derivative along axis 0 (x1), 1 (x2) or 2 (z).
    TriPoly partial(int axis) const;

    /// Coefficients of powers of x2 after setting z = 1; index = x2-exponent,
    /// entries are polynomials in x1 over Q(u).
    std::vector<XPoly> x2_levels() const;

    /// Substitutes x1 = value and z = 1, leaving a polynomial in x2.
    XPoly at_x1(const RatFunc& value) const;

    /// u -> -u on every coefficient.
    TriPoly coeff_reflected() const;

    TriPoly specialized(const Rational& u0) const;

    /// True when a = lambda * b for some nonzero lambda in Q(u).
    static bool proportional(const TriPoly& a, const TriPoly& b);

    std::string str() const;

private:
    int degree_;
    Var cvar_;
    std::map<Exponents, RatFunc> terms_;
};

/// Point of P^2 over Q(u) in canonical form: coprime polynomial coordinates
/// of joint integer content 1 whose first nonzero coordinate has a positive
/// leading coefficient. Equality is projective.
class ProjPoint {
public:
    ProjPoint(UniPoly X1, UniPoly X2, UniPoly Z);

    static ProjPoint from_ratfunc(const RatFunc& X1, const RatFunc& X2,
                                  const RatFunc& Z);

    const UniPoly& x1() const { return c_[0]; }
    const UniPoly& x2() const { return c_[1]; }
    const UniPoly& z() const { return c_[2]; }
    const UniPoly& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
    Var var() const { return c_[0].var(); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b);
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

    ProjPoint reflected() const;
    ProjPoint specialized(const Rational& u0) const;

    std::string str() const;

private:
    void canonicalize();

    std::array<UniPoly, 3> c_;
};

struct ResultantX2 {
    XPoly res;       // in x1 over Q(u)
    int deficiency;  // deg f * deg g minus the degree of res
};

/// Resultant of f(x1, x2, 1) and g(x1, x2, 1) with respect to x2 via the
/// Sylvester determinant (fraction-free elimination). The degree drop below
/// deg f * deg g counts intersection points on the line z = 0. Requires at
/// least one curve to miss the projection center (0 : 1 : 0).
ResultantX2 resultant_x2(const TriPoly& f, const TriPoly& g);

/// Residual intersection of the tangent line at a smooth point P of a cubic:
/// the tangent meets the curve doubly at P; returns the remaining point
/// (P itself at an inflection).
ProjPoint tangent_third_point(const TriPoly& cubic, const ProjPoint& P);

}  // namespace inose

#endif
