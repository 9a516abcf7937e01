// SPDX-License-Identifier: Apache-2.0
#ifndef INOSE_RATFUNC_HPP
#define INOSE_RATFUNC_HPP

#include <string>
#include <utility>

#include "inose/unipoly.hpp"

namespace inose {

/// Element of the rational function field Q(x) in canonical form:
/// gcd(num, den) = 1 and den monic, so equality is structural.
class RatFunc {
public:
    explicit RatFunc(Var v = Var::u)
        : num_(v), den_(UniPoly::constant(v, Rational(1))) {}

    RatFunc(UniPoly numerator)  // NOLINT(google-explicit-constructor)
        : num_(std::move(numerator)),
          den_(UniPoly::constant(num_.var(), Rational(1))) {}

    RatFunc(UniPoly numerator, UniPoly denominator);

    static RatFunc constant(Var v, Rational c) {
        return RatFunc(UniPoly::constant(v, std::move(c)));
    }
    static RatFunc variable(Var v) { return RatFunc(UniPoly::variable(v)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    Var var() const { return num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rational as_rational() const;

    RatFunc operator-() const;
    RatFunc inverse() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(long e) const;

    Rational eval(const Rational& x) const;

    /// x -> -x.
    RatFunc reflected() const;

    /// Composition with an arbitrary value of the indeterminate.
    RatFunc substituted(const RatFunc& value) const;

    /// Requires every exponent divisible by k after reduction; returns the
    /// element of the subfield with x^k renamed to the new indeterminate.
    RatFunc descended(Var newvar, unsigned k) const;

    std::string str() const;

private:
    void normalize();

    UniPoly num_, den_;
};

/// descend_to_s: recognize membership in Q(u^6) and rename u^6 to s.
RatFunc descend_to_s(const RatFunc& f);

}  // namespace inose

#endif
