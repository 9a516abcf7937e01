// SPDX-License-Identifier: Apache-2.0
#ifndef INOSE_UNIPOLY_HPP
#define INOSE_UNIPOLY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "inose/rational.hpp"

namespace inose {

enum class Var : unsigned char { u, s, x1, x2, t };

const char* var_name(Var v);

class UniPoly;

/// Yun decomposition of a nonzero polynomial: returns monic, squarefree,
/// pairwise coprime g_1, g_2, ... with f = lc(f) * prod_i g_i^i.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& f);

/// Dense univariate polynomial over Q, tagged with its indeterminate.
/// Coefficients are stored in ascending order; the trailing coefficient
/// is nonzero unless the polynomial is zero (empty list).
class UniPoly {
public:
    explicit UniPoly(Var v = Var::u) : var_(v) {}
    UniPoly(Var v, std::vector<Rational> ascending);

    static UniPoly constant(Var v, Rational c);
    static UniPoly variable(Var v);
    static UniPoly monomial(Var v, Rational c, std::size_t deg);
    static UniPoly from_integers(Var v, std::initializer_list<long> ascending);
    static UniPoly from_strings(Var v, const std::vector<std::string>& ascending);

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t term_count() const { return c_.size(); }

    // Zero beyond the degree.
    const Rational& coeff(std::size_t i) const;
    const Rational& leading() const;
    Rational constant_term() const { return c_.empty() ? Rational(0) : c_[0]; }
    std::span<const Rational> coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const Rational& c);
    friend UniPoly operator*(const Rational& c, const UniPoly& a) { return a * c; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Quotient and remainder with f = q*g + r, deg r < deg g.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g);

    /// Quotient of an exact division; throws InternalError on nonzero remainder.
    static UniPoly exact_div(const UniPoly& f, const UniPoly& g);

    /// Monic greatest common divisor (subresultant PRS over Z under the hood).
    static UniPoly gcd(const UniPoly& f, const UniPoly& g);

    /// Primitive integer gcd with positive leading coefficient.
    static UniPoly gcd_primitive(const UniPoly& f, const UniPoly& g);

    UniPoly derivative() const;
    Rational eval(const Rational& x) const;
    UniPoly pow(unsigned e) const;
    UniPoly monic() const;

    /// Positive rational c with f = c * (primitive integer polynomial);
    /// zero polynomial has content 0.
    Rational content() const;
    UniPoly primitive() const;
    bool has_integer_coeffs() const;

    /// x -> -x.
    UniPoly reflected() const;

    /// Requires every exponent with nonzero coefficient divisible by k;
    /// returns the polynomial with x^k replaced by the new indeterminate.
    UniPoly descend_power(Var newvar, unsigned k) const;

    /// Replaces x by x^k in the new indeterminate (inverse of descend_power).
    UniPoly inflate_power(Var newvar, unsigned k) const;

    UniPoly retagged(Var v) const;

    /// Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;

    /// Descending-power display, e.g. "3*s^2 - s + 4/5".
    std::string str() const;

private:
    void trim();
    void check_var(const UniPoly& o) const;

    Var var_;
    std::vector<Rational> c_;
};

}  // namespace inose

#endif
