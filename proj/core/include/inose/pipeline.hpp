// SPDX-License-Identifier: Apache-2.0
#ifndef INOSE_PIPELINE_HPP
#define INOSE_PIPELINE_HPP

#include <optional>
#include <vector>

#include "inose/elliptic.hpp"
#include "inose/linsolve.hpp"
#include "inose/tripoly.hpp"

namespace inose {

enum class Sign { plus, minus };
const char* sign_name(Sign s);

/// Constant block of the split fibration models attached to a curve pair:
/// Y^2 = X^3 - (A/3) X + (delta1 v^n + B + delta2 / v^n) / 64.
struct InoseData {
    Rational A, B, delta1, delta2;
};

InoseData inose_coefficients(const EllipticCurve& e1, const EllipticCurve& e2);

/// The n-th member of the family over Q(v).
WeierstrassModel inose_model(const InoseData& data, unsigned n, Var v);

/// The plane cubic over Q(u) carrying the degree-6 member, with rational
/// point (1 : u^2 : 0) taken as the group origin.
TriPoly inose_cubic(const EllipticCurve& e1, const EllipticCurve& e2);
ProjPoint cubic_origin();

/// The two halves of the pullback divisor: p± is the numerator of
/// phi_y(x1) -/+ u^3, of degree r = (3d-3)/2 for odd d and (3d-2)/2 for
/// even d, squarefree and coprime to E1's cubic.
struct SplitPair {
    XPoly plus{Var::u}, minus{Var::u};
    int r = 0;

    const XPoly& operator[](Sign s) const { return s == Sign::plus ? plus : minus; }
};

SplitPair split_divisor(const EllipticCurve& e1, const EllipticCurve& e2,
                        const RationalMap& phi);

/// Coordinate-change tables between the plane cubic and the degree-6 model;
/// the c's are linear and the d's quadratic in (x1, x2, z).
struct TransformTables {
    TriPoly c6{1}, c4{1}, c2{1}, c0{1};
    TriPoly d10{2}, d6{2}, d4{2}, d0{2};

    static TransformTables build(const EllipticCurve& e1, const EllipticCurve& e2);
};

/// Maps a point of the cubic onto the degree-6 Weierstrass model; the origin
/// goes to infinity. The u-value parameter supports rational specializations
/// of the fibration parameter alongside the generic RatFunc::variable(u).
ECPoint psi_transform(const EllipticCurve& e1, const EllipticCurve& e2,
                      const ProjPoint& p);
ECPoint psi_transform_at(const EllipticCurve& e1, const EllipticCurve& e2,
                         const ProjPoint& p, const RatFunc& u_value);

/// Degree of the fitted curves: (d+1)/2 for odd d, d/2 for even d.
int fit_degree(int d);

/// Fixed monomial order for degree-l forms: exponent of x1 descending, then
/// exponent of x2 descending.
std::vector<TriPoly::Exponents> form_monomials(int l);

/// Kernel basis of the interpolation system: forms of degree fit_degree(d)
/// whose restriction to x2 = phi_x(x1) is divisible by the chosen half of
/// the split divisor and (for odd d) which vanish at the origin and at the
/// tangent residual point.
std::vector<TriPoly> fit_family(const TriPoly& cubic, const RationalMap& phi,
                                const SplitPair& pair, Sign sign,
                                const ProjPoint& origin, const ProjPoint& obar,
                                int d);

/// Deterministic representative of the family, never a multiple of the cubic.
TriPoly fit_curve(const TriPoly& cubic, const RationalMap& phi,
                  const SplitPair& pair, Sign sign, const ProjPoint& origin,
                  const ProjPoint& obar, int d);

/// Residual intersection point of the cubic with a fitted curve after the
/// known factors are divided out of the x2-resultant.
ProjPoint ninth_point(const TriPoly& cubic, const TriPoly& q,
                      const SplitPair& pair, Sign sign, const ProjPoint& origin,
                      const ProjPoint& obar, int d);

/// Section of the base model over Q(s) together with its height data.
struct SectionF1 {
    bool infinity = false;
    RatFunc X{Var::s}, Y{Var::s};
    Rational height;
    Rational contact;  // intersection number with the zero section
    int degree = 0;
};

/// Intersection number with the zero section, read off the pole structure of
/// the X-coordinate: ord_v(den X)/2 at finite places away from 0, with the
/// corrections max(0, (ord - 2)/2) at v = 0 and at infinity coming from the
/// local minimal models there.
Rational intersection_with_zero_section(const RatFunc& x_coord);

SectionF1 assemble_section(const ECPoint& p_plus, const ECPoint& p_minus,
                           const InoseData& data, int degree);

/// 4 + 2 * (contact with the zero section); zero for the infinity section.
Rational section_height(const SectionF1& s, const InoseData& data);

struct PipelineTrace {
    InoseData data;
    std::optional<TriPoly> cubic;
    std::optional<ProjPoint> origin, obar;
    std::optional<SplitPair> split;
    std::optional<TriPoly> fit_plus, fit_minus;
    std::optional<ProjPoint> q_plus, q_minus;
    std::optional<ECPoint> p_plus, p_minus, difference;
    std::optional<SectionF1> section;
};

/// End-to-end run; the resulting height must equal twice the isogeny degree.
SectionF1 compute_section(const EllipticCurve& e1, const EllipticCurve& e2,
                          const RationalMap& phi, PipelineTrace* trace = nullptr);

}  // namespace inose

#endif
