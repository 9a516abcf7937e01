// SPDX-License-Identifier: Apache-2.0
#include "inose/tripoly.hpp"

#include <sstream>

namespace inose {

namespace {
const RatFunc kZeroByVar[5] = {RatFunc(Var::u), RatFunc(Var::s), RatFunc(Var::x1),
                               RatFunc(Var::x2), RatFunc(Var::t)};
}  // namespace

TriPoly::TriPoly(int degree, Var coeff_var) : degree_(degree), cvar_(coeff_var) {
    if (degree < 0) throw InternalError("negative degree");
}

const RatFunc& TriPoly::coeff(int i, int j, int k) const {
    const auto it = terms_.find({i, j, k});
    if (it == terms_.end()) return kZeroByVar[static_cast<unsigned>(cvar_)];
    return it->second;
}

void TriPoly::set_coeff(int i, int j, int k, RatFunc c) {
    if (i < 0 || j < 0 || k < 0 || i + j + k != degree_)
        throw InternalError("exponent triple does not match degree");
    if (c.is_zero())
        terms_.erase({i, j, k});
    else
        terms_[{i, j, k}] = std::move(c);
}

TriPoly TriPoly::operator-() const {
    TriPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
    if (degree_ != o.degree_)
        throw InternalError("adding forms of different degrees");
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) { return *this += -o; }

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly r(a.degree_ + b.degree_, a.cvar_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            const TriPoly::Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_.emplace(e, ca * cb);
            else
                it->second += ca * cb;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
    return r;
}

TriPoly operator*(const TriPoly& a, const RatFunc& c) {
    TriPoly r(a.degree_, a.cvar_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : a.terms_) r.terms_.emplace(e, x * c);
    return r;
}

RatFunc TriPoly::evaluate(const ProjPoint& p) const {
    return evaluate(RatFunc(p.x1()), RatFunc(p.x2()), RatFunc(p.z()));
}

RatFunc TriPoly::evaluate(const RatFunc& X1, const RatFunc& X2,
                          const RatFunc& Z) const {
    // Precompute coordinate powers up to the degree.
    const auto powers = [this](const RatFunc& v) {
        std::vector<RatFunc> p{RatFunc::constant(cvar_, Rational(1))};
        for (int i = 1; i <= degree_; ++i) p.push_back(p.back() * v);
        return p;
    };
    const auto p1 = powers(X1), p2 = powers(X2), pz = powers(Z);
    RatFunc acc(cvar_);
    for (const auto& [e, c] : terms_)
        acc += c * p1[static_cast<std::size_t>(e[0])] *
               p2[static_cast<std::size_t>(e[1])] * pz[static_cast<std::size_t>(e[2])];
    return acc;
}

TriPoly TriPoly::partial(int axis) const {
    if (degree_ == 0) return TriPoly(0, cvar_);
    TriPoly r(degree_ - 1, cvar_);
    for (const auto& [e, c] : terms_) {
        if (e[axis] == 0) continue;
        Exponents d = e;
        --d[axis];
        r.set_coeff(d[0], d[1], d[2],
                    c * RatFunc::constant(cvar_, Rational(e[axis])));
    }
    return r;
}

std::vector<XPoly> TriPoly::x2_levels() const {
    std::vector<std::vector<RatFunc>> levels(static_cast<std::size_t>(degree_) + 1);
    for (const auto& [e, c] : terms_) {
        auto& row = levels[static_cast<std::size_t>(e[1])];
        if (row.size() <= static_cast<std::size_t>(e[0]))
            row.resize(static_cast<std::size_t>(e[0]) + 1, RatFunc(cvar_));
        row[static_cast<std::size_t>(e[0])] += c;
    }
    std::vector<XPoly> out;
    out.reserve(levels.size());
    for (auto& row : levels) out.emplace_back(cvar_, std::move(row));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

XPoly TriPoly::at_x1(const RatFunc& value) const {
    std::vector<RatFunc> c(static_cast<std::size_t>(degree_) + 1, RatFunc(cvar_));
    std::vector<RatFunc> p1{RatFunc::constant(cvar_, Rational(1))};
    for (int i = 1; i <= degree_; ++i) p1.push_back(p1.back() * value);
    for (const auto& [e, coeffv] : terms_)
        c[static_cast<std::size_t>(e[1])] += coeffv * p1[static_cast<std::size_t>(e[0])];
    return XPoly(cvar_, std::move(c));
}

TriPoly TriPoly::coeff_reflected() const {
    TriPoly r(degree_, cvar_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.reflected());
    return r;
}

TriPoly TriPoly::specialized(const Rational& u0) const {
    TriPoly r(degree_, cvar_);
    for (const auto& [e, c] : terms_) {
        const Rational v = c.eval(u0);
        if (!v.is_zero()) r.terms_.emplace(e, RatFunc::constant(cvar_, v));
    }
    return r;
}

bool TriPoly::proportional(const TriPoly& a, const TriPoly& b) {
    if (a.degree_ != b.degree_) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.terms_.size() != b.terms_.size()) return false;
    const auto& [e0, c0] = *a.terms_.begin();
    const auto it = b.terms_.find(e0);
    if (it == b.terms_.end()) return false;
    const RatFunc lambda = c0 / it->second;
    for (const auto& [e, c] : a.terms_) {
        const auto jt = b.terms_.find(e);
        if (jt == b.terms_.end() || c != jt->second * lambda) return false;
    }
    return true;
}

std::string TriPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        const char* names[3] = {"x1", "x2", "z"};
        for (int a = 0; a < 3; ++a) {
            if (e[a] == 0) continue;
            os << "*" << names[a];
            if (e[a] > 1) os << "^" << e[a];
        }
    }
    return os.str();
}

ProjPoint::ProjPoint(UniPoly X1, UniPoly X2, UniPoly Z)
    : c_{std::move(X1), std::move(X2), std::move(Z)} {
    canonicalize();
}

ProjPoint ProjPoint::from_ratfunc(const RatFunc& X1, const RatFunc& X2,
                                  const RatFunc& Z) {
    // Clear denominators with the polynomial lcm of the three.
    UniPoly l = UniPoly::constant(X1.var(), Rational(1));
    for (const RatFunc* f : {&X1, &X2, &Z}) {
        if (f->is_zero() || f->is_polynomial()) continue;
        const UniPoly g = UniPoly::gcd(l, f->den());
        l = UniPoly::exact_div(l * f->den(), g);
    }
    std::array<UniPoly, 3> c;
    int idx = 0;
    for (const RatFunc* f : {&X1, &X2, &Z}) {
        const RatFunc scaled = *f * RatFunc(l);
        if (!scaled.is_polynomial()) throw InternalError("denominator clearing failed");
        c[idx++] = scaled.num();
    }
    return ProjPoint(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

void ProjPoint::canonicalize() {
    if (c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero())
        throw InternalError("projective point with all coordinates zero");
    // Remove the common polynomial factor.
    UniPoly g(c_[0].var());
    for (const auto& x : c_) {
        if (x.is_zero()) continue;
        g = g.is_zero() ? x : UniPoly::gcd_primitive(g, x);
        if (g.degree() == 0) break;
    }
    if (g.degree() > 0)
        for (auto& x : c_) x = x.is_zero() ? x : UniPoly::exact_div(x, g);
    // Joint integer content 1.
    Integer num_gcd(0), den_lcm(1);
    for (const auto& x : c_) {
        if (x.is_zero()) continue;
        const Rational c = x.content();
        num_gcd = gcd(num_gcd, c.num());
        den_lcm = lcm(den_lcm, c.den());
    }
    const Rational scale(den_lcm, num_gcd);
    if (!scale.is_one())
        for (auto& x : c_) x = x * scale;
    // Positive leading coefficient on the first nonzero coordinate.
    for (const auto& x : c_) {
        if (x.is_zero()) continue;
        if (x.leading().sign() < 0)
            for (auto& y : c_) y = -y;
        break;
    }
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    // All 2x2 cross products must vanish.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (a.coord(i) * b.coord(j) != a.coord(j) * b.coord(i)) return false;
    return true;
}

ProjPoint ProjPoint::reflected() const {
    return ProjPoint(c_[0].reflected(), c_[1].reflected(), c_[2].reflected());
}

ProjPoint ProjPoint::specialized(const Rational& u0) const {
    const Var v = c_[0].var();
    return ProjPoint(UniPoly::constant(v, c_[0].eval(u0)),
                     UniPoly::constant(v, c_[1].eval(u0)),
                     UniPoly::constant(v, c_[2].eval(u0)));
}

std::string ProjPoint::str() const {
    return "(" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + ")";
}

namespace {

// Fraction-free determinant of a matrix of x-polynomials.
XPoly bareiss_determinant(std::vector<std::vector<XPoly>> m, Var cvar) {
    const std::size_t n = m.size();
    if (n == 0) return XPoly::constant(cvar, RatFunc::constant(cvar, Rational(1)));
    int sign = 1;
    XPoly prev = XPoly::constant(cvar, RatFunc::constant(cvar, Rational(1)));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Pivot of minimal degree keeps intermediate growth down.
        std::size_t best = n;
        for (std::size_t r = k; r < n; ++r) {
            if (m[r][k].is_zero()) continue;
            if (best == n || m[r][k].degree() < m[best][k].degree()) best = r;
        }
        if (best == n) return XPoly(cvar);  // singular
        if (best != k) {
            std::swap(m[best], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                XPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = (k == 0) ? std::move(t) : XPoly::exact_div(t, prev);
            }
            m[i][k] = XPoly(cvar);
        }
        prev = m[k][k];
    }
    XPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

ResultantX2 resultant_x2(const TriPoly& f, const TriPoly& g) {
    const Var cvar = f.coeff_var();
    std::vector<XPoly> F = f.x2_levels();
    std::vector<XPoly> G = g.x2_levels();
    if (F.empty() || G.empty()) throw InternalError("resultant of zero polynomial");
    const int m = static_cast<int>(F.size()) - 1;
    const int n = static_cast<int>(G.size()) - 1;
    // The projection center (0:1:0) corresponds to a constant top coefficient.
    const bool f_misses = m == f.degree() && F.back().degree() == 0;
    const bool g_misses = n == g.degree() && G.back().degree() == 0;
    if (!f_misses && !g_misses)
        throw InternalError("both curves meet the projection center (0:1:0)");

    XPoly det(cvar);
    if (m == 0) {
        det = F[0].pow(static_cast<unsigned>(n));
    } else if (n == 0) {
        det = G[0].pow(static_cast<unsigned>(m));
    } else {
        const std::size_t size = static_cast<std::size_t>(m + n);
        std::vector<std::vector<XPoly>> syl(size, std::vector<XPoly>(size, XPoly(cvar)));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c <= m; ++c) syl[r][r + c] = F[static_cast<std::size_t>(m - c)];
        for (int r = 0; r < m; ++r)
            for (int c = 0; c <= n; ++c)
                syl[static_cast<std::size_t>(n + r)][r + c] = G[static_cast<std::size_t>(n - c)];
        det = bareiss_determinant(std::move(syl), cvar);
    }
    if (det.is_zero())
        throw CommonComponent("resultant vanishes identically");
    return ResultantX2{det, f.degree() * g.degree() - det.degree()};
}

ProjPoint tangent_third_point(const TriPoly& cubic, const ProjPoint& P) {
    if (cubic.degree() != 3) throw InternalError("tangent construction needs a cubic");
    if (!cubic.evaluate(P).is_zero())
        throw PointNotOnCurve("tangent base point not on the curve");

    const RatFunc a = cubic.partial(0).evaluate(P);
    const RatFunc b = cubic.partial(1).evaluate(P);
    const RatFunc c = cubic.partial(2).evaluate(P);
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw SingularPoint("all partial derivatives vanish");

    const Var v = P.var();
    const RatFunc zero(v);
    const RatFunc one = RatFunc::constant(v, Rational(1));
    // Two independent points spanning the tangent line a*x1 + b*x2 + c*z = 0.
    std::array<std::array<RatFunc, 3>, 2> span;
    if (!a.is_zero()) {
        span = {{{-b / a, one, zero}, {-c / a, zero, one}}};
    } else if (!b.is_zero()) {
        span = {{{one, zero, zero}, {zero, -c / b, one}}};
    } else {
        span = {{{one, zero, zero}, {zero, one, zero}}};
    }
    const std::array<RatFunc, 3> p{RatFunc(P.x1()), RatFunc(P.x2()), RatFunc(P.z())};
    auto proportional_to_p = [&](const std::array<RatFunc, 3>& d) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (d[i] * p[j] != d[j] * p[i]) return false;
        return true;
    };
    const std::array<RatFunc, 3>& d = proportional_to_p(span[0]) ? span[1] : span[0];

    // Restricting the cubic to mu*P + lambda*D gives lambda^2 * (c2*mu + c3*lambda).
    RatFunc c2(v), c3 = cubic.evaluate(d[0], d[1], d[2]);
    for (int axis = 0; axis < 3; ++axis)
        c2 += cubic.partial(axis).evaluate(d[0], d[1], d[2]) * p[static_cast<std::size_t>(axis)];
    if (c2.is_zero() && c3.is_zero())
        throw InternalError("tangent line is contained in the cubic");
    if (c2.is_zero()) return P;  // inflection
    return ProjPoint::from_ratfunc(c3 * p[0] - c2 * d[0], c3 * p[1] - c2 * d[1],
                                   c3 * p[2] - c2 * d[2]);
}

}  // namespace inose
