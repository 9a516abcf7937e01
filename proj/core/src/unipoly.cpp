// SPDX-License-Identifier: Apache-2.0
#include "inose/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace inose {

namespace {

const Rational kZero{};

// Integer polynomial helpers; vectors ascending, trimmed.
using IntPoly = std::vector<Integer>;

void ip_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int ip_deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ip_trim(r);
    return r;
}

Integer ip_content(const IntPoly& p) {
    Integer g(0);
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

void ip_divexact_scalar(IntPoly& p, const Integer& d) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Primitive part with the sign of the leading coefficient preserved.
IntPoly ip_primitive(IntPoly p) {
    if (p.empty()) return p;
    Integer g = ip_content(p);
    if (g != 1) ip_divexact_scalar(p, g);
    return p;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly ip_prem(IntPoly a, const IntPoly& b) {
    const Integer& lb = b.back();
    int e = ip_deg(a) - ip_deg(b) + 1;
    while (!a.empty() && a.size() >= b.size()) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        ip_trim(a);
        --e;
    }
    if (e > 0) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : a) c *= f;
    }
    return a;
}

// Subresultant PRS over Z; inputs primitive and nonzero, output primitive
// with positive leading coefficient.
IntPoly ip_gcd_subresultant(IntPoly a, IntPoly b) {
    if (ip_deg(a) < ip_deg(b)) std::swap(a, b);
    Integer g(1), h(1);
    while (true) {
        if (b.empty()) break;
        if (ip_deg(b) == 0) {
            a = IntPoly{Integer(1)};
            break;
        }
        const int d = ip_deg(a) - ip_deg(b);
        IntPoly r = ip_prem(a, b);
        a = std::move(b);
        if (!r.empty()) {
            Integer divisor = g;
            if (d > 0) {
                Integer hp;
                mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(d));
                divisor *= hp;
            }
            ip_divexact_scalar(r, divisor);
        }
        b = std::move(r);
        g = a.back();
        if (d >= 1) {
            Integer gp;
            mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(d));
            if (d == 1) {
                h = gp;
            } else {
                Integer hp;
                mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(d - 1));
                mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
            }
        }
    }
    IntPoly res = ip_primitive(std::move(a));
    if (!res.empty() && res.back() < 0)
        for (auto& c : res) c = -c;
    return res;
}

// Exact division in Z[x]; g primitive. Quotient is integral by Gauss.
IntPoly ip_divexact(IntPoly f, const IntPoly& g) {
    if (f.empty()) return {};
    IntPoly q(f.size() - g.size() + 1, Integer(0));
    const Integer& lg = g.back();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        Integer top = f[k + g.size() - 1];
        if (top == 0) continue;
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lg.get_mpz_t());
        q[k] = c;
        for (std::size_t j = 0; j < g.size(); ++j) f[k + j] -= c * g[j];
    }
    return q;
}

// f = (1/scale) * out with integral out, scale > 0 (lcm of denominators).
Integer to_scaled_integers(std::span<const Rational> c, IntPoly& out) {
    Integer scale(1);
    for (const auto& x : c) scale = lcm(scale, x.den());
    out.clear();
    out.reserve(c.size());
    for (const auto& x : c) out.push_back(x.num() * (scale / x.den()));
    return scale;
}

}  // namespace

const char* var_name(Var v) {
    switch (v) {
        case Var::u: return "u";
        case Var::s: return "s";
        case Var::x1: return "x1";
        case Var::x2: return "x2";
        case Var::t: return "t";
    }
    return "?";
}

UniPoly::UniPoly(Var v, std::vector<Rational> ascending)
    : var_(v), c_(std::move(ascending)) {
    trim();
}

UniPoly UniPoly::constant(Var v, Rational c) {
    UniPoly p(v);
    if (!c.is_zero()) p.c_ = {std::move(c)};
    return p;
}

UniPoly UniPoly::variable(Var v) { return monomial(v, Rational(1), 1); }

UniPoly UniPoly::monomial(Var v, Rational c, std::size_t deg) {
    UniPoly p(v);
    if (!c.is_zero()) {
        p.c_.assign(deg + 1, Rational(0));
        p.c_[deg] = std::move(c);
    }
    return p;
}

UniPoly UniPoly::from_integers(Var v, std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    c.reserve(ascending.size());
    for (long x : ascending) c.emplace_back(x);
    return UniPoly(v, std::move(c));
}

UniPoly UniPoly::from_strings(Var v, const std::vector<std::string>& ascending) {
    std::vector<Rational> c;
    c.reserve(ascending.size());
    for (const auto& s : ascending) c.push_back(Rational::from_string(s));
    return UniPoly(v, std::move(c));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void UniPoly::check_var(const UniPoly& o) const {
    if (var_ != o.var_)
        throw IndeterminateMismatch(std::string(var_name(var_)) + " vs " +
                                    var_name(o.var_));
}

const Rational& UniPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    check_var(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    check_var(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check_var(b);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
    IntPoly fa, fb;
    const Integer da = to_scaled_integers(a.c_, fa);
    const Integer db = to_scaled_integers(b.c_, fb);
    const IntPoly prod = ip_mul(fa, fb);
    const Integer den = da * db;
    std::vector<Rational> c;
    c.reserve(prod.size());
    for (const auto& x : prod) c.emplace_back(x, den);
    return UniPoly(a.var_, std::move(c));
}

UniPoly operator*(const UniPoly& a, const Rational& c) {
    if (c.is_zero()) return UniPoly(a.var_);
    UniPoly r(a);
    for (auto& x : r.c_) x *= c;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& f, const UniPoly& g) {
    f.check_var(g);
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (f.degree() < g.degree()) return {UniPoly(f.var_), f};

    std::vector<Rational> rem(f.c_);
    std::vector<Rational> quo(f.c_.size() - g.c_.size() + 1, Rational(0));
    const Rational& lg = g.leading();
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
        Rational c = rem[k + g.c_.size() - 1] / lg;
        if (c.is_zero()) continue;
        quo[k] = c;
        for (std::size_t j = 0; j < g.c_.size(); ++j) rem[k + j] -= c * g.c_[j];
    }
    return {UniPoly(f.var_, std::move(quo)), UniPoly(f.var_, std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& f, const UniPoly& g) {
    f.check_var(g);
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (f.is_zero()) return f;
    if (g.is_constant()) return f * g.leading().inverse();
    if (f.degree() < g.degree())
        throw InternalError("division expected to be exact");

    // Scale both sides to primitive integer polynomials; the quotient of an
    // exact division of primitives is again a primitive integer polynomial,
    // so synthetic division stays in Z throughout.
    const Rational cf = f.content();
    const Rational cg = g.content();
    IntPoly fi, gi;
    to_scaled_integers((f * cf.inverse()).c_, fi);
    to_scaled_integers((g * cg.inverse()).c_, gi);
    IntPoly qi = ip_divexact(fi, gi);
    // Residue checks at x = 1 and x = 2 guard against inexact input.
    auto at = [](const IntPoly& p, long x) {
        Integer acc(0);
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    if (at(fi, 1) != at(gi, 1) * at(qi, 1) || at(fi, 2) != at(gi, 2) * at(qi, 2))
        throw InternalError("division expected to be exact");
    const Rational scale = cf / cg;
    std::vector<Rational> c;
    c.reserve(qi.size());
    for (const auto& x : qi) c.push_back(Rational(x) * scale);
    return UniPoly(f.var_, std::move(c));
}

UniPoly UniPoly::gcd_primitive(const UniPoly& f, const UniPoly& g) {
    f.check_var(g);
    if (f.is_zero() && g.is_zero()) throw InternalError("gcd(0, 0)");
    if (f.is_zero()) {
        UniPoly r = g.primitive();
        if (r.leading().sign() < 0) r = -r;
        return r;
    }
    if (g.is_zero()) return gcd_primitive(g, f);
    IntPoly fa, fb;
    to_scaled_integers(f.c_, fa);
    to_scaled_integers(g.c_, fb);
    const IntPoly res = ip_gcd_subresultant(ip_primitive(std::move(fa)),
                                            ip_primitive(std::move(fb)));
    std::vector<Rational> c;
    c.reserve(res.size());
    for (const auto& x : res) c.emplace_back(x);
    return UniPoly(f.var_, std::move(c));
}

UniPoly UniPoly::gcd(const UniPoly& f, const UniPoly& g) {
    return gcd_primitive(f, g).monic();
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(var_);
    std::vector<Rational> c;
    c.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UniPoly(var_, std::move(c));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly base(*this);
    UniPoly acc = UniPoly::constant(var_, Rational(1));
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    if (leading().is_one()) return *this;
    return *this * leading().inverse();
}

Rational UniPoly::content() const {
    if (is_zero()) return Rational(0);
    IntPoly f;
    const Integer scale = to_scaled_integers(c_, f);
    return Rational(ip_content(f), scale);
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    return *this * content().inverse();
}

bool UniPoly::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& c) { return c.is_integer(); });
}

UniPoly UniPoly::reflected() const {
    UniPoly r(*this);
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

UniPoly UniPoly::descend_power(Var newvar, unsigned k) const {
    if (k == 0) throw InternalError("descend_power with k = 0");
    std::vector<Rational> c(is_zero() ? 0 : c_.size() / k + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (i % k != 0)
            throw NotInSubfield("exponent " + std::to_string(i) +
                                " not divisible by " + std::to_string(k));
        c[i / k] = c_[i];
    }
    return UniPoly(newvar, std::move(c));
}

UniPoly UniPoly::inflate_power(Var newvar, unsigned k) const {
    if (k == 0) throw InternalError("inflate_power with k = 0");
    std::vector<Rational> c(is_zero() ? 0 : (c_.size() - 1) * k + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
    return UniPoly(newvar, std::move(c));
}

UniPoly UniPoly::retagged(Var v) const {
    UniPoly r(*this);
    r.var_ = v;
    return r;
}

int UniPoly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw InternalError("squarefree decomposition of zero");
    std::vector<UniPoly> parts;
    if (f.degree() == 0) return parts;

    const UniPoly fm = f.monic();
    const UniPoly df = fm.derivative();
    UniPoly a = UniPoly::gcd(fm, df);
    UniPoly b = UniPoly::exact_div(fm, a);
    UniPoly c = UniPoly::exact_div(df, a) - b.derivative();
    while (b.degree() > 0) {
        parts.push_back(UniPoly::gcd(b, c));
        b = UniPoly::exact_div(b, parts.back());
        c = UniPoly::exact_div(c, parts.back()) - b.derivative();
    }
    return parts;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = a.is_one() && i != 0;
        if (!unit) os << a.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var_name(var_);
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace inose
