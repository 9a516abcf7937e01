// SPDX-License-Identifier: Apache-2.0
#include "inose/linsolve.hpp"

namespace inose {

namespace {

// Joint normalization of a vector of polynomials: divide by the common
// polynomial factor and the rational content, fix the sign on the first
// nonzero entry.
void normalize_poly_vector(std::vector<UniPoly>& v) {
    UniPoly g(v.empty() ? Var::u : v.front().var());
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        g = g.is_zero() ? x : UniPoly::gcd_primitive(g, x);
        if (g.degree() == 0) break;
    }
    if (g.is_zero()) return;
    if (g.degree() > 0)
        for (auto& x : v) x = x.is_zero() ? x : UniPoly::exact_div(x, g);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        const Rational c = x.content();
        num_gcd = gcd(num_gcd, c.num());
        den_lcm = lcm(den_lcm, c.den());
    }
    const Rational scale(den_lcm, num_gcd);
    if (!scale.is_one())
        for (auto& x : v) x = x * scale;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        if (x.leading().sign() < 0)
            for (auto& y : v) y = -y;
        break;
    }
}

}  // namespace

std::vector<std::vector<UniPoly>> nullspace(const FFMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const Var v = m.var();

    // Clear each row to Q[u] and strip its content; row scaling by nonzero
    // elements of Q(u) does not change the kernel.
    std::vector<std::vector<UniPoly>> a(rows, std::vector<UniPoly>(cols, UniPoly(v)));
    for (std::size_t r = 0; r < rows; ++r) {
        UniPoly l = UniPoly::constant(v, Rational(1));
        for (std::size_t c = 0; c < cols; ++c) {
            const RatFunc& e = m.at(r, c);
            if (e.is_zero() || e.is_polynomial()) continue;
            const UniPoly g = UniPoly::gcd(l, e.den());
            l = UniPoly::exact_div(l * e.den(), g);
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const RatFunc scaled = m.at(r, c) * RatFunc(l);
            if (!scaled.is_polynomial())
                throw InternalError("row denominator clearing failed");
            a[r][c] = scaled.num();
        }
        normalize_poly_vector(a[r]);
    }

    // Fraction-free echelon form (Bareiss): entries stay in Q[u], every
    // division by the previous pivot is exact.
    std::vector<std::size_t> pivot_col;
    UniPoly prev = UniPoly::constant(v, Rational(1));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t best = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (a[r][col].is_zero()) continue;
            if (best == rows || a[r][col].degree() < a[best][col].degree()) best = r;
        }
        if (best == rows) continue;
        std::swap(a[best], a[rank]);
        // Sylvester's identity guarantees the division by the previous pivot
        // is exact; the update must hit every remaining row uniformly.
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                UniPoly t = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                a[r][c] = prev.is_one() ? std::move(t) : UniPoly::exact_div(t, prev);
            }
            a[r][col] = UniPoly(v);
        }
        prev = a[rank][col];
        pivot_col.push_back(col);
        ++rank;
    }

    // Free columns parameterize the kernel; back-substitute over Q(u).
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<UniPoly>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<RatFunc> x(cols, RatFunc(v));
        x[fc] = RatFunc::constant(v, Rational(1));
        for (std::size_t p = rank; p-- > 0;) {
            const std::size_t pc = pivot_col[p];
            RatFunc acc(v);
            for (std::size_t c = pc + 1; c < cols; ++c) {
                if (x[c].is_zero() || a[p][c].is_zero()) continue;
                acc += RatFunc(a[p][c]) * x[c];
            }
            x[pc] = -acc / RatFunc(a[p][pc]);
        }
        // Clear to polynomial entries of content 1.
        UniPoly l = UniPoly::constant(v, Rational(1));
        for (const auto& e : x) {
            if (e.is_zero() || e.is_polynomial()) continue;
            const UniPoly g = UniPoly::gcd(l, e.den());
            l = UniPoly::exact_div(l * e.den(), g);
        }
        std::vector<UniPoly> vec(cols, UniPoly(v));
        for (std::size_t c = 0; c < cols; ++c) {
            const RatFunc scaled = x[c] * RatFunc(l);
            if (!scaled.is_polynomial())
                throw InternalError("kernel denominator clearing failed");
            vec[c] = scaled.num();
        }
        normalize_poly_vector(vec);
        basis.push_back(std::move(vec));
    }
    return basis;
}

}  // namespace inose
