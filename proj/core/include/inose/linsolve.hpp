// SPDX-License-Identifier: Apache-2.0
#ifndef INOSE_LINSOLVE_HPP
#define INOSE_LINSOLVE_HPP

#include <cstddef>
#include <vector>

#include "inose/ratfunc.hpp"

namespace inose {

/// Dense matrix over Q(u).
class FFMatrix {
public:
    FFMatrix(std::size_t rows, std::size_t cols, Var v)
        : rows_(rows), cols_(cols), e_(rows * cols, RatFunc(v)), var_(v) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Var var() const { return var_; }

    RatFunc& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const RatFunc& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<RatFunc> e_;
    Var var_;
};

/// Basis of the right kernel, deterministic for deterministic input.
/// Rows are cleared to Q[u]; elimination is fraction-free with pivots chosen
/// by minimal polynomial degree. Each basis vector is normalized to
/// polynomial entries of joint content 1 whose first nonzero entry has a
/// positive leading coefficient.
std::vector<std::vector<UniPoly>> nullspace(const FFMatrix& m);

}  // namespace inose

#endif
