#pragma once

#include <cstddef>
#include <vector>

#include "kring/numeric.hpp"

namespace kring {

// Dense matrices over Z and Q, row-major. Sizes here are small (at most a few
// hundred rows), so simple cubic algorithms with exact arithmetic suffice.
using ZMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;

ZMat zmat_zero(std::size_t rows, std::size_t cols);

// Canonical row Hermite normal form of the lattice spanned by the rows:
// pivots positive, entries above each pivot reduced into [0, pivot),
// zero rows dropped. Two row sets span the same lattice iff their forms
// are identical.
ZMat hnf(ZMat m);

int zrank(ZMat m);

// Basis (as rows, in HNF) of { v : v * m = 0 }. The result spans the full
// integer kernel, not just a finite-index sublattice.
ZMat left_kernel(const ZMat& m);

// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
std::vector<Int> smith_invariants(ZMat m);

QMat qmat_identity(std::size_t n);
QMat qmat_mul(const QMat& a, const QMat& b);
std::vector<Rat> qmat_apply(const QMat& m, const std::vector<Rat>& v);
Rat qmat_det(QMat m);
int qrank(QMat m);
bool qmat_is_identity(const QMat& m);

// Inverse of a square nonsingular matrix; throws InvariantError if singular.
QMat qmat_inverse(const QMat& m);

// Basis (as rows) of { x : m * x = 0 }.
QMat qmat_right_nullspace(const QMat& m);

}  // namespace kring
