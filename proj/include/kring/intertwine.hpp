#pragma once

#include <cstdint>

#include "kring/charcalc.hpp"
#include "kring/linalg.hpp"

namespace kring {

// Chevalley generators of sp_2n acting on the k-th exterior power of the
// vector representation. Basis vectors are sorted k-subsets of {0..2n-1};
// the symplectic form pairs index i with n+i. Construction verifies the
// defining bracket relations against the stored C_n Cartan matrix.
struct WedgeAction {
    int n, k;
    std::vector<std::vector<int>> basis;  // sorted subsets, lex order
    std::vector<QMat> e, f, h;

    std::size_t dim() const { return basis.size(); }
};

WedgeAction wedge_action(int n, int k, std::size_t max_dim = 3000);

// Weight of each wedge basis vector on the diagonal torus, in Z^n.
std::vector<std::vector<int>> wedge_weights(int n, int k);

// x -> x wedge (sum_i v_i wedge v_(n+i))^(n-k), as a matrix from the k-th to
// the (2n-k)-th exterior power. Requires k <= n.
QMat form_power_map(int n, int k, std::size_t max_dim = 3000);

// Λ^k(g): the matrix of k x k minors.
QMat compound_matrix(const QMat& g, int k);

struct IntertwinerResult {
    int n, k;
    int hom_dim;        // solution-space dimension of the equivariance system
    Int hom_dim_chars;  // independent count via character decomposition
    QMat alpha;
    bool alpha_in_solution_space;
    bool alpha_invertible;
};

// Solves A Φ(X) = Ψ(X) A over the weight-matched matrix entries, where Φ, Ψ
// are the actions on the k-th and (2n-k)-th exterior powers; certifies the
// form-power map as an invertible solution.
IntertwinerResult solve_intertwiner(int n, int k, std::size_t max_dim = 3000);

// χ([g]) = Λ^k(g) · α^{-1} · Λ^(2n-k)(g)^{-1} · α for g in SL_2n. Constant
// equal to the identity on symplectic g.
QMat loop_matrix(int n, int k, const QMat& g, std::size_t max_dim = 3000);

bool is_symplectic(int n, const QMat& g);

// Deterministic pseudo-random group elements: products of exponentials of
// nilpotent Chevalley generators (symplectic) or of elementary transvections
// (special linear). Entries are exact rationals, determinant 1.
std::vector<QMat> symplectic_elements(int n, int count, std::uint64_t seed);
std::vector<QMat> special_linear_elements(int size, int count, std::uint64_t seed);

}  // namespace kring
