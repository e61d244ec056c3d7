#include "kring/intertwine.hpp"

#include "doctest.h"

using namespace kring;

namespace {

QMat Q(std::initializer_list<std::initializer_list<int>> rows) {
    QMat m;
    for (auto r : rows) m.emplace_back(r.begin(), r.end());
    return m;
}

}  // namespace

TEST_CASE("wedge action satisfies the chevalley relations") {
    // construction throws if [e_i, f_j] or [h, e] brackets disagree with the Cartan data
    for (auto [n, k] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}}) {
        const auto wa = wedge_action(n, k);
        CHECK(wa.dim() == static_cast<std::size_t>(binomial(2 * n, k).convert_to<long long>()));
        REQUIRE(wa.e.size() == static_cast<std::size_t>(n));
        // traces vanish: everything lives in sl
        for (const auto& mats : {wa.e, wa.f, wa.h})
            for (const auto& m : mats) {
                Rat tr = 0;
                for (std::size_t i = 0; i < m.size(); ++i) tr += m[i][i];
                CHECK(tr == 0);
            }
    }
}

TEST_CASE("wedge weights sum the vector weights") {
    const auto ws = wedge_weights(2, 2);
    REQUIRE(ws.size() == 6);
    // v0^v2 pairs +1 and -1 on the first torus coordinate
    // basis subsets in lex order: {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}
    CHECK(ws[1] == std::vector<int>{0, 0});   // {0,2}
    CHECK(ws[0] == std::vector<int>{1, 1});   // {0,1}
    CHECK(ws[5] == std::vector<int>{-1, -1});  // {2,3}
}

TEST_CASE("compound matrices are multiplicative") {
    const QMat a = Q({{1, 2, 0, 1}, {0, 1, 1, 0}, {3, 0, 1, 2}, {1, 1, 0, 1}});
    const QMat b = Q({{0, 1, 0, 0}, {1, 0, 2, 0}, {0, 0, 1, 5}, {2, 0, 0, 1}});
    for (int k : {1, 2, 3}) {
        CHECK(compound_matrix(qmat_mul(a, b), k) ==
              qmat_mul(compound_matrix(a, k), compound_matrix(b, k)));
    }
    // top compound is the determinant
    const QMat top = compound_matrix(a, 4);
    REQUIRE(top.size() == 1);
    CHECK(top[0][0] == qmat_det(a));
}

TEST_CASE("intertwiner spaces have the predicted dimension") {
    // multiplicity of Λ^k V inside Λ^(2n-k) V as symplectic modules
    for (auto [n, k, dim] : {std::tuple{2, 1, 1}, {3, 1, 1}, {3, 2, 2}}) {
        const auto res = solve_intertwiner(n, k);
        CHECK(res.hom_dim == dim);
        CHECK(res.hom_dim_chars == dim);
        CHECK(res.alpha_in_solution_space);
        CHECK(res.alpha_invertible);
    }
}

TEST_CASE("form power map intertwines the group actions") {
    const int n = 2, k = 1;
    const QMat alpha = form_power_map(n, k);
    const QMat alpha_inv = qmat_inverse(alpha);
    for (const QMat& h : symplectic_elements(n, 6, 7)) {
        REQUIRE(is_symplectic(n, h));
        // alpha Λ^k(h) = Λ^(2n-k)(h) alpha
        CHECK(qmat_mul(alpha, compound_matrix(h, k)) ==
              qmat_mul(compound_matrix(h, 2 * n - k), alpha));
        (void)alpha_inv;
    }
}

TEST_CASE("loop matrix is trivial exactly on the symplectic coset") {
    const int n = 2, k = 1;
    for (const QMat& h : symplectic_elements(n, 8, 11)) {
        CHECK(qmat_is_identity(loop_matrix(n, k, h)));
    }
    // a non-symplectic determinant-1 element gives a nontrivial loop
    QMat g = qmat_identity(4);
    g[0][0] = 2;
    g[3][3] = Rat(1, 2);
    CHECK(!is_symplectic(n, g));
    const QMat chi = loop_matrix(n, k, g);
    CHECK(!qmat_is_identity(chi));
    CHECK(qmat_det(chi) == 1);
    // frozen value for the diagonal example
    QMat expected = qmat_identity(4);
    expected[0][0] = 2;
    expected[1][1] = Rat(1, 2);
    expected[2][2] = 2;
    expected[3][3] = Rat(1, 2);
    CHECK(chi == expected);

    // χ factors through the coset: χ(g h) = χ(g)
    for (const QMat& h : symplectic_elements(n, 6, 23)) {
        CHECK(loop_matrix(n, k, qmat_mul(g, h)) == chi);
    }
}

TEST_CASE("left symplectic factors act by conjugation") {
    // χ(h g) = Λ^k(h) χ(g) Λ^k(h)^{-1}: the loop transforms equivariantly
    const int n = 2, k = 1;
    const auto gs = special_linear_elements(4, 3, 99);
    const auto hs = symplectic_elements(n, 3, 5);
    for (const auto& g : gs)
        for (const auto& h : hs) {
            const QMat lhs = loop_matrix(n, k, qmat_mul(h, g));
            const QMat hk = compound_matrix(h, k);
            const QMat rhs = qmat_mul(qmat_mul(hk, loop_matrix(n, k, g)), qmat_inverse(hk));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("random elements are exact and in the right groups") {
    for (const QMat& h : symplectic_elements(3, 5, 1)) {
        CHECK(qmat_det(h) == 1);
        CHECK(is_symplectic(3, h));
    }
    for (const QMat& g : special_linear_elements(4, 5, 1)) {
        CHECK(qmat_det(g) == 1);
    }
    // determinism: same seed, same elements
    CHECK(symplectic_elements(2, 3, 42) == symplectic_elements(2, 3, 42));
    CHECK(symplectic_elements(2, 3, 42) != symplectic_elements(2, 3, 43));
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(wedge_action(3, 2, 5), CapacityError);
    CHECK_THROWS_AS(solve_intertwiner(3, 2, 5), CapacityError);
}
