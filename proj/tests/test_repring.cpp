#include "kring/repring.hpp"

#include "doctest.h"

using namespace kring;

namespace {
Weight W(std::initializer_list<int> c) { return Weight(std::vector<int>(c)); }
}  // namespace

TEST_CASE("ring constructors and generator data") {
    const auto rsl = ring_sl(3);
    REQUIRE(rsl->gens.size() == 5);
    CHECK(rsl->name == "R(SL6)");
    CHECK(rsl->gens[0].name == "x1");
    CHECK(rsl->gens[0].dim == 6);
    CHECK(rsl->gens[2].dim == 20);

    const auto rsp = ring_sp(3);
    REQUIRE(rsp->gens.size() == 3);
    CHECK(rsp->name == "R(Sp6)");
    CHECK(rsp->gens[1].name == "y2");
    CHECK(rsp->gens[1].dim == 15);  // exterior square of the 6-dim vector

    const auto re6 = ring_e6();
    REQUIRE(re6->gens.size() == 6);
    CHECK(re6->gens[0].name == "rho");
    CHECK(re6->gens[5].name == "ad");
    CHECK(re6->gens[4].dim == 2925);

    const auto rf4 = ring_f4();
    REQUIRE(rf4->gens.size() == 4);
    CHECK(rf4->gens[2].name == "L3rho'");
    CHECK(rf4->gens[2].dim == 2600);
    CHECK(rf4->gens[3].name == "ad");
    CHECK(rf4->gens[3].dim == 52);
}

TEST_CASE("ring element arithmetic") {
    const auto r = ring_sp(2);
    const RingElement y1 = ring_generator(r, 0), y2 = ring_generator(r, 1);
    const RingElement p = (y1 + y2) * (y1 - y2);
    CHECK(p == y1 * y1 - y2 * y2);
    CHECK(p.degree() == 2);
    CHECK(p.homogeneous());
    CHECK((p - p).is_zero());
    CHECK((y1 + ring_one(r)).str() == "y1 + 1");
    CHECK((y1 * y1 * y2).str() == "y1^2*y2");
    CHECK(ring_zero(r).str() == "0");
    CHECK(!(y1 + ring_one(r)).homogeneous());
}

TEST_CASE("characters to polynomials and back") {
    const auto spec = PairSpec::sl_sp(2);
    const auto r = ring_small(spec);
    const auto c2 = build_root_system(Series::C, 2);
    // an arbitrary polynomial round-trips through its character
    const RingElement p = ring_generator(r, 0) * ring_generator(r, 1) +
                          ring_monomial(r, {1, 0}, 3);
    CHECK(char_to_poly(r, poly_to_char(p)) == p);
    // an irreducible character round-trips through its polynomial
    const Character c = irreducible_character(c2, W({1, 1}));
    CHECK(poly_to_char(char_to_poly(r, c)) == c);
}

TEST_CASE("dimension evaluation is multiplicative") {
    const auto r = ring_f4();
    const RingElement p = ring_generator(r, 0) + ring_one(r);  // rho' + 1
    CHECK(dimension_evaluation(p) == 27);
    CHECK(dimension_evaluation(p * p) == 27 * 27);
    CHECK(dimension_evaluation(ring_zero(r)) == 0);
}

TEST_CASE("monomial enumeration") {
    CHECK(monomials_upto(3, 2).size() == 10);
    CHECK(monomials_exact(3, 2).size() == 6);
    CHECK(monomials_upto(5, 3).size() == 56);
    CHECK(monomials_exact(2, 5).size() == 6);
    // grlex sorted: constant first, then degree blocks
    const auto ms = monomials_upto(2, 2);
    CHECK(ms.front() == Expo{0, 0});
    CHECK(ms.back().size() == 2);
}

TEST_CASE("restriction images of the symplectic pairs") {
    for (int n : {2, 3, 4}) {
        const auto hom = restriction_hom(PairSpec::sl_sp(n));
        REQUIRE(hom->images.size() == static_cast<std::size_t>(2 * n - 1));
        for (int k = 1; k <= 2 * n - 1; ++k) {
            const int j = std::min(k, 2 * n - k);
            CHECK(hom->images[k - 1] == ring_generator(hom->small, j - 1));
        }
        CHECK(hom->equal_pairs.size() == static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n - 1; ++i) {
            CHECK(hom->equal_pairs[i].first == i);
            CHECK(hom->equal_pairs[i].second == 2 * n - 2 - i);
        }
    }
}

TEST_CASE("restriction images of the exceptional pair") {
    const auto hom = restriction_hom(PairSpec::e6_f4());
    const auto f = hom->small;
    const RingElement rho = ring_generator(f, 0), l2 = ring_generator(f, 1),
                      l3 = ring_generator(f, 2), ad = ring_generator(f, 3);
    REQUIRE(hom->images.size() == 6);
    CHECK(hom->images[0] == rho + ring_one(f));  // 27 -> 26 + 1
    CHECK(hom->images[1] == rho + ring_one(f));
    CHECK(hom->images[2] == l2 + rho);           // 351 -> 325 + 26
    CHECK(hom->images[3] == l2 + rho);
    CHECK(hom->images[4] == l3 + l2);            // 2925 -> 2600 + 325
    CHECK(hom->images[5] == ad + rho);           // 78 -> 52 + 26
    REQUIRE(hom->equal_pairs.size() == 2);
    CHECK(hom->equal_pairs[0] == std::pair<int, int>{0, 1});
    CHECK(hom->equal_pairs[1] == std::pair<int, int>{2, 3});
}

TEST_CASE("restriction is a ring map") {
    const auto hom = restriction_hom(PairSpec::sl_sp(2));
    const RingElement a = ring_generator(hom->big, 0) + ring_generator(hom->big, 1);
    const RingElement b = ring_generator(hom->big, 2) * ring_generator(hom->big, 0);
    CHECK(hom->apply(a * b) == hom->apply(a) * hom->apply(b));
    CHECK(hom->apply(a + b) == hom->apply(a) + hom->apply(b));
    CHECK(hom->apply(ring_one(hom->big)) == ring_one(hom->small));
}

TEST_CASE("kernel generators are the generator differences") {
    const auto hom = restriction_hom(PairSpec::sl_sp(3));
    const auto gens = kernel_generators(*hom);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == ring_generator(hom->big, 0) - ring_generator(hom->big, 4));
    CHECK(gens[1] == ring_generator(hom->big, 1) - ring_generator(hom->big, 3));
    for (const auto& g : gens) CHECK(hom->apply(g).is_zero());

    const auto egens = kernel_generators(*restriction_hom(PairSpec::e6_f4()));
    REQUIRE(egens.size() == 2);
    CHECK(egens[0].str() == "rho - rho*");
    CHECK(egens[1].str() == "L2rho - L2rho*");
}

TEST_CASE("kernel lattice equals the ideal lattice, degree by degree") {
    // cumulative ranks: the kernel in degree <= e is F_(e-1)-many multiples
    // of each generator minus the overlaps counted by the syzygies.
    const auto h2 = restriction_hom(PairSpec::sl_sp(2));
    auto report = verify_kernel_generation(*h2, 3);
    CHECK(report.pass);
    REQUIRE(report.per_degree.size() == 3);
    CHECK(report.per_degree[0].kernel_rank == 1);
    CHECK(report.per_degree[1].kernel_rank == 4);
    CHECK(report.per_degree[2].kernel_rank == 10);
    for (const auto& row : report.per_degree) {
        CHECK(row.match);
        CHECK(row.kernel_rank == row.ideal_rank);
    }

    const auto h3 = restriction_hom(PairSpec::sl_sp(3));
    report = verify_kernel_generation(*h3, 3);
    CHECK(report.pass);
    CHECK(report.per_degree[0].kernel_rank == 2);
    CHECK(report.per_degree[1].kernel_rank == 11);
    CHECK(report.per_degree[2].kernel_rank == 36);

    const auto he = restriction_hom(PairSpec::e6_f4());
    report = verify_kernel_generation(*he, 2);
    CHECK(report.pass);
    CHECK(report.per_degree[0].kernel_rank == 2);
    CHECK(report.per_degree[1].kernel_rank == 13);
}

TEST_CASE("kernel capacity guard") {
    const auto hom = restriction_hom(PairSpec::sl_sp(2));
    CHECK_THROWS_AS(verify_kernel_generation(*hom, 3, 5), CapacityError);
}
