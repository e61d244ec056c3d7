#pragma once

#include <cstdint>

#include "kring/repring.hpp"

namespace kring {

// Koszul complex on the m difference generators over the big polynomial
// ring. Exterior factors are indexed by bitmasks over the generators.
struct KoszulComplex {
    std::shared_ptr<const RestrictionHom> hom;
    int m;
    std::vector<RingElement> sequence;

    // d(x e_I) = sum over i in I of (-1)^(position of i in I) rho_i x e_(I\i).
    static int sign_of(std::uint32_t mask, int i);
};

// Builds the complex and verifies d о d = 0 symbolically on every exterior
// basis element. The sequence entries must be homogeneous of degree 1.
KoszulComplex build_koszul(const PairSpec& spec);

struct SliceHomology {
    int e;
    std::vector<int> h_ranks;        // ranks of H_0..H_m on the degree-e slice
    std::vector<int> torsion_count;  // nontrivial invariant factors per H_p
    bool pass;                       // H_0 free of the predicted rank, H_p = 0 for p >= 1
};

struct ExactnessReport {
    PairSpec pair;
    int degree;
    std::vector<SliceHomology> slices;  // e = 0..degree
    bool pass;
};

// The generators are homogeneous, so the complex splits into finite
// degree-e slices; homology of each slice is computed with integer rank and
// Smith-form torsion checks. H_0 must match the degree-e slice of the small
// ring; higher homology must vanish.
ExactnessReport truncated_exactness(const KoszulComplex& kc, int degree,
                                    std::size_t max_basis = 200000);

// Applies the dimension homomorphism to every differential entry; the
// evaluated entries must all be zero (each sequence member has virtual
// dimension zero). Returns the evaluated differentials as integer matrices.
std::vector<ZMat> tensor_with_dimension(const KoszulComplex& kc);

// Homology ranks of the dimension-evaluated complex: the binomial vector
// (C(m,0), ..., C(m,m)).
std::vector<Int> tor_ranks(const KoszulComplex& kc);
std::vector<Int> tor_ranks(const PairSpec& spec);

}  // namespace kring
