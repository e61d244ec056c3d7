#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kring/branchrules.hpp"

namespace kring {

struct GeneratorInfo {
    std::string name;
    Character ch;
    int fundamental;  // the highest weight is omega_{fundamental}, coefficient 1
    Int dim;
};

// Polynomial model of a representation ring with a fixed generator order.
struct PolyRing {
    std::string name;
    RootSystemPtr rs;
    std::vector<GeneratorInfo> gens;
    std::vector<int> gen_of_fundamental;  // fundamental index -> generator index
};
using PolyRingPtr = std::shared_ptr<const PolyRing>;

// R(SL_2n) = Z[x_1..x_{2n-1}] on the exterior powers of the vector rep.
PolyRingPtr ring_sl(int n);
// R(Sp_2n) = Z[y_1..y_n], likewise.
PolyRingPtr ring_sp(int n);
// Fundamental 27, its dual, their second exterior powers, third exterior
// power, adjoint: a polynomial generating set with pinned order.
PolyRingPtr ring_e6();
// 26-dimensional rep, its second and third exterior powers, adjoint.
PolyRingPtr ring_f4();

PolyRingPtr ring_big(const PairSpec& spec);
PolyRingPtr ring_small(const PairSpec& spec);

using Expo = std::vector<int>;

// Graded order; ties broken lexicographically with the first generator
// largest, so printed elements lead with the earliest generator.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const;
};

class RingElement {
  public:
    PolyRingPtr ring;
    std::map<Expo, Int, GrlexLess> terms;

    explicit RingElement(PolyRingPtr r) : ring(std::move(r)) {}

    bool is_zero() const { return terms.empty(); }
    int degree() const;  // max total degree, -1 for zero
    bool homogeneous() const;
    std::string str() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    bool operator==(const RingElement& o) const;
};

RingElement ring_zero(PolyRingPtr ring);
RingElement ring_one(PolyRingPtr ring);
RingElement ring_monomial(PolyRingPtr ring, Expo e, Int coeff = 1);
RingElement ring_generator(PolyRingPtr ring, int g);

// Interprets a virtual character as a polynomial in the ring generators by
// highest-term peeling; throws InvariantError when a highest term is not a
// product of generator highest weights.
RingElement char_to_poly(PolyRingPtr ring, const Character& c);

// Evaluates the polynomial on the generator characters.
Character poly_to_char(const RingElement& p);

// Dimension homomorphism: evaluate every generator at its dimension.
Int dimension_evaluation(const RingElement& p);

// All exponent vectors of total degree <= (or ==) d, grlex ascending.
std::vector<Expo> monomials_upto(int nvars, int d);
std::vector<Expo> monomials_exact(int nvars, int d);

struct RestrictionHom {
    EmbeddingPair pair;
    PolyRingPtr big, small;
    std::vector<Character> restricted;       // restriction of each big generator
    std::vector<RingElement> images;         // the same, as small-ring polynomials
    std::vector<std::pair<int, int>> equal_pairs;  // big generators with equal images

    RingElement apply(const RingElement& p) const;
};

// Builds (and caches) the restriction homomorphism on the generator level.
// Construction certifies surjectivity: every small-ring generator must occur
// as the leading term of some image.
std::shared_ptr<const RestrictionHom> restriction_hom(const PairSpec& spec);

// The m difference generators of the kernel: one x_a - x_b per pair of big
// generators with equal images, each verified to map to zero.
std::vector<RingElement> kernel_generators(const RestrictionHom& hom);

struct KernelSlice {
    int e;
    std::vector<Expo> monomials;  // big-ring monomials of degree <= e
    ZMat kernel_basis;            // rows, HNF, in the monomial coordinates
};

// Integer kernel of the restriction on the filtered pieces of degree <= d.
std::vector<KernelSlice> kernel_lattice_degreewise(const RestrictionHom& hom, int d,
                                                   std::size_t max_monomials = 200000);

struct KernelDegreeRow {
    int e;
    int kernel_rank;
    int ideal_rank;
    bool match;  // lattice equality, by Hermite form comparison
};

struct KernelReport {
    PairSpec pair;
    int degree;
    std::vector<KernelDegreeRow> per_degree;
    bool pass;
};

// Compares the kernel lattice with the lattice generated by the difference
// generators (coefficients of degree <= e-1) in every degree up to d.
KernelReport verify_kernel_generation(const RestrictionHom& hom, int d,
                                      std::size_t max_monomials = 200000);

}  // namespace kring
