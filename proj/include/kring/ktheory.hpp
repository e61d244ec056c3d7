#pragma once

#include "kring/koszulhom.hpp"

namespace kring {

struct E2Entry {
    int p, q;
    Int rank;
    std::string label;
};

struct E2Page {
    PairSpec pair;
    int m;
    int qmax;
    std::vector<E2Entry> entries;  // 0 <= p <= m, 0 <= q <= qmax; zero beyond
    bool degenerate;
    std::string note;
};

E2Page e2_page(const PairSpec& spec, int qmax);
Int e2_rank(const E2Page& page, int p, int q);

// Character of the center on a representation: the class of its weights in
// the weight lattice modulo the root lattice, which must be constant.
// Supported for |P/Q| <= 2; modulus 1 means the center acts trivially.
struct CenterCharacter {
    int modulus;  // 1 or 2
    int value;    // in Z/modulus
    bool trivial() const { return modulus == 1 || value == 0; }
};

CenterCharacter center_character(const RootSystem& rs, const Character& c);

enum class Cocycle { Split, NonSplit };

// Coefficient class in the Brauer group of the base field: either the field
// itself or the quaternionic class of the twisting cocycle.
struct BrauerClass {
    bool nontrivial = false;
    std::string str() const { return nontrivial ? "A_gamma" : "F"; }
    bool operator==(const BrauerClass&) const = default;
};

// Class attached to the i-th kernel generator (1-based): the center
// character of its restricted representation decides whether the twisted
// form contributes the cocycle class. Squares cancel under tensoring.
BrauerClass brauer_class(const PairSpec& spec, int i, Cocycle c);

struct KBasisElement {
    std::vector<int> indices;  // subset of {1..m}
    int shift;                 // cohomological shift |I|
    BrauerClass coeff;         // reduced coefficient class
    std::string word;          // unreduced tensor word over the factors
    std::string label;
};

struct GradedKModule {
    PairSpec pair;
    int m;
    bool twisted;
    std::vector<KBasisElement> basis;  // by (shift, indices)
};

// Free module over K_*(F) on the exterior-algebra classes; labels t_i for
// the symplectic pairs and s_i for the exceptional one.
GradedKModule k_theory_split(const PairSpec& spec);

// Same basis with coefficients twisted by the cocycle classes of the factors.
GradedKModule k_theory_twisted(const PairSpec& spec, Cocycle c = Cocycle::NonSplit);

// Coefficients of the Poincare polynomial sum_I t^|I|.
std::vector<Int> poincare_coefficients(const GradedKModule& mod);

}  // namespace kring
