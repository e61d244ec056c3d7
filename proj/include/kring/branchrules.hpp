#pragma once

#include <string>
#include <vector>

#include "kring/charcalc.hpp"

namespace kring {

// Selector for one of the supported subgroup embeddings H in G.
struct PairSpec {
    enum class Kind { SlSp, E6F4 };
    Kind kind = Kind::SlSp;
    int n = 2;  // Sp_2n in SL_2n; ignored for E6F4

    static PairSpec sl_sp(int n) { return {Kind::SlSp, n}; }
    static PairSpec e6_f4() { return {Kind::E6F4, 0}; }

    std::string name() const;
    bool operator==(const PairSpec&) const = default;
};

// Parse "sl6/sp6", "sl-sp" with n, or "e6/f4"; throws UnsupportedError.
PairSpec parse_pair(const std::string& text, int n_hint = 0);

struct EmbeddingPair {
    PairSpec spec;
    RootSystemPtr big, small;
    // Restriction of characters on the weight level: small.rank x big.rank,
    // acting on fundamental-weight coordinates.
    std::vector<std::vector<int>> weight_projection;
    int m;  // rank(G) - rank(H)

    Weight project(const Weight& w) const;
};

// Builds the embedding data. The symplectic projection comes from matching
// the standard coordinates of both tori; the exceptional one is derived from
// the order-2 diagram symmetry (orbit sums of coroots), and the folded
// Cartan matrix is checked against the stored one.
EmbeddingPair restriction_matrix(const PairSpec& spec);

// Pushes a character of the big group down to the small one. With verify set,
// the projected weight multiset is rebuilt through the invariance-checking
// constructor; otherwise the dominant part is extracted directly. Dimension
// preservation is always enforced.
Character restrict_character(const EmbeddingPair& pair, const Character& c,
                             bool verify_invariance = true);

}  // namespace kring
