#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kring/rootdata.hpp"

namespace kring {

// Virtual character stored as its dominant part: map from dominant orbit
// representatives to multiplicities (never zero). Weyl invariance is then
// automatic; the full weight multiset is reconstructed on demand.
struct Character {
    RootSystemPtr rs;
    std::map<Weight, Int> dom;

    bool is_zero() const { return dom.empty(); }
    Int virtual_dimension() const;
    bool operator==(const Character& o) const;
};

Character character_zero(RootSystemPtr rs);
Character character_trivial(RootSystemPtr rs, Int mult = 1);

// Builds a character from a full weight multiset, verifying that orbit
// multiplicities are constant (throws InvariantError otherwise).
Character character_from_weights(RootSystemPtr rs,
                                 const std::vector<std::pair<Weight, Int>>& weights);

// Character of the irreducible highest-weight module, by Freudenthal's
// recursion over the dominant weights below lambda. Memoized.
Character irreducible_character(RootSystemPtr rs, const Weight& lambda);

// Full weight multiset (all orbits expanded).
std::map<Weight, Int> expand_full(const Character& c);

Character char_add(const Character& a, const Character& b);
Character char_sub(const Character& a, const Character& b);
Character char_scale(const Character& a, const Int& s);

Character tensor_product(const Character& a, const Character& b);

// Adams operation: multiplies every weight by j (j >= 1).
Character adams_operation(const Character& a, int j);

// k-th exterior power via the Newton recursion over Adams operations.
Character exterior_power(const Character& a, int k);

// Multiplicities of irreducibles, by repeated highest-term peeling. Defined
// for virtual characters; coefficients may be negative.
std::map<Weight, Int> decompose_character(const Character& c);

// One line per dominant orbit: coordinates then multiplicity, sorted
// lexicographically. Stable across runs; used for golden comparisons.
std::string character_text(const Character& c);

}  // namespace kring
