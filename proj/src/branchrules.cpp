#include "kring/branchrules.hpp"

#include <algorithm>
#include <numeric>

namespace kring {

std::string PairSpec::name() const {
    if (kind == Kind::E6F4) return "e6/f4";
    return "sl" + std::to_string(2 * n) + "/sp" + std::to_string(2 * n);
}

PairSpec parse_pair(const std::string& text, int n_hint) {
    if (text == "e6/f4" || text == "e6-f4") return PairSpec::e6_f4();
    if (text == "sl-sp" || text == "sl/sp") {
        if (n_hint < 2) throw UnsupportedError("pair sl-sp requires n >= 2");
        return PairSpec::sl_sp(n_hint);
    }
    for (int n = 2; n <= 5; ++n)
        if (text == PairSpec::sl_sp(n).name() ||
            text == "sl" + std::to_string(2 * n) + "-sp" + std::to_string(2 * n))
            return PairSpec::sl_sp(n);
    throw UnsupportedError("unknown pair '" + text + "'");
}

Weight EmbeddingPair::project(const Weight& w) const {
    std::vector<int> out(weight_projection.size(), 0);
    for (std::size_t j = 0; j < weight_projection.size(); ++j)
        for (std::size_t i = 0; i < w.coords.size(); ++i)
            out[j] += weight_projection[j][i] * w.coords[i];
    return Weight(std::move(out));
}

namespace {

// Sp_2n torus sits in the SL_2n torus as (s_1,...,s_n,s_n^{-1},...,s_1^{-1}).
// In standard coordinates lambda_t (normalized by lambda_2n = 0) the
// restriction is mu_j = lambda_j - lambda_{2n+1-j}, and both sides convert
// between labels and standard coordinates by partial sums.
std::vector<std::vector<int>> sl_sp_projection(int n) {
    const int big_rank = 2 * n - 1;
    std::vector<std::vector<int>> p(n, std::vector<int>(big_rank, 0));
    for (int i = 0; i < big_rank; ++i) {
        std::vector<int> lambda(2 * n, 0);
        for (int t = 0; t <= i; ++t) lambda[t] = 1;  // omega_(i+1): 1s then 0s
        std::vector<int> mu(n);
        for (int j = 0; j < n; ++j) mu[j] = lambda[j] - lambda[2 * n - 1 - j];
        for (int j = 0; j < n; ++j) p[j][i] = (j + 1 < n) ? mu[j] - mu[j + 1] : mu[j];
    }
    return p;
}

// Folds the rank-6 simply laced diagram along its order-2 symmetry. Nodes in
// a 2-element orbit must be orthogonal; the folded Cartan entry against an
// orbit O is the sum over O of rows, evaluated at any single column of the
// other orbit. The orbit order is found by matching the folded matrix to the
// stored rank-4 Cartan matrix, and the match must be unique.
std::vector<std::vector<int>> e6_f4_projection(const RootSystem& e6, const RootSystem& f4) {
    const int r = e6.rank;
    // The unique nontrivial involutive automorphism of the diagram, found by
    // exhaustive search over node permutations.
    std::vector<int> sigma, perm6(r);
    std::iota(perm6.begin(), perm6.end(), 0);
    do {
        bool invol = false, aut = true;
        for (int i = 0; i < r && aut; ++i) {
            if (perm6[perm6[i]] != i) aut = false;
            if (perm6[i] != i) invol = true;
        }
        if (!aut || !invol) continue;
        for (int t = 0; t < r && aut; ++t)
            for (int u = 0; u < r && aut; ++u)
                aut = e6.cartan[t][u] == e6.cartan[perm6[t]][perm6[u]];
        if (aut) {
            if (!sigma.empty()) throw InvariantError("diagram involution is not unique");
            sigma = perm6;
        }
    } while (std::next_permutation(perm6.begin(), perm6.end()));
    if (sigma.empty()) throw InvariantError("no nontrivial diagram symmetry found");

    std::vector<std::vector<int>> orbits;
    std::vector<bool> used(r, false);
    for (int i = 0; i < r; ++i) {
        if (used[i]) continue;
        used[i] = true;
        std::vector<int> o{i};
        if (sigma[i] != i) {
            used[sigma[i]] = true;
            o.push_back(sigma[i]);
            if (e6.cartan[i][sigma[i]] != 0)
                throw InvariantError("folded orbit is not orthogonal");
        }
        orbits.push_back(std::move(o));
    }
    if (orbits.size() != static_cast<std::size_t>(f4.rank))
        throw InvariantError("orbit count does not match target rank");

    auto folded_entry = [&](const std::vector<int>& oi, const std::vector<int>& oj) {
        // <beta_j, beta_i^vee> with beta_i^vee the coroot orbit sum; the value
        // must not depend on the column representative.
        int value = 0;
        bool first = true;
        for (int u : oj) {
            int v = 0;
            for (int t : oi) v += e6.cartan[t][u];
            if (first)
                value = v, first = false;
            else if (v != value)
                throw InvariantError("folded Cartan entry depends on representative");
        }
        return value;
    };

    std::vector<int> perm(orbits.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> found;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < orbits.size() && ok; ++i)
            for (std::size_t j = 0; j < orbits.size() && ok; ++j)
                ok = folded_entry(orbits[perm[i]], orbits[perm[j]]) == f4.cartan[i][j];
        if (ok) {
            if (!found.empty()) throw InvariantError("folded Cartan match is not unique");
            found = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (found.empty()) throw InvariantError("folded Cartan does not match target");

    // Weight projection: pair against the coroot orbit sums, i.e. add the
    // labels over each orbit.
    std::vector<std::vector<int>> p(f4.rank, std::vector<int>(r, 0));
    for (int j = 0; j < f4.rank; ++j)
        for (int t : orbits[found[j]]) p[j][t] = 1;
    return p;
}

}  // namespace

EmbeddingPair restriction_matrix(const PairSpec& spec) {
    EmbeddingPair pair;
    pair.spec = spec;
    if (spec.kind == PairSpec::Kind::SlSp) {
        if (spec.n < 2 || spec.n > 5)
            throw UnsupportedError("restriction_matrix: sl/sp requires 2 <= n <= 5");
        pair.big = build_root_system(Series::A, 2 * spec.n - 1);
        pair.small = build_root_system(Series::C, spec.n);
        pair.weight_projection = sl_sp_projection(spec.n);
    } else {
        pair.big = build_root_system(Series::E, 6);
        pair.small = build_root_system(Series::F, 4);
        pair.weight_projection = e6_f4_projection(*pair.big, *pair.small);
    }
    pair.m = pair.big->rank - pair.small->rank;
    return pair;
}

Character restrict_character(const EmbeddingPair& pair, const Character& c,
                             bool verify_invariance) {
    if (c.rs->series != pair.big->series || c.rs->rank != pair.big->rank)
        throw InvariantError("restrict_character: character is not over the big group");
    std::map<Weight, Int> projected;
    for (const auto& [w, mult] : expand_full(c)) projected[pair.project(w)] += mult;

    Character out;
    if (verify_invariance) {
        std::vector<std::pair<Weight, Int>> flat(projected.begin(), projected.end());
        out = character_from_weights(pair.small, flat);
    } else {
        out = character_zero(pair.small);
        for (const auto& [w, mult] : projected)
            if (w.dominant() && mult != 0) out.dom.emplace(w, mult);
    }
    if (out.virtual_dimension() != c.virtual_dimension())
        throw InvariantError("restrict_character: dimension not preserved");
    return out;
}

}  // namespace kring
