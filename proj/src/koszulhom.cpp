#include "kring/koszulhom.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace kring {

int KoszulComplex::sign_of(std::uint32_t mask, int i) {
    const int pos = std::popcount(mask & ((1u << i) - 1u));
    return pos % 2 == 0 ? 1 : -1;
}

KoszulComplex build_koszul(const PairSpec& spec) {
    KoszulComplex kc;
    kc.hom = restriction_hom(spec);
    kc.sequence = kernel_generators(*kc.hom);
    kc.m = static_cast<int>(kc.sequence.size());
    for (const auto& g : kc.sequence)
        if (!g.homogeneous() || g.degree() != 1)
            throw InvariantError("build_koszul: sequence entry is not homogeneous of degree 1");

    // d o d = 0, checked exactly: apply the differential twice to x e_I.
    using Element = std::map<std::uint32_t, RingElement>;
    auto differential = [&](const Element& x) {
        Element out;
        for (const auto& [mask, coeff] : x)
            for (int i = 0; i < kc.m; ++i) {
                if (!(mask >> i & 1u)) continue;
                const RingElement term = kc.sequence[i] * coeff;
                auto it = out.try_emplace(mask ^ (1u << i), term.ring).first;
                it->second = KoszulComplex::sign_of(mask, i) > 0 ? it->second + term
                                                                 : it->second - term;
            }
        return out;
    };
    for (std::uint32_t mask = 0; mask < (1u << kc.m); ++mask) {
        if (std::popcount(mask) < 2) continue;
        Element x{{mask, ring_one(kc.hom->big)}};
        for (const auto& [_, coeff] : differential(differential(x)))
            if (!coeff.is_zero()) throw InvariantError("build_koszul: d o d != 0");
    }
    return kc;
}

namespace {

struct SliceBasis {
    // index of (mask, monomial) pairs: masks ascending, monomials grlex
    std::vector<std::pair<std::uint32_t, Expo>> elems;
    std::map<std::pair<std::uint32_t, Expo>, std::size_t> index;
};

SliceBasis slice_basis(int m, int nvars, int p, int e) {
    SliceBasis b;
    if (e - p < 0) return b;
    const auto mons = monomials_exact(nvars, e - p);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != p) continue;
        for (const auto& mon : mons) {
            b.index.emplace(std::make_pair(mask, mon), b.elems.size());
            b.elems.emplace_back(mask, mon);
        }
    }
    return b;
}

}  // namespace

ExactnessReport truncated_exactness(const KoszulComplex& kc, int degree,
                                    std::size_t max_basis) {
    const int nvars = static_cast<int>(kc.hom->big->gens.size());
    const int nsmall = static_cast<int>(kc.hom->small->gens.size());
    ExactnessReport report{kc.hom->pair.spec, degree, {}, true};

    for (int e = 0; e <= degree; ++e) {
        std::vector<SliceBasis> bases(kc.m + 2);
        for (int p = 0; p <= kc.m; ++p) {
            bases[p] = slice_basis(kc.m, nvars, p, e);
            if (bases[p].elems.size() > max_basis)
                throw CapacityError("truncated_exactness: slice basis of size " +
                                    std::to_string(bases[p].elems.size()) + " exceeds cap");
        }

        // Integer matrix of d_p : C_p -> C_(p-1) on the degree-e slice.
        auto matrix_of = [&](int p) {
            const auto& src = bases[p];
            const auto& dst = bases[p - 1];
            ZMat mat = zmat_zero(dst.elems.size(), src.elems.size());
            for (std::size_t col = 0; col < src.elems.size(); ++col) {
                const auto& [mask, mon] = src.elems[col];
                for (int i = 0; i < kc.m; ++i) {
                    if (!(mask >> i & 1u)) continue;
                    const int sign = KoszulComplex::sign_of(mask, i);
                    for (const auto& [ge, gc] : kc.sequence[i].terms) {
                        Expo target = mon;
                        for (int v = 0; v < nvars; ++v) target[v] += ge[v];
                        const auto row = dst.index.at(std::make_pair(mask ^ (1u << i), target));
                        mat[row][col] += sign * gc;
                    }
                }
            }
            return mat;
        };

        std::vector<int> rank(kc.m + 2, 0);
        std::vector<ZMat> mats(kc.m + 2);
        for (int p = 1; p <= kc.m; ++p) {
            mats[p] = matrix_of(p);
            rank[p] = mats[p].empty() ? 0 : zrank(mats[p]);
        }

        SliceHomology sh{e, {}, {}, true};
        for (int p = 0; p <= kc.m; ++p) {
            const int dim = static_cast<int>(bases[p].elems.size());
            const int null_p = dim - rank[p];            // rank of ker d_p
            const int h_rank = null_p - rank[p + 1];     // minus rank of im d_(p+1)
            int torsion = 0;
            if (!mats[p + 1].empty())
                for (const Int& s : smith_invariants(mats[p + 1]))
                    if (s != 1) ++torsion;
            sh.h_ranks.push_back(h_rank);
            sh.torsion_count.push_back(torsion);
            const int expected = p == 0 ? static_cast<int>(monomials_exact(nsmall, e).size()) : 0;
            if (h_rank != expected || torsion != 0) sh.pass = false;
        }
        report.pass = report.pass && sh.pass;
        report.slices.push_back(std::move(sh));
    }
    return report;
}

std::vector<ZMat> tensor_with_dimension(const KoszulComplex& kc) {
    for (const auto& g : kc.sequence) {
        const Int val = dimension_evaluation(g);
        if (val != 0)
            throw InvariantError("tensor_with_dimension: generator evaluates to " + val.str());
    }
    std::vector<ZMat> diffs;
    for (int p = 1; p <= kc.m; ++p) {
        std::vector<std::uint32_t> src, dst;
        for (std::uint32_t mask = 0; mask < (1u << kc.m); ++mask) {
            if (std::popcount(mask) == p) src.push_back(mask);
            if (std::popcount(mask) == p - 1) dst.push_back(mask);
        }
        ZMat mat = zmat_zero(dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col)
            for (int i = 0; i < kc.m; ++i) {
                if (!(src[col] >> i & 1u)) continue;
                const auto row = std::distance(
                    dst.begin(), std::find(dst.begin(), dst.end(), src[col] ^ (1u << i)));
                mat[row][col] += KoszulComplex::sign_of(src[col], i) *
                                 dimension_evaluation(kc.sequence[i]);
            }
        diffs.push_back(std::move(mat));
    }
    return diffs;
}

std::vector<Int> tor_ranks(const KoszulComplex& kc) {
    const auto diffs = tensor_with_dimension(kc);  // all zero matrices
    std::vector<Int> ranks;
    for (int p = 0; p <= kc.m; ++p) {
        const Int dim = binomial(kc.m, p);
        const int rank_in = p >= 1 ? zrank(diffs[p - 1]) : 0;
        const int rank_out = p < kc.m ? zrank(diffs[p]) : 0;
        ranks.push_back(dim - rank_in - rank_out);
    }
    Int euler = 0;
    for (int p = 0; p <= kc.m; ++p) euler += (p % 2 == 0 ? 1 : -1) * ranks[p];
    if (euler != 0) throw InvariantError("tor_ranks: Euler characteristic is nonzero");
    return ranks;
}

std::vector<Int> tor_ranks(const PairSpec& spec) {
    return tor_ranks(build_koszul(spec));
}

}  // namespace kring
