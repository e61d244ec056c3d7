#include "kring/ktheory.hpp"

#include <algorithm>
#include <bit>

namespace kring {

E2Page e2_page(const PairSpec& spec, int qmax) {
    if (qmax < 0) throw InvariantError("e2_page: qmax must be nonnegative");
    const auto tor = tor_ranks(spec);
    E2Page page{spec, static_cast<int>(tor.size()) - 1, qmax, {}, true, {}};
    for (int q = 0; q <= qmax; ++q)
        for (int p = 0; p <= page.m; ++p)
            page.entries.push_back({p, q, tor[p],
                                    "Λ^" + std::to_string(p) + "(Z^" + std::to_string(page.m) +
                                        ") ⊗ K_" + std::to_string(q) + "(F)"});
    page.note =
        "collapses at this page: the differentials vanish by the multiplicative "
        "structure over K_*(F); taken as given here";
    return page;
}

Int e2_rank(const E2Page& page, int p, int q) {
    if (p < 0 || q < 0 || p > page.m) return 0;
    for (const auto& e : page.entries)
        if (e.p == p && e.q == q) return e.rank;
    return binomial(page.m, p);  // constant in q beyond the stored window
}

CenterCharacter center_character(const RootSystem& rs, const Character& c) {
    Rat det = 1;
    {
        QMat qc(rs.rank, std::vector<Rat>(rs.rank));
        for (int i = 0; i < rs.rank; ++i)
            for (int j = 0; j < rs.rank; ++j) qc[i][j] = rs.cartan[i][j];
        det = qmat_det(qc);
    }
    if (det != 1 && det != 2)
        throw UnsupportedError("center_character: implemented for |P/Q| <= 2, got " +
                               numerator(det).str());
    const int modulus = static_cast<int>(numerator(det));
    if (c.dom.empty()) throw InvariantError("center_character: zero character");
    // Simple reflections shift weights by root multiples, so the class is
    // constant on orbits; checking the dominant representatives covers all
    // weights.
    int value = -1;
    for (const auto& [w, mult] : c.dom) {
        const int v = modulus == 1 ? 0 : (rs.in_root_lattice(w) ? 0 : 1);
        if (value == -1) value = v;
        if (v != value)
            throw InvariantError("center_character: non-constant class at weight " + w.str());
    }
    return {modulus, value};
}

BrauerClass brauer_class(const PairSpec& spec, int i, Cocycle c) {
    const auto hom = restriction_hom(spec);
    if (i < 1 || i > hom->pair.m)
        throw InvariantError("brauer_class: index out of range");
    if (c == Cocycle::Split) return {false};
    const auto [a, b] = hom->equal_pairs[i - 1];
    (void)b;  // both restrictions agree
    const CenterCharacter cc = center_character(*hom->pair.small, hom->restricted[a]);
    return {!cc.trivial()};
}

namespace {

std::string class_letter(const PairSpec& spec, bool twisted) {
    std::string base = spec.kind == PairSpec::Kind::SlSp ? "t" : "s";
    return twisted ? base + "~" : base;
}

GradedKModule build_module(const PairSpec& spec, bool twisted, Cocycle c) {
    const auto hom = restriction_hom(spec);
    const int m = hom->pair.m;
    GradedKModule mod{spec, m, twisted, {}};
    std::vector<BrauerClass> factor(m + 1);
    for (int i = 1; i <= m; ++i)
        factor[i] = twisted ? brauer_class(spec, i, c) : BrauerClass{false};

    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    const std::string letter = class_letter(spec, twisted);
    for (const std::uint32_t mask : masks) {
        KBasisElement el;
        el.shift = std::popcount(mask);
        bool odd = false;
        for (int i = 1; i <= m; ++i) {
            if (!(mask >> (i - 1) & 1u)) continue;
            el.indices.push_back(i);
            el.word += (el.word.empty() ? "" : "⊗") + factor[i].str();
            if (factor[i].nontrivial) odd = !odd;
            el.label += (el.label.empty() ? "" : "∪") + letter + "_" + std::to_string(i);
        }
        if (el.indices.empty()) {
            el.word = "F";
            el.label = "1";
        }
        el.coeff = BrauerClass{odd};  // squares of the cocycle class cancel
        mod.basis.push_back(std::move(el));
    }
    return mod;
}

}  // namespace

GradedKModule k_theory_split(const PairSpec& spec) {
    return build_module(spec, false, Cocycle::Split);
}

GradedKModule k_theory_twisted(const PairSpec& spec, Cocycle c) {
    return build_module(spec, true, c);
}

std::vector<Int> poincare_coefficients(const GradedKModule& mod) {
    std::vector<Int> coeffs(mod.m + 1, Int(0));
    for (const auto& el : mod.basis) ++coeffs[el.shift];
    return coeffs;
}

}  // namespace kring
