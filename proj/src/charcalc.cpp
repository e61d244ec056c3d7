#include "kring/charcalc.hpp"

#include <algorithm>
#include <mutex>

namespace kring {

namespace {

void check_same_system(const Character& a, const Character& b, const char* who) {
    if (a.rs->series != b.rs->series || a.rs->rank != b.rs->rank)
        throw InvariantError(std::string(who) + ": mismatched root systems");
}

void prune(std::map<Weight, Int>& m) {
    for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
}

}  // namespace

Int Character::virtual_dimension() const {
    Int d = 0;
    for (const auto& [w, m] : dom) d += m * rs->orbit_size(w);
    return d;
}

bool Character::operator==(const Character& o) const {
    return rs->series == o.rs->series && rs->rank == o.rs->rank && dom == o.dom;
}

Character character_zero(RootSystemPtr rs) {
    return Character{std::move(rs), {}};
}

Character character_trivial(RootSystemPtr rs, Int mult) {
    Character c{std::move(rs), {}};
    if (mult != 0) c.dom.emplace(Weight(std::vector<int>(c.rs->rank, 0)), mult);
    return c;
}

Character character_from_weights(RootSystemPtr rs,
                                 const std::vector<std::pair<Weight, Int>>& weights) {
    std::map<Weight, Int> full;
    for (const auto& [w, m] : weights) full[w] += m;
    prune(full);
    Character c{rs, {}};
    while (!full.empty()) {
        auto [w, m] = *full.begin();
        Weight rep = dominant_representative(*rs, w).first;
        for (const Weight& o : weyl_orbit(*rs, rep)) {
            auto it = full.find(o);
            if (it == full.end() || it->second != m)
                throw InvariantError("character_from_weights: orbit of " + rep.str() +
                                     " has non-constant multiplicity");
            full.erase(it);
        }
        c.dom.emplace(rep, m);
    }
    return c;
}

std::map<Weight, Int> expand_full(const Character& c) {
    std::map<Weight, Int> full;
    for (const auto& [w, m] : c.dom)
        for (const Weight& o : weyl_orbit(*c.rs, w)) full.emplace(o, m);
    return full;
}

Character char_add(const Character& a, const Character& b) {
    check_same_system(a, b, "char_add");
    Character c = a;
    for (const auto& [w, m] : b.dom) c.dom[w] += m;
    prune(c.dom);
    return c;
}

Character char_sub(const Character& a, const Character& b) {
    check_same_system(a, b, "char_sub");
    Character c = a;
    for (const auto& [w, m] : b.dom) c.dom[w] -= m;
    prune(c.dom);
    return c;
}

Character char_scale(const Character& a, const Int& s) {
    if (s == 0) return character_zero(a.rs);
    Character c = a;
    for (auto& [w, m] : c.dom) m *= s;
    return c;
}

Character tensor_product(const Character& a, const Character& b) {
    check_same_system(a, b, "tensor_product");
    // Trivial factors just rescale; this keeps the Newton recursion cheap.
    if (a.dom.size() == 1 && a.dom.begin()->first.is_zero())
        return char_scale(b, a.dom.begin()->second);
    if (b.dom.size() == 1 && b.dom.begin()->first.is_zero())
        return char_scale(a, b.dom.begin()->second);

    const auto fa = expand_full(a);
    const auto fb = expand_full(b);
    // The product is Weyl invariant, so its dominant part suffices.
    Character c{a.rs, {}};
    const int rank = a.rs->rank;
    std::vector<int> sum(rank);
    for (const auto& [wa, ma] : fa)
        for (const auto& [wb, mb] : fb) {
            bool dom = true;
            for (int i = 0; i < rank; ++i) {
                sum[i] = wa.coords[i] + wb.coords[i];
                if (sum[i] < 0) dom = false;
            }
            if (dom) c.dom[Weight(sum)] += ma * mb;
        }
    prune(c.dom);
    return c;
}

Character adams_operation(const Character& a, int j) {
    if (j < 1) throw InvariantError("adams_operation: exponent must be >= 1");
    if (j == 1) return a;
    Character c{a.rs, {}};
    for (const auto& [w, m] : a.dom) c.dom[w.scaled(j)] += m;
    prune(c.dom);
    return c;
}

Character exterior_power(const Character& a, int k) {
    if (k < 0) throw InvariantError("exterior_power: negative exponent");
    std::vector<Character> lam{character_trivial(a.rs)};
    std::vector<Character> psi{character_zero(a.rs)};
    for (int j = 1; j <= k; ++j) psi.push_back(adams_operation(a, j));
    for (int kk = 1; kk <= k; ++kk) {
        // kk * lam_kk = sum_{j=1..kk} (-1)^(j-1) lam_{kk-j} psi_j
        Character acc = character_zero(a.rs);
        for (int j = 1; j <= kk; ++j) {
            Character t = tensor_product(lam[kk - j], psi[j]);
            acc = (j % 2 == 1) ? char_add(acc, t) : char_sub(acc, t);
        }
        for (auto& [w, m] : acc.dom) m = exact_div(m, kk);
        lam.push_back(std::move(acc));
    }
    return lam[k];
}

namespace {

// Dominant box enumeration: dominant mu with lambda - mu a nonnegative root
// combination k, bounded componentwise by C^{-1} lambda.
struct BoxEntry {
    int depth;
    Weight mu;
    std::vector<int> k;
};

std::vector<BoxEntry> dominant_box(const RootSystem& rs, const Weight& lambda) {
    const int rank = rs.rank;
    std::vector<Rat> bound_q = rs.root_coords_of(lambda);
    std::vector<int> bound(rank);
    for (int i = 0; i < rank; ++i)
        bound[i] = static_cast<int>(floor_div(numerator(bound_q[i]), denominator(bound_q[i])));
    std::vector<BoxEntry> out;
    std::vector<int> k(rank, 0);
    for (;;) {
        std::vector<int> mu = lambda.coords;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) mu[i] -= rs.cartan[i][j] * k[j];
        if (std::all_of(mu.begin(), mu.end(), [](int x) { return x >= 0; })) {
            int depth = 0;
            for (int x : k) depth += x;
            out.push_back({depth, Weight(std::move(mu)), k});
        }
        int pos = rank - 1;
        while (pos >= 0 && k[pos] == bound[pos]) k[pos--] = 0;
        if (pos < 0) break;
        ++k[pos];
    }
    std::sort(out.begin(), out.end(), [](const BoxEntry& a, const BoxEntry& b) {
        return a.depth != b.depth ? a.depth < b.depth : a.mu < b.mu;
    });
    return out;
}

}  // namespace

Character irreducible_character(RootSystemPtr rs, const Weight& lambda) {
    if (!lambda.dominant()) throw InvariantError("irreducible_character: not dominant");

    static std::map<std::pair<std::string, Weight>, Character> cache;
    static std::mutex cache_mutex;
    const auto key = std::make_pair(rs->name(), lambda);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const auto box = dominant_box(*rs, lambda);
    std::map<Weight, Int> mult;
    for (const auto& entry : box) {
        if (entry.depth == 0) {
            mult.emplace(entry.mu, 1);
            continue;
        }
        // Freudenthal: ((lambda+delta,lambda+delta) - (mu+delta,mu+delta)) m_mu
        //            = 2 sum_{alpha>0} sum_{t>=1} m_{mu+t alpha} (mu+t alpha, alpha)
        Int num = 0;
        for (const auto& alpha : rs->positive_roots) {
            Weight nu = entry.mu;
            for (;;) {
                nu = nu + alpha.wt;
                const Weight rep = dominant_representative(*rs, nu).first;
                auto it = mult.find(rep);
                if (it == mult.end()) break;  // left the weight polytope
                num += it->second * alpha.half_norm * rs->pair_coroot(nu, alpha);
            }
        }
        Int den = 0;  // (lambda + mu + 2 delta, lambda - mu), via root coordinates of the gap
        for (int i = 0; i < rs->rank; ++i)
            den += Int(entry.k[i]) * rs->symmetrizer[i] *
                   (lambda.coords[i] + entry.mu.coords[i] + 2);
        mult[entry.mu] = exact_div(2 * num, den);
    }
    prune(mult);
    Character c{rs, std::move(mult)};
    if (c.virtual_dimension() != weyl_dimension(*rs, lambda))
        throw InvariantError("irreducible_character: dimension check failed at " + lambda.str());
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, c);
    return c;
}

std::map<Weight, Int> decompose_character(const Character& c) {
    std::map<Weight, Int> work = c.dom, out;
    while (!work.empty()) {
        auto best = work.begin();
        Int best_h = c.rs->height_key(best->first);
        for (auto it = std::next(work.begin()); it != work.end(); ++it) {
            Int h = c.rs->height_key(it->first);
            if (h > best_h || (h == best_h && it->first > best->first)) {
                best = it;
                best_h = h;
            }
        }
        const Weight lambda = best->first;
        const Int m = best->second;
        out[lambda] = m;
        for (const auto& [w, k] : irreducible_character(c.rs, lambda).dom) {
            work[w] -= m * k;
            if (work[w] == 0) work.erase(w);
        }
    }
    return out;
}

std::string character_text(const Character& c) {
    std::string s;
    for (const auto& [w, m] : c.dom) {
        for (std::size_t i = 0; i < w.coords.size(); ++i)
            s += std::to_string(w.coords[i]) + ' ';
        s += m.str() + '\n';
    }
    return s;
}

}  // namespace kring
