#include "kring/repring.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace kring {

bool GrlexLess::operator()(const Expo& a, const Expo& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

int RingElement::degree() const {
    if (terms.empty()) return -1;
    const Expo& lead = terms.rbegin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0);
}

bool RingElement::homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms) {
        int de = std::accumulate(e.begin(), e.end(), 0);
        if (d == -1) d = de;
        if (de != d) return false;
    }
    return true;
}

std::string RingElement::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c;
        if (s.empty()) {
            if (a < 0) {
                s += '-';
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono;
        for (std::size_t g = 0; g < e.size(); ++g) {
            if (e[g] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += ring->gens[g].name;
            if (e[g] > 1) mono += '^' + std::to_string(e[g]);
        }
        if (mono.empty())
            s += a.str();
        else {
            if (a != 1) s += a.str() + '*';
            s += mono;
        }
    }
    return s;
}

namespace {

void check_same_ring(const RingElement& a, const RingElement& b, const char* who) {
    if (a.ring->name != b.ring->name)
        throw InvariantError(std::string(who) + ": mismatched rings");
}

void prune_terms(std::map<Expo, Int, GrlexLess>& t) {
    for (auto it = t.begin(); it != t.end();)
        it = it->second == 0 ? t.erase(it) : std::next(it);
}

}  // namespace

RingElement RingElement::operator+(const RingElement& o) const {
    check_same_ring(*this, o, "operator+");
    RingElement r = *this;
    for (const auto& [e, c] : o.terms) r.terms[e] += c;
    prune_terms(r.terms);
    return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
    check_same_ring(*this, o, "operator-");
    RingElement r = *this;
    for (const auto& [e, c] : o.terms) r.terms[e] -= c;
    prune_terms(r.terms);
    return r;
}

RingElement RingElement::operator*(const RingElement& o) const {
    check_same_ring(*this, o, "operator*");
    RingElement r(ring);
    Expo sum(ring->gens.size());
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
            r.terms[sum] += ca * cb;
        }
    prune_terms(r.terms);
    return r;
}

bool RingElement::operator==(const RingElement& o) const {
    return ring->name == o.ring->name && terms == o.terms;
}

RingElement ring_zero(PolyRingPtr ring) {
    return RingElement(std::move(ring));
}

RingElement ring_one(PolyRingPtr ring) {
    return ring_monomial(std::move(ring), {}, 1);
}

RingElement ring_monomial(PolyRingPtr ring, Expo e, Int coeff) {
    e.resize(ring->gens.size(), 0);
    RingElement r(std::move(ring));
    if (coeff != 0) r.terms.emplace(std::move(e), std::move(coeff));
    return r;
}

RingElement ring_generator(PolyRingPtr ring, int g) {
    Expo e(ring->gens.size(), 0);
    e[g] = 1;
    return ring_monomial(std::move(ring), std::move(e), 1);
}

namespace {

// Shared construction: record name/character/dimension and locate the
// fundamental weight at the top of each generator.
PolyRingPtr make_ring(std::string name, RootSystemPtr rs,
                      std::vector<std::pair<std::string, Character>> gens) {
    auto ring = std::make_shared<PolyRing>();
    ring->name = std::move(name);
    ring->rs = rs;
    ring->gen_of_fundamental.assign(rs->rank, -1);
    for (auto& [gname, ch] : gens) {
        GeneratorInfo info{std::move(gname), std::move(ch), -1, 0};
        info.dim = info.ch.virtual_dimension();
        auto best = info.ch.dom.begin();
        Int best_h = rs->height_key(best->first);
        for (auto it = std::next(info.ch.dom.begin()); it != info.ch.dom.end(); ++it) {
            Int h = rs->height_key(it->first);
            if (h > best_h || (h == best_h && it->first > best->first)) {
                best = it;
                best_h = h;
            }
        }
        const Weight& top = best->first;
        int nonzero = -1;
        for (int i = 0; i < rs->rank; ++i) {
            if (top.coords[i] == 0) continue;
            if (nonzero != -1 || top.coords[i] != 1)
                throw InvariantError(ring->name + ": generator " + info.name +
                                     " top weight is not fundamental");
            nonzero = i;
        }
        if (nonzero == -1 || best->second != 1)
            throw InvariantError(ring->name + ": generator " + info.name +
                                 " top weight is not fundamental with coefficient 1");
        info.fundamental = nonzero;
        if (ring->gen_of_fundamental[nonzero] != -1)
            throw InvariantError(ring->name + ": duplicate top fundamental weight");
        ring->gen_of_fundamental[nonzero] = static_cast<int>(ring->gens.size());
        ring->gens.push_back(std::move(info));
    }
    return ring;
}

std::map<std::string, PolyRingPtr>& ring_cache() {
    static std::map<std::string, PolyRingPtr> cache;
    return cache;
}
std::mutex ring_cache_mutex;

PolyRingPtr cached_ring(const std::string& key, PolyRingPtr (*build)(int), int arg) {
    {
        std::lock_guard<std::mutex> lock(ring_cache_mutex);
        auto it = ring_cache().find(key);
        if (it != ring_cache().end()) return it->second;
    }
    PolyRingPtr r = build(arg);
    std::lock_guard<std::mutex> lock(ring_cache_mutex);
    ring_cache().emplace(key, r);
    return r;
}

PolyRingPtr build_sl(int n) {
    auto rs = build_root_system(Series::A, 2 * n - 1);
    Character v = irreducible_character(rs, rs->fundamental_weights[0]);
    std::vector<std::pair<std::string, Character>> gens;
    for (int k = 1; k <= 2 * n - 1; ++k)
        gens.emplace_back("x" + std::to_string(k), exterior_power(v, k));
    return make_ring("R(SL" + std::to_string(2 * n) + ")", rs, std::move(gens));
}

PolyRingPtr build_sp(int n) {
    auto rs = build_root_system(Series::C, n);
    Character v = irreducible_character(rs, rs->fundamental_weights[0]);
    std::vector<std::pair<std::string, Character>> gens;
    for (int k = 1; k <= n; ++k)
        gens.emplace_back("y" + std::to_string(k), exterior_power(v, k));
    return make_ring("R(Sp" + std::to_string(2 * n) + ")", rs, std::move(gens));
}

PolyRingPtr build_e6(int) {
    auto rs = build_root_system(Series::E, 6);
    Character rho = irreducible_character(rs, rs->fundamental_weights[0]);
    Character rho_d = irreducible_character(rs, rs->fundamental_weights[5]);
    std::vector<std::pair<std::string, Character>> gens;
    gens.emplace_back("rho", rho);
    gens.emplace_back("rho*", rho_d);
    gens.emplace_back("L2rho", exterior_power(rho, 2));
    gens.emplace_back("L2rho*", exterior_power(rho_d, 2));
    gens.emplace_back("L3rho", exterior_power(rho, 3));
    gens.emplace_back("ad", irreducible_character(rs, rs->fundamental_weights[1]));
    return make_ring("R(E6)", rs, std::move(gens));
}

PolyRingPtr build_f4(int) {
    auto rs = build_root_system(Series::F, 4);
    Character rho = irreducible_character(rs, rs->fundamental_weights[3]);
    std::vector<std::pair<std::string, Character>> gens;
    gens.emplace_back("rho'", rho);
    gens.emplace_back("L2rho'", exterior_power(rho, 2));
    gens.emplace_back("L3rho'", exterior_power(rho, 3));
    gens.emplace_back("ad", irreducible_character(rs, rs->fundamental_weights[0]));
    return make_ring("R(F4)", rs, std::move(gens));
}

}  // namespace

PolyRingPtr ring_sl(int n) {
    if (n < 2 || n > 5) throw UnsupportedError("ring_sl: requires 2 <= n <= 5");
    return cached_ring("sl" + std::to_string(n), build_sl, n);
}

PolyRingPtr ring_sp(int n) {
    if (n < 2 || n > 5) throw UnsupportedError("ring_sp: requires 2 <= n <= 5");
    return cached_ring("sp" + std::to_string(n), build_sp, n);
}

PolyRingPtr ring_e6() {
    return cached_ring("e6", build_e6, 0);
}

PolyRingPtr ring_f4() {
    return cached_ring("f4", build_f4, 0);
}

PolyRingPtr ring_big(const PairSpec& spec) {
    return spec.kind == PairSpec::Kind::SlSp ? ring_sl(spec.n) : ring_e6();
}

PolyRingPtr ring_small(const PairSpec& spec) {
    return spec.kind == PairSpec::Kind::SlSp ? ring_sp(spec.n) : ring_f4();
}

namespace {

Character char_of_monomial(const PolyRingPtr& ring, const Expo& e,
                           std::map<Expo, Character, GrlexLess>& memo) {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    int g = -1;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) {
            g = static_cast<int>(i);
            break;
        }
    Character out = character_trivial(ring->rs);
    if (g >= 0) {
        Expo prev = e;
        --prev[g];
        out = tensor_product(char_of_monomial(ring, prev, memo), ring->gens[g].ch);
    }
    memo.emplace(e, out);
    return out;
}

}  // namespace

Character poly_to_char(const RingElement& p) {
    std::map<Expo, Character, GrlexLess> memo;
    Character acc = character_zero(p.ring->rs);
    for (const auto& [e, c] : p.terms)
        acc = char_add(acc, char_scale(char_of_monomial(p.ring, e, memo), c));
    return acc;
}

RingElement char_to_poly(PolyRingPtr ring, const Character& c) {
    if (ring->rs->series != c.rs->series || ring->rs->rank != c.rs->rank)
        throw InvariantError("char_to_poly: character is over a different group");
    std::map<Expo, Character, GrlexLess> memo;
    Character work = c;
    RingElement out(ring);
    while (!work.is_zero()) {
        auto best = work.dom.begin();
        Int best_h = c.rs->height_key(best->first);
        for (auto it = std::next(work.dom.begin()); it != work.dom.end(); ++it) {
            Int h = c.rs->height_key(it->first);
            if (h > best_h || (h == best_h && it->first > best->first)) {
                best = it;
                best_h = h;
            }
        }
        const Weight top = best->first;
        const Int mult = best->second;
        Expo e(ring->gens.size(), 0);
        for (int i = 0; i < ring->rs->rank; ++i) {
            if (top.coords[i] == 0) continue;
            int g = ring->gen_of_fundamental[i];
            if (g < 0)
                throw InvariantError("char_to_poly: top weight " + top.str() +
                                     " is not expressible in the generators");
            e[g] += top.coords[i];
        }
        out.terms[e] += mult;
        work = char_sub(work, char_scale(char_of_monomial(ring, e, memo), mult));
    }
    prune_terms(out.terms);
    return out;
}

Int dimension_evaluation(const RingElement& p) {
    Int acc = 0;
    for (const auto& [e, c] : p.terms) {
        Int t = c;
        for (std::size_t g = 0; g < e.size(); ++g)
            for (int k = 0; k < e[g]; ++k) t *= p.ring->gens[g].dim;
        acc += t;
    }
    return acc;
}

namespace {

void collect_monomials(int nvars, int remaining, int pos, Expo& cur, std::vector<Expo>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        cur[pos] = v;
        collect_monomials(nvars, remaining - v, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Expo> monomials_upto(int nvars, int d) {
    std::vector<Expo> out;
    Expo cur(nvars, 0);
    collect_monomials(nvars, d, 0, cur, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

std::vector<Expo> monomials_exact(int nvars, int d) {
    std::vector<Expo> out;
    for (auto& e : monomials_upto(nvars, d))
        if (std::accumulate(e.begin(), e.end(), 0) == d) out.push_back(std::move(e));
    return out;
}

RingElement RestrictionHom::apply(const RingElement& p) const {
    if (p.ring->name != big->name) throw InvariantError("RestrictionHom::apply: wrong ring");
    RingElement acc = ring_zero(small);
    for (const auto& [e, c] : p.terms) {
        RingElement t = ring_monomial(small, {}, c);
        for (std::size_t g = 0; g < e.size(); ++g)
            for (int k = 0; k < e[g]; ++k) t = t * images[g];
        acc = acc + t;
    }
    return acc;
}

std::shared_ptr<const RestrictionHom> restriction_hom(const PairSpec& spec) {
    static std::map<std::string, std::shared_ptr<const RestrictionHom>> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(spec.name());
        if (it != cache.end()) return it->second;
    }

    auto hom = std::make_shared<RestrictionHom>(RestrictionHom{
        restriction_matrix(spec), ring_big(spec), ring_small(spec), {}, {}, {}});
    for (const auto& gen : hom->big->gens) {
        Character rc = restrict_character(hom->pair, gen.ch);
        RingElement image = char_to_poly(hom->small, rc);
        if (!(poly_to_char(image) == rc))
            throw InvariantError("restriction_hom: round trip failed on " + gen.name);
        hom->restricted.push_back(std::move(rc));
        hom->images.push_back(std::move(image));
    }
    // Surjectivity certificate: for each small generator y_g some image equals
    // y_g plus a polynomial in y_0..y_{g-1}, so the y_g are reachable in turn.
    for (std::size_t g = 0; g < hom->small->gens.size(); ++g) {
        Expo unit(hom->small->gens.size(), 0);
        unit[g] = 1;
        const bool covered =
            std::any_of(hom->images.begin(), hom->images.end(), [&](const RingElement& im) {
                auto it = im.terms.find(unit);
                if (it == im.terms.end() || it->second != 1) return false;
                for (const auto& [e, c] : im.terms) {
                    if (e == unit) continue;
                    for (std::size_t v = g; v < e.size(); ++v)
                        if (e[v] != 0) return false;
                }
                return true;
            });
        if (!covered)
            throw InvariantError("restriction_hom: images are not triangular over " +
                                 hom->small->gens[g].name);
    }
    for (std::size_t a = 0; a < hom->images.size(); ++a)
        for (std::size_t b = a + 1; b < hom->images.size(); ++b)
            if (hom->images[a] == hom->images[b])
                hom->equal_pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    if (hom->equal_pairs.size() != static_cast<std::size_t>(hom->pair.m))
        throw InvariantError("restriction_hom: expected " + std::to_string(hom->pair.m) +
                             " coincident images, found " +
                             std::to_string(hom->equal_pairs.size()));

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(spec.name(), hom);
    return hom;
}

std::vector<RingElement> kernel_generators(const RestrictionHom& hom) {
    std::vector<RingElement> gens;
    for (auto [a, b] : hom.equal_pairs) {
        RingElement g = ring_generator(hom.big, a) - ring_generator(hom.big, b);
        if (!hom.apply(g).is_zero())
            throw InvariantError("kernel_generators: generator does not map to zero");
        gens.push_back(std::move(g));
    }
    return gens;
}

namespace {

// Images of all big-ring monomials of degree <= d, built incrementally in
// grlex order so each monomial reuses a predecessor.
std::map<Expo, RingElement, GrlexLess> monomial_images(const RestrictionHom& hom,
                                                       const std::vector<Expo>& mons) {
    std::map<Expo, RingElement, GrlexLess> images;
    for (const Expo& e : mons) {
        int g = -1;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) {
                g = static_cast<int>(i);
                break;
            }
        if (g < 0) {
            images.emplace(e, ring_one(hom.small));
            continue;
        }
        Expo prev = e;
        --prev[g];
        images.emplace(e, images.at(prev) * hom.images[g]);
    }
    return images;
}

std::vector<Int> coords_of(const RingElement& p, const std::vector<Expo>& basis) {
    std::vector<Int> v(basis.size(), Int(0));
    std::size_t hits = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = p.terms.find(basis[i]);
        if (it != p.terms.end()) {
            v[i] = it->second;
            ++hits;
        }
    }
    if (hits != p.terms.size())
        throw InvariantError("coords_of: polynomial leaves the monomial window");
    return v;
}

}  // namespace

std::vector<KernelSlice> kernel_lattice_degreewise(const RestrictionHom& hom, int d,
                                                   std::size_t max_monomials) {
    const int nbig = static_cast<int>(hom.big->gens.size());
    const int nsmall = static_cast<int>(hom.small->gens.size());
    const auto all_big = monomials_upto(nbig, d);
    if (all_big.size() > max_monomials)
        throw CapacityError("kernel_lattice_degreewise: " + std::to_string(all_big.size()) +
                            " monomials exceed the cap " + std::to_string(max_monomials));
    const auto images = monomial_images(hom, all_big);

    std::vector<KernelSlice> out;
    for (int e = 1; e <= d; ++e) {
        KernelSlice slice;
        slice.e = e;
        slice.monomials = monomials_upto(nbig, e);
        const auto ymons = monomials_upto(nsmall, e);
        ZMat mat;
        mat.reserve(slice.monomials.size());
        for (const Expo& x : slice.monomials) mat.push_back(coords_of(images.at(x), ymons));
        slice.kernel_basis = left_kernel(mat);
        out.push_back(std::move(slice));
    }
    return out;
}

KernelReport verify_kernel_generation(const RestrictionHom& hom, int d,
                                      std::size_t max_monomials) {
    KernelReport report{hom.pair.spec, d, {}, true};
    const auto slices = kernel_lattice_degreewise(hom, d, max_monomials);
    const auto gens = kernel_generators(hom);
    const int nbig = static_cast<int>(hom.big->gens.size());
    for (const auto& slice : slices) {
        ZMat ideal_rows;
        for (const auto& g : gens)
            for (const Expo& q : monomials_upto(nbig, slice.e - 1))
                ideal_rows.push_back(coords_of(ring_monomial(hom.big, q) * g, slice.monomials));
        ZMat ideal = hnf(std::move(ideal_rows));
        const bool match = ideal == slice.kernel_basis;
        report.per_degree.push_back({slice.e, static_cast<int>(slice.kernel_basis.size()),
                                     static_cast<int>(ideal.size()), match});
        report.pass = report.pass && match;
    }
    return report;
}

}  // namespace kring
