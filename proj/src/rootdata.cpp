#include "kring/rootdata.hpp"

#include <algorithm>
#include <set>

namespace kring {

std::string series_name(Series s) {
    return std::string(1, static_cast<char>(s));
}

bool Weight::dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

Weight Weight::scaled(int k) const {
    Weight r = *this;
    for (auto& c : r.coords) c *= k;
    return r;
}

std::string Weight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

Weight RootSystem::reflect(const Weight& w, int i) const {
    // s_i(w) = w - <w, alpha_i^vee> alpha_i; alpha_i is column i of the Cartan matrix
    Weight r = w;
    const int c = w.coords[i];
    if (c == 0) return r;
    for (int j = 0; j < rank; ++j) r.coords[j] -= c * cartan[j][i];
    return r;
}

Int RootSystem::pair_coroot(const Weight& w, const PosRoot& r) const {
    Int s = 0;
    for (int i = 0; i < rank; ++i) s += Int(r.coroot_coords[i]) * w.coords[i];
    return s;
}

std::vector<Rat> RootSystem::root_coords_of(const Weight& w) const {
    std::vector<Rat> c(w.coords.begin(), w.coords.end());
    return qmat_apply(cartan_inverse, c);
}

bool RootSystem::in_root_lattice(const Weight& w) const {
    for (const Rat& x : root_coords_of(w))
        if (denominator(x) != 1) return false;
    return true;
}

Int RootSystem::parabolic_order(unsigned mask) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = parabolic_cache_.find(mask);
        if (it != parabolic_cache_.end()) return it->second;
    }
    // Orbit of the regular-in-the-parabolic weight sum of omega_i, i in mask;
    // its stabilizer there is trivial, so orbit size equals the group order.
    Weight seed(std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i)
        if (mask >> i & 1u) seed.coords[i] = 1;
    std::set<Weight> seen{seed};
    std::vector<Weight> frontier{seed};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier)
            for (int i = 0; i < rank; ++i) {
                if (!(mask >> i & 1u)) continue;
                Weight r = reflect(w, i);
                if (seen.insert(r).second) next.push_back(std::move(r));
            }
        frontier = std::move(next);
    }
    Int order = seen.size();
    std::lock_guard<std::mutex> lock(cache_mutex_);
    parabolic_cache_.emplace(mask, order);
    return order;
}

Int RootSystem::weyl_order() const {
    return parabolic_order((1u << rank) - 1u);
}

Int RootSystem::orbit_size(const Weight& w) const {
    if (!w.dominant()) throw InvariantError("orbit_size: weight is not dominant");
    unsigned stab = 0;
    for (int i = 0; i < rank; ++i)
        if (w.coords[i] == 0) stab |= 1u << i;
    return exact_div(weyl_order(), parabolic_order(stab));
}

Int RootSystem::height_key(const Weight& w) const {
    Int s = 0;
    for (int i = 0; i < rank; ++i) s += height_functional_[i] * w.coords[i];
    return s;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(Series s, int rank) {
    std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    switch (s) {
        case Series::A:
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            break;
        case Series::C:
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            c[rank - 2][rank - 1] = -2;  // <alpha_n, alpha_(n-1)^vee>, alpha_n long
            break;
        case Series::E:
            link(0, 2);
            link(2, 3);
            link(3, 4);
            link(4, 5);
            link(1, 3);
            break;
        case Series::F:
            link(0, 1);
            link(2, 3);
            c[1][2] = -1;  // <alpha_3, alpha_2^vee>
            c[2][1] = -2;  // <alpha_2, alpha_3^vee>, alpha_2 long, alpha_3 short
            break;
    }
    return c;
}

std::vector<int> symmetrizer_for(Series s, int rank) {
    std::vector<int> d(rank, 1);
    if (s == Series::C) d[rank - 1] = 2;
    if (s == Series::F) d[0] = d[1] = 2;
    return d;
}

std::size_t expected_positive_roots(Series s, int rank) {
    switch (s) {
        case Series::A: return static_cast<std::size_t>(rank) * (rank + 1) / 2;
        case Series::C: return static_cast<std::size_t>(rank) * rank;
        case Series::E: return 36;
        case Series::F: return 24;
    }
    return 0;
}

}  // namespace

RootSystemPtr build_root_system(Series s, int rank) {
    const bool ok = (s == Series::A && rank >= 1 && rank <= 9) ||
                    (s == Series::C && rank >= 2 && rank <= 6) ||
                    (s == Series::E && rank == 6) || (s == Series::F && rank == 4);
    if (!ok)
        throw UnsupportedError("build_root_system: unsupported type " + series_name(s) +
                               std::to_string(rank));

    static std::map<std::pair<char, int>, RootSystemPtr> cache;
    static std::mutex cache_mutex;
    const auto key = std::make_pair(static_cast<char>(s), rank);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    auto rs = std::make_shared<RootSystem>();
    rs->series = s;
    rs->rank = rank;
    rs->cartan = cartan_matrix(s, rank);
    rs->symmetrizer = symmetrizer_for(s, rank);
    for (int j = 0; j < rank; ++j) {
        std::vector<int> col(rank), unit(rank, 0);
        for (int i = 0; i < rank; ++i) col[i] = rs->cartan[i][j];
        unit[j] = 1;
        rs->simple_roots.emplace_back(std::move(col));
        rs->fundamental_weights.emplace_back(std::move(unit));
    }
    rs->weyl_vector = Weight(std::vector<int>(rank, 1));

    QMat qc(rank, std::vector<Rat>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) qc[i][j] = rs->cartan[i][j];
    rs->cartan_inverse = qmat_inverse(qc);

    // Positive roots: reflection closure of the simple roots, keeping the
    // nonnegative half. Root length is constant along the orbit.
    struct RootRec {
        std::vector<int> rc;
        Weight wt;
        int half_norm;
    };
    std::set<std::vector<int>> seen;
    std::vector<RootRec> frontier, all;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> rc(rank, 0);
        rc[i] = 1;
        RootRec r{rc, rs->simple_roots[i], rs->symmetrizer[i]};
        seen.insert(rc);
        frontier.push_back(r);
        all.push_back(std::move(r));
    }
    while (!frontier.empty()) {
        std::vector<RootRec> next;
        for (const auto& r : frontier)
            for (int i = 0; i < rank; ++i) {
                RootRec nr{r.rc, rs->reflect(r.wt, i), r.half_norm};
                nr.rc[i] -= r.wt.coords[i];
                if (seen.insert(nr.rc).second) {
                    next.push_back(nr);
                    all.push_back(std::move(nr));
                }
            }
        frontier = std::move(next);
    }
    for (auto& r : all) {
        bool pos = std::all_of(r.rc.begin(), r.rc.end(), [](int x) { return x >= 0; });
        if (!pos) continue;
        PosRoot pr;
        pr.root_coords = r.rc;
        pr.wt = r.wt;
        pr.half_norm = r.half_norm;
        pr.coroot_coords.resize(rank);
        for (int i = 0; i < rank; ++i) {
            int num = r.rc[i] * rs->symmetrizer[i];
            if (num % r.half_norm != 0)
                throw InvariantError("build_root_system: non-integral coroot");
            pr.coroot_coords[i] = num / r.half_norm;
        }
        rs->positive_roots.push_back(std::move(pr));
    }
    std::sort(rs->positive_roots.begin(), rs->positive_roots.end(),
              [](const PosRoot& a, const PosRoot& b) { return a.root_coords < b.root_coords; });

    if (rs->positive_roots.size() != expected_positive_roots(s, rank))
        throw InvariantError("build_root_system: positive root count mismatch for " + rs->name());
    Weight sum(std::vector<int>(rank, 0));
    for (const auto& r : rs->positive_roots) sum = sum + r.wt;
    if (sum != rs->weyl_vector.scaled(2))
        throw InvariantError("build_root_system: Weyl vector identity failed for " + rs->name());

    // Dominance-compatible functional: row sums of det(C) * C^{-1}, which take
    // the value det(C) > 0 on every simple root.
    Rat det = qmat_det(qc);
    rs->height_functional_.resize(rank);
    for (int j = 0; j < rank; ++j) {
        Rat colsum = 0;
        for (int i = 0; i < rank; ++i) colsum += rs->cartan_inverse[i][j];
        Rat u = det * colsum;
        if (denominator(u) != 1 || u <= 0)
            throw InvariantError("build_root_system: bad height functional");
        rs->height_functional_[j] = numerator(u);
    }

    RootSystemPtr out = rs;
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, out);
    return out;
}

std::pair<Weight, int> dominant_representative(const RootSystem& rs, Weight w) {
    int parity = 1;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < rs.rank; ++i)
            if (w.coords[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return {std::move(w), parity};
        w = rs.reflect(w, neg);
        parity = -parity;
    }
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant) {
    if (!dominant.dominant()) throw InvariantError("weyl_orbit: weight is not dominant");
    std::set<Weight> seen{dominant};
    std::vector<Weight> frontier{dominant};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier)
            for (int i = 0; i < rs.rank; ++i) {
                Weight r = rs.reflect(w, i);
                if (seen.insert(r).second) next.push_back(std::move(r));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.dominant()) throw InvariantError("weyl_dimension: weight is not dominant");
    const Weight shifted = lambda + rs.weyl_vector;
    Int num = 1, den = 1;
    for (const auto& r : rs.positive_roots) {
        num *= rs.pair_coroot(shifted, r);
        den *= rs.pair_coroot(rs.weyl_vector, r);
    }
    return exact_div(num, den);
}

}  // namespace kring
