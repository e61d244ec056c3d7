#include "kring/intertwine.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "kring/rootdata.hpp"

namespace kring {

namespace {

std::vector<std::vector<int>> subsets_of(int universe, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < universe; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

QMat qmat_sub(const QMat& a, const QMat& b) {
    QMat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

QMat qmat_scale(const QMat& a, const Rat& s) {
    QMat r = a;
    for (auto& row : r)
        for (auto& x : row) x *= s;
    return r;
}

bool qmat_zero(const QMat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

// Elementary 2n x 2n Chevalley matrices of sp_2n: short-node triples for
// i < n-1, the long-node triple at i = n-1. The form pairs v_i with v_(n+i).
struct SpGenerators {
    std::vector<QMat> e, f, h;
};

SpGenerators sp_generators(int n) {
    const int d = 2 * n;
    auto unit = [&](int r, int c, int s) {
        QMat m(d, std::vector<Rat>(d, Rat(0)));
        m[r][c] = s;
        return m;
    };
    auto add = [&](QMat a, const QMat& b) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a[i][j] += b[i][j];
        return a;
    };
    SpGenerators g;
    for (int i = 0; i + 1 < n; ++i) {
        g.e.push_back(add(unit(i, i + 1, 1), unit(n + i + 1, n + i, -1)));
        g.f.push_back(add(unit(i + 1, i, 1), unit(n + i, n + i + 1, -1)));
        g.h.push_back(add(add(unit(i, i, 1), unit(i + 1, i + 1, -1)),
                          add(unit(n + i, n + i, -1), unit(n + i + 1, n + i + 1, 1))));
    }
    g.e.push_back(unit(n - 1, 2 * n - 1, 1));
    g.f.push_back(unit(2 * n - 1, n - 1, 1));
    g.h.push_back(add(unit(n - 1, n - 1, 1), unit(2 * n - 1, 2 * n - 1, -1)));
    return g;
}

// Derivation action on the wedge basis: replace one factor, resort, sign by
// the number of positions moved.
QMat derive_wedge(const QMat& x, const std::vector<std::vector<int>>& basis,
                  const std::map<std::vector<int>, std::size_t>& index) {
    const std::size_t dim = basis.size();
    QMat out(dim, std::vector<Rat>(dim, Rat(0)));
    for (std::size_t col = 0; col < dim; ++col) {
        const auto& T = basis[col];
        for (std::size_t j = 0; j < T.size(); ++j) {
            const int s = T[j];
            for (std::size_t t = 0; t < x.size(); ++t) {
                if (x[t][s] == 0) continue;
                if (static_cast<int>(t) != s &&
                    std::binary_search(T.begin(), T.end(), static_cast<int>(t)))
                    continue;
                std::vector<int> S;
                S.reserve(T.size());
                for (std::size_t u = 0; u < T.size(); ++u)
                    if (u != j) S.push_back(T[u]);
                const int c = static_cast<int>(
                    std::lower_bound(S.begin(), S.end(), static_cast<int>(t)) - S.begin());
                S.insert(S.begin() + c, static_cast<int>(t));
                const int sign = (static_cast<int>(j) + c) % 2 == 0 ? 1 : -1;
                out[index.at(S)][col] += sign * x[t][s];
            }
        }
    }
    return out;
}

QMat bracket(const QMat& a, const QMat& b) {
    return qmat_sub(qmat_mul(a, b), qmat_mul(b, a));
}

}  // namespace

WedgeAction wedge_action(int n, int k, std::size_t max_dim) {
    if (n < 2 || k < 0 || k > 2 * n) throw UnsupportedError("wedge_action: need n >= 2, 0 <= k <= 2n");
    WedgeAction w;
    w.n = n;
    w.k = k;
    w.basis = subsets_of(2 * n, k);
    if (w.basis.size() > max_dim)
        throw CapacityError("wedge_action: dimension " + std::to_string(w.basis.size()) +
                            " exceeds cap " + std::to_string(max_dim));
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < w.basis.size(); ++i) index.emplace(w.basis[i], i);

    const SpGenerators g = sp_generators(n);
    for (int i = 0; i < n; ++i) {
        w.e.push_back(derive_wedge(g.e[i], w.basis, index));
        w.f.push_back(derive_wedge(g.f[i], w.basis, index));
        w.h.push_back(derive_wedge(g.h[i], w.basis, index));
    }

    const auto rs = build_root_system(Series::C, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const QMat ef = bracket(w.e[i], w.f[j]);
            if (i == j ? !qmat_zero(qmat_sub(ef, w.h[i])) : !qmat_zero(ef))
                throw InvariantError("wedge_action: [e,f] relation failed");
            if (!qmat_zero(qmat_sub(bracket(w.h[i], w.e[j]),
                                    qmat_scale(w.e[j], rs->cartan[i][j]))))
                throw InvariantError("wedge_action: [h,e] relation failed");
            if (!qmat_zero(qmat_sub(bracket(w.h[i], w.f[j]),
                                    qmat_scale(w.f[j], -rs->cartan[i][j]))))
                throw InvariantError("wedge_action: [h,f] relation failed");
        }
    return w;
}

std::vector<std::vector<int>> wedge_weights(int n, int k) {
    std::vector<std::vector<int>> out;
    for (const auto& S : subsets_of(2 * n, k)) {
        std::vector<int> wt(n, 0);
        for (int s : S) s < n ? ++wt[s] : --wt[s - n];
        out.push_back(std::move(wt));
    }
    return out;
}

namespace {

// Exterior algebra elements as subset -> coefficient maps.
using WedgeElt = std::map<std::vector<int>, Rat>;

WedgeElt wedge_mul(const WedgeElt& a, const WedgeElt& b) {
    WedgeElt out;
    for (const auto& [sa, ca] : a)
        for (const auto& [sb, cb] : b) {
            std::vector<int> merged;
            merged.reserve(sa.size() + sb.size());
            int inversions = 0;
            std::size_t ia = 0, ib = 0;
            bool collide = false;
            while (ia < sa.size() && ib < sb.size()) {
                if (sa[ia] == sb[ib]) {
                    collide = true;
                    break;
                }
                if (sa[ia] < sb[ib])
                    merged.push_back(sa[ia++]);
                else {
                    inversions += static_cast<int>(sa.size() - ia);
                    merged.push_back(sb[ib++]);
                }
            }
            if (collide) continue;
            while (ia < sa.size()) merged.push_back(sa[ia++]);
            while (ib < sb.size()) merged.push_back(sb[ib++]);
            const Rat term = (inversions % 2 == 0 ? ca : -ca) * cb;
            out[merged] += term;
            if (out[merged] == 0) out.erase(merged);
        }
    return out;
}

}  // namespace

QMat form_power_map(int n, int k, std::size_t max_dim) {
    if (k < 0 || k > n) throw UnsupportedError("form_power_map: requires 0 <= k <= n");
    const auto src = subsets_of(2 * n, k);
    const auto dst = subsets_of(2 * n, 2 * n - k);
    if (src.size() > max_dim || dst.size() > max_dim)
        throw CapacityError("form_power_map: dimension exceeds cap");
    std::map<std::vector<int>, std::size_t> dst_index;
    for (std::size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i], i);

    WedgeElt form;  // sum_i v_i wedge v_(n+i)
    for (int i = 0; i < n; ++i) form[{i, n + i}] = 1;
    WedgeElt power{{{}, Rat(1)}};
    for (int i = 0; i < n - k; ++i) power = wedge_mul(power, form);

    QMat out(dst.size(), std::vector<Rat>(src.size(), Rat(0)));
    for (std::size_t col = 0; col < src.size(); ++col) {
        const WedgeElt image = wedge_mul(WedgeElt{{src[col], Rat(1)}}, power);
        for (const auto& [s, c] : image) out[dst_index.at(s)][col] = c;
    }
    return out;
}

QMat compound_matrix(const QMat& g, int k) {
    const int d = static_cast<int>(g.size());
    const auto subs = subsets_of(d, k);
    QMat out(subs.size(), std::vector<Rat>(subs.size(), Rat(0)));
    for (std::size_t r = 0; r < subs.size(); ++r)
        for (std::size_t c = 0; c < subs.size(); ++c) {
            QMat minor(k, std::vector<Rat>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) minor[i][j] = g[subs[r][i]][subs[c][j]];
            out[r][c] = qmat_det(std::move(minor));
        }
    return out;
}

IntertwinerResult solve_intertwiner(int n, int k, std::size_t max_dim) {
    const int kk = 2 * n - k;
    const WedgeAction low = wedge_action(n, k, max_dim);
    const WedgeAction high = wedge_action(n, kk, max_dim);
    const auto wt_low = wedge_weights(n, k);
    const auto wt_high = wedge_weights(n, kk);

    // Unknown entries A[S][T] with matching torus weights; all others vanish
    // on any intertwiner by the h-equations.
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> var_index;
    for (std::size_t s = 0; s < high.dim(); ++s)
        for (std::size_t t = 0; t < low.dim(); ++t)
            if (wt_high[s] == wt_low[t]) {
                var_index.emplace(std::make_pair(s, t), vars.size());
                vars.emplace_back(s, t);
            }

    QMat equations;
    auto add_equations = [&](const QMat& phi, const QMat& psi) {
        // (A phi - psi A)[s][t] = 0
        for (std::size_t s = 0; s < high.dim(); ++s)
            for (std::size_t t = 0; t < low.dim(); ++t) {
                std::map<std::size_t, Rat> row;
                for (std::size_t u = 0; u < low.dim(); ++u) {
                    if (phi[u][t] == 0) continue;
                    auto it = var_index.find(std::make_pair(s, u));
                    if (it != var_index.end()) row[it->second] += phi[u][t];
                }
                for (std::size_t v = 0; v < high.dim(); ++v) {
                    if (psi[s][v] == 0) continue;
                    auto it = var_index.find(std::make_pair(v, t));
                    if (it != var_index.end()) row[it->second] -= psi[s][v];
                }
                if (row.empty()) continue;
                std::vector<Rat> dense(vars.size(), Rat(0));
                for (const auto& [idx, val] : row) dense[idx] = val;
                equations.push_back(std::move(dense));
            }
    };
    for (int i = 0; i < n; ++i) {
        add_equations(low.e[i], high.e[i]);
        add_equations(low.f[i], high.f[i]);
    }

    IntertwinerResult res;
    res.n = n;
    res.k = k;
    res.hom_dim = static_cast<int>(vars.size()) - qrank(equations);

    // Independent count: sum over irreducibles of the multiplicity products.
    const auto rs = build_root_system(Series::C, n);
    const Character v = irreducible_character(rs, rs->fundamental_weights[0]);
    const auto da = decompose_character(exterior_power(v, k));
    const auto db = decompose_character(exterior_power(v, kk));
    res.hom_dim_chars = 0;
    for (const auto& [w, ma] : da) {
        auto it = db.find(w);
        if (it != db.end()) res.hom_dim_chars += ma * it->second;
    }

    res.alpha = form_power_map(n, k, max_dim);
    res.alpha_in_solution_space = true;
    for (int i = 0; i < n; ++i) {
        const std::vector<std::pair<const QMat*, const QMat*>> checks{
            {&low.e[i], &high.e[i]}, {&low.f[i], &high.f[i]}, {&low.h[i], &high.h[i]}};
        for (const auto& [phi, psi] : checks)
            if (!qmat_zero(qmat_sub(qmat_mul(res.alpha, *phi), qmat_mul(*psi, res.alpha))))
                res.alpha_in_solution_space = false;
    }
    res.alpha_invertible = qmat_det(res.alpha) != 0;
    return res;
}

QMat loop_matrix(int n, int k, const QMat& g, std::size_t max_dim) {
    if (g.size() != static_cast<std::size_t>(2 * n))
        throw InvariantError("loop_matrix: matrix size must be 2n");
    if (qmat_det(g) != 1) throw InvariantError("loop_matrix: determinant must be 1");
    const QMat alpha = form_power_map(n, k, max_dim);
    const QMat lo = compound_matrix(g, k);
    const QMat hi = compound_matrix(g, 2 * n - k);
    return qmat_mul(qmat_mul(lo, qmat_inverse(alpha)), qmat_mul(qmat_inverse(hi), alpha));
}

bool is_symplectic(int n, const QMat& g) {
    const int d = 2 * n;
    QMat j(d, std::vector<Rat>(d, Rat(0)));
    for (int i = 0; i < n; ++i) {
        j[i][n + i] = 1;
        j[n + i][i] = -1;
    }
    QMat gt(d, std::vector<Rat>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) gt[r][c] = g[c][r];
    return qmat_zero(qmat_sub(qmat_mul(qmat_mul(gt, j), g), j));
}

namespace {

QMat exp_nilpotent(const QMat& x) {
    const std::size_t d = x.size();
    QMat acc = qmat_identity(d), term = qmat_identity(d);
    for (std::size_t t = 1; t <= d + 1; ++t) {
        term = qmat_mul(term, x);
        bool zero = true;
        for (auto& row : term)
            for (auto& v : row) {
                v /= Rat(t);
                if (v != 0) zero = false;
            }
        if (zero) return acc;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) acc[i][j] += term[i][j];
    }
    throw InvariantError("exp_nilpotent: matrix is not nilpotent");
}

int nonzero_small(std::mt19937_64& rng) {
    static const int vals[4] = {-2, -1, 1, 2};
    return vals[rng() % 4];
}

}  // namespace

std::vector<QMat> symplectic_elements(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const SpGenerators g = sp_generators(n);
    std::vector<QMat> out;
    for (int c = 0; c < count; ++c) {
        QMat m = qmat_identity(2 * n);
        for (int step = 0; step < 8; ++step) {
            const std::size_t pick = rng() % (2 * n);
            const QMat& x = pick < static_cast<std::size_t>(n) ? g.e[pick] : g.f[pick - n];
            m = qmat_mul(m, exp_nilpotent(qmat_scale(x, nonzero_small(rng))));
        }
        if (!is_symplectic(n, m))
            throw InvariantError("symplectic_elements: product left the group");
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<QMat> special_linear_elements(int size, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<QMat> out;
    for (int c = 0; c < count; ++c) {
        QMat m = qmat_identity(size);
        for (int step = 0; step < 8; ++step) {
            const std::size_t i = rng() % size;
            std::size_t j = rng() % (size - 1);
            if (j >= i) ++j;
            QMat t = qmat_identity(size);
            t[i][j] = nonzero_small(rng);
            m = qmat_mul(m, t);
        }
        if (qmat_det(m) != 1)
            throw InvariantError("special_linear_elements: determinant drifted");
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace kring
