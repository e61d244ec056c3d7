#include "kring/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace kring {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // product of i+1 consecutive integers is divisible by (i+1)!
    }
    return r;
}

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw InvariantError("exact_div: zero divisor");
    Int q = a / b;
    if (q * b != a) throw InvariantError("exact_div: not divisible");
    return q;
}

Int floor_div(const Int& a, const Int& b) {
    if (b <= 0) throw InvariantError("floor_div: denominator must be positive");
    Int q = a / b;  // truncates toward zero
    if (q * b > a) --q;
    return q;
}

ZMat zmat_zero(std::size_t rows, std::size_t cols) {
    return ZMat(rows, std::vector<Int>(cols, Int(0)));
}

namespace {

void row_sub(std::vector<Int>& a, const Int& q, const std::vector<Int>& b) {
    if (q == 0) return;
    for (std::size_t j = 0; j < a.size(); ++j) a[j] -= q * b[j];
}

// Row-reduces m in place to HNF, selecting pivots only among the first
// `pivot_cols` columns. Returns the number of pivot rows.
std::size_t hnf_in_place(ZMat& m, std::size_t pivot_cols) {
    const std::size_t rows = m.size();
    std::size_t p = 0;
    for (std::size_t j = 0; j < pivot_cols && p < rows; ++j) {
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = p; i < rows; ++i) {
                if (m[i][j] == 0) continue;
                if (best == rows || abs(m[i][j]) < abs(m[best][j])) best = i;
            }
            if (best == rows) break;
            std::swap(m[p], m[best]);
            bool clean = true;
            for (std::size_t i = p + 1; i < rows; ++i) {
                if (m[i][j] == 0) continue;
                row_sub(m[i], m[i][j] / m[p][j], m[p]);
                if (m[i][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (p < rows && m[p][j] != 0) {
            if (m[p][j] < 0)
                for (auto& x : m[p]) x = -x;
            for (std::size_t t = 0; t < p; ++t) row_sub(m[t], floor_div(m[t][j], m[p][j]), m[p]);
            ++p;
        }
    }
    return p;
}

}  // namespace

ZMat hnf(ZMat m) {
    if (m.empty()) return m;
    std::size_t p = hnf_in_place(m, m[0].size());
    m.resize(p);
    return m;
}

int zrank(ZMat m) {
    if (m.empty()) return 0;
    return static_cast<int>(hnf_in_place(m, m[0].size()));
}

ZMat left_kernel(const ZMat& m) {
    const std::size_t rows = m.size();
    if (rows == 0) return {};
    const std::size_t cols = m[0].size();
    ZMat aug = m;
    for (std::size_t i = 0; i < rows; ++i) {
        aug[i].resize(cols + rows, Int(0));
        aug[i][cols + i] = 1;
    }
    hnf_in_place(aug, cols);  // unimodular row ops: trailing block tracks them
    ZMat ker;
    for (const auto& row : aug) {
        bool zero = std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(cols),
                                [](const Int& x) { return x == 0; });
        if (zero) ker.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(cols), row.end());
    }
    return hnf(std::move(ker));
}

std::vector<Int> smith_invariants(ZMat m) {
    const std::size_t rows = m.size();
    if (rows == 0) return {};
    const std::size_t cols = m[0].size();
    std::vector<Int> inv;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t bi = rows, bj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (bi == rows || abs(m[i][j]) < abs(m[bi][bj])) bi = i, bj = j;
            }
        if (bi == rows) break;
        std::swap(m[t], m[bi]);
        for (auto& row : m) std::swap(row[t], row[bj]);
        for (;;) {
            bool again = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                row_sub(m[i], m[i][t] / m[t][t], m[t]);
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (std::size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    again = true;
                }
            }
            if (again) continue;
            // enforce divisibility of the remaining block by the pivot
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i)
                for (std::size_t j = t + 1; j < cols && fixed; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t c = 0; c < cols; ++c) m[t][c] += m[i][c];
                        fixed = false;
                    }
            if (fixed) break;
        }
        inv.push_back(abs(m[t][t]));
        ++t;
    }
    return inv;
}

QMat qmat_identity(std::size_t n) {
    QMat m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    const std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    QMat out(r, std::vector<Rat>(c, Rat(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

std::vector<Rat> qmat_apply(const QMat& m, const std::vector<Rat>& v) {
    std::vector<Rat> out(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0) out[i] += m[i][j] * v[j];
    return out;
}

namespace {

// Gaussian elimination to row echelon form; returns rank. If `track` is
// non-null it receives the same row operations (used for inversion).
std::size_t q_echelon(QMat& m, QMat* track) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t p = 0;
    for (std::size_t j = 0; j < cols && p < rows; ++j) {
        std::size_t piv = rows;
        for (std::size_t i = p; i < rows; ++i)
            if (m[i][j] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[p], m[piv]);
        if (track) std::swap((*track)[p], (*track)[piv]);
        Rat d = m[p][j];
        for (auto& x : m[p]) x /= d;
        if (track)
            for (auto& x : (*track)[p]) x /= d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == p || m[i][j] == 0) continue;
            Rat f = m[i][j];
            for (std::size_t c = 0; c < cols; ++c) m[i][c] -= f * m[p][c];
            if (track)
                for (std::size_t c = 0; c < (*track)[i].size(); ++c)
                    (*track)[i][c] -= f * (*track)[p][c];
        }
        ++p;
    }
    return p;
}

}  // namespace

Rat qmat_det(QMat m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t piv = n;
        for (std::size_t i = j; i < n; ++i)
            if (m[i][j] != 0) {
                piv = i;
                break;
            }
        if (piv == n) return 0;
        if (piv != j) {
            std::swap(m[piv], m[j]);
            det = -det;
        }
        det *= m[j][j];
        for (std::size_t i = j + 1; i < n; ++i) {
            if (m[i][j] == 0) continue;
            Rat f = m[i][j] / m[j][j];
            for (std::size_t c = j; c < n; ++c) m[i][c] -= f * m[j][c];
        }
    }
    return det;
}

int qrank(QMat m) {
    return static_cast<int>(q_echelon(m, nullptr));
}

bool qmat_is_identity(const QMat& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != Rat(i == j ? 1 : 0)) return false;
    }
    return true;
}

QMat qmat_inverse(const QMat& m) {
    const std::size_t n = m.size();
    QMat work = m, inv = qmat_identity(n);
    if (q_echelon(work, &inv) != n) throw InvariantError("qmat_inverse: singular matrix");
    return inv;
}

QMat qmat_right_nullspace(const QMat& m) {
    QMat work = m;
    const std::size_t rank = q_echelon(work, nullptr);
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0, j = 0; i < rank; ++i) {
        while (j < cols && work[i][j] == 0) ++j;
        pivot_col.push_back(j);
        is_pivot[j] = true;
    }
    QMat basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[j] = 1;
        for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = -work[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace kring
