// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kring/cli.hpp"
#include "kring/intertwine.hpp"
#include "kring/ktheory.hpp"

using namespace kring;

namespace {

// wall-clock limits, seconds; criteria without a stated budget get 0 = none
constexpr double kLimitBranching = 60.0;
constexpr double kLimitCoincidence = 120.0;
constexpr double kLimitKernel = 600.0;
constexpr double kLimitTor = 1.0;
constexpr double kLimitIntertwiner = 300.0;
constexpr std::uint64_t kSeed = 42;
constexpr int kLoopElements = 30;

Weight W(std::vector<int> c) { return Weight(std::move(c)); }

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
    double limit_s = 0.0;
};

bool branching_identities(std::string& why) {
    const auto pair = restriction_matrix(PairSpec::e6_f4());
    const auto e6 = pair.big, f4 = pair.small;
    const auto r27 =
        decompose_character(restrict_character(pair, irreducible_character(e6, W({1, 0, 0, 0, 0, 0}))));
    const auto r78 =
        decompose_character(restrict_character(pair, irreducible_character(e6, W({0, 1, 0, 0, 0, 0}))));
    const std::map<Weight, Int> want27 = {{W({0, 0, 0, 1}), 1}, {W({0, 0, 0, 0}), 1}};
    const std::map<Weight, Int> want78 = {{W({1, 0, 0, 0}), 1}, {W({0, 0, 0, 1}), 1}};
    if (r27 != want27) {
        why = "27 does not split as 26 + 1";
        return false;
    }
    if (r78 != want78) {
        why = "78 does not split as 52 + 26";
        return false;
    }
    if (weyl_dimension(*f4, W({0, 0, 0, 1})) != 26 ||
        weyl_dimension(*f4, W({1, 0, 0, 0})) != 52) {
        why = "constituent dimensions are off";
        return false;
    }
    return true;
}

bool restriction_coincidence(std::string& why) {
    for (int n = 2; n <= 4; ++n) {
        const auto pair = restriction_matrix(PairSpec::sl_sp(n));
        for (int k = 1; k <= n - 1; ++k) {
            std::vector<int> a(2 * n - 1, 0), b(2 * n - 1, 0);
            a[k - 1] = 1;
            b[2 * n - k - 1] = 1;
            const auto ra = restrict_character(pair, irreducible_character(pair.big, W(a)));
            const auto rb = restrict_character(pair, irreducible_character(pair.big, W(b)));
            if (!(ra == rb)) {
                why = "exterior powers " + std::to_string(k) + " and " +
                      std::to_string(2 * n - k) + " differ for n = " + std::to_string(n);
                return false;
            }
        }
    }
    const auto pair = restriction_matrix(PairSpec::e6_f4());
    const auto e6 = pair.big;
    const auto r = [&](std::vector<int> lam) {
        return restrict_character(pair, irreducible_character(e6, W(std::move(lam))));
    };
    if (!(r({1, 0, 0, 0, 0, 0}) == r({0, 0, 0, 0, 0, 1}))) {
        why = "the two 27-dimensional restrictions differ";
        return false;
    }
    if (!(r({0, 0, 1, 0, 0, 0}) == r({0, 0, 0, 0, 1, 0}))) {
        why = "the two 351-dimensional restrictions differ";
        return false;
    }
    return true;
}

bool kernel_generation(std::string& why) {
    const struct {
        PairSpec spec;
        int d;
    } jobs[] = {{PairSpec::sl_sp(2), 3}, {PairSpec::sl_sp(3), 3}, {PairSpec::e6_f4(), 2}};
    for (const auto& j : jobs) {
        const auto report = verify_kernel_generation(*restriction_hom(j.spec), j.d);
        if (!report.pass) {
            why = "lattices differ for " + j.spec.name();
            return false;
        }
    }
    return true;
}

bool koszul_regularity(std::string& why) {
    const struct {
        PairSpec spec;
        int d;
    } jobs[] = {{PairSpec::sl_sp(2), 3}, {PairSpec::sl_sp(3), 3}, {PairSpec::e6_f4(), 2}};
    for (const auto& j : jobs) {
        const auto report = truncated_exactness(build_koszul(j.spec), j.d);
        if (!report.pass) {
            why = "homology does not vanish for " + j.spec.name();
            return false;
        }
        for (const auto& s : report.slices)
            for (std::size_t p = 1; p < s.h_ranks.size(); ++p)
                if (s.h_ranks[p] != 0) {
                    why = "H_" + std::to_string(p) + " nonzero in slice " +
                          std::to_string(s.e) + " for " + j.spec.name();
                    return false;
                }
    }
    return true;
}

bool tor_binomials(std::string& why) {
    const std::vector<PairSpec> specs = {PairSpec::sl_sp(2), PairSpec::sl_sp(3),
                                         PairSpec::sl_sp(4), PairSpec::e6_f4()};
    for (const auto& spec : specs) {
        const auto ranks = tor_ranks(spec);
        const int m = static_cast<int>(ranks.size()) - 1;
        for (int p = 0; p <= m; ++p)
            if (ranks[p] != binomial(m, p)) {
                why = "rank at p = " + std::to_string(p) + " is not binomial for " + spec.name();
                return false;
            }
    }
    return true;
}

bool split_shape(std::string& why) {
    const std::vector<PairSpec> specs = {PairSpec::sl_sp(2), PairSpec::sl_sp(3),
                                         PairSpec::sl_sp(4), PairSpec::e6_f4()};
    for (const auto& spec : specs) {
        const auto mod = k_theory_split(spec);
        const std::size_t expect = std::size_t{1} << mod.m;
        if (mod.basis.size() != expect) {
            why = spec.name() + ": basis size " + std::to_string(mod.basis.size()) +
                  ", expected " + std::to_string(expect);
            return false;
        }
        std::vector<Int> hist(mod.m + 1, 0);
        int k1 = 0;
        for (const auto& el : mod.basis) {
            if (el.shift < 0 || el.shift > mod.m) {
                why = spec.name() + ": shift out of range";
                return false;
            }
            ++hist[el.shift];
            k1 += el.shift == 1;
            if (el.coeff.nontrivial) {
                why = spec.name() + ": split coefficient is twisted";
                return false;
            }
        }
        for (int p = 0; p <= mod.m; ++p)
            if (hist[p] != binomial(mod.m, p)) {
                why = spec.name() + ": shift histogram is not binomial";
                return false;
            }
        if (k1 != mod.m) {
            why = spec.name() + ": degree-1 class count " + std::to_string(k1) +
                  ", expected " + std::to_string(mod.m);
            return false;
        }
    }
    return true;
}

bool twisted_coefficients(std::string& why) {
    const auto mod = k_theory_twisted(PairSpec::sl_sp(3));
    const bool want[] = {false, true, false, true};  // subsets {}, {1}, {2}, {1,2}
    if (mod.basis.size() != 4) {
        why = "sl6/sp6: twisted basis size is not 4";
        return false;
    }
    for (int i = 0; i < 4; ++i)
        if (mod.basis[i].coeff.nontrivial != want[i]) {
            why = "sl6/sp6: coefficient at position " + std::to_string(i) + " is " +
                  mod.basis[i].coeff.str();
            return false;
        }
    const auto ex = k_theory_twisted(PairSpec::e6_f4());
    for (const auto& el : ex.basis)
        if (el.coeff.nontrivial) {
            why = "e6/f4: class " + el.label + " is twisted";
            return false;
        }
    return true;
}

bool intertwiner_suite(std::string& why) {
    const std::pair<int, int> jobs[] = {{2, 1}, {3, 1}, {3, 2}};
    for (const auto& [n, k] : jobs) {
        const auto res = solve_intertwiner(n, k);
        const int predicted = k / 2 + 1;
        if (res.hom_dim != predicted || res.hom_dim_chars != predicted) {
            why = "(" + std::to_string(n) + "," + std::to_string(k) + "): hom dimension " +
                  std::to_string(res.hom_dim) + ", expected " + std::to_string(predicted);
            return false;
        }
        if (!res.alpha_in_solution_space || !res.alpha_invertible) {
            why = "(" + std::to_string(n) + "," + std::to_string(k) +
                  "): form power map is not an invertible solution";
            return false;
        }
        QMat g = qmat_identity(2 * n);
        g[0][0] = 2;
        g[2 * n - 1][2 * n - 1] = Rat(1, 2);
        const QMat chi = loop_matrix(n, k, g);
        for (const QMat& h : symplectic_elements(n, kLoopElements, kSeed)) {
            if (!qmat_is_identity(loop_matrix(n, k, h))) {
                why = "(" + std::to_string(n) + "," + std::to_string(k) +
                      "): loop of a symplectic element is not the identity";
                return false;
            }
            if (loop_matrix(n, k, qmat_mul(g, h)) != chi) {
                why = "(" + std::to_string(n) + "," + std::to_string(k) +
                      "): loop is not constant on the coset";
                return false;
            }
        }
    }
    return true;
}

bool property_suites(std::string& why) {
    // Weyl invariance and dimension preservation across every restricted generator
    for (const auto& spec : {PairSpec::sl_sp(2), PairSpec::sl_sp(3), PairSpec::sl_sp(4),
                             PairSpec::e6_f4()}) {
        const auto hom = restriction_hom(spec);
        for (std::size_t g = 0; g < hom->big->gens.size(); ++g) {
            const auto& big_c = hom->big->gens[g].ch;
            const auto& small_c = hom->restricted[g];
            if (big_c.virtual_dimension() != small_c.virtual_dimension()) {
                why = spec.name() + ": dimension changes under restriction of " +
                      hom->big->gens[g].name;
                return false;
            }
            // rebuild through the invariance-checking constructor
            std::vector<std::pair<Weight, Int>> ws;
            for (const auto& [w, m] : expand_full(small_c)) ws.emplace_back(w, m);
            if (!(character_from_weights(small_c.rs, ws) == small_c)) {
                why = spec.name() + ": restricted character is not Weyl invariant";
                return false;
            }
        }
        build_koszul(spec);  // throws if d o d != 0 or a generator is inhomogeneous
    }

    // CLI determinism: byte-identical output on repeated runs
    const std::vector<std::vector<std::string>> cmds = {
        {"branch", "e6/f4", "--format", "json"},
        {"kernel-verify", "sl4/sp4", "--format", "json"},
        {"ktheory", "sl6/sp6", "--twisted", "--format", "json"},
        {"intertwiner", "--n", "3", "--k", "2", "--format", "json"},
        {"loop", "--n", "2", "--k", "1", "--check", "5", "--seed", "7", "--format", "json"},
        {"e2", "e6/f4"},
    };
    for (const auto& cmd : cmds) {
        std::ostringstream o1, e1, o2, e2;
        const int c1 = run_cli(cmd, o1, e1);
        const int c2 = run_cli(cmd, o2, e2);
        if (c1 != 0 || c2 != 0) {
            why = "command '" + cmd[0] + "' exited nonzero";
            return false;
        }
        if (o1.str() != o2.str()) {
            why = "command '" + cmd[0] + "' is not deterministic";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"branching identities (27 = 26 + 1, 78 = 52 + 26)", branching_identities,
         kLimitBranching},
        {"restriction coincidences (symplectic n = 2..4, exceptional pair)",
         restriction_coincidence, kLimitCoincidence},
        {"kernel generation (degree 3 / degree 3 / degree 2)", kernel_generation,
         kLimitKernel},
        {"koszul regularity (H_p = 0 for p >= 1 in all slices)", koszul_regularity, 0.0},
        {"tor ranks are binomial for m = 1, 2, 3", tor_binomials, kLimitTor},
        {"split basis: 2^m classes, binomial shifts, m degree-1 classes", split_shape, 0.0},
        {"twisted coefficients (F, A_gamma, F, A_gamma; exceptional untwisted)",
         twisted_coefficients, 0.0},
        {"intertwiner suite ((2,1), (3,1), (3,2), 30 elements each)", intertwiner_suite,
         kLimitIntertwiner},
        {"property suites (invariance, dimensions, d o d = 0, determinism)",
         property_suites, 0.0},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string why;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            ok = false;
            why = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && c.limit_s > 0.0 && secs > c.limit_s) {
            ok = false;
            why = "exceeded the " + std::to_string(c.limit_s) + " s budget";
        }
        std::printf("criterion %zu: %s ... %s (%.2fs)\n", i + 1, c.name.c_str(),
                    ok ? "PASS" : "FAIL", secs);
        if (!ok) {
            std::printf("  reason: %s\n", why.c_str());
            ++failed;
        }
    }
    std::printf("%zu criteria: %zu passed, %d failed\n", criteria.size(),
                criteria.size() - failed, failed);
    return failed == 0 ? 0 : 1;
}
