#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "kring/linalg.hpp"
#include "kring/numeric.hpp"

namespace kring {

enum class Series : char { A = 'A', C = 'C', E = 'E', F = 'F' };

std::string series_name(Series s);

// Integral weight in the fundamental-weight basis (Dynkin labels), so
// coords[i] = <w, alpha_i^vee> and dominance is coordinatewise nonnegativity.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

    auto operator<=>(const Weight&) const = default;

    int operator[](std::size_t i) const { return coords[i]; }
    std::size_t rank() const { return coords.size(); }
    bool dominant() const;
    bool is_zero() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight scaled(int k) const;
    std::string str() const;
};

struct PosRoot {
    std::vector<int> root_coords;    // expansion in simple roots
    std::vector<int> coroot_coords;  // expansion of alpha^vee in simple coroots
    Weight wt;                       // fundamental-weight coordinates
    int half_norm;                   // (alpha,alpha)/2, normalized so short roots give 1
};

// Immutable root datum for one of the supported series. Construction
// validates the positive-root count and the Weyl-vector identity.
class RootSystem {
  public:
    Series series;
    int rank;
    std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<int> symmetrizer;          // d_i with d_i * cartan[i][j] symmetric
    std::vector<Weight> simple_roots;      // columns of the Cartan matrix
    std::vector<Weight> fundamental_weights;
    std::vector<PosRoot> positive_roots;
    Weight weyl_vector;  // all-ones: half the sum of positive roots
    QMat cartan_inverse;

    std::string name() const { return series_name(series) + std::to_string(rank); }

    // s_i(w), a single simple reflection.
    Weight reflect(const Weight& w, int i) const;

    // <w, alpha^vee> for a positive root, an integer.
    Int pair_coroot(const Weight& w, const PosRoot& r) const;

    // Coordinates of w in the simple-root basis (rational in general).
    std::vector<Rat> root_coords_of(const Weight& w) const;

    // Whether w lies in the root lattice.
    bool in_root_lattice(const Weight& w) const;

    // Order of the parabolic subgroup generated by the reflections in the
    // bitmask; memoized. The full mask gives the Weyl group order.
    Int parabolic_order(unsigned mask) const;
    Int weyl_order() const;

    // Orbit size |W w| for dominant w, via the stabilizer parabolic.
    Int orbit_size(const Weight& dominant) const;

    // Dominance-compatible positive integral linear functional: a strictly
    // higher weight in dominance order has a strictly larger value.
    Int height_key(const Weight& w) const;

  private:
    mutable std::map<unsigned, Int> parabolic_cache_;
    mutable std::mutex cache_mutex_;
    std::vector<Int> height_functional_;

    friend std::shared_ptr<const RootSystem> build_root_system(Series, int);
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Factory with transparent caching; supported: A (rank 1..9), C (rank 2..6),
// E6, F4. Anything else throws UnsupportedError.
RootSystemPtr build_root_system(Series s, int rank);

// Unique dominant element of the Weyl orbit together with the parity
// (-1)^(number of reflections applied).
std::pair<Weight, int> dominant_representative(const RootSystem& rs, Weight w);

// Full orbit of a dominant weight, sorted. Throws InvariantError if the
// input is not dominant.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant);

// Weyl dimension formula evaluated over the stored positive roots.
Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

}  // namespace kring
