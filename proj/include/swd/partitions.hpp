#ifndef SWD_PARTITIONS_HPP
#define SWD_PARTITIONS_HPP

// Partitions, compositions (weights), conjugacy-class data for Sigma_r, and
// Young subgroups with their minimal-length right coset representatives.

#include <cstdint>
#include <string>
#include <vector>

#include "swd/errors.hpp"
#include "swd/permutation.hpp"

namespace swd {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, strictly positive

    Partition() = default;  // the empty partition of 0
    explicit Partition(std::vector<int> p);

    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }
    std::string to_string() const;  // comma-joined parts; "" for empty

    auto operator<=>(const Partition&) const = default;
};

struct Composition {
    std::vector<int> parts;  // non-negative

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }
    Partition sorted() const;  // zeros dropped, parts sorted descending
    std::string to_string() const;

    auto operator<=>(const Composition&) const = default;
};

// All partitions of r, in descending lexicographic order: (r) first,
// (1,...,1) last.
std::vector<Partition> partitions_of(int r);

// All compositions of r into exactly n non-negative parts ("weights"), in
// descending lexicographic order: (r,0,...,0) first.
std::vector<Composition> weights(int n, int r);

// z_mu = prod_i i^{k_i} k_i! where k_i = multiplicity of i in mu: the order
// of the centralizer of a permutation of cycle type mu.
std::int64_t centralizer_order(const Partition& mu);

struct ClassData {
    Partition type;
    std::int64_t class_size;
    std::int64_t centralizer;
};

// One entry per partition of r, in the partitions_of(r) order.
std::vector<ClassData> enumerate_classes(int r);

struct YoungData {
    // The Young subgroup Sigma_alpha: permutations preserving each
    // consecutive block of sizes alpha_1, alpha_2, ... (lex order).
    std::vector<Permutation> subgroup;
    // Minimal-length (= fewest inversions) representatives of the right
    // cosets Sigma_alpha sigma, in lex order of their one-line arrays.
    std::vector<Permutation> coset_reps;
};

YoungData young_data(const Composition& alpha);

// Index of the block (1-based part index of alpha) containing value v when
// {1..r} is cut into consecutive blocks of sizes alpha_1, alpha_2, ...
int block_of(const Composition& alpha, int v);

}  // namespace swd

#endif
