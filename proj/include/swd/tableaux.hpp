#ifndef SWD_TABLEAUX_HPP
#define SWD_TABLEAUX_HPP

// Standard Young tableaux with descents and major index, Schensted row
// insertion, Klyachko's congruence counts, irreducible Sigma_r characters by
// the Murnaghan-Nakayama rule, and semistandard tableau counts.

#include <cstdint>
#include <vector>

#include "swd/partitions.hpp"
#include "swd/permutation.hpp"

namespace swd {

struct StandardTableau {
    std::vector<std::vector<int>> rows;  // entries 1..r, rows/columns strict

    Partition shape() const;
    int size() const;  // r

    // i is a descent iff i+1 sits in a strictly lower row than i.
    std::vector<int> descent_set() const;
    int major_index() const;

    bool operator==(const StandardTableau&) const = default;
};

// Complete duplicate-free enumeration, deterministic order (entries 1..r
// placed in turn, candidate cells scanned top row to bottom).
std::vector<StandardTableau> enumerate_syt(const Partition& lambda);

// Hook length formula r! / prod(hooks): independent count oracle.
std::int64_t hook_length_count(const Partition& lambda);

// Row-insert sigma(1), ..., sigma(r) by the classical bumping rule.
StandardTableau schensted_P(const Permutation& sigma);

// |{t in SYT(lambda) : maj(t) = 1 mod r}|.
std::int64_t klyachko_count(const Partition& lambda, int r);

// chi^lambda evaluated on the class of cycle type mu (Murnaghan-Nakayama,
// memoized; safe for concurrent use).
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

// Number of semistandard tableaux of shape lambda with entries <= n, by
// backtracking enumeration; 0 iff lambda has more than n rows.
std::int64_t ssyt_count(const Partition& lambda, int n);

}  // namespace swd

#endif
