#ifndef SWD_PERMUTATION_HPP
#define SWD_PERMUTATION_HPP

// Permutations of {1..r} in one-line notation: entry i is sigma(i).
// Composition is (sigma o tau)(i) = sigma(tau(i)), chosen so the right place
// action on words, (a.sigma)_j = a_{sigma(j)}, satisfies (a.sigma).tau =
// a.(sigma tau).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "swd/errors.hpp"

namespace swd {

std::int64_t factorial(int r);

class Permutation {
  public:
    Permutation() = default;  // empty (r = 0)
    explicit Permutation(std::vector<int> one_line);  // validates bijectivity
    static Permutation identity(int r);

    int size() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[i - 1]; }  // 1-indexed
    const std::vector<int>& one_line() const { return img_; }

    Permutation compose(const Permutation& tau) const;  // i -> this(tau(i))
    Permutation inverse() const;
    bool is_identity() const;

    auto operator<=>(const Permutation&) const = default;  // lex on one-line

    // Positions i (1-indexed, i < r) with sigma(i) > sigma(i+1), ascending.
    std::vector<int> descent_set() const;
    int major_index() const;

    std::vector<int> cycle_type() const;  // lengths sorted descending

    // Rank among the r! one-line arrays in lexicographic order (Lehmer code).
    std::int64_t lex_rank() const;
    static Permutation from_lex_rank(int r, std::int64_t rank);

    std::string to_string() const;  // "(2,3,1)"

  private:
    std::vector<int> img_;
};

// All of Sigma_r in lexicographic order, with rank arithmetic. Built once per
// r, shared, immutable.
class PermTable {
  public:
    static std::shared_ptr<const PermTable> get(int r);

    int r() const { return r_; }
    std::int64_t size() const { return static_cast<std::int64_t>(perms_.size()); }
    const Permutation& at(std::int64_t rank) const { return perms_[rank]; }
    std::int64_t rank_of(const Permutation& s) const { return s.lex_rank(); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const;  // rank of at(a)o at(b)
    std::int64_t inv(std::int64_t a) const { return inv_[a]; }

  private:
    explicit PermTable(int r);
    int r_;
    std::vector<Permutation> perms_;
    std::vector<std::int64_t> inv_;
    // Dense r! x r! product table, built only for small r where the memory
    // (factorial(r)^2 entries) is negligible; empty otherwise.
    std::vector<std::int64_t> multab_;
};

using PermTablePtr = std::shared_ptr<const PermTable>;

}  // namespace swd

#endif
