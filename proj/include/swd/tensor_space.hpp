#ifndef SWD_TENSOR_SPACE_HPP
#define SWD_TENSOR_SPACE_HPP

// The tensor space T^{n,r} = (k^n)^{tensor r} with its word basis
// {v_a : a in [n]^r}, the right place-permutation action
// (a.sigma)_j = a_{sigma(j)}, the content/weight decomposition, the
// standardization bijection from a weight class onto minimal coset
// representatives, spans of the form U.x for x in kSigma_r, an independent
// realization of the degree-r component of the free Lie algebra by
// left-normed bracketing, and the weight-(1,...,1) projection that recovers
// the regular module.

#include <cstdint>
#include <string>
#include <vector>

#include "swd/errors.hpp"
#include "swd/field.hpp"
#include "swd/group_algebra.hpp"
#include "swd/linalg.hpp"
#include "swd/partitions.hpp"
#include "swd/permutation.hpp"

namespace swd {

struct Word {
    int n = 0;
    std::vector<int> letters;  // entries in 1..n

    Word() = default;
    Word(int n, std::vector<int> letters);  // validates the range

    int r() const { return static_cast<int>(letters.size()); }
    std::string to_string() const;  // "(2,1,1,3)"

    bool operator==(const Word&) const = default;
    // Lexicographic on the letter array (words compared within one [n]^r).
    bool operator<(const Word& o) const { return letters < o.letters; }
};

// Multiplicity vector: entry j counts the occurrences of letter j.
Composition content(const Word& a);

// The raw right action a.sigma, or the operator convention psi which applies
// sigma^{-1} so that psi(sigma) o psi(tau) = psi(sigma tau) as operators.
enum class Convention { raw, psi };
Word place_permute(const Word& a, const Permutation& sigma,
                   Convention c = Convention::raw);

// A sparse element of T^{n,r} over the word basis.
class TensorVector {
  public:
    TensorVector(FieldPtr F, int n, int r);  // zero
    static TensorVector basis_vector(FieldPtr F, const Word& a);

    int n() const { return n_; }
    int r() const { return r_; }
    const FieldPtr& ctx() const { return F_; }
    // (word, coefficient) pairs in lex word order, no explicit zeros.
    const std::vector<std::pair<Word, Scalar>>& terms() const { return terms_; }

    void add_term(const Word& a, const Scalar& c);
    TensorVector add(const TensorVector& other) const;
    TensorVector scale(const Scalar& c) const;
    bool equal(const TensorVector& other) const;
    bool is_zero() const { return terms_.empty(); }

  private:
    FieldPtr F_;
    int n_, r_;
    std::vector<std::pair<Word, Scalar>> terms_;
};

TensorVector place_permute(const TensorVector& x, const Permutation& sigma,
                           Convention c = Convention::raw);

// All words of content alpha in lexicographic order.
std::vector<Word> weight_space(int n, int r, const Composition& alpha);

// Replace the occurrences of 1 in a, left to right, by 1..m_1, then the
// occurrences of 2 by m_1+1..m_1+m_2, and so on: the resulting permutation is
// the minimal-length representative of its Young coset.
Permutation standardize(const Word& a);

// An ordered word basis (the full space or one weight space) with index
// arithmetic: the coordinate system for all Subspace computations below.
class WordSpace {
  public:
    static WordSpace full(int n, int r);
    static WordSpace weight(int n, int r, const Composition& alpha);

    int n() const { return n_; }
    int r() const { return r_; }
    std::int64_t size() const { return static_cast<std::int64_t>(words_.size()); }
    const Word& at(std::int64_t i) const { return words_[i]; }
    std::int64_t index_of(const Word& w) const;  // throws if absent

    // out[i] = index of at(i).sigma (place action; stays inside the space).
    std::vector<std::int64_t> action_table(const Permutation& sigma) const;
    // out[i] = index of the letterwise relabeling pi(at(i)); requires every
    // letter of every word to be <= pi.size() and the result to stay inside
    // the space (true for the full space and for weight spaces whose content
    // is constant on the support of pi's moved letters).
    std::vector<std::int64_t> relabel_table(const Permutation& pi) const;

  private:
    WordSpace(int n, int r, std::vector<Word> words);
    int n_, r_;
    std::vector<Word> words_;
};

// Right multiplication by a fixed x in kSigma_r as a reusable operator on
// rows over a WordSpace (one index table per support element of x).
class EltAction {
  public:
    EltAction(const WordSpace& space, const AlgebraElt& x);
    SparseRow apply(const SparseRow& row) const;  // row.x
    SparseRow apply_word(std::int64_t i) const;   // v_{at(i)}.x
    const FieldPtr& ctx() const { return F_; }

  private:
    FieldPtr F_;
    std::int64_t ambient_;
    // (action table of sigma, coefficient x_sigma) per support element.
    std::vector<std::pair<std::vector<std::int64_t>, Scalar>> terms_;
};

// span{ v_a.x : a in space } as a canonical subspace over the space's
// coordinates.
Subspace subspace_times_algebra(const WordSpace& space, const AlgebraElt& x);
// span{ u.x : u basis row of U }, U given over the space's coordinates.
Subspace subspace_times_algebra(const WordSpace& space, const Subspace& U,
                                const AlgebraElt& x);

// The span of all left-normed brackets [x_{i_1},[...,[x_{i_{r-1}},x_{i_r}]..]]
// inside T^{n,r}, expanded with [a,b] = ab - ba: an independent construction
// of the degree-r free Lie component, over the full WordSpace coordinates.
Subspace bracket_oracle(int n, int r, const FieldPtr& F);

// Restriction of equivariant-map computations to the regular-module slice:
// the (1,...,1,0,...,0) weight space has the bijective words as its basis,
// carries the left letter-relabeling action of Sigma_r, and v_a -> delta_a
// identifies it with kSigma_r as a bimodule.  Checks that the right ideal
// cut out by x matches the left ideal kSigma_r.x in dimension and left
// character.
struct SchurFunctorReport {
    std::int64_t weight_dim;      // dim of the (1^r) weight space; expect r!
    std::int64_t module_dim;      // dim of (weight space).x
    std::int64_t left_ideal_dim;  // dim of kSigma_r.x
    bool dims_match;
    bool characters_match;
};
SchurFunctorReport schur_functor_check(int n, int r, const FieldPtr& F,
                                       const AlgebraElt& x);

// (1/r) sum_{d | r} mu(d) n^{r/d}: the rank the bracket span must have.
std::int64_t witt_dimension(int n, int r);

}  // namespace swd

#endif
