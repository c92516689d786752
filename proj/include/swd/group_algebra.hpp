#ifndef SWD_GROUP_ALGEBRA_HPP
#define SWD_GROUP_ALGEBRA_HPP

// The group algebra k Sigma_r with dense coefficient vectors indexed by the
// lexicographic rank of one-line permutations, and the three distinguished
// idempotents:
//
//   e_r = (1/r)(1 - gamma_2)(1 - gamma_3)...(1 - gamma_r),  gamma_i the
//         descending i-cycle (i ... 2 1)                      [Lie projector]
//   kappa = (1/r) sum_sigma zeta^{maj(sigma)} sigma           [Klyachko]
//   f = (1/r) sum_{i=1..r} zeta^{-i} gamma^i, gamma an r-cycle [cyclic]
//
// together with ideal dimensions, module characters (exact traces), and
// class-sum diagnostics.

#include <cstdint>
#include <map>
#include <vector>

#include "swd/field.hpp"
#include "swd/linalg.hpp"
#include "swd/partitions.hpp"
#include "swd/permutation.hpp"

namespace swd {

class AlgebraElt {
  public:
    AlgebraElt(FieldPtr F, int r);  // zero
    static AlgebraElt unit(FieldPtr F, int r);
    static AlgebraElt delta(FieldPtr F, const Permutation& sigma);

    int r() const { return r_; }
    const FieldPtr& ctx() const { return F_; }
    std::int64_t dim() const { return static_cast<std::int64_t>(coeffs_.size()); }

    const Scalar& coeff(std::int64_t rank) const { return coeffs_[rank]; }
    void set_coeff(std::int64_t rank, Scalar v) { coeffs_[rank] = std::move(v); }
    Scalar coeff_of(const Permutation& sigma) const;

    AlgebraElt add(const AlgebraElt& other) const;
    AlgebraElt sub(const AlgebraElt& other) const;
    AlgebraElt scale(const Scalar& c) const;
    AlgebraElt multiply(const AlgebraElt& other) const;  // convolution

    bool equal(const AlgebraElt& other) const;
    bool is_zero() const;
    bool is_idempotent() const { return multiply(*this).equal(*this); }
    std::int64_t support_size() const;

    // x . delta_sigma (right) or delta_sigma . x (left) as a sparse row over
    // the rank basis — the building block for ideal spans.
    SparseRow translate_row(std::int64_t sigma_rank, bool right) const;

    const Vec& coeffs() const { return coeffs_; }

  private:
    void check_compatible(const AlgebraElt& other) const;
    FieldPtr F_;
    int r_;
    PermTablePtr table_;
    Vec coeffs_;
};

struct CycleChoice {
    Permutation gamma;
};

// The canonical r-cycle 1 -> 2 -> ... -> r -> 1, one-line (2,3,...,r,1).
CycleChoice canonical_cycle(int r);

AlgebraElt dsw_idempotent(int r, const FieldPtr& F);
AlgebraElt klyachko_idempotent(int r, const FieldPtr& F);
AlgebraElt cycle_idempotent(int r, const FieldPtr& F, const CycleChoice& c);

struct IdempotentRelations {
    bool e_squared, kappa_squared, f_squared;
    bool e_kappa_is_e, kappa_f_is_f, f_kappa_is_kappa;
    bool all() const {
        return e_squared && kappa_squared && f_squared && e_kappa_is_e &&
               kappa_f_is_f && f_kappa_is_kappa;
    }
};

IdempotentRelations idempotent_relations(const AlgebraElt& e,
                                         const AlgebraElt& kappa,
                                         const AlgebraElt& f);

enum class Side { left, right };

// Dimension of x.kSigma_r (right) or kSigma_r.x (left), streamed through an
// incremental rank so memory stays at rank x r!.
std::int64_t ideal_dim(const AlgebraElt& x, Side side);

// Exact trace on kSigma_r of a -> x.a.tau (right) or a -> tau.a.x (left);
// for idempotent x this is the character of the ideal as a module under tau.
Scalar module_character(const AlgebraElt& x, Side side, const Permutation& tau);

// Sum of coefficients of x over each conjugacy class, keyed by cycle type,
// in partitions_of(r) order.
std::vector<std::pair<Partition, Scalar>> class_sums(const AlgebraElt& x);

}  // namespace swd

#endif
