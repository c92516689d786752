#ifndef SWD_LINALG_HPP
#define SWD_LINALG_HPP

// Exact linear algebra over a FieldCtx: reduced row echelon form, rank,
// nullspace, image, solve, and canonical subspaces. Everything is driven by
// an incremental accumulator (RowBasis) that keeps a strict-RREF basis of the
// rows seen so far, so very tall systems can be streamed through it one row
// at a time with memory bounded by rank x row-support.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swd/errors.hpp"
#include "swd/field.hpp"

namespace swd {

using Vec = std::vector<Scalar>;

// Nonzero entries sorted by column index.
struct SparseRow {
    std::vector<std::pair<std::int64_t, Scalar>> entries;

    bool empty() const { return entries.empty(); }
    std::int64_t lead_col() const { return entries.front().first; }
};

SparseRow sparse_from_dense(const FieldCtx& F, const Vec& v);
Vec dense_from_sparse(const SparseRow& row, std::int64_t ambient,
                      const FieldCtx& F);

// dst -= c * src over sorted sparse rows (merge); drops exact zeros.
SparseRow row_axpy(const FieldCtx& F, SparseRow dst, const Scalar& c,
                   const SparseRow& src);
void row_scale(const FieldCtx& F, SparseRow& row, const Scalar& c);

// Coordinates of a row in a strict-RREF basis: read off at the pivots, then
// verified by checking the residual vanishes (throws InternalCheck if the
// row is not in the span).
Vec coords_in_rref(const FieldCtx& F, const std::vector<SparseRow>& basis,
                   const std::vector<std::int64_t>& pivots, const SparseRow& row);

class Matrix {
  public:
    Matrix(FieldPtr F, std::int64_t rows, std::int64_t cols);  // zero matrix
    static Matrix identity(FieldPtr F, std::int64_t n);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    const FieldPtr& ctx() const { return F_; }

    const Scalar& at(std::int64_t i, std::int64_t j) const {
        return data_[i * cols_ + j];
    }
    void set(std::int64_t i, std::int64_t j, Scalar v) {
        data_[i * cols_ + j] = std::move(v);
    }

    Vec row(std::int64_t i) const;
    Vec apply(const Vec& x) const;  // M x
    Matrix transpose() const;
    Matrix multiply(const Matrix& other) const;

    // Plain-text exchange format: "rows cols" header then one scalar string
    // per entry, row-major.
    std::string dump() const;

  private:
    FieldPtr F_;
    std::int64_t rows_, cols_;
    std::vector<Scalar> data_;
};

// Incremental strict-RREF accumulator for the row space of a stream of rows.
class RowBasis {
  public:
    RowBasis(FieldPtr F, std::int64_t ambient);

    std::int64_t ambient() const { return ambient_; }
    std::int64_t rank() const { return static_cast<std::int64_t>(rows_.size()); }

    // Eliminates the row against the basis; if a nonzero residual remains it
    // joins the basis (normalized, back-eliminated). Returns true when the
    // rank grew.
    bool insert(SparseRow row);

    // Residual of a row after elimination (zero iff in the row space).
    SparseRow reduce(SparseRow row) const;
    bool member(const SparseRow& row) const { return reduce(row).empty(); }

    // Basis rows in strict RREF, ascending pivot order, with their pivots.
    const std::vector<SparseRow>& rows() const { return rows_; }
    std::vector<std::int64_t> pivot_cols() const;

    // Canonical basis of {x : row . x = 0 for the accumulated row space},
    // one vector per free column, ascending; each has a 1 in its free column.
    std::vector<SparseRow> nullspace_basis() const;

    const FieldPtr& ctx() const { return F_; }

  private:
    FieldPtr F_;
    std::int64_t ambient_;
    std::vector<SparseRow> rows_;        // sorted by lead_col
    std::vector<std::int64_t> pivots_;   // parallel to rows_
    std::int64_t find_pivot(std::int64_t col) const;  // index or -1
};

// Canonical subspace of k^ambient: unique RREF basis.
class Subspace {
  public:
    Subspace(FieldPtr F, std::int64_t ambient);  // zero subspace
    static Subspace from_span(FieldPtr F, std::int64_t ambient,
                              const std::vector<Vec>& generators);
    static Subspace from_rowbasis(const RowBasis& rb);

    std::int64_t ambient() const { return ambient_; }
    std::int64_t dim() const { return static_cast<std::int64_t>(basis_.size()); }
    const std::vector<SparseRow>& basis() const { return basis_; }
    const std::vector<std::int64_t>& pivots() const { return pivots_; }
    const FieldPtr& ctx() const { return F_; }

    bool member(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool equal(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

  private:
    FieldPtr F_;
    std::int64_t ambient_;
    std::vector<SparseRow> basis_;
    std::vector<std::int64_t> pivots_;
};

struct RrefResult {
    Matrix reduced;
    std::int64_t rank;
    std::vector<std::int64_t> pivots;
};

RrefResult rref(const Matrix& M);
Subspace nullspace(const Matrix& M);   // right nullspace {x : Mx = 0}
Subspace image(const Matrix& M);       // column space
Subspace row_space(const Matrix& M);
std::optional<Vec> solve(const Matrix& M, const Vec& b);  // any x with Mx = b

}  // namespace swd

#endif
