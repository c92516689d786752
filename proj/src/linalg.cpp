#include "swd/linalg.hpp"

#include <algorithm>

namespace swd {

SparseRow row_axpy(const FieldCtx& F, SparseRow dst, const Scalar& c,
                   const SparseRow& src) {
    SparseRow out;
    out.entries.reserve(dst.entries.size() + src.entries.size());
    size_t i = 0, j = 0;
    while (i < dst.entries.size() || j < src.entries.size()) {
        if (j == src.entries.size() ||
            (i < dst.entries.size() &&
             dst.entries[i].first < src.entries[j].first)) {
            out.entries.push_back(std::move(dst.entries[i++]));
        } else if (i == dst.entries.size() ||
                   dst.entries[i].first > src.entries[j].first) {
            Scalar v = F.neg(F.mul(c, src.entries[j].second));
            if (!F.is_zero(v)) out.entries.emplace_back(src.entries[j].first, v);
            ++j;
        } else {
            Scalar v = F.sub(dst.entries[i].second,
                             F.mul(c, src.entries[j].second));
            if (!F.is_zero(v)) out.entries.emplace_back(dst.entries[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

void row_scale(const FieldCtx& F, SparseRow& row, const Scalar& c) {
    for (auto& [col, v] : row.entries) v = F.mul(v, c);
}

Vec coords_in_rref(const FieldCtx& F, const std::vector<SparseRow>& basis,
                   const std::vector<std::int64_t>& pivots,
                   const SparseRow& row) {
    Vec coords(basis.size(), F.zero());
    for (size_t k = 0; k < basis.size(); ++k) {
        auto it = std::lower_bound(
            row.entries.begin(), row.entries.end(), pivots[k],
            [](const auto& e, std::int64_t col) { return e.first < col; });
        if (it != row.entries.end() && it->first == pivots[k])
            coords[k] = it->second;
    }
    SparseRow residual = row;
    for (size_t k = 0; k < basis.size(); ++k)
        if (!F.is_zero(coords[k]))
            residual = row_axpy(F, std::move(residual), coords[k], basis[k]);
    if (!residual.empty())
        throw InternalCheck("vector expected inside a computed subspace is not");
    return coords;
}

SparseRow sparse_from_dense(const FieldCtx& F, const Vec& v) {
    SparseRow row;
    for (size_t j = 0; j < v.size(); ++j)
        if (!F.is_zero(v[j]))
            row.entries.emplace_back(static_cast<std::int64_t>(j), v[j]);
    return row;
}

Vec dense_from_sparse(const SparseRow& row, std::int64_t ambient,
                      const FieldCtx& F) {
    Vec v(ambient, F.zero());
    for (const auto& [col, val] : row.entries) v[col] = val;
    return v;
}

// ---------- Matrix ----------

Matrix::Matrix(FieldPtr F, std::int64_t rows, std::int64_t cols)
    : F_(std::move(F)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw SizeMismatch("negative matrix dimension");
    data_.assign(rows_ * cols_, F_->zero());
}

Matrix Matrix::identity(FieldPtr F, std::int64_t n) {
    Matrix m(F, n, n);
    for (std::int64_t i = 0; i < n; ++i) m.set(i, i, F->one());
    return m;
}

Vec Matrix::row(std::int64_t i) const {
    return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vec Matrix::apply(const Vec& x) const {
    if (static_cast<std::int64_t>(x.size()) != cols_)
        throw SizeMismatch("matrix-vector dimension mismatch");
    Vec y(rows_, F_->zero());
    for (std::int64_t i = 0; i < rows_; ++i) {
        Scalar acc = F_->zero();
        for (std::int64_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (!F_->is_zero(a)) acc = F_->add(acc, F_->mul(a, x[j]));
        }
        y[i] = acc;
    }
    return y;
}

Matrix Matrix::transpose() const {
    Matrix t(F_, cols_, rows_);
    for (std::int64_t i = 0; i < rows_; ++i)
        for (std::int64_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

Matrix Matrix::multiply(const Matrix& other) const {
    if (cols_ != other.rows_)
        throw SizeMismatch("matrix-matrix dimension mismatch");
    Matrix out(F_, rows_, other.cols_);
    for (std::int64_t i = 0; i < rows_; ++i)
        for (std::int64_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (F_->is_zero(a)) continue;
            for (std::int64_t j = 0; j < other.cols_; ++j) {
                const Scalar& b = other.at(k, j);
                if (F_->is_zero(b)) continue;
                out.set(i, j, F_->add(out.at(i, j), F_->mul(a, b)));
            }
        }
    return out;
}

std::string Matrix::dump() const {
    std::string s =
        std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
    for (std::int64_t i = 0; i < rows_; ++i) {
        for (std::int64_t j = 0; j < cols_; ++j) {
            if (j) s += " ";
            s += F_->to_string(at(i, j));
        }
        s += "\n";
    }
    return s;
}

// ---------- RowBasis ----------

RowBasis::RowBasis(FieldPtr F, std::int64_t ambient)
    : F_(std::move(F)), ambient_(ambient) {}

std::int64_t RowBasis::find_pivot(std::int64_t col) const {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    if (it != pivots_.end() && *it == col)
        return static_cast<std::int64_t>(it - pivots_.begin());
    return -1;
}

SparseRow RowBasis::reduce(SparseRow row) const {
    // Basis rows are strict RREF: a row with pivot p is zero in every other
    // pivot column, so cancelling the entry at p introduces only free-column
    // entries and never re-dirties columns left of the cursor. One sweep.
    size_t i = 0;
    while (i < row.entries.size()) {
        std::int64_t idx = find_pivot(row.entries[i].first);
        if (idx < 0) {
            ++i;
            continue;
        }
        Scalar c = row.entries[i].second;
        row = row_axpy(*F_, std::move(row), c, rows_[idx]);
        // Re-examine position i: the merge may have shifted an untested
        // entry into it.
    }
    return row;
}

bool RowBasis::insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    // Normalize to leading one.
    Scalar lead_inv = F_->inv(row.entries.front().second);
    row_scale(*F_, row, lead_inv);
    const std::int64_t pivot = row.lead_col();
    // Back-eliminate the new pivot from existing rows.
    for (auto& existing : rows_) {
        auto it = std::lower_bound(
            existing.entries.begin(), existing.entries.end(),
            std::make_pair(pivot, Scalar()),
            [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it != existing.entries.end() && it->first == pivot) {
            Scalar c = it->second;
            existing = row_axpy(*F_, std::move(existing), c, row);
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    size_t at = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + at, std::move(row));
    return true;
}

std::vector<std::int64_t> RowBasis::pivot_cols() const { return pivots_; }

std::vector<SparseRow> RowBasis::nullspace_basis() const {
    // One basis vector per free column j: x_j = 1 and, for each basis row
    // with pivot p and entry c in column j, x_p = -c.
    std::vector<SparseRow> out;
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::int64_t j = 0; j < ambient_; ++j) {
        if (is_pivot[j]) continue;
        SparseRow v;
        for (size_t i = 0; i < rows_.size(); ++i) {
            const auto& row = rows_[i];
            auto it = std::lower_bound(
                row.entries.begin(), row.entries.end(),
                std::make_pair(j, Scalar()),
                [](const auto& a, const auto& b) { return a.first < b.first; });
            if (it != row.entries.end() && it->first == j)
                v.entries.emplace_back(pivots_[i], F_->neg(it->second));
        }
        v.entries.emplace_back(j, F_->one());
        std::sort(v.entries.begin(), v.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return out;
}

// ---------- Subspace ----------

Subspace::Subspace(FieldPtr F, std::int64_t ambient)
    : F_(std::move(F)), ambient_(ambient) {}

Subspace Subspace::from_span(FieldPtr F, std::int64_t ambient,
                             const std::vector<Vec>& generators) {
    RowBasis rb(F, ambient);
    for (const auto& g : generators) {
        if (static_cast<std::int64_t>(g.size()) != ambient)
            throw AmbientMismatch("generator has wrong length");
        rb.insert(sparse_from_dense(*F, g));
    }
    return from_rowbasis(rb);
}

Subspace Subspace::from_rowbasis(const RowBasis& rb) {
    Subspace s(rb.ctx(), rb.ambient());
    s.basis_ = rb.rows();
    s.pivots_ = rb.pivot_cols();
    return s;
}

bool Subspace::member(const Vec& v) const {
    if (static_cast<std::int64_t>(v.size()) != ambient_)
        throw AmbientMismatch("vector has wrong length");
    RowBasis rb(F_, ambient_);
    for (const auto& row : basis_) rb.insert(row);
    return rb.member(sparse_from_dense(*F_, v));
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw AmbientMismatch("subspaces in different ambient spaces");
    RowBasis rb(F_, ambient_);
    for (const auto& row : basis_) rb.insert(row);
    for (const auto& row : other.basis_)
        if (!rb.member(row)) return false;
    return true;
}

bool Subspace::equal(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw AmbientMismatch("subspaces in different ambient spaces");
    if (dim() != other.dim() || pivots_ != other.pivots_) return false;
    for (std::int64_t i = 0; i < dim(); ++i) {
        if (basis_[i].entries.size() != other.basis_[i].entries.size())
            return false;
        for (size_t t = 0; t < basis_[i].entries.size(); ++t) {
            if (basis_[i].entries[t].first != other.basis_[i].entries[t].first)
                return false;
            if (!F_->eq(basis_[i].entries[t].second,
                        other.basis_[i].entries[t].second))
                return false;
        }
    }
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw AmbientMismatch("subspaces in different ambient spaces");
    RowBasis rb(F_, ambient_);
    for (const auto& row : basis_) rb.insert(row);
    for (const auto& row : other.basis_) rb.insert(row);
    return from_rowbasis(rb);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw AmbientMismatch("subspaces in different ambient spaces");
    // Zassenhaus: eliminate rows (u | u) for u in U and (v | 0) for v in V;
    // the intersection appears in the right half of rows whose left half is
    // zero. Equivalent formulation below: solve for combinations of U-basis
    // lying in V via the stacked kernel.
    // Unknowns: coefficients a (dim U) and b (dim V) with
    // sum a_i u_i - sum b_j v_j = 0; intersection = {sum a_i u_i}.
    const std::int64_t du = dim(), dv = other.dim();
    RowBasis system(F_, du + dv);
    // Build the transpose system column-by-column: for each ambient
    // coordinate c, the equation sum_i a_i u_i[c] - sum_j b_j v_j[c] = 0.
    for (std::int64_t c = 0; c < ambient_; ++c) {
        SparseRow eq;
        for (std::int64_t i = 0; i < du; ++i) {
            const auto& row = basis_[i];
            auto it = std::lower_bound(
                row.entries.begin(), row.entries.end(),
                std::make_pair(c, Scalar()),
                [](const auto& a, const auto& b) { return a.first < b.first; });
            if (it != row.entries.end() && it->first == c)
                eq.entries.emplace_back(i, it->second);
        }
        for (std::int64_t j = 0; j < dv; ++j) {
            const auto& row = other.basis_[j];
            auto it = std::lower_bound(
                row.entries.begin(), row.entries.end(),
                std::make_pair(c, Scalar()),
                [](const auto& a, const auto& b) { return a.first < b.first; });
            if (it != row.entries.end() && it->first == c)
                eq.entries.emplace_back(du + j, F_->neg(it->second));
        }
        if (!eq.empty()) system.insert(std::move(eq));
    }
    RowBasis result(F_, ambient_);
    for (const auto& sol : system.nullspace_basis()) {
        // Assemble sum a_i u_i (axpy with coefficient -1 adds).
        SparseRow combo;
        for (const auto& [idx, coef] : sol.entries) {
            if (idx >= du) continue;
            SparseRow scaled = basis_[idx];
            row_scale(*F_, scaled, coef);
            combo = row_axpy(*F_, std::move(combo), F_->neg(F_->one()), scaled);
        }
        result.insert(std::move(combo));
    }
    return from_rowbasis(result);
}

// ---------- dense wrappers ----------

RrefResult rref(const Matrix& M) {
    RowBasis rb(M.ctx(), M.cols());
    for (std::int64_t i = 0; i < M.rows(); ++i)
        rb.insert(sparse_from_dense(*M.ctx(), M.row(i)));
    Matrix out(M.ctx(), M.rows(), M.cols());
    const auto& rows = rb.rows();
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [col, v] : rows[i].entries)
            out.set(static_cast<std::int64_t>(i), col, v);
    return RrefResult{std::move(out), rb.rank(), rb.pivot_cols()};
}

Subspace nullspace(const Matrix& M) {
    RowBasis rb(M.ctx(), M.cols());
    for (std::int64_t i = 0; i < M.rows(); ++i)
        rb.insert(sparse_from_dense(*M.ctx(), M.row(i)));
    RowBasis null(M.ctx(), M.cols());
    for (auto& v : rb.nullspace_basis()) null.insert(std::move(v));
    return Subspace::from_rowbasis(null);
}

Subspace image(const Matrix& M) { return row_space(M.transpose()); }

Subspace row_space(const Matrix& M) {
    RowBasis rb(M.ctx(), M.cols());
    for (std::int64_t i = 0; i < M.rows(); ++i)
        rb.insert(sparse_from_dense(*M.ctx(), M.row(i)));
    return Subspace::from_rowbasis(rb);
}

std::optional<Vec> solve(const Matrix& M, const Vec& b) {
    if (static_cast<std::int64_t>(b.size()) != M.rows())
        throw SizeMismatch("solve: rhs has wrong length");
    const auto& F = M.ctx();
    // Eliminate the augmented system [M | b].
    RowBasis rb(F, M.cols() + 1);
    for (std::int64_t i = 0; i < M.rows(); ++i) {
        Vec row = M.row(i);
        row.push_back(b[i]);
        rb.insert(sparse_from_dense(*F, row));
    }
    // Inconsistent iff some pivot sits in the last column.
    for (auto p : rb.pivot_cols())
        if (p == M.cols()) return std::nullopt;
    // Back-substitution is immediate in RREF: x_pivot = rhs entry.
    Vec x(M.cols(), F->zero());
    const auto& rows = rb.rows();
    const auto pivots = rb.pivot_cols();
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& last = rows[i].entries.back();
        if (last.first == M.cols()) x[pivots[i]] = last.second;
    }
    return x;
}

}  // namespace swd
