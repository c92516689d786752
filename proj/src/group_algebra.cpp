#include "swd/group_algebra.hpp"

#include <algorithm>

namespace swd {

AlgebraElt::AlgebraElt(FieldPtr F, int r)
    : F_(std::move(F)), r_(r), table_(PermTable::get(r)) {
    coeffs_.assign(table_->size(), F_->zero());
}

AlgebraElt AlgebraElt::unit(FieldPtr F, int r) {
    AlgebraElt x(std::move(F), r);
    x.coeffs_[0] = x.F_->one();  // identity has lex rank 0
    return x;
}

AlgebraElt AlgebraElt::delta(FieldPtr F, const Permutation& sigma) {
    AlgebraElt x(std::move(F), sigma.size());
    x.coeffs_[sigma.lex_rank()] = x.F_->one();
    return x;
}

Scalar AlgebraElt::coeff_of(const Permutation& sigma) const {
    if (sigma.size() != r_) throw SizeMismatch("permutation degree != r");
    return coeffs_[sigma.lex_rank()];
}

void AlgebraElt::check_compatible(const AlgebraElt& other) const {
    if (r_ != other.r_) throw CtxMismatch("algebra elements of different r");
    if (!(F_->spec() == other.F_->spec()))
        throw CtxMismatch("algebra elements over different fields");
}

AlgebraElt AlgebraElt::add(const AlgebraElt& other) const {
    check_compatible(other);
    AlgebraElt out(F_, r_);
    for (std::int64_t i = 0; i < dim(); ++i)
        out.coeffs_[i] = F_->add(coeffs_[i], other.coeffs_[i]);
    return out;
}

AlgebraElt AlgebraElt::sub(const AlgebraElt& other) const {
    check_compatible(other);
    AlgebraElt out(F_, r_);
    for (std::int64_t i = 0; i < dim(); ++i)
        out.coeffs_[i] = F_->sub(coeffs_[i], other.coeffs_[i]);
    return out;
}

AlgebraElt AlgebraElt::scale(const Scalar& c) const {
    AlgebraElt out(F_, r_);
    for (std::int64_t i = 0; i < dim(); ++i)
        out.coeffs_[i] = F_->mul(coeffs_[i], c);
    return out;
}

AlgebraElt AlgebraElt::multiply(const AlgebraElt& other) const {
    check_compatible(other);
    AlgebraElt out(F_, r_);
    // Convolution over the support of the left factor only.
    for (std::int64_t a = 0; a < dim(); ++a) {
        if (F_->is_zero(coeffs_[a])) continue;
        for (std::int64_t b = 0; b < dim(); ++b) {
            if (F_->is_zero(other.coeffs_[b])) continue;
            std::int64_t ab = table_->mul(a, b);
            out.coeffs_[ab] =
                F_->add(out.coeffs_[ab], F_->mul(coeffs_[a], other.coeffs_[b]));
        }
    }
    return out;
}

bool AlgebraElt::equal(const AlgebraElt& other) const {
    check_compatible(other);
    for (std::int64_t i = 0; i < dim(); ++i)
        if (!F_->eq(coeffs_[i], other.coeffs_[i])) return false;
    return true;
}

bool AlgebraElt::is_zero() const {
    for (std::int64_t i = 0; i < dim(); ++i)
        if (!F_->is_zero(coeffs_[i])) return false;
    return true;
}

std::int64_t AlgebraElt::support_size() const {
    std::int64_t n = 0;
    for (std::int64_t i = 0; i < dim(); ++i)
        if (!F_->is_zero(coeffs_[i])) ++n;
    return n;
}

SparseRow AlgebraElt::translate_row(std::int64_t sigma_rank, bool right) const {
    SparseRow row;
    for (std::int64_t a = 0; a < dim(); ++a) {
        if (F_->is_zero(coeffs_[a])) continue;
        std::int64_t target = right ? table_->mul(a, sigma_rank)
                                    : table_->mul(sigma_rank, a);
        row.entries.emplace_back(target, coeffs_[a]);
    }
    std::sort(row.entries.begin(), row.entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return row;
}

CycleChoice canonical_cycle(int r) {
    std::vector<int> v(r);
    for (int i = 0; i < r - 1; ++i) v[i] = i + 2;
    v[r - 1] = 1;
    return CycleChoice{Permutation(std::move(v))};
}

AlgebraElt dsw_idempotent(int r, const FieldPtr& F) {
    if (F->characteristic() != 0 && r % F->characteristic() == 0)
        throw CharDividesR("Lie idempotent needs char not dividing r");
    AlgebraElt acc = AlgebraElt::unit(F, r);
    for (int i = 2; i <= r; ++i) {
        // gamma_i: the descending i-cycle (i ... 2 1), one-line
        // (i, 1, 2, ..., i-1, i+1, ..., r).
        std::vector<int> v(r);
        v[0] = i;
        for (int j = 2; j <= i; ++j) v[j - 1] = j - 1;
        for (int j = i + 1; j <= r; ++j) v[j - 1] = j;
        AlgebraElt factor =
            AlgebraElt::unit(F, r).sub(AlgebraElt::delta(F, Permutation(v)));
        acc = acc.multiply(factor);
    }
    return acc.scale(F->inv(F->from_int(r)));
}

AlgebraElt klyachko_idempotent(int r, const FieldPtr& F) {
    if (F->characteristic() != 0 && r % F->characteristic() == 0)
        throw CharDividesR("Klyachko idempotent needs char not dividing r");
    if (F->root_order() != r)
        throw NoRootOfUnity(
            "field context carries a root of order " +
            std::to_string(F->root_order()) + ", need exactly " +
            std::to_string(r));
    auto table = PermTable::get(r);
    AlgebraElt x(F, r);
    for (std::int64_t t = 0; t < table->size(); ++t)
        x.set_coeff(t, F->pow(F->zeta(), table->at(t).major_index()));
    return x.scale(F->inv(F->from_int(r)));
}

AlgebraElt cycle_idempotent(int r, const FieldPtr& F, const CycleChoice& c) {
    if (c.gamma.size() != r || c.gamma.cycle_type() != std::vector<int>{r})
        throw NotAnRCycle("gamma must be a single r-cycle");
    if (F->root_order() != r)
        throw NoRootOfUnity(
            "field context carries a root of order " +
            std::to_string(F->root_order()) + ", need exactly " +
            std::to_string(r));
    AlgebraElt x(F, r);
    Permutation power = Permutation::identity(r);
    for (int i = 1; i <= r; ++i) {
        power = power.compose(c.gamma);  // gamma^i
        Scalar coef = F->pow(F->zeta(), -i);
        x.set_coeff(power.lex_rank(), F->add(x.coeff(power.lex_rank()), coef));
    }
    return x.scale(F->inv(F->from_int(r)));
}

IdempotentRelations idempotent_relations(const AlgebraElt& e,
                                         const AlgebraElt& kappa,
                                         const AlgebraElt& f) {
    IdempotentRelations rel;
    rel.e_squared = e.multiply(e).equal(e);
    rel.kappa_squared = kappa.multiply(kappa).equal(kappa);
    rel.f_squared = f.multiply(f).equal(f);
    rel.e_kappa_is_e = e.multiply(kappa).equal(e);
    rel.kappa_f_is_f = kappa.multiply(f).equal(f);
    rel.f_kappa_is_kappa = f.multiply(kappa).equal(kappa);
    return rel;
}

std::int64_t ideal_dim(const AlgebraElt& x, Side side) {
    auto table = PermTable::get(x.r());
    RowBasis rb(x.ctx(), table->size());
    for (std::int64_t t = 0; t < table->size(); ++t)
        rb.insert(x.translate_row(t, side == Side::right));
    return rb.rank();
}

Scalar module_character(const AlgebraElt& x, Side side,
                        const Permutation& tau) {
    if (!x.is_idempotent())
        throw NotIdempotent("module_character needs an idempotent");
    if (tau.size() != x.r()) throw SizeMismatch("tau has wrong degree");
    auto table = PermTable::get(x.r());
    const auto& F = x.ctx();
    const std::int64_t ti = tau.inverse().lex_rank();
    Scalar acc = F->zero();
    for (std::int64_t s = 0; s < table->size(); ++s) {
        // right: coefficient of sigma in x sigma tau is x at sigma tau^{-1}
        // sigma^{-1}; left: coefficient of sigma in tau sigma x is x at
        // sigma^{-1} tau^{-1} sigma.
        std::int64_t si = table->inv(s);
        std::int64_t idx = (side == Side::right)
                               ? table->mul(table->mul(s, ti), si)
                               : table->mul(table->mul(si, ti), s);
        acc = F->add(acc, x.coeff(idx));
    }
    return acc;
}

std::vector<std::pair<Partition, Scalar>> class_sums(const AlgebraElt& x) {
    auto table = PermTable::get(x.r());
    const auto& F = x.ctx();
    std::vector<std::pair<Partition, Scalar>> out;
    std::map<std::vector<int>, size_t> index;
    for (const auto& mu : partitions_of(x.r())) {
        index[mu.parts] = out.size();
        out.emplace_back(mu, F->zero());
    }
    for (std::int64_t t = 0; t < table->size(); ++t) {
        if (F->is_zero(x.coeff(t))) continue;
        size_t k = index.at(table->at(t).cycle_type());
        out[k].second = F->add(out[k].second, x.coeff(t));
    }
    return out;
}

}  // namespace swd
