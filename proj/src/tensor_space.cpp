#include "swd/tensor_space.hpp"

#include <algorithm>
#include <map>

namespace swd {

namespace {

int mobius(int d) {
    int m = 1;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        d /= p;
        if (d % p == 0) return 0;
        m = -m;
    }
    if (d > 1) m = -m;
    return m;
}

}  // namespace

Word::Word(int n, std::vector<int> letters)
    : n(n), letters(std::move(letters)) {
    if (n < 1) throw Error("word alphabet must have at least one letter");
    for (int v : this->letters)
        if (v < 1 || v > n) throw Error("word letter out of range");
}

std::string Word::to_string() const {
    std::string s = "(";
    for (int i = 0; i < r(); ++i) {
        if (i) s += ",";
        s += std::to_string(letters[i]);
    }
    return s + ")";
}

Composition content(const Word& a) {
    std::vector<int> m(a.n, 0);
    for (int v : a.letters) ++m[v - 1];
    return Composition(std::move(m));
}

Word place_permute(const Word& a, const Permutation& sigma, Convention c) {
    if (sigma.size() != a.r())
        throw SizeMismatch("permutation degree differs from word length");
    const Permutation& s = c == Convention::raw ? sigma : sigma.inverse();
    std::vector<int> b(a.r());
    for (int j = 1; j <= a.r(); ++j) b[j - 1] = a.letters[s.apply(j) - 1];
    return Word(a.n, std::move(b));
}

TensorVector::TensorVector(FieldPtr F, int n, int r)
    : F_(std::move(F)), n_(n), r_(r) {}

TensorVector TensorVector::basis_vector(FieldPtr F, const Word& a) {
    TensorVector x(F, a.n, a.r());
    x.terms_.emplace_back(a, x.F_->one());
    return x;
}

void TensorVector::add_term(const Word& a, const Scalar& c) {
    if (a.n != n_ || a.r() != r_)
        throw SizeMismatch("word does not belong to this tensor space");
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), a,
        [](const auto& t, const Word& w) { return t.first < w; });
    if (it != terms_.end() && it->first == a) {
        Scalar v = F_->add(it->second, c);
        if (F_->is_zero(v))
            terms_.erase(it);
        else
            it->second = std::move(v);
    } else if (!F_->is_zero(c)) {
        terms_.insert(it, {a, c});
    }
}

TensorVector TensorVector::add(const TensorVector& other) const {
    if (n_ != other.n_ || r_ != other.r_ || !(F_->spec() == other.F_->spec()))
        throw CtxMismatch("adding tensors from different spaces");
    TensorVector out = *this;
    for (const auto& [w, c] : other.terms_) out.add_term(w, c);
    return out;
}

TensorVector TensorVector::scale(const Scalar& c) const {
    TensorVector out(F_, n_, r_);
    if (F_->is_zero(c)) return out;
    out.terms_ = terms_;
    for (auto& [w, v] : out.terms_) v = F_->mul(v, c);
    return out;
}

bool TensorVector::equal(const TensorVector& other) const {
    if (n_ != other.n_ || r_ != other.r_ || !(F_->spec() == other.F_->spec()))
        throw CtxMismatch("comparing tensors from different spaces");
    if (terms_.size() != other.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].first == other.terms_[i].first) ||
            !F_->eq(terms_[i].second, other.terms_[i].second))
            return false;
    return true;
}

TensorVector place_permute(const TensorVector& x, const Permutation& sigma,
                           Convention c) {
    TensorVector out(x.ctx(), x.n(), x.r());
    for (const auto& [w, v] : x.terms())
        out.add_term(place_permute(w, sigma, c), v);
    return out;
}

std::vector<Word> weight_space(int n, int r, const Composition& alpha) {
    if (alpha.length() != n || alpha.sum() != r)
        throw EmptyWeight("content is not a composition of " +
                          std::to_string(r) + " into " + std::to_string(n) +
                          " parts");
    std::vector<Word> out;
    std::vector<int> remaining = alpha.parts;
    std::vector<int> cur;
    cur.reserve(r);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == r) {
            out.emplace_back(n, cur);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            cur.push_back(v);
            self(self, depth + 1);
            cur.pop_back();
            ++remaining[v - 1];
        }
    };
    rec(rec, 0);
    return out;
}

Permutation standardize(const Word& a) {
    std::vector<int> m(a.n, 0);
    for (int v : a.letters) ++m[v - 1];
    std::vector<int> next(a.n, 0);  // next value to hand out per letter
    int offset = 1;
    for (int v = 0; v < a.n; ++v) {
        next[v] = offset;
        offset += m[v];
    }
    std::vector<int> one_line(a.r());
    for (int i = 0; i < a.r(); ++i) one_line[i] = next[a.letters[i] - 1]++;
    return Permutation(std::move(one_line));
}

WordSpace::WordSpace(int n, int r, std::vector<Word> words)
    : n_(n), r_(r), words_(std::move(words)) {}

WordSpace WordSpace::full(int n, int r) {
    if (n < 1 || r < 0) throw Error("bad tensor space parameters");
    std::vector<Word> words;
    size_t total = 1;
    for (int i = 0; i < r; ++i) total *= n;
    words.reserve(total);
    std::vector<int> cur(r, 1);
    while (true) {
        words.emplace_back(n, cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == n) cur[i--] = 1;
        if (i < 0) break;
        ++cur[i];
    }
    return WordSpace(n, r, std::move(words));
}

WordSpace WordSpace::weight(int n, int r, const Composition& alpha) {
    return WordSpace(n, r, weight_space(n, r, alpha));
}

std::int64_t WordSpace::index_of(const Word& w) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || !(*it == w))
        throw Error("word is not in this basis");
    return it - words_.begin();
}

std::vector<std::int64_t> WordSpace::action_table(
    const Permutation& sigma) const {
    std::vector<std::int64_t> out(words_.size());
    for (std::int64_t i = 0; i < size(); ++i)
        out[i] = index_of(place_permute(words_[i], sigma));
    return out;
}

std::vector<std::int64_t> WordSpace::relabel_table(
    const Permutation& pi) const {
    std::vector<std::int64_t> out(words_.size());
    for (std::int64_t i = 0; i < size(); ++i) {
        std::vector<int> b(r_);
        for (int j = 0; j < r_; ++j) {
            int v = words_[i].letters[j];
            if (v > pi.size())
                throw Error("relabeling permutation too small for this word");
            b[j] = pi.apply(v);
        }
        out[i] = index_of(Word(n_, std::move(b)));
    }
    return out;
}

EltAction::EltAction(const WordSpace& space, const AlgebraElt& x)
    : F_(x.ctx()), ambient_(space.size()) {
    if (x.r() != space.r())
        throw CtxMismatch("algebra element degree differs from word length");
    auto table = PermTable::get(x.r());
    for (std::int64_t t = 0; t < x.dim(); ++t)
        if (!F_->is_zero(x.coeff(t)))
            terms_.emplace_back(space.action_table(table->at(t)), x.coeff(t));
}

SparseRow EltAction::apply(const SparseRow& row) const {
    Vec acc(ambient_, F_->zero());
    for (const auto& [tbl, c] : terms_)
        for (const auto& [j, v] : row.entries)
            acc[tbl[j]] = F_->add(acc[tbl[j]], F_->mul(c, v));
    return sparse_from_dense(*F_, acc);
}

SparseRow EltAction::apply_word(std::int64_t i) const {
    Vec acc(ambient_, F_->zero());
    for (const auto& [tbl, c] : terms_) acc[tbl[i]] = F_->add(acc[tbl[i]], c);
    return sparse_from_dense(*F_, acc);
}

Subspace subspace_times_algebra(const WordSpace& space, const AlgebraElt& x) {
    EltAction act(space, x);
    RowBasis rb(x.ctx(), space.size());
    for (std::int64_t i = 0; i < space.size(); ++i)
        rb.insert(act.apply_word(i));
    return Subspace::from_rowbasis(rb);
}

Subspace subspace_times_algebra(const WordSpace& space, const Subspace& U,
                                const AlgebraElt& x) {
    if (U.ambient() != space.size())
        throw AmbientMismatch("subspace does not live over this word basis");
    if (!(U.ctx()->spec() == x.ctx()->spec()))
        throw CtxMismatch("subspace and algebra element over different fields");
    EltAction act(space, x);
    RowBasis rb(x.ctx(), space.size());
    for (const auto& u : U.basis()) rb.insert(act.apply(u));
    return Subspace::from_rowbasis(rb);
}

Subspace bracket_oracle(int n, int r, const FieldPtr& F) {
    WordSpace space = WordSpace::full(n, r);
    RowBasis rb(F, space.size());
    std::vector<int> seq(r, 1);
    while (true) {
        // Expand [x_{seq_1}, [..., [x_{seq_{r-1}}, x_{seq_r}]...]] with
        // [a,b] = ab - ba, working outward from the innermost letter.
        std::map<std::vector<int>, long> terms;
        terms[{seq[r - 1]}] = 1;
        for (int j = r - 2; j >= 0; --j) {
            std::map<std::vector<int>, long> nxt;
            for (const auto& [w, c] : terms) {
                std::vector<int> left;
                left.reserve(w.size() + 1);
                left.push_back(seq[j]);
                left.insert(left.end(), w.begin(), w.end());
                nxt[left] += c;
                std::vector<int> right = w;
                right.push_back(seq[j]);
                nxt[right] -= c;
            }
            terms = std::move(nxt);
        }
        SparseRow row;
        for (const auto& [w, c] : terms) {
            if (c == 0) continue;
            Scalar v = F->from_int(c);
            if (!F->is_zero(v))
                row.entries.emplace_back(space.index_of(Word(n, w)), v);
        }
        rb.insert(std::move(row));

        int i = r - 1;
        while (i >= 0 && seq[i] == n) seq[i--] = 1;
        if (i < 0) break;
        ++seq[i];
    }
    return Subspace::from_rowbasis(rb);
}

SchurFunctorReport schur_functor_check(int n, int r, const FieldPtr& F,
                                       const AlgebraElt& x) {
    if (n < r)
        throw RequiresNAtLeastR("the bijective-word weight space needs n >= r");
    std::vector<int> parts(n, 0);
    for (int i = 0; i < r; ++i) parts[i] = 1;
    WordSpace space = WordSpace::weight(n, r, Composition(std::move(parts)));

    SchurFunctorReport rep{};
    rep.weight_dim = space.size();
    Subspace W = subspace_times_algebra(space, x);
    rep.module_dim = W.dim();
    rep.left_ideal_dim = ideal_dim(x, Side::left);
    rep.dims_match = rep.weight_dim == factorial(r) &&
                     rep.module_dim == rep.left_ideal_dim;

    // Left character: trace of letter relabeling by pi on W, against the
    // trace of left multiplication by pi on kSigma_r.x.
    rep.characters_match = true;
    auto table = PermTable::get(r);
    for (std::int64_t t = 0; t < table->size(); ++t) {
        const Permutation& pi = table->at(t);
        auto tbl = space.relabel_table(pi);
        Scalar trace = F->zero();
        for (std::int64_t i = 0; i < W.dim(); ++i) {
            SparseRow moved;
            moved.entries.reserve(W.basis()[i].entries.size());
            for (const auto& [j, c] : W.basis()[i].entries)
                moved.entries.emplace_back(tbl[j], c);
            std::sort(moved.entries.begin(), moved.entries.end(),
                      [](const auto& a, const auto& b) {
                          return a.first < b.first;
                      });
            Vec coords = coords_in_rref(*F, W.basis(), W.pivots(), moved);
            trace = F->add(trace, coords[i]);
        }
        if (!F->eq(trace, module_character(x, Side::left, pi))) {
            rep.characters_match = false;
            break;
        }
    }
    return rep;
}

std::int64_t witt_dimension(int n, int r) {
    if (r < 1) throw Error("witt dimension needs r >= 1");
    std::int64_t sum = 0;
    for (int d = 1; d <= r; ++d) {
        if (r % d) continue;
        std::int64_t pw = 1;
        for (int i = 0; i < r / d; ++i) pw *= n;
        sum += mobius(d) * pw;
    }
    return sum / r;
}

}  // namespace swd
