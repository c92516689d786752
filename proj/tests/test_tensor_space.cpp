#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "swd/tensor_space.hpp"

using namespace swd;

TEST_CASE("content vectors") {
    Word b(3, {2, 1, 1, 3, 2, 1, 1, 3});
    CHECK(content(b) == Composition({4, 2, 2}));
    CHECK(content(Word(4, {2, 2, 2})) == Composition({0, 3, 0, 0}));
    // Content is invariant under the place action.
    auto table = PermTable::get(4);
    Word a(2, {1, 2, 2, 1});
    for (std::int64_t t = 0; t < table->size(); ++t)
        CHECK(content(place_permute(a, table->at(t))) == content(a));
    CHECK_THROWS_AS(Word(2, {1, 3}), Error);
}

TEST_CASE("place action on words") {
    Word a(3, {1, 2, 3});
    CHECK(place_permute(a, Permutation::identity(3)) == a);
    CHECK(place_permute(a, Permutation({2, 3, 1})) == Word(3, {2, 3, 1}));
    // (a.sigma).tau = a.(sigma tau), exhaustively for n=2, r=3.
    auto table = PermTable::get(3);
    WordSpace T = WordSpace::full(2, 3);
    for (std::int64_t i = 0; i < T.size(); ++i)
        for (std::int64_t s = 0; s < 6; ++s)
            for (std::int64_t t = 0; t < 6; ++t) {
                Word lhs = place_permute(place_permute(T.at(i), table->at(s)),
                                         table->at(t));
                Word rhs = place_permute(
                    T.at(i), table->at(s).compose(table->at(t)));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("psi convention composes as operators") {
    auto F = build_field(FieldSpec::parse("gf:7", 3));
    TensorVector x = TensorVector::basis_vector(F, Word(2, {1, 1, 2}));
    x.add_term(Word(2, {2, 1, 2}), F->from_int(3));
    auto table = PermTable::get(3);
    for (std::int64_t s = 0; s < 6; ++s)
        for (std::int64_t t = 0; t < 6; ++t) {
            auto lhs = place_permute(
                place_permute(x, table->at(t), Convention::psi),
                table->at(s), Convention::psi);
            auto rhs = place_permute(
                x, table->at(s).compose(table->at(t)), Convention::psi);
            CHECK(lhs.equal(rhs));
        }
}

TEST_CASE("tensor vector arithmetic") {
    auto F = build_field(FieldSpec::parse("gf:5", 2));
    TensorVector x = TensorVector::basis_vector(F, Word(2, {1, 2}));
    TensorVector y = x.scale(F->from_int(-1));
    CHECK(x.add(y).is_zero());
    TensorVector z = x.add(TensorVector::basis_vector(F, Word(2, {2, 1})));
    CHECK(z.terms().size() == 2);
    CHECK(z.terms()[0].first == Word(2, {1, 2}));  // lex order maintained
}

TEST_CASE("weight space enumeration") {
    auto ws = weight_space(2, 3, Composition({2, 1}));
    REQUIRE(ws.size() == 3);
    CHECK(ws[0] == Word(2, {1, 1, 2}));
    CHECK(ws[1] == Word(2, {1, 2, 1}));
    CHECK(ws[2] == Word(2, {2, 1, 1}));
    CHECK(weight_space(3, 4, Composition({4, 0, 0})).size() == 1);
    CHECK(weight_space(4, 4, Composition({1, 1, 1, 1})).size() == 24);
    CHECK_THROWS_AS(weight_space(2, 3, Composition({1, 1})), EmptyWeight);
    CHECK_THROWS_AS(weight_space(3, 3, Composition({1, 1})), EmptyWeight);
    // The weight spaces tile the full word basis.
    for (auto [n, r] : {std::pair<int, int>{2, 5}, {3, 4}}) {
        std::int64_t total = 0;
        for (const auto& alpha : weights(n, r))
            total += static_cast<std::int64_t>(weight_space(n, r, alpha).size());
        std::int64_t full = 1;
        for (int i = 0; i < r; ++i) full *= n;
        CHECK(total == full);
    }
}

TEST_CASE("standardization") {
    CHECK(standardize(Word(3, {2, 1, 1, 3, 2, 1, 1, 3})) ==
          Permutation({5, 1, 2, 7, 6, 3, 4, 8}));
    CHECK(standardize(Word(3, {3, 1, 2})) == Permutation({3, 1, 2}));
    CHECK(standardize(Word(2, {1, 1, 2})) == Permutation::identity(3));
}

TEST_CASE("standardization is a bijection onto minimal coset reps") {
    for (auto [n, r] : {std::pair<int, int>{2, 4}, {3, 4}, {2, 5}, {3, 5}}) {
        for (const auto& alpha : weights(n, r)) {
            auto ws = weight_space(n, r, alpha);
            std::set<Permutation> image;
            for (const auto& a : ws) image.insert(standardize(a));
            CHECK(image.size() == ws.size());  // injective
            // Young cosets are indexed by the nonzero parts of alpha.
            std::vector<int> nz;
            for (int p : alpha.parts)
                if (p > 0) nz.push_back(p);
            if (nz.empty()) continue;
            auto yd = young_data(Composition(nz));
            std::set<Permutation> reps(yd.coset_reps.begin(),
                                       yd.coset_reps.end());
            CHECK(image == reps);
        }
    }
}

namespace {
bool operator_in_young(const Permutation& pi, const std::vector<int>& alpha) {
    Composition comp(alpha);
    for (int v = 1; v <= pi.size(); ++v)
        if (block_of(comp, pi.apply(v)) != block_of(comp, v)) return false;
    return true;
}
}  // namespace

TEST_CASE("standardization intertwines the right actions") {
    // standardize(a.sigma) lies in the coset Sigma_alpha . (sigma_a sigma).
    for (auto [n, r] : {std::pair<int, int>{2, 4}, {3, 4}, {2, 5}}) {
        auto table = PermTable::get(r);
        WordSpace T = WordSpace::full(n, r);
        for (std::int64_t i = 0; i < T.size(); ++i) {
            const Word& a = T.at(i);
            std::vector<int> nz;
            for (int p : content(a).parts)
                if (p > 0) nz.push_back(p);
            Permutation sa = standardize(a);
            for (std::int64_t s = 0; s < table->size(); ++s) {
                Permutation target = sa.compose(table->at(s));
                Permutation got = standardize(place_permute(a, table->at(s)));
                CHECK(operator_in_young(got.compose(target.inverse()), nz));
            }
        }
    }
}

TEST_CASE("word space index arithmetic") {
    WordSpace T = WordSpace::full(3, 2);
    REQUIRE(T.size() == 9);
    CHECK(T.at(0) == Word(3, {1, 1}));
    CHECK(T.index_of(Word(3, {2, 3})) == 5);
    auto tbl = T.action_table(Permutation({2, 1}));
    CHECK(tbl[T.index_of(Word(3, {1, 2}))] == T.index_of(Word(3, {2, 1})));
    auto rel = T.relabel_table(Permutation({2, 3, 1}));
    CHECK(rel[T.index_of(Word(3, {1, 3}))] == T.index_of(Word(3, {2, 1})));
    CHECK_THROWS_AS(T.index_of(Word(3, {1, 1, 1})), Error);
}

TEST_CASE("necklace count oracle") {
    CHECK(witt_dimension(2, 2) == 1);
    CHECK(witt_dimension(2, 3) == 2);
    CHECK(witt_dimension(2, 4) == 3);
    CHECK(witt_dimension(2, 5) == 6);
    CHECK(witt_dimension(2, 6) == 9);
    CHECK(witt_dimension(2, 7) == 18);
    CHECK(witt_dimension(3, 3) == 8);
    CHECK(witt_dimension(3, 6) == 116);
}

TEST_CASE("bracket span in degree two") {
    auto F = build_field(FieldSpec::parse("gf:7", 2));
    Subspace L = bracket_oracle(2, 2, F);
    CHECK(L.dim() == 1);
    Vec v(4, F->zero());
    v[1] = F->one();               // (1,2)
    v[2] = F->neg(F->one());       // (2,1)
    Subspace expect = Subspace::from_span(F, 4, {v});
    CHECK(L.equal(expect));
}

TEST_CASE("bracket span ranks match the necklace count") {
    for (auto [n, r] : {std::pair<int, int>{2, 3}, {2, 4}, {2, 5}, {3, 3}}) {
        const char* spec = r == 4 ? "gf:13" : r == 5 ? "gf:11" : "gf:7";
        auto F = build_field(FieldSpec::parse(spec, r));
        CHECK(bracket_oracle(n, r, F).dim() == witt_dimension(n, r));
    }
}

TEST_CASE("multiplying a span by the unit preserves it") {
    auto F = build_field(FieldSpec::parse("gf:7", 3));
    WordSpace T = WordSpace::full(2, 3);
    Subspace everything = subspace_times_algebra(T, AlgebraElt::unit(F, 3));
    CHECK(everything.dim() == 8);
    WordSpace W = WordSpace::weight(2, 3, Composition({2, 1}));
    CHECK(subspace_times_algebra(W, AlgebraElt::unit(F, 3)).dim() == 3);
}

TEST_CASE("lie idempotents project onto the bracket span") {
    for (auto [n, r] : {std::pair<int, int>{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
        for (const char* spec : {"cyclo", "prime"}) {
            auto F = spec[0] == 'c'
                         ? build_field(FieldSpec::parse(
                               "cyclo:" + std::to_string(r), r))
                         : build_field(FieldSpec::parse(
                               r == 4 ? "gf:13" : "gf:7", r));
            CAPTURE(n);
            CAPTURE(r);
            CAPTURE(spec);
            WordSpace T = WordSpace::full(n, r);
            Subspace L = bracket_oracle(n, r, F);
            Subspace Te = subspace_times_algebra(T, dsw_idempotent(r, F));
            Subspace Tk = subspace_times_algebra(T, klyachko_idempotent(r, F));
            CHECK(Te.dim() == witt_dimension(n, r));
            CHECK(Te.equal(L));
            CHECK(Tk.equal(L));
        }
    }
}

TEST_CASE("restricting a subspace before multiplying") {
    auto F = build_field(FieldSpec::parse("cyclo:3", 3));
    WordSpace T = WordSpace::full(2, 3);
    auto e = dsw_idempotent(3, F);
    Subspace everything = subspace_times_algebra(T, AlgebraElt::unit(F, 3));
    Subspace picked = subspace_times_algebra(T, everything, e);
    CHECK(picked.equal(subspace_times_algebra(T, e)));
    Subspace zero(F, T.size());
    CHECK(subspace_times_algebra(T, zero, e).dim() == 0);
    CHECK_THROWS_AS(
        subspace_times_algebra(T, Subspace(F, 5), e), AmbientMismatch);
    auto G = build_field(FieldSpec::parse("gf:7", 3));
    CHECK_THROWS_AS(
        subspace_times_algebra(T, Subspace(G, T.size()), e), CtxMismatch);
}

TEST_CASE("regular-module slice of the tensor space") {
    auto F = build_field(FieldSpec::parse("cyclo:3", 3));
    auto rep = schur_functor_check(3, 3, F, dsw_idempotent(3, F));
    CHECK(rep.weight_dim == 6);
    CHECK(rep.module_dim == 2);
    CHECK(rep.left_ideal_dim == 2);
    CHECK(rep.dims_match);
    CHECK(rep.characters_match);

    auto G = build_field(FieldSpec::parse("gf:13", 4));
    auto rep4 = schur_functor_check(4, 4, G, dsw_idempotent(4, G));
    CHECK(rep4.weight_dim == 24);
    CHECK(rep4.module_dim == 6);
    CHECK(rep4.dims_match);
    CHECK(rep4.characters_match);

    // The slice also recovers the cyclic idempotent's left ideal.
    auto repf = schur_functor_check(
        3, 3, F, cycle_idempotent(3, F, canonical_cycle(3)));
    CHECK(repf.module_dim == repf.left_ideal_dim);
    CHECK(repf.characters_match);

    CHECK_THROWS_AS(schur_functor_check(2, 3, F, dsw_idempotent(3, F)),
                    RequiresNAtLeastR);
}
