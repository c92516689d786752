#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "swd/group_algebra.hpp"

using namespace swd;

namespace {

AlgebraElt rnd_elt(const FieldPtr& F, int r, std::mt19937& rng) {
    AlgebraElt x(F, r);
    std::uniform_int_distribution<std::int64_t> c(-4, 4);
    for (std::int64_t i = 0; i < x.dim(); ++i)
        x.set_coeff(i, F->from_int(c(rng)));
    return x;
}

}  // namespace

TEST_CASE("convolution axioms") {
    auto F = build_field(FieldSpec::parse("gf:7", 3));
    const int r = 3;
    auto unit = AlgebraElt::unit(F, r);
    std::mt19937 rng(31);
    for (int t = 0; t < 10; ++t) {
        auto x = rnd_elt(F, r, rng), y = rnd_elt(F, r, rng),
             z = rnd_elt(F, r, rng);
        CHECK(x.multiply(unit).equal(x));
        CHECK(unit.multiply(x).equal(x));
        CHECK(x.multiply(y.add(z)).equal(x.multiply(y).add(x.multiply(z))));
        CHECK(x.multiply(y).multiply(z).equal(x.multiply(y.multiply(z))));
    }
    // Basis deltas multiply by composition.
    auto table = PermTable::get(r);
    for (std::int64_t a = 0; a < table->size(); ++a)
        for (std::int64_t b = 0; b < table->size(); ++b) {
            auto prod = AlgebraElt::delta(F, table->at(a))
                            .multiply(AlgebraElt::delta(F, table->at(b)));
            auto expect = AlgebraElt::delta(
                F, table->at(a).compose(table->at(b)));
            CHECK(prod.equal(expect));
        }
    // (delta_s + delta_t) delta_p = delta_{sp} + delta_{tp}.
    auto s = table->at(1), t = table->at(4), p = table->at(3);
    auto lhs = AlgebraElt::delta(F, s).add(AlgebraElt::delta(F, t))
                   .multiply(AlgebraElt::delta(F, p));
    auto rhs = AlgebraElt::delta(F, s.compose(p))
                   .add(AlgebraElt::delta(F, t.compose(p)));
    CHECK(lhs.equal(rhs));
    // Context mismatch.
    auto G = build_field(FieldSpec::parse("gf:13", 3));
    CHECK_THROWS_AS((void)AlgebraElt::unit(F, 3).add(AlgebraElt::unit(G, 3)),
                    CtxMismatch);
    CHECK_THROWS_AS((void)AlgebraElt::unit(F, 3).add(AlgebraElt::unit(F, 4)),
                    CtxMismatch);
}

TEST_CASE("dsw idempotent r=2 is the antisymmetrizer") {
    auto F = build_field(FieldSpec::parse("gf:7", 2));
    auto e = dsw_idempotent(2, F);
    CHECK(F->eq(e.coeff_of(Permutation::identity(2)),
                F->from_rational(mpq_class(1, 2))));
    CHECK(F->eq(e.coeff_of(Permutation({2, 1})),
                F->neg(F->from_rational(mpq_class(1, 2)))));
    CHECK(e.is_idempotent());
}

TEST_CASE("dsw idempotent r=3 expanded by hand") {
    auto F = build_field(FieldSpec::parse("cyclo:3", 3));
    auto e = dsw_idempotent(3, F);
    // (1/3)(1 - gamma_2)(1 - gamma_3)
    //   = (1/3)[id - (3,1,2) - (2,1,3) + (3,2,1)]
    // since gamma_2 gamma_3 has one-line (3,2,1).
    auto third = F->from_rational(mpq_class(1, 3));
    CHECK(F->eq(e.coeff_of(Permutation({1, 2, 3})), third));
    CHECK(F->eq(e.coeff_of(Permutation({3, 1, 2})), F->neg(third)));
    CHECK(F->eq(e.coeff_of(Permutation({2, 1, 3})), F->neg(third)));
    CHECK(F->eq(e.coeff_of(Permutation({3, 2, 1})), third));
    CHECK(F->is_zero(e.coeff_of(Permutation({1, 3, 2}))));
    CHECK(F->is_zero(e.coeff_of(Permutation({2, 3, 1}))));
    CHECK(e.is_idempotent());
    CHECK(e.support_size() == 4);
}

TEST_CASE("idempotence of e, kappa, f across fields and r") {
    for (auto [spec, r] : {std::pair<const char*, int>{"cyclo:2", 2},
                           {"cyclo:3", 3},
                           {"cyclo:4", 4},
                           {"cyclo:5", 5},
                           {"gf:7", 3},
                           {"gf:5", 4},
                           {"gf:11", 5},
                           {"gf:2^2", 3},
                           {"gf:2^4", 5},
                           {"gf:3^2", 4},
                           {"gf:7", 6},
                           {"cyclo:6", 6}}) {
        CAPTURE(spec);
        CAPTURE(r);
        auto F = build_field(FieldSpec::parse(spec, r));
        auto e = dsw_idempotent(r, F);
        auto k = klyachko_idempotent(r, F);
        auto f = cycle_idempotent(r, F, canonical_cycle(r));
        auto rel = idempotent_relations(e, k, f);
        CHECK(rel.e_squared);
        CHECK(rel.kappa_squared);
        CHECK(rel.f_squared);
        CHECK(rel.e_kappa_is_e);
        CHECK(rel.kappa_f_is_f);
        CHECK(rel.f_kappa_is_kappa);
    }
}

TEST_CASE("klyachko r=2 equals dsw r=2") {
    auto F = build_field(FieldSpec::parse("gf:3", 2));
    CHECK(klyachko_idempotent(2, F).equal(dsw_idempotent(2, F)));
}

TEST_CASE("klyachko coefficients follow the maj statistic") {
    auto F = build_field(FieldSpec::parse("cyclo:3", 3));
    auto k = klyachko_idempotent(3, F);
    auto third = F->from_rational(mpq_class(1, 3));
    auto z = F->zeta();
    CHECK(F->eq(k.coeff_of(Permutation({1, 2, 3})), third));          // maj 0
    CHECK(F->eq(k.coeff_of(Permutation({2, 1, 3})),
                F->mul(third, z)));                                   // maj 1
    CHECK(F->eq(k.coeff_of(Permutation({1, 3, 2})),
                F->mul(third, F->mul(z, z))));                        // maj 2
    CHECK(F->eq(k.coeff_of(Permutation({3, 2, 1})), third));          // maj 3
}

TEST_CASE("cycle idempotent structure") {
    auto F = build_field(FieldSpec::parse("cyclo:3", 3));
    auto gamma = canonical_cycle(3).gamma;
    CHECK(gamma == Permutation({2, 3, 1}));
    auto f = cycle_idempotent(3, F, canonical_cycle(3));
    // f = (1/3)(id + zeta^2 gamma + zeta gamma^2); support inside <gamma>.
    auto third = F->from_rational(mpq_class(1, 3));
    CHECK(F->eq(f.coeff_of(Permutation::identity(3)), third));
    CHECK(F->eq(f.coeff_of(gamma), F->mul(third, F->pow(F->zeta(), 2))));
    CHECK(F->eq(f.coeff_of(gamma.compose(gamma)), F->mul(third, F->zeta())));
    CHECK(f.support_size() == 3);
    // gamma . f = zeta . f: f spans the zeta eigenspace of gamma in k Gamma.
    auto gf = AlgebraElt::delta(F, gamma).multiply(f);
    CHECK(gf.equal(f.scale(F->zeta())));
    CHECK_THROWS_AS(
        (void)cycle_idempotent(3, F, CycleChoice{Permutation({2, 1, 3})}),
        NotAnRCycle);
}

TEST_CASE("gamma eigenvector property across fields") {
    for (auto [spec, r] : {std::pair<const char*, int>{"gf:5", 4},
                           {"gf:2^4", 5},
                           {"cyclo:5", 5}}) {
        auto F = build_field(FieldSpec::parse(spec, r));
        auto gamma = canonical_cycle(r).gamma;
        auto f = cycle_idempotent(r, F, canonical_cycle(r));
        CHECK(AlgebraElt::delta(F, gamma).multiply(f).equal(
            f.scale(F->zeta())));
    }
}

TEST_CASE("ideal dimensions") {
    auto F3 = build_field(FieldSpec::parse("cyclo:3", 3));
    CHECK(ideal_dim(AlgebraElt::unit(F3, 3), Side::right) == 6);
    CHECK(ideal_dim(cycle_idempotent(3, F3, canonical_cycle(3)),
                    Side::right) == 2);
    CHECK(ideal_dim(dsw_idempotent(3, F3), Side::left) == 2);

    for (auto [spec, r] : {std::pair<const char*, int>{"cyclo:3", 3},
                           {"cyclo:4", 4},
                           {"gf:5", 4},
                           {"gf:11", 5},
                           {"gf:2^4", 5},
                           {"cyclo:5", 5}}) {
        CAPTURE(spec);
        CAPTURE(r);
        auto F = build_field(FieldSpec::parse(spec, r));
        auto e = dsw_idempotent(r, F);
        auto k = klyachko_idempotent(r, F);
        auto f = cycle_idempotent(r, F, canonical_cycle(r));
        // dim f kSigma_r = r!/r (induced module from the cyclic subgroup);
        // dim kSigma_r e = (r-1)! (the free Lie module of degree r); and the
        // three right ideals share one dimension.
        CHECK(ideal_dim(f, Side::right) == factorial(r) / r);
        CHECK(ideal_dim(e, Side::left) == factorial(r - 1));
        std::int64_t de = ideal_dim(e, Side::right);
        CHECK(de == ideal_dim(k, Side::right));
        CHECK(de == ideal_dim(f, Side::right));
    }
}

TEST_CASE("module characters of the regular and induced modules") {
    auto F = build_field(FieldSpec::parse("cyclo:3", 3));
    auto unit = AlgebraElt::unit(F, 3);
    CHECK(F->eq(module_character(unit, Side::right, Permutation::identity(3)),
                F->from_int(6)));
    CHECK(F->is_zero(
        module_character(unit, Side::right, Permutation({2, 1, 3}))));
    auto f = cycle_idempotent(3, F, canonical_cycle(3));
    CHECK(F->eq(module_character(f, Side::right, Permutation::identity(3)),
                F->from_int(2)));
    CHECK(F->is_zero(
        module_character(f, Side::right, Permutation({2, 1, 3}))));
    CHECK(F->eq(module_character(f, Side::right, Permutation({2, 3, 1})),
                F->from_int(-1)));
    // Non-idempotents are rejected.
    CHECK_THROWS_AS((void)module_character(unit.scale(F->from_int(2)),
                                           Side::right,
                                           Permutation::identity(3)),
                    NotIdempotent);
}

TEST_CASE("lie idempotent independence of characters and class sums") {
    for (auto [spec, r] : {std::pair<const char*, int>{"cyclo:3", 3},
                           {"cyclo:4", 4},
                           {"gf:7", 3},
                           {"gf:5", 4}}) {
        auto F = build_field(FieldSpec::parse(spec, r));
        auto e = dsw_idempotent(r, F);
        auto k = klyachko_idempotent(r, F);
        auto cs_e = class_sums(e), cs_k = class_sums(k);
        REQUIRE(cs_e.size() == cs_k.size());
        for (size_t i = 0; i < cs_e.size(); ++i) {
            CHECK(cs_e[i].first == cs_k[i].first);
            CHECK(F->eq(cs_e[i].second, cs_k[i].second));
        }
        auto table = PermTable::get(r);
        for (std::int64_t t = 0; t < table->size(); ++t) {
            CHECK(F->eq(module_character(e, Side::right, table->at(t)),
                        module_character(k, Side::right, table->at(t))));
        }
    }
}

TEST_CASE("trace equals centralizer order times class sum") {
    for (auto [spec, r] : {std::pair<const char*, int>{"cyclo:4", 4},
                           {"gf:7", 3},
                           {"gf:11", 5}}) {
        CAPTURE(spec);
        auto F = build_field(FieldSpec::parse(spec, r));
        for (int which = 0; which < 3; ++which) {
            AlgebraElt x = which == 0 ? dsw_idempotent(r, F)
                         : which == 1 ? klyachko_idempotent(r, F)
                                      : cycle_idempotent(r, F,
                                                         canonical_cycle(r));
            auto cs = class_sums(x);
            auto table = PermTable::get(r);
            for (std::int64_t t = 0; t < table->size(); ++t) {
                const auto& tau = table->at(t);
                Partition type(tau.cycle_type());
                Scalar sum = F->zero();
                for (const auto& [mu, s] : cs)
                    if (mu == type) sum = s;
                Scalar expect =
                    F->mul(F->from_int(centralizer_order(type)), sum);
                CHECK(F->eq(module_character(x, Side::right, tau), expect));
            }
        }
    }
}

TEST_CASE("class sums of the unit and of f") {
    auto F = build_field(FieldSpec::parse("cyclo:3", 3));
    auto cs_unit = class_sums(AlgebraElt::unit(F, 3));
    for (const auto& [mu, s] : cs_unit) {
        if (mu == Partition({1, 1, 1}))
            CHECK(F->is_one(s));
        else
            CHECK(F->is_zero(s));
    }
    auto cs_f = class_sums(cycle_idempotent(3, F, canonical_cycle(3)));
    for (const auto& [mu, s] : cs_f) {
        if (mu == Partition({1, 1, 1}))
            CHECK(F->eq(s, F->from_rational(mpq_class(1, 3))));
        else if (mu == Partition({3}))
            CHECK(F->eq(s, F->from_rational(mpq_class(-1, 3))));
        else
            CHECK(F->is_zero(s));
    }
}

TEST_CASE("character is constant on conjugacy classes") {
    auto F = build_field(FieldSpec::parse("gf:5", 4));
    auto e = dsw_idempotent(4, F);
    auto table = PermTable::get(4);
    std::map<std::vector<int>, Scalar> by_class;
    for (std::int64_t t = 0; t < table->size(); ++t) {
        auto val = module_character(e, Side::right, table->at(t));
        auto key = table->at(t).cycle_type();
        auto it = by_class.find(key);
        if (it == by_class.end())
            by_class.emplace(key, val);
        else
            CHECK(F->eq(it->second, val));
    }
}

TEST_CASE("alternative cycle choice preserves structure") {
    auto F = build_field(FieldSpec::parse("cyclo:4", 4));
    // Conjugate gamma by a transposition: still an r-cycle; f' is idempotent
    // with the same ideal dimension (results must not depend on the choice).
    auto gamma = canonical_cycle(4).gamma;
    Permutation t({2, 1, 3, 4});
    auto gamma2 = t.compose(gamma).compose(t);
    auto f1 = cycle_idempotent(4, F, canonical_cycle(4));
    auto f2 = cycle_idempotent(4, F, CycleChoice{gamma2});
    CHECK_FALSE(f1.equal(f2));
    CHECK(f2.is_idempotent());
    CHECK(AlgebraElt::delta(F, gamma2).multiply(f2).equal(
        f2.scale(F->zeta())));
    CHECK(ideal_dim(f1, Side::right) == ideal_dim(f2, Side::right));
}
