#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "swd/field.hpp"

using namespace swd;

namespace {

// Deterministic sample of a field element: a random Z-linear combination of
// powers of zeta plus (for finite fields) a random enumerated element, so the
// samples leave the prime subfield whenever the field does.
Scalar sample(const FieldPtr& F, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> coef(-20, 20);
    std::uniform_int_distribution<std::int64_t> expo(0, F->root_order() - 1);
    Scalar s = F->from_int(coef(rng));
    s = F->add(s, F->mul(F->from_int(coef(rng)), F->pow(F->zeta(), expo(rng))));
    if (auto q = F->cardinality()) {
        std::uniform_int_distribution<std::uint64_t> idx(0, *q - 1);
        s = F->add(s, F->element(idx(rng)));
    } else {
        mpq_class half(coef(rng), 7);
        half.canonicalize();
        s = F->add(s, F->mul(F->from_rational(half), F->zeta()));
    }
    return s;
}

void check_axioms(const FieldPtr& F, unsigned seed) {
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar a = sample(F, rng), b = sample(F, rng), c = sample(F, rng);
        CHECK(F->eq(F->add(a, b), F->add(b, a)));
        CHECK(F->eq(F->mul(a, b), F->mul(b, a)));
        CHECK(F->eq(F->add(F->add(a, b), c), F->add(a, F->add(b, c))));
        CHECK(F->eq(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c))));
        CHECK(F->eq(F->mul(a, F->add(b, c)),
                    F->add(F->mul(a, b), F->mul(a, c))));
        CHECK(F->eq(F->add(a, F->zero()), a));
        CHECK(F->eq(F->mul(a, F->one()), a));
        CHECK(F->is_zero(F->add(a, F->neg(a))));
        if (!F->is_zero(a)) {
            CHECK(F->is_one(F->mul(a, F->inv(a))));
            CHECK(F->eq(F->div(b, a), F->mul(b, F->inv(a))));
        }
    }
    CHECK_THROWS_AS((void)F->inv(F->zero()), DivideByZero);
}

}  // namespace

TEST_CASE("prime field basics") {
    auto F = build_field(FieldSpec::parse("gf:7", 3));
    CHECK(F->characteristic() == 7);
    CHECK(F->cardinality().value() == 7);
    CHECK(F->degree() == 1);
    // Oracle: the elements of order 3 in GF(7)^x are 2 and 4 (2^3 = 8 = 1);
    // the canonical choice is the smaller residue.
    CHECK(F->eq(F->zeta(), F->from_int(2)));
    CHECK(F->has_order(F->zeta(), 3));
    CHECK(F->eq(F->r_inverse(), F->from_int(5)));  // 3*5 = 15 = 1 mod 7
    check_axioms(F, 11);
}

TEST_CASE("prime field alternate root") {
    auto F = build_field(FieldSpec::parse("gf:7", 3), ZetaChoice::alternate);
    CHECK(F->eq(F->zeta(), F->from_int(4)));
    CHECK(F->has_order(F->zeta(), 3));
}

TEST_CASE("prime field larger example") {
    // Oracle: 11 = 1 mod 5; order-5 residues mod 11 are {3, 4, 5, 9}.
    auto F = build_field(FieldSpec::parse("gf:11", 5));
    CHECK(F->eq(F->zeta(), F->from_int(3)));
    auto A = build_field(FieldSpec::parse("gf:11", 5), ZetaChoice::alternate);
    CHECK(A->eq(A->zeta(), A->from_int(4)));
    check_axioms(F, 12);
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS((void)build_field(FieldSpec::parse("gf:6", 3)), NotPrime);
    CHECK_THROWS_AS((void)build_field(FieldSpec::parse("gf:3", 3)),
                    CharDividesR);
    CHECK_THROWS_AS((void)build_field(FieldSpec::parse("gf:2^4", 6)),
                    CharDividesR);
    CHECK_THROWS_AS((void)build_field(FieldSpec::parse("gf:7", 5)),
                    NoRootOfUnity);
    CHECK_THROWS_AS((void)build_field(FieldSpec::parse("gf:2^3", 5)),
                    NoRootOfUnity);
    CHECK_THROWS_AS((void)FieldSpec::parse("zz:7", 3), ParseError);
    CHECK_THROWS_AS((void)FieldSpec::parse("gf:x", 3), ParseError);
    CHECK_THROWS_AS((void)build_field(FieldSpec::parse("gf:2^21", 1)),
                    InfeasibleField);
    // The error message for a missing root suggests the smallest degree that
    // works: ord of 7 mod 5 is 4.
    try {
        (void)build_field(FieldSpec::parse("gf:7", 5));
        CHECK(false);
    } catch (const NoRootOfUnity& e) {
        CHECK(std::string(e.what()).find("7^4") != std::string::npos);
    }
}

TEST_CASE("extension field GF(4) for r=3") {
    auto F = build_field(FieldSpec::parse("gf:2^2", 3));
    CHECK(F->characteristic() == 2);
    CHECK(F->cardinality().value() == 4);
    CHECK(F->degree() == 2);
    // Only irreducible quadratic over GF(2): 1 + z + z^2.
    CHECK(F->modulus_string() == "1+z+z^2");
    // All three nonzero non-identity elements have order 3; the smallest in
    // the (constant-first) lexicographic order is z.
    CHECK(F->to_string(F->zeta()) == "z");
    CHECK(F->has_order(F->zeta(), 3));
    Scalar z2 = F->mul(F->zeta(), F->zeta());
    CHECK(F->to_string(z2) == "1+z");  // z^2 = z + 1 mod z^2 + z + 1
    check_axioms(F, 13);
}

TEST_CASE("extension field GF(16) for r=5") {
    auto F = build_field(FieldSpec::parse("gf:2^4", 5));
    CHECK(F->cardinality().value() == 16);
    // Lex-smallest monic irreducible quartic over GF(2), constant term read
    // first: 1 + z^3 + z^4 beats 1 + z + z^4.
    CHECK(F->modulus_string() == "1+z^3+z^4");
    CHECK(F->has_order(F->zeta(), 5));
    auto A = build_field(FieldSpec::parse("gf:2^4", 5), ZetaChoice::alternate);
    CHECK(A->has_order(A->zeta(), 5));
    CHECK_FALSE(A->eq(A->zeta(), F->zeta()));
    check_axioms(F, 14);
}

TEST_CASE("extension field GF(9) for r=4") {
    auto F = build_field(FieldSpec::parse("gf:3^2", 4));
    CHECK(F->cardinality().value() == 9);
    CHECK(F->has_order(F->zeta(), 4));
    // Frobenius check: x -> x^3 is a field automorphism fixing GF(3).
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        Scalar a = sample(F, rng), b = sample(F, rng);
        CHECK(F->eq(F->pow(F->add(a, b), 3),
                    F->add(F->pow(a, 3), F->pow(b, 3))));
    }
    check_axioms(F, 15);
}

TEST_CASE("cyclotomic polynomial oracle") {
    auto str = [](const std::vector<mpz_class>& v) {
        std::string s;
        for (const auto& c : v) s += c.get_str() + ",";
        return s;
    };
    CHECK(str(cyclotomic_polynomial(1)) == "-1,1,");
    CHECK(str(cyclotomic_polynomial(2)) == "1,1,");
    CHECK(str(cyclotomic_polynomial(3)) == "1,1,1,");
    CHECK(str(cyclotomic_polynomial(4)) == "1,0,1,");
    CHECK(str(cyclotomic_polynomial(5)) == "1,1,1,1,1,");
    CHECK(str(cyclotomic_polynomial(6)) == "1,-1,1,");
    CHECK(str(cyclotomic_polynomial(7)) == "1,1,1,1,1,1,1,");
    CHECK(str(cyclotomic_polynomial(12)) == "1,0,-1,0,1,");
    // First index with a coefficient outside {-1,0,1}.
    auto c105 = cyclotomic_polynomial(105);
    CHECK(c105[7] == -2);
}

TEST_CASE("cyclotomic field Q(zeta_3)") {
    auto F = build_field(FieldSpec::parse("cyclo:3", 3));
    CHECK(F->characteristic() == 0);
    CHECK_FALSE(F->cardinality().has_value());
    CHECK(F->degree() == 2);
    Scalar z = F->zeta();
    CHECK(F->has_order(z, 3));
    // 1 + z + z^2 = 0 in Q(zeta_3).
    CHECK(F->is_zero(F->add(F->one(), F->add(z, F->mul(z, z)))));
    CHECK(F->to_string(F->r_inverse()) == "1/3");
    check_axioms(F, 16);
}

TEST_CASE("cyclotomic field Q(zeta_4)") {
    auto F = build_field(FieldSpec::parse("cyclo:4", 4));
    Scalar i = F->zeta();
    CHECK(F->eq(F->mul(i, i), F->from_int(-1)));
    CHECK(F->to_string(i) == "z");
    check_axioms(F, 17);
}

TEST_CASE("cyclotomic field Q(zeta_6) serving r=3") {
    auto F = build_field(FieldSpec::parse("cyclo:6", 3));
    CHECK(F->degree() == 2);  // phi(6) = 2
    CHECK(F->has_order(F->zeta(), 3));
    // zeta_6^2 is the canonical zeta_3 of Q(zeta_3) under the embedding; at
    // minimum it satisfies 1 + z + z^2 = 0.
    Scalar z = F->zeta();
    CHECK(F->is_zero(F->add(F->one(), F->add(z, F->mul(z, z)))));
}

TEST_CASE("cyclotomic conductor mismatch") {
    CHECK_THROWS_AS((void)build_field(FieldSpec::parse("cyclo:4", 3)),
                    NoRootOfUnity);
}

TEST_CASE("cyclotomic alternate root") {
    auto F = build_field(FieldSpec::parse("cyclo:5", 5));
    auto A = build_field(FieldSpec::parse("cyclo:5", 5), ZetaChoice::alternate);
    CHECK(F->to_string(F->zeta()) == "z");
    CHECK(A->to_string(A->zeta()) == "z^2");
    CHECK(A->has_order(A->zeta(), 5));
}

TEST_CASE("scalar strings round-trip") {
    std::mt19937 rng(99);
    for (auto [spec, r] : {std::pair<const char*, int>{"gf:13", 4},
                           {"gf:2^4", 5},
                           {"gf:3^2", 4},
                           {"cyclo:4", 4}}) {
        auto F = build_field(FieldSpec::parse(spec, r));
        for (int t = 0; t < 25; ++t) {
            Scalar a = sample(F, rng);
            CHECK(F->eq(F->parse_scalar(F->to_string(a)), a));
        }
        CHECK(F->to_string(F->zero()) == "0");
        CHECK(F->eq(F->parse_scalar("0"), F->zero()));
    }
    auto F = build_field(FieldSpec::parse("cyclo:3", 3));
    CHECK(F->eq(F->parse_scalar("-1/2+3*z"),
                F->add(F->from_rational(mpq_class(-1, 2)),
                       F->mul(F->from_int(3), F->zeta()))));
    CHECK_THROWS_AS((void)F->parse_scalar(""), ParseError);
    CHECK_THROWS_AS((void)F->parse_scalar("1+"), ParseError);
    CHECK_THROWS_AS((void)F->parse_scalar("q"), ParseError);
}

TEST_CASE("field spec strings round-trip") {
    for (const char* s : {"gf:7", "gf:2^4", "cyclo:5"}) {
        auto spec = FieldSpec::parse(s, 5);
        CHECK(spec.to_string() == s);
    }
    CHECK(FieldSpec::parse("gf:7^1", 3).to_string() == "gf:7");
}

TEST_CASE("context mismatch is detected across kinds") {
    auto F = build_field(FieldSpec::parse("gf:7", 3));
    auto G = build_field(FieldSpec::parse("cyclo:3", 3));
    CHECK_THROWS_AS((void)F->add(F->one(), G->one()), CtxMismatch);
    auto E4 = build_field(FieldSpec::parse("gf:2^2", 3));
    auto E16 = build_field(FieldSpec::parse("gf:2^4", 5));
    CHECK_THROWS_AS((void)E16->mul(E16->one(), E4->one()), CtxMismatch);
}

TEST_CASE("r_inverse times r is one everywhere") {
    for (const char* s : {"gf:7", "gf:13", "gf:2^2", "gf:2^4", "cyclo:3",
                          "cyclo:5", "cyclo:6"}) {
        std::int64_t r = (std::string(s) == "gf:2^4" || std::string(s) ==
                          "cyclo:5") ? 5 : 3;
        if (std::string(s) == "cyclo:6") r = 6;
        if (std::string(s) == "gf:13") r = 6;
        if (std::string(s) == "gf:7") r = 6;
        auto F = build_field(FieldSpec::parse(s, r));
        CHECK(F->is_one(F->mul(F->r_inverse(), F->from_int(r))));
    }
}
