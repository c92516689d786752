#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "swd/cache.hpp"
#include "swd/hom_engine.hpp"
#include "swd/report.hpp"

using namespace swd;
using i64 = std::int64_t;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> keys_of(const OrderedJson& j) {
    std::vector<std::string> out;
    for (const auto& [key, value] : j.items()) out.push_back(key);
    return out;
}

VerifyReport small_report() {
    static const VerifyReport rep =
        verify_instance(2, 3, FieldSpec::parse("gf:7", 3), IdempotentName::dsw);
    return rep;
}

Subspace span_of(const FieldPtr& F, i64 ambient,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<Vec> generators;
    for (const auto& row : rows) {
        Vec v;
        for (const auto& text : row) v.push_back(F->parse_scalar(text));
        generators.push_back(std::move(v));
    }
    return Subspace::from_span(F, ambient, generators);
}

}  // namespace

TEST_CASE("verify report serializes with a fixed key layout") {
    const OrderedJson j = to_json(small_report());
    CHECK(keys_of(j) == std::vector<std::string>{
                            "schema", "instance", "checks", "theta",
                            "duality_holds", "semisimple", "all_asserted_pass"});
    CHECK(j["schema"] == "swd-verify-report/1");
    CHECK(keys_of(j["instance"]) ==
          std::vector<std::string>{"n", "r", "field", "idempotent", "gamma",
                                   "zeta", "guaranteed_regime"});
    CHECK(j["instance"]["n"] == 2);
    CHECK(j["instance"]["r"] == 3);
    CHECK(j["instance"]["field"] == "gf:7");
    CHECK(j["instance"]["gamma"] == "(2,3,1)");
    CHECK(j["instance"]["guaranteed_regime"] == true);
    REQUIRE(j["checks"].is_array());
    CHECK(keys_of(j["checks"][0]) ==
          std::vector<std::string>{"name", "statement", "expected", "computed",
                                   "pass", "asserted"});
    REQUIRE(j["theta"].size() == 4);  // two sorted weights at (n, r) = (2, 3)
    CHECK(keys_of(j["theta"][0]) ==
          std::vector<std::string>{"alpha", "beta", "dim_hom_sigma",
                                   "dim_hom_corner", "dim_theta_image",
                                   "surjective", "image_inside"});
    CHECK(j["theta"][0]["alpha"] == OrderedJson(std::vector<int>{3, 0}));
    CHECK(j["duality_holds"] == true);
    CHECK(j["all_asserted_pass"] == true);
    REQUIRE(j["semisimple"].is_object());
    CHECK(keys_of(j["semisimple"]) ==
          std::vector<std::string>{"r", "corner_dim", "multiplicities",
                                   "multiplicities_match",
                                   "tensor_character_identity"});
    CHECK(keys_of(j["semisimple"]["corner_dim"]) ==
          std::vector<std::string>{"rank", "tableaux", "census", "agree"});
}

TEST_CASE("json_text is stable under a parse/re-dump round trip") {
    const OrderedJson j = to_json(small_report());
    const std::string text = json_text(j);
    CHECK(text.back() == '\n');
    const OrderedJson back = OrderedJson::parse(text);
    CHECK(json_text(back) == text);
    CHECK(back == j);
}

TEST_CASE("independence table serializes with a fixed key layout") {
    const FieldIndependence table = field_independence_matrix(
        3, 2, {FieldSpec::parse("gf:7", 3), FieldSpec::parse("cyclo:3", 3)});
    const OrderedJson j = to_json(table);
    CHECK(keys_of(j) == std::vector<std::string>{"schema", "n", "r", "fields",
                                                 "rows", "all_independent"});
    CHECK(j["schema"] == "swd-independence/1");
    CHECK(j["fields"] == OrderedJson(std::vector<std::string>{"gf:7", "cyclo:3"}));
    REQUIRE(j["rows"].size() == 4);
    CHECK(keys_of(j["rows"][0]) ==
          std::vector<std::string>{"alpha", "beta", "per_field", "independent"});
    CHECK(j["rows"][0]["per_field"].size() == 2);
    CHECK(j["all_independent"] == true);
}

TEST_CASE("csv header and quoting are fixed") {
    CHECK(csv_header() ==
          "alpha,beta,field,dim_hom_sigma,dim_hom_corner,dim_theta_image,"
          "surjective");
    CHECK(csv_quote("abc") == "\"abc\"");
    CHECK(csv_quote("(2,1,0)") == "\"(2,1,0)\"");
    CHECK(csv_quote("a\"b") == "\"a\"\"b\"");
    CHECK(csv_quote("") == "\"\"");
}

TEST_CASE("csv rows for a verify report carry one line per theta pair") {
    const VerifyReport rep = small_report();
    const auto rows = csv_rows(rep);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "\"(3,0)\",\"(3,0)\",gf:7,1,0,0,true");
    CHECK(rows[3] == "\"(2,1)\",\"(2,1)\",gf:7,2,1,1,true");
    const std::string doc = csv_document(rows);
    CHECK(doc == csv_header() + "\n" + rows[0] + "\n" + rows[1] + "\n" +
                     rows[2] + "\n" + rows[3] + "\n");
}

TEST_CASE("csv rows for an independence table run fields within each pair") {
    const FieldIndependence table = field_independence_matrix(
        3, 2, {FieldSpec::parse("gf:7", 3), FieldSpec::parse("cyclo:3", 3)});
    const auto rows = csv_rows(table);
    REQUIRE(rows.size() == 8);  // 4 weight pairs x 2 fields
    CHECK(rows[0] == "\"(3,0)\",\"(3,0)\",gf:7,1,0,0,true");
    CHECK(rows[1] == "\"(3,0)\",\"(3,0)\",cyclo:3,1,0,0,true");
    CHECK(rows[6] == "\"(2,1)\",\"(2,1)\",gf:7,2,1,1,true");
    CHECK(rows[7] == "\"(2,1)\",\"(2,1)\",cyclo:3,2,1,1,true");
}

TEST_CASE("subspace JSON round trip over a prime field") {
    const FieldPtr F = build_field(FieldSpec::parse("gf:7", 3));
    const Subspace U = span_of(F, 5, {{"1", "2", "0", "3", "0"},
                                      {"0", "0", "1", "4", "1"},
                                      {"2", "4", "1", "3", "1"}});
    REQUIRE(U.dim() == 2);  // third row is the sum of the first two
    const OrderedJson j = subspace_to_json(F, U);
    CHECK(j["ambient"] == 5);
    REQUIRE(j["rows"].is_array());
    CHECK(j["rows"].size() == 2);
    const auto back = subspace_from_json(F, 5, j);
    REQUIRE(back.has_value());
    CHECK(back->equal(U));
}

TEST_CASE("subspace JSON round trip keeps exact rationals") {
    const FieldPtr F = build_field(FieldSpec::parse("cyclo:3", 3));
    const Subspace U = span_of(F, 3, {{"2", "1/3", "0"}, {"0", "5/2", "7"}});
    REQUIRE(U.dim() == 2);
    const OrderedJson j = subspace_to_json(F, U);
    const auto back = subspace_from_json(F, 3, j);
    REQUIRE(back.has_value());
    CHECK(back->equal(U));
    // The zero subspace survives too.
    const Subspace Z(F, 3);
    const auto zback = subspace_from_json(F, 3, subspace_to_json(F, Z));
    REQUIRE(zback.has_value());
    CHECK(zback->dim() == 0);
}

TEST_CASE("subspace JSON rejects structural damage") {
    const FieldPtr F = build_field(FieldSpec::parse("cyclo:3", 3));
    const Subspace U = span_of(F, 3, {{"1", "0", "2"}, {"0", "1", "1/3"}});
    const OrderedJson good = subspace_to_json(F, U);
    REQUIRE(subspace_from_json(F, 3, good).has_value());

    OrderedJson j = good;  // ambient mismatch
    CHECK_FALSE(subspace_from_json(F, 4, j).has_value());

    j = good;  // column out of range
    j["rows"][0][1][0] = 3;
    CHECK_FALSE(subspace_from_json(F, 3, j).has_value());

    j = good;  // columns not strictly ascending
    j["rows"][0][1][0] = 0;
    CHECK_FALSE(subspace_from_json(F, 3, j).has_value());

    j = good;  // explicit zero entry
    j["rows"][0][1][1] = "0";
    CHECK_FALSE(subspace_from_json(F, 3, j).has_value());

    j = good;  // unparseable scalar
    j["rows"][0][1][1] = "xyz";
    CHECK_FALSE(subspace_from_json(F, 3, j).has_value());

    j = good;  // zero denominator must be a parse error, not a crash
    j["rows"][0][1][1] = "1/0";
    CHECK_FALSE(subspace_from_json(F, 3, j).has_value());

    j = good;  // swapped rows are not the canonical order
    std::swap(j["rows"][0], j["rows"][1]);
    CHECK_FALSE(subspace_from_json(F, 3, j).has_value());

    j = good;  // a row with mass above another pivot is not reduced
    j["rows"][0] = OrderedJson::array(
        {OrderedJson::array({0, "1"}), OrderedJson::array({1, "1"})});
    CHECK_FALSE(subspace_from_json(F, 3, j).has_value());

    j = good;  // rows must be an array
    j["rows"] = "basis";
    CHECK_FALSE(subspace_from_json(F, 3, j).has_value());

    j = good;  // entries must be [column, scalar] pairs
    j["rows"][0][0] = OrderedJson::array({0});
    CHECK_FALSE(subspace_from_json(F, 3, j).has_value());

    CHECK_FALSE(subspace_from_json(F, 3, OrderedJson(7)).has_value());
}

TEST_CASE("fnv1a64 matches the published test vectors") {
    CHECK(Cache::fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(Cache::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(Cache::fnv1a64("foobar") == 0x85944171f73967e8ULL);
    CHECK(Cache::blob_name("") == "cbf29ce484222325.json");
    CHECK(Cache::blob_name("a").size() == 21);  // 16 hex digits + ".json"
}

TEST_CASE("cache stores and reloads values by key") {
    const fs::path dir = fs::path("cache_test_tmp") / "roundtrip";
    fs::remove_all(dir.parent_path());
    const Cache cache(dir.string());
    CHECK_FALSE(cache.load("absent").has_value());

    OrderedJson value;
    value["dims"] = OrderedJson(std::vector<i64>{1, 2, 3});
    value["note"] = "x";
    cache.store("key-one", value);
    const auto back = cache.load("key-one");
    REQUIRE(back.has_value());
    CHECK(*back == value);

    value["note"] = "y";  // overwrite wins
    cache.store("key-one", value);
    CHECK(cache.load("key-one").value()["note"] == "y");
    fs::remove_all(dir.parent_path());
}

TEST_CASE("cache rejects foreign and malformed blobs") {
    const fs::path dir = fs::path("cache_test_tmp") / "reject";
    fs::remove_all(dir.parent_path());
    const Cache cache(dir.string());
    OrderedJson value;
    value["v"] = 1;
    cache.store("key-a", value);

    // A blob copied to another key's address echoes the wrong key.
    fs::copy_file(fs::path(cache.dir()) / Cache::blob_name("key-a"),
                  fs::path(cache.dir()) / Cache::blob_name("key-b"));
    CHECK_FALSE(cache.load("key-b").has_value());
    CHECK(cache.load("key-a").has_value());

    {
        std::ofstream out(fs::path(cache.dir()) / Cache::blob_name("key-c"));
        out << "not json at all";
    }
    CHECK_FALSE(cache.load("key-c").has_value());

    {
        std::ofstream out(fs::path(cache.dir()) / Cache::blob_name("key-d"));
        out << "[1,2,3]\n";  // parses, but is not a keyed blob
    }
    CHECK_FALSE(cache.load("key-d").has_value());
    fs::remove_all(dir.parent_path());
}
